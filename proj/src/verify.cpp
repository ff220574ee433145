#include "madhava/verify.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "madhava/accel.hpp"
#include "madhava/remainder.hpp"
#include "madhava/report.hpp"

namespace madhava {

namespace {

// Printed with a decimal comma in the original; transcribed verbatim.
constexpr std::array<PrintedCell, 36> kPrintedTable{{
    {2, 'a', "3.13333333333333", true},  {2, 'b', "3.1372549019608", true},  {2, 'c', "3.1414634146341", false},
    {3, 'a', "3.1452380952382", true},   {3, 'b', "3.1423423423424", true},  {3, 'c', "3.1416149068323", true},
    {4, 'a', "3.1396825396626", true},   {4, 'b', "3.141391941392", true},   {4, 'c', "3.1415873015673", true},
    {5, 'a', "3.1427128427129", true},   {5, 'b', "3.1416627377024", true},  {5, 'c', "3.1415942744802", true},
    {10, 'a', "3.1414067184965", false}, {10, 'b', "3.1415902423789", true}, {10, 'c', "3.1415926266579", true},
    {11, 'a', "3.1417360992607", true},  {11, 'b', "3.1415941599212", true}, {11, 'c', "3.1415926683944", true},
    {20, 'a', "3.1415657346587", true},  {20, 'b', "3.1415925761871", true}, {20, 'c', "3.1415926532636", true},
    {21, 'a', "3.1416160719183", true},  {21, 'b', "3.1415927142891", true}, {21, 'c', "3.1415926538114", true},
    {40, 'a', "3.1415890289487", true},  {40, 'b', "3.1415926511543", true}, {40, 'c', "3.141592653587", true},
    {41, 'a', "3.1415960255683", true},  {41, 'b', "3.1415926557431", true}, {41, 'c', "3.1415926535923", true},
    {70, 'a', "3.1415919552651", true},  {70, 'b', "3.1415926534413", true}, {70, 'c', "3.1415926535897", false},
    {71, 'a', "3.1415933232242", true},  {71, 'b', "3.1415926537284", true}, {71, 'c', "3.1415926535898", false},
}};

using Checks = std::vector<CheckResult>;

void add(Checks& out, std::string name, bool ok, std::string detail = {}) {
    out.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)});
}

std::string sci(const Rational& x) { return to_scientific_upper(x); }

AffineSeries series_for(char column) {
    return column == 'a' ? pi_series_a() : column == 'b' ? pi_series_b() : pi_series_c();
}

// values[i] = constant + factor * S_{i+1} for i < n.
std::vector<Rational> affine_values(const AffineSeries& s, Index n) {
    auto sums = partial_sums(s.inner, n);
    for (auto& v : sums) v = s.constant + s.factor * v;
    return sums;
}

Enclosure quarter(const Enclosure& pi) { return rat(1, 4) * pi; }

void madhava_suite(Checks& out) {
    const Enclosure& pi = reference_pi();

    {
        const Rational approx = rat(Integer("2827433388233"), Integer("900000000000"));
        const Enclosure err = abs(approx - pi);
        const bool ok = err.lower() > pow10(-12) && err.upper() < rat(25, 10) * pow10(-12);
        add(out, "madhava-approximation", ok,
            "|2827433388233/900000000000 - pi| in [" + sci(err.lower()) + ", " + sci(err.upper()) +
                "], required (1e-12, 2.5e-12)");
    }

    const auto sums = partial_sums(madhava_leibniz(), 2000);
    {
        bool ok = abs(4 * sums[1999] - pi).lower() >= pow10(-4);
        Index worst = 0;
        for (Index n = 1; n <= 1000 && ok; ++n) {
            if (abs(4 * sums[n - 1] - pi).lower() < rat(5, 10000)) {
                ok = false;
                worst = n;
            }
        }
        add(out, "raw-slow-convergence", ok,
            ok ? "|4 S_2000 - pi| >= " + sci(abs(4 * sums[1999] - pi).lower()) + "; >= 5e-4 for all n <= 1000"
               : "violated at n = " + std::to_string(worst));
    }
    {
        const Enclosure q = quarter(pi);
        bool ok = true;
        Index bad = 0;
        for (Index n = 1; n <= 500 && ok; ++n) {
            const Enclosure at = Enclosure::point(sums[n - 1]);
            ok = n % 2 == 1 ? at.entirely_above(q) : at.entirely_below(q);
            if (!ok) bad = n;
        }
        add(out, "raw-bracketing", ok, ok ? "odd S_n above, even S_n below pi/4 for n <= 500" : "n = " + std::to_string(bad));
    }
}

void identities_suite(Checks& out) {
    const Enclosure& pi = reference_pi();
    const Enclosure q = quarter(pi);
    const AlternatingSeries ml = madhava_leibniz();

    {
        bool ok = true;
        Rational widest(0);
        for (Index n = 1; n <= 200 && ok; ++n) {
            const Enclosure sum = remainder_magnitude(ml, n, q) + remainder_magnitude(ml, n + 1, q);
            ok = sum.contains(rat(1, static_cast<long long>(2 * n + 1))) && enclosure_width(sum) < pow10(-20);
            widest = max(widest, enclosure_width(sum));
        }
        add(out, "remainder-pair-identity", ok, "rho_n + rho_{n+1} = 1/(2n+1), n <= 200, width <= " + sci(widest));
    }
    {
        bool ok = true;
        std::string where;
        for (Index n = 1; n <= 10000 && ok; ++n) {
            for (unsigned k = 1; k <= 3 && ok; ++k) {
                ok = cf_convergent(rho_fraction(n), k) == corrector_closed_form(n, k);
                if (!ok) where = "n = " + std::to_string(n) + ", k = " + std::to_string(k);
            }
        }
        add(out, "corrector-closed-forms", ok, ok ? "k = 1..3, n <= 10000" : where);
    }
    {
        bool ok = true;
        std::string where;
        for (Index n = 1; n <= 50 && ok; ++n) {
            const Enclosure rho = remainder_magnitude(ml, n, q);
            for (Index depth = 1; depth <= 8 && ok; ++depth) {
                const Enclosure c = Enclosure::point(corrector(n, CorrectorOrder(static_cast<unsigned>(depth))));
                ok = depth % 2 == 1 ? c.entirely_above(rho) : c.entirely_below(rho);
                if (!ok) where = "n = " + std::to_string(n) + ", depth = " + std::to_string(depth);
            }
        }
        add(out, "convergent-alternation", ok, ok ? "n <= 50, depth <= 8" : where);
    }
    {
        bool ok = true;
        for (Index n = 1; n <= 20 && ok; ++n) {
            Rational prev(-1);
            for (unsigned k = 1; k <= 8 && ok; ++k) {
                const Rational gap = abs(corrector(n, CorrectorOrder(k)) + corrector(n + 1, CorrectorOrder(k)) -
                                         rat(1, static_cast<long long>(2 * n + 1)));
                ok = prev.sign() < 0 || gap < prev;
                prev = gap;
            }
        }
        add(out, "functional-equation-residual", ok, "strictly decreasing in depth, n <= 20, depth <= 8");
    }
    {
        bool ok = true;
        for (Index n = 1; n <= 50 && ok; ++n)
            for (Index d = 1; d <= 10 && ok; ++d)
                ok = cf_convergent(rho_fraction(n), d) == cf_convergent(rho_fraction_halved(n), d);
        add(out, "equivalent-fraction-forms", ok, "identical convergents, n <= 50, depth <= 10");
    }
    {
        bool ok = true;
        const auto r1 = corrector_family(CorrectorOrder(1));
        const auto r2 = corrector_family(CorrectorOrder(2));
        for (Index p = 1; p <= 1000 && ok; ++p) {
            const Integer m = 2 * Integer(static_cast<unsigned long>(p)) + 1;
            const Rational u = Rational(Integer(1), m);
            ok = r1(p) + r1(p + 1) - u == Rational(Integer(1), m * m * m - m) &&
                 r2(p) + r2(p + 1) - u == -Rational(Integer(4), m * m * m * m * m + 4 * m);
        }
        add(out, "transform-closed-terms", ok, "v_p = 1/(m^3 - m) for R(1), -4/(m^5 + 4m) for R(2), m = 2p+1, p <= 1000");
    }
    {
        bool ok = true;
        std::string where;
        const auto sums = partial_sums(ml, 201);
        for (unsigned k = 1; k <= 3 && ok; ++k) {
            const auto r = corrector_family(CorrectorOrder(k));
            const TransformedSeries t = transform(ml, r);
            Rational partial = t.constant;
            for (Index n = 1; n <= 200 && ok; ++n) {
                partial += n % 2 == 1 ? t.term(n) : -t.term(n);
                const Rational rhs = n % 2 == 1 ? sums[n] + r(n + 1) : sums[n] - r(n + 1);
                ok = partial == rhs;
                if (!ok) where = "k = " + std::to_string(k) + ", n = " + std::to_string(n);
            }
        }
        add(out, "transform-identity", ok, ok ? "S''_n = S_{n+1} + (-1)^(n+1) R_{n+1}, n <= 200, k = 1..3" : where);
    }
    {
        const auto sums = partial_sums(ml, 300);
        bool ok = aitken_delta2(sums, 3) == rat(19, 24);
        for (Index n = 3; n <= 300 && ok; ++n) ok = aitken_delta2(sums, n) == aitken_closed_form_ml(n);
        const std::vector<Rational> geometric{Rational(1) - rat(1, 2), Rational(1) - rat(1, 4), Rational(1) - rat(1, 8)};
        ok = ok && aitken_delta2(geometric, 3) == Rational(1);
        add(out, "aitken", ok, "delta-squared = closed form for n = 3..300; 19/24 at n = 3; exact on geometric");
    }
    {
        bool ok = true;
        const auto a = affine_values(pi_series_a(), 100);
        for (Index n = 1; n <= 100 && ok; ++n) ok = a[n - 1] == 4 * aitken_closed_form_ml(n + 2);
        add(out, "aitken-equals-series-a", ok, "a_n = 4 S'_{n+2}, n <= 100");
    }
    {
        bool ok = true;
        std::ostringstream detail;
        for (Index n = 1; n <= 4; ++n) {
            try {
                const Rational f = historical_residual(n);
                ok = ok && f.sign() > 0 && f < Rational(1);
                detail << "f_" << n << " = " << f << (n < 4 ? ", " : "");
            } catch (const std::domain_error& e) {
                ok = false;
                detail << e.what();
            }
        }
        add(out, "historical-residual", ok, detail.str());
    }
    {
        const Enclosure b = pi_enclosure(pow10(-30), PiOracle::b_series);
        const auto both = intersect(b, pi);
        add(out, "pi-oracle-consistency", both.has_value(),
            both ? "b- and c-series enclosures overlap, intersection width " + sci(enclosure_width(*both))
                 : "b- and c-series enclosures are disjoint");
    }
    {
        const Enclosure e1 = quality(ml, corrector_family(CorrectorOrder(1)), 10, q);
        const Enclosure e2 = quality(ml, corrector_family(CorrectorOrder(2)), 10, q);
        add(out, "quality-signs", e1.lower().sign() > 0 && e2.upper().sign() < 0,
            "eps_10(R(1)) >= " + to_decimal(e1.lower(), 8).digits + ", eps_10(R(2)) <= " + to_decimal(e2.upper(), 8).digits);
    }
}

void table_suite(Checks& out) {
    const Enclosure& pi = reference_pi();

    for (const PrintedCell& cell : printed_table()) {
        const Rational exact = series_for(cell.column).value(cell.n);
        const std::string rendered = to_decimal(exact, 13).digits;
        const std::string name = std::string(1, cell.column) + "_" + std::to_string(cell.n);
        if (rendered == cell.printed) {
            add(out, "table " + name, true, rendered);
        } else if (cell.known_deviation &&
                   leading_significant_digits(rendered, 10) == leading_significant_digits(cell.printed, 10)) {
            out.push_back({"table " + name, CheckStatus::warn,
                           "printed " + std::string(cell.printed) + ", exact " + rendered + " (agree to 10 digits)"});
        } else {
            add(out, "table " + name, false, "printed " + std::string(cell.printed) + ", exact " + rendered);
        }
    }

    // Alternating-series error bounds, then the asymptotic order ratios.
    constexpr std::array<std::pair<char, int>, 3> kOrders{{{'a', 3}, {'b', 5}, {'c', 7}}};
    for (const auto& [column, order] : kOrders) {
        const AffineSeries s = series_for(column);
        const auto values = affine_values(s, 501);
        bool ok = true;
        Index bad = 0;
        for (Index n = 1; n <= 500 && ok; ++n) {
            const Rational next_term = s.factor * s.inner.term(n + 1);
            ok = max_distance(values[n - 1], pi) <= next_term;
            if (!ok) bad = n;
        }
        add(out, std::string("error-bound series-") + column, ok,
            ok ? "|x_n - pi| <= first omitted term, n <= 500" : "violated at n = " + std::to_string(bad));

        bool within = true;
        std::ostringstream ratios;
        for (Index n : {Index{10}, Index{20}, Index{40}}) {
            const Enclosure e1 = abs(values[n - 1] - pi);
            const Enclosure e2 = abs(values[2 * n - 1] - pi);
            const Rational scale(1LL << order);
            const Enclosure ratio(scale * e2.lower() / e1.upper(), scale * e2.upper() / e1.lower());
            within = within && ratio.lower() >= rat(85, 100) && ratio.upper() <= rat(115, 100);
            ratios << "n=" << n << ": " << to_decimal(ratio.lower(), 3).digits << (n < 40 ? ", " : "");
        }
        out.push_back({std::string("error-order series-") + column, within ? CheckStatus::pass : CheckStatus::warn,
                       "2^" + std::to_string(order) + " |err(2n)|/|err(n)| " + ratios.str()});
    }

    {
        const auto raw = [] {
            auto s = partial_sums(madhava_leibniz(), 40);
            for (auto& v : s) v *= Rational(4);
            return s;
        }();
        bool holds = true;
        std::ostringstream detail;
        for (Index n : {Index{10}, Index{20}, Index{40}}) {
            const Enclosure eb = abs(series_b(n) - pi);
            const Enclosure ec = abs(series_c(n) - pi);
            const Enclosure ea = abs(iterated_aitken(raw, 2, n) - pi);
            const bool b_ok = eb.upper() <= ea.lower();
            const bool c_ok = ec.upper() <= ea.lower();
            holds = holds && b_ok && c_ok;
            detail << "n=" << n << " b " << sci(eb.upper()) << (b_ok ? "" : "!") << " c " << sci(ec.upper())
                   << (c_ok ? "" : "!") << " aitken^2 " << sci(ea.upper()) << (n < 40 ? "; " : "");
        }
        out.push_back({"b-c-vs-iterated-aitken", holds ? CheckStatus::pass : CheckStatus::warn, detail.str()});
    }
}

}  // namespace

std::span<const PrintedCell> printed_table() { return kPrintedTable; }

std::vector<Index> default_table_rows() { return {2, 3, 4, 5, 10, 11, 20, 21, 40, 41, 70, 71}; }

std::string_view status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::warn: return "WARN";
        case CheckStatus::fail: return "FAIL";
    }
    return "?";
}

bool is_known_suite(std::string_view suite) {
    return suite == "madhava" || suite == "identities" || suite == "table" || suite == "all";
}

std::vector<CheckResult> run_suite(std::string_view suite) {
    if (!is_known_suite(suite)) throw std::invalid_argument("unknown verify suite '" + std::string(suite) + "'");
    Checks out;
    if (suite == "madhava" || suite == "all") madhava_suite(out);
    if (suite == "identities" || suite == "all") identities_suite(out);
    if (suite == "table" || suite == "all") table_suite(out);
    return out;
}

}  // namespace madhava
