#include "madhava/report.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "madhava/accel.hpp"
#include "madhava/remainder.hpp"

namespace madhava {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 9> kMethodNames{{
    {Method::raw, "raw"},
    {Method::corrected, "corrected"},
    {Method::series_a, "series-a"},
    {Method::series_b, "series-b"},
    {Method::series_c, "series-c"},
    {Method::aitken, "aitken"},
    {Method::aitken_iter, "aitken-iter"},
    {Method::brouncker, "brouncker"},
    {Method::averaged, "averaged"},
}};

AffineSeries base_series(char base) {
    switch (base) {
        case 'a': return pi_series_a();
        case 'b': return pi_series_b();
        default: return pi_series_c();
    }
}

std::vector<Rational> scaled_ml_sums(Index n) {
    auto sums = partial_sums(madhava_leibniz(), n);
    for (auto& s : sums) s *= Rational(4);
    return sums;
}

}  // namespace

std::optional<Method> parse_method(std::string_view name) {
    for (const auto& [m, s] : kMethodNames)
        if (s == name) return m;
    return std::nullopt;
}

std::string_view method_name(Method m) {
    for (const auto& [k, s] : kMethodNames)
        if (k == m) return s;
    return "unknown";
}

void validate(const MethodParams& p) {
    if (p.n == 0) throw std::invalid_argument("--n must be positive");
    if (p.cf_order && p.method != Method::corrected)
        throw std::invalid_argument("--cf-order only applies to method 'corrected'");
    if (p.rounds && p.method != Method::aitken_iter)
        throw std::invalid_argument("--rounds only applies to method 'aitken-iter'");

    switch (p.method) {
        case Method::corrected:
            if (!p.cf_order || *p.cf_order == 0)
                throw std::invalid_argument("method 'corrected' needs a positive --cf-order");
            break;
        case Method::aitken:
            if (p.n < 3) throw std::invalid_argument("method 'aitken' needs --n >= 3");
            break;
        case Method::aitken_iter:
            if (!p.rounds || *p.rounds == 0)
                throw std::invalid_argument("method 'aitken-iter' needs a positive --rounds");
            if (p.n < 2 * Index{*p.rounds} + 1)
                throw std::invalid_argument("method 'aitken-iter' needs --n >= 2*rounds + 1");
            break;
        case Method::averaged:
            if (p.n < 2) throw std::invalid_argument("method 'averaged' needs --n >= 2");
            if (p.base != 'a' && p.base != 'b' && p.base != 'c')
                throw std::invalid_argument("--series must be one of a, b, c");
            break;
        default: break;
    }
}

Rational evaluate(const MethodParams& p) {
    validate(p);
    switch (p.method) {
        case Method::raw: return 4 * partial_sum(madhava_leibniz(), p.n);
        case Method::corrected: return corrected_pi(p.n, CorrectorOrder(*p.cf_order));
        case Method::series_a: return series_a(p.n);
        case Method::series_b: return series_b(p.n);
        case Method::series_c: return series_c(p.n);
        case Method::aitken: return aitken_delta2(scaled_ml_sums(p.n), p.n);
        case Method::aitken_iter: return iterated_aitken(scaled_ml_sums(p.n), *p.rounds, p.n);
        case Method::brouncker: return brouncker_pi(p.n);
        case Method::averaged: {
            const AffineSeries s = base_series(p.base);
            const std::vector<Rational> pair{s.value(p.n - 1), s.value(p.n)};
            return consecutive_mean(pair, 2);
        }
    }
    throw std::logic_error("unhandled method");
}

const Enclosure& reference_pi() {
    static const Enclosure pi = pi_enclosure(pow10(-30));
    return pi;
}

unsigned correct_digits(const Rational& x, const Enclosure& pi, unsigned max_digits) {
    unsigned d = 0;
    while (d < max_digits) {
        const unsigned next = d + 1;
        const auto lo = to_decimal(pi.lower(), next).digits;
        if (lo != to_decimal(pi.upper(), next).digits || lo != to_decimal(x, next).digits) break;
        d = next;
    }
    if (d == 0 && to_decimal(x, 0).digits != to_decimal(pi.lower(), 0).digits) return 0;
    return d;
}

ReportRow make_row(Index n, const Rational& value, unsigned digits, Rounding rounding, const Enclosure& pi) {
    return ReportRow{n, value, to_decimal(value, digits, rounding), max_distance(value, pi), correct_digits(value, pi)};
}

std::string leading_significant_digits(std::string_view decimal, std::size_t k) {
    std::string out;
    for (char c : decimal) {
        if (c < '0' || c > '9') continue;
        if (out.empty() && c == '0') continue;
        out.push_back(c);
        if (out.size() == k) break;
    }
    return out;
}

}  // namespace madhava
