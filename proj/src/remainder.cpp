#include "madhava/remainder.hpp"

#include <stdexcept>

namespace madhava {

namespace {

Rational index_value(Index v) {
    Integer r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return Rational(r);
}

}  // namespace

CorrectorOrder::CorrectorOrder(unsigned k) : k_(k) {
    if (k == 0) throw std::invalid_argument("corrector order starts at 1");
}

Rational cf_convergent(const ContinuedFraction& cf, Index depth) {
    if (depth == 0) throw std::invalid_argument("cf_convergent: depth must be at least 1");

    auto level = [&](Index j, const Rational& den) {
        if (den.is_zero())
            throw std::domain_error(cf.name + ": zero denominator at level " + std::to_string(j));
        return cf.partial_numerator(j) / den;
    };

    Rational t = level(depth - 1, cf.partial_denominator(depth - 1));
    for (Index j = depth - 1; j-- > 0;) t = level(j, cf.partial_denominator(j) + t);
    return t;
}

ContinuedFraction rho_fraction(Index n) {
    const Rational b = 2 * index_value(n);
    return {"rho_" + std::to_string(n),
            [](Index k) { return k == 0 ? rat(1, 2) : index_value(k) * index_value(k); },
            [b](Index) { return b; }};
}

ContinuedFraction rho_fraction_halved(Index n) {
    const Rational b = index_value(n);
    return {"rho_" + std::to_string(n) + "_halved",
            [](Index k) { return k == 0 ? rat(1, 4) : index_value(k) * index_value(k) / Rational(4); },
            [b](Index) { return b; }};
}

Rational corrector(Index n, CorrectorOrder order) { return cf_convergent(rho_fraction(n), order.k()); }

Rational corrector_closed_form(Index n, unsigned k) {
    const Rational m = index_value(n);
    switch (k) {
        case 1: return Rational(1) / (4 * m);
        case 2: return m / (4 * m * m + 1);
        case 3: return (m * m + 1) / ((4 * m * m + 5) * m);
        default: throw std::invalid_argument("corrector_closed_form: only orders 1..3 have closed forms");
    }
}

CorrectorFamily corrector_family(CorrectorOrder order) {
    return [order](Index n) { return corrector(n, order); };
}

Rational corrected_pi(Index n, CorrectorOrder order) {
    const Rational r = corrector(n, order);
    const Rational s = partial_sum(madhava_leibniz(), n);
    return 4 * (n % 2 == 0 ? s + r : s - r);
}

Rational brouncker_pi(Index depth) { return 4 - 4 * cf_convergent(rho_fraction(1), depth); }

Rational historical_residual(Index n) {
    if (n < 1 || n > 4) throw std::invalid_argument("historical_residual: defined for n = 1..4");

    const Rational quarter_pi = rat(62832, 20000) / Rational(4);
    const Rational d = abs(quarter_pi - partial_sum(madhava_leibniz(), n));
    const Rational m = index_value(n);

    auto invert = [n](const Rational& x, const char* what) {
        if (x.sign() <= 0)
            throw std::domain_error("historical_residual(" + std::to_string(n) + "): non-positive " + what);
        return Rational(1) / x;
    };
    const Rational inner = invert(d, "remainder") - 4 * m;   // 1/(n + f_n)
    const Rational f = invert(inner, "inner denominator") - m;
    if (f.sign() <= 0)
        throw std::domain_error("historical_residual(" + std::to_string(n) + "): non-positive residual");
    return f;
}

}  // namespace madhava
