#include "madhava/series.hpp"

#include <stdexcept>

namespace madhava {

namespace {

Integer big(Index v) {
    Integer r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

}  // namespace

Rational madhava_term(Index p) {
    if (p == 0) throw std::invalid_argument("madhava_term: index starts at 1");
    return Rational(Integer(1), 2 * big(p) - 1);
}

AlternatingSeries madhava_leibniz() { return {"madhava-leibniz", madhava_term}; }

PartialSumState advance(const AlternatingSeries& s, PartialSumState state, Index target) {
    if (target < state.n) throw std::invalid_argument("advance: target precedes current state");
    mpq_class acc = state.value.mpq();
    for (Index p = state.n + 1; p <= target; ++p) {
        if (p % 2 == 1)
            acc += s.term(p).mpq();
        else
            acc -= s.term(p).mpq();
    }
    return {target, Rational::from_mpq(acc)};
}

Rational partial_sum(const AlternatingSeries& s, Index n) {
    if (n == 0) throw std::invalid_argument("partial_sum: n must be positive");
    return advance(s, {}, n).value;
}

std::vector<Rational> partial_sums(const AlternatingSeries& s, Index n) {
    std::vector<Rational> out;
    out.reserve(n);
    PartialSumState st;
    for (Index k = 1; k <= n; ++k) {
        st = advance(s, std::move(st), k);
        out.push_back(st.value);
    }
    return out;
}

AffineSeries pi_series_a() {
    auto term = [](Index p) {
        const Integer q = 2 * big(p) + 1;
        return Rational(Integer(1), q * q * q - q);
    };
    return {"series-a", Rational(3), Rational(4), {"cubes", term}};
}

AffineSeries pi_series_b() {
    auto term = [](Index p) {
        const Integer q = 2 * big(p) - 1;
        const Integer q2 = q * q;
        return Rational(Integer(1), q2 * q2 * q + 4 * q);
    };
    return {"series-b", Rational(0), Rational(16), {"fifth-powers", term}};
}

AffineSeries pi_series_c() {
    auto term = [](Index p) {
        const Integer k = big(p);
        const Integer den = k * (k + 1) * (2 * k + 1) * (4 * k * k + 5) * (4 * k * k + 8 * k + 9);
        return Rational(Integer(1), den);
    };
    return {"series-c", rat(28, 9), Rational(36), {"third-corrector", term}};
}

Enclosure limit_enclosure(const AffineSeries& s, const Rational& min_width) {
    if (min_width.sign() <= 0) throw std::invalid_argument("limit_enclosure: width must be positive");

    // Grid 10^-K at least 10^12 times finer than the requested width, so
    // accumulated rounding stays negligible for any practical term count.
    long k = 0;
    while (min_width * pow10(k) < pow10(12)) ++k;
    const Integer grid = pow10(k).numerator();
    const Integer budget = floor(min_width * pow10(k));

    const mpq_class factor = s.factor.mpq();
    Integer lo_prev, hi_prev, lo = 0, hi = 0, t_lo, t_hi;
    for (Index p = 1;; ++p) {
        const mpq_class t = factor * s.inner.term(p).mpq();
        const Integer num = t.get_num() * grid;
        mpz_fdiv_q(t_lo.get_mpz_t(), num.get_mpz_t(), t.get_den_mpz_t());
        mpz_cdiv_q(t_hi.get_mpz_t(), num.get_mpz_t(), t.get_den_mpz_t());
        lo_prev = lo;
        hi_prev = hi;
        if (p % 2 == 1) {
            lo += t_lo;
            hi += t_hi;
        } else {
            lo -= t_hi;
            hi -= t_lo;
        }
        if (p < 2) continue;
        // [min lo, max hi] over S_{p-1}, S_p brackets the limit.
        const Integer& l = (p % 2 == 1) ? lo_prev : lo;
        const Integer& h = (p % 2 == 1) ? hi : hi_prev;
        if (h - l <= budget) {
            const Rational g(grid);
            return Enclosure(s.constant + Rational(l) / g, s.constant + Rational(h) / g);
        }
    }
}

Enclosure pi_enclosure(const Rational& min_width, PiOracle oracle) {
    if (min_width.sign() <= 0) throw std::invalid_argument("pi_enclosure: width must be positive");
    return limit_enclosure(oracle == PiOracle::c_series ? pi_series_c() : pi_series_b(), min_width);
}

Enclosure remainder_magnitude(const AlternatingSeries& s, Index n, const Enclosure& limit) {
    return abs(limit - partial_sum(s, n));
}

}  // namespace madhava
