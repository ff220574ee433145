#include "madhava/accel.hpp"

#include <vector>

namespace madhava {

namespace {

void require_index(std::span<const Rational> seq, Index n, Index min_n, const char* who) {
    if (n < min_n)
        throw std::invalid_argument(std::string(who) + ": n must be at least " + std::to_string(min_n));
    if (n > seq.size())
        throw std::invalid_argument(std::string(who) + ": sequence shorter than n");
}

Rational delta2_at(std::span<const Rational> seq, Index n, unsigned round) {
    const Rational& s0 = seq[n - 3];
    const Rational& s1 = seq[n - 2];
    const Rational& s2 = seq[n - 1];
    const Rational second_difference = (s2 - s1) - (s1 - s0);
    if (second_difference.is_zero())
        throw UndefinedTransform("aitken: zero second difference at n = " + std::to_string(n) + " in round " +
                                     std::to_string(round),
                                 round, n);
    return (s2 * s0 - s1 * s1) / second_difference;
}

}  // namespace

Rational TransformedSeries::partial(Index n) const {
    mpq_class acc = constant.mpq();
    for (Index p = 1; p <= n; ++p) {
        if (p % 2 == 1)
            acc += term(p).mpq();
        else
            acc -= term(p).mpq();
    }
    return Rational::from_mpq(acc);
}

TransformedSeries transform(const AlternatingSeries& u, CorrectorFamily r, const std::string& corrector_name) {
    Rational constant = u.term(1) - r(1);
    auto term = [u_term = u.term, r](Index p) { return (r(p) + r(p + 1)) - u_term(p + 1); };
    return {std::move(constant), std::move(term), u.name + "/" + corrector_name};
}

Rational series_a(Index n) { return pi_series_a().value(n); }
Rational series_b(Index n) { return pi_series_b().value(n); }
Rational series_c(Index n) { return pi_series_c().value(n); }

Rational aitken_delta2(std::span<const Rational> seq, Index n) {
    require_index(seq, n, 3, "aitken_delta2");
    return delta2_at(seq, n, 1);
}

Rational aitken_closed_form_ml(Index n) {
    if (n < 3) throw std::invalid_argument("aitken_closed_form_ml: n must be at least 3");
    const Rational m(static_cast<long long>(n));
    const Rational r = (2 * m - 3) / (4 * (m - 1) * (2 * m - 1));
    const Rational s = partial_sum(madhava_leibniz(), n);
    return n % 2 == 0 ? s + r : s - r;
}

Rational iterated_aitken(std::span<const Rational> seq, unsigned rounds, Index n) {
    if (rounds == 0) throw std::invalid_argument("iterated_aitken: rounds must be positive");
    require_index(seq, n, 2 * Index{rounds} + 1, "iterated_aitken");

    // Only the tail S_{n-2r} .. S_n influences the value at n. Keep absolute
    // indices: after round j, cur[i] holds the transformed value at index
    // first + i.
    Index first = n - 2 * Index{rounds};
    std::vector<Rational> cur(seq.begin() + static_cast<std::ptrdiff_t>(first - 1),
                              seq.begin() + static_cast<std::ptrdiff_t>(n));
    for (unsigned round = 1; round <= rounds; ++round) {
        std::vector<Rational> next;
        next.reserve(cur.size() - 2);
        for (std::size_t i = 2; i < cur.size(); ++i) {
            try {
                next.push_back(delta2_at(std::span<const Rational>(cur).first(i + 1), i + 1, round));
            } catch (const UndefinedTransform&) {
                throw UndefinedTransform("aitken: zero second difference at n = " +
                                             std::to_string(first + i) + " in round " + std::to_string(round),
                                         round, first + i);
            }
        }
        cur = std::move(next);
        first += 2;
    }
    return cur.back();
}

Rational consecutive_mean(std::span<const Rational> seq, Index n) {
    require_index(seq, n, 2, "consecutive_mean");
    return (seq[n - 2] + seq[n - 1]) / Rational(2);
}

Enclosure quality(const AlternatingSeries& u, const CorrectorFamily& r, Index n, const Enclosure& limit) {
    const Enclosure rho = remainder_magnitude(u, n, limit);
    if (rho.contains_zero())
        throw std::domain_error("quality: remainder enclosure at n = " + std::to_string(n) +
                                " contains zero; tighten the reference");
    return (r(n) / rho) - Rational(1);
}

}  // namespace madhava
