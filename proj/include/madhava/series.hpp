#pragma once

/**
 * @file series.hpp
 * @brief Alternating series, exact partial sums and certified pi brackets.
 *
 * An AlternatingSeries is described by its positive, strictly decreasing
 * magnitudes u_p (p >= 1); its partial sums are
 *
 *     S_n = u_1 - u_2 + u_3 - ... + (-1)^(n-1) u_n
 *
 * and any two consecutive partial sums bracket the limit. The same fact,
 * applied to the fast pi series below, provides the library's only
 * reference for pi: there is no hard-coded constant anywhere.
 */

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "madhava/enclosure.hpp"
#include "madhava/rational.hpp"

namespace madhava {

using Index = std::uint64_t;
using TermFn = std::function<Rational(Index)>;

struct AlternatingSeries {
    std::string name;
    TermFn term;  // p >= 1 -> u_p > 0
};

/// Resumable S_n: value holds the partial sum of the first n terms.
struct PartialSumState {
    Index n = 0;
    Rational value{0};
};

/// u_p = 1/(2p - 1); throws std::invalid_argument for p == 0.
Rational madhava_term(Index p);

/// 1 - 1/3 + 1/5 - ..., converging to pi/4.
AlternatingSeries madhava_leibniz();

/// Extend `state` until it holds S_target. Throws std::invalid_argument if
/// target < state.n.
PartialSumState advance(const AlternatingSeries& s, PartialSumState state, Index target);

/// S_n, n >= 1.
Rational partial_sum(const AlternatingSeries& s, Index n);

/// S_1, ..., S_n (index i holds S_{i+1}).
std::vector<Rational> partial_sums(const AlternatingSeries& s, Index n);

/// constant + factor * S_n for an inner alternating series; factor > 0.
struct AffineSeries {
    std::string name;
    Rational constant;
    Rational factor;
    AlternatingSeries inner;

    Rational value(Index n) const { return constant + factor * partial_sum(inner, n); }
};

/// pi = 3 + 4 * sum_{p>=1} (-1)^(p-1) / ((2p+1)^3 - (2p+1))
AffineSeries pi_series_a();
/// pi = 16 * sum_{p>=1} (-1)^(p-1) / ((2p-1)^5 + 4(2p-1)); value(n) sums n terms.
AffineSeries pi_series_b();
/// pi = 28/9 + 36 * sum_{p>=1} (-1)^(p-1) / (p(p+1)(2p+1)(4p^2+5)(4p^2+8p+9))
AffineSeries pi_series_c();

/// Bracket the limit of `s` between two consecutive partial sums, each
/// accumulated with outward rounding on a decimal grid much finer than
/// min_width. Continues summing until the bracket is at most min_width wide.
Enclosure limit_enclosure(const AffineSeries& s, const Rational& min_width);

enum class PiOracle { c_series, b_series };

/// Certified bracket lower < pi < upper with width <= min_width.
/// Throws std::invalid_argument when min_width <= 0.
Enclosure pi_enclosure(const Rational& min_width, PiOracle oracle = PiOracle::c_series);

/// Enclosure of rho_n = |limit - S_n| given an enclosure of the limit.
Enclosure remainder_magnitude(const AlternatingSeries& s, Index n, const Enclosure& limit);

}  // namespace madhava
