#pragma once

/**
 * @file remainder.hpp
 * @brief Continued-fraction estimates of the Madhava-Leibniz remainder.
 *
 * With S_n the n-th partial sum of 1 - 1/3 + 1/5 - ..., the remainder
 * rho_n = |pi/4 - S_n| has the generalized continued fraction
 *
 *                 1/2
 *     rho_n = -------------------
 *             2n +     1^2
 *                  --------------
 *                  2n +   2^2
 *                       ---------
 *                       2n + ...
 *
 * Its first three convergents are the classical correctors
 * 1/(4n), n/(4n^2+1) and (n^2+1)/((4n^2+5)n).
 */

#include <functional>
#include <string>

#include "madhava/rational.hpp"
#include "madhava/series.hpp"

namespace madhava {

/// a_0/(b_0 + a_1/(b_1 + a_2/(b_2 + ...)))
struct ContinuedFraction {
    std::string name;
    TermFn partial_numerator;    // k >= 0 -> a_k
    TermFn partial_denominator;  // k >= 0 -> b_k
};

/// Which convergent of the remainder fraction to use; k >= 1.
class CorrectorOrder {
public:
    explicit CorrectorOrder(unsigned k);
    unsigned k() const { return k_; }

private:
    unsigned k_;
};

using CorrectorFamily = std::function<Rational(Index)>;

/// The depth-th convergent (depth 1 is a_0/b_0), evaluated by backward
/// recurrence. Throws std::invalid_argument for depth 0 and
/// std::domain_error naming the level if a denominator vanishes.
Rational cf_convergent(const ContinuedFraction& cf, Index depth);

/// a_0 = 1/2, a_k = k^2, b_k = 2n.
ContinuedFraction rho_fraction(Index n);

/// The equivalent form a_0 = 1/4, a_k = k^2/4, b_k = n. Same convergents.
ContinuedFraction rho_fraction_halved(Index n);

/// cf_convergent(rho_fraction(n), order.k()).
Rational corrector(Index n, CorrectorOrder order);

/// Closed forms for k = 1, 2, 3. Throws std::invalid_argument otherwise.
Rational corrector_closed_form(Index n, unsigned k);

/// n -> corrector(n, order).
CorrectorFamily corrector_family(CorrectorOrder order);

/// 4 * (S_n + (-1)^n * corrector(n, order))
Rational corrected_pi(Index n, CorrectorOrder order);

/// 4 - 4 * cf_convergent(rho_fraction(1), depth)
Rational brouncker_pi(Index depth);

/// For n in 1..4, the f_n with
///     |(1/4)(62832/20000) - S_n| = 1/(4n + 1/(n + f_n)).
/// Throws std::invalid_argument outside 1..4 and std::domain_error if
/// the inversion meets a zero or negative denominator.
Rational historical_residual(Index n);

}  // namespace madhava
