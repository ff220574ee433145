#pragma once

/**
 * @file accel.hpp
 * @brief Series acceleration from remainder correctors, and Aitken's delta-squared.
 *
 * Given an alternating series sum (-1)^(p-1) u_p with limit phi and any
 * corrector family R_n -> 0, the corrected sums S_n + (-1)^n R_n are the
 * partial sums (shifted by one) of
 *
 *     phi = (u_1 - R_1) + sum_{p>=1} (-1)^(p-1) v_p,   v_p = R_p + R_{p+1} - u_{p+1}.
 *
 * The better R_n tracks the true remainder, the faster the new series
 * converges: |S''_n - phi| = |eps_{n+1}| |S_{n+1} - phi| with
 * eps_n = R_n / rho_n - 1.
 */

#include <span>
#include <stdexcept>
#include <string>

#include "madhava/enclosure.hpp"
#include "madhava/remainder.hpp"
#include "madhava/series.hpp"

namespace madhava {

/// Raised when a delta-squared step hits a zero second difference.
class UndefinedTransform : public std::domain_error {
public:
    UndefinedTransform(const std::string& what, unsigned round, Index n)
        : std::domain_error(what), round_(round), n_(n) {}
    unsigned round() const { return round_; }
    Index index() const { return n_; }

private:
    unsigned round_;
    Index n_;
};

struct TransformedSeries {
    Rational constant;  // u_1 - R_1
    TermFn term;        // v_p, not necessarily positive
    std::string source;

    /// constant + sum_{p=1}^{n} (-1)^(p-1) v_p, for n >= 0.
    Rational partial(Index n) const;
};

TransformedSeries transform(const AlternatingSeries& u, CorrectorFamily r, const std::string& corrector_name = "R");

/// 3 + 4 * sum_{p=1}^{n} (-1)^(p-1) / ((2p+1)^3 - (2p+1))
Rational series_a(Index n);
/// 16 * sum_{p=0}^{n-1} (-1)^p / ((2p+1)^5 + 4(2p+1)); n counts terms.
Rational series_b(Index n);
/// 28/9 + 36 * sum_{p=1}^{n} (-1)^(p-1) / (p(p+1)(2p+1)(4p^2+5)(4p^2+8p+9))
Rational series_c(Index n);

/// (S_n S_{n-2} - S_{n-1}^2) / ((S_n - S_{n-1}) - (S_{n-1} - S_{n-2})),
/// with seq[i] holding S_{i+1}. Requires 3 <= n <= seq.size().
Rational aitken_delta2(std::span<const Rational> seq, Index n);

/// S_n + (-1)^n (2n-3) / (4(n-1)(2n-1)) for the Madhava-Leibniz sums, n >= 3.
Rational aitken_closed_form_ml(Index n);

/// The delta-squared transform applied `rounds` times, evaluated at index n.
/// Requires n >= 2*rounds + 1 and n <= seq.size().
Rational iterated_aitken(std::span<const Rational> seq, unsigned rounds, Index n);

/// (S_{n-1} + S_n) / 2, n >= 2.
Rational consecutive_mean(std::span<const Rational> seq, Index n);

/// Enclosure of eps_n = R_n / rho_n - 1, where `limit` encloses the limit
/// of `u`. Throws std::domain_error if the rho_n enclosure contains zero.
Enclosure quality(const AlternatingSeries& u, const CorrectorFamily& r, Index n, const Enclosure& limit);

}  // namespace madhava
