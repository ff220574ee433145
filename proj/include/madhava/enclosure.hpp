#pragma once

#include <optional>

#include "madhava/rational.hpp"

namespace madhava {

/// A closed interval [lower, upper] of rationals known to contain some
/// (typically irrational) target.
class Enclosure {
public:
    /// Throws std::invalid_argument when lower > upper.
    Enclosure(Rational lower, Rational upper);
    static Enclosure point(const Rational& x) { return Enclosure(x, x); }

    const Rational& lower() const { return lower_; }
    const Rational& upper() const { return upper_; }

    bool contains(const Rational& x) const { return lower_ <= x && x <= upper_; }
    bool contains_zero() const { return lower_.sign() <= 0 && upper_.sign() >= 0; }
    /// Every point strictly below every point of `other`.
    bool entirely_below(const Enclosure& other) const { return upper_ < other.lower_; }
    bool entirely_above(const Enclosure& other) const { return lower_ > other.upper_; }

    friend bool operator==(const Enclosure&, const Enclosure&) = default;

private:
    Rational lower_;
    Rational upper_;
};

Rational enclosure_width(const Enclosure& e);

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator+(const Enclosure& a, const Rational& x);
Enclosure operator-(const Enclosure& a, const Rational& x);
Enclosure operator-(const Rational& x, const Enclosure& a);
Enclosure operator*(const Rational& k, const Enclosure& a);
/// Throws std::domain_error when the divisor contains zero.
Enclosure operator/(const Rational& x, const Enclosure& a);

Enclosure abs(const Enclosure& e);
std::optional<Enclosure> intersect(const Enclosure& a, const Enclosure& b);

/// Tight upper bound on |x - t| over every t in `target`.
Rational max_distance(const Rational& x, const Enclosure& target);

}  // namespace madhava
