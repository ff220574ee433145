#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational arithmetic and decimal rendering.
 *
 * Rational wraps a GMP fraction and keeps it canonical at all times:
 * the denominator is positive and coprime with the numerator, and zero
 * is stored as 0/1. Every finite sum, convergent and corrector in the
 * library is computed in this type; conversion to decimal text happens
 * only when a value is printed.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace madhava {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long long n);  // NOLINT(google-explicit-constructor)
    explicit Rational(const Integer& n);
    /// Throws std::domain_error when d == 0.
    Rational(const Integer& n, const Integer& d);

    static Rational from_mpq(mpq_class q);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    const mpq_class& mpq() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// "n/d", or "n" when the denominator is 1.
    std::string str() const;

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// n/d reduced with a positive denominator; rejects d == 0.
Rational rat(const Integer& n, const Integer& d);
inline Rational rat(long long n, long long d) { return rat(Integer(static_cast<long>(n)), Integer(static_cast<long>(d))); }

Rational abs(const Rational& x);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);
/// 10^e for any integer e.
Rational pow10(long e);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

enum class Rounding { toward_zero, half_even };

/// Largest supported number of fractional digits in to_decimal.
inline constexpr unsigned kMaxDecimalScale = 100000;

struct DecimalRendering {
    std::string digits;
    unsigned scale = 0;
    Rounding rounding = Rounding::toward_zero;

    /// The exact value of the rendered string.
    Rational value() const;
};

/// Render x with exactly `scale` fractional digits. Throws
/// std::invalid_argument when scale exceeds kMaxDecimalScale.
DecimalRendering to_decimal(const Rational& x, unsigned scale, Rounding rounding = Rounding::toward_zero);

/// Parse "[-]digits[.digits]" exactly. Throws std::invalid_argument.
Rational parse_decimal(std::string_view text);

/// Scientific rendering "d.dde-N" of |x| rounded away from zero to
/// `significant` digits, so the printed number is never below |x|.
std::string to_scientific_upper(const Rational& x, unsigned significant = 3);

}  // namespace madhava
