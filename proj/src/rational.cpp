#include "madhava/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace madhava {

namespace {

Integer pow10_int(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

// Round a non-negative rational to an integer under the given mode.
Integer round_nonneg(const Integer& num, const Integer& den, Rounding rounding) {
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rounding == Rounding::toward_zero || r == 0) return q;
    const int c = cmp(Integer(2 * r), den);
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
    return q;
}

}  // namespace

Rational::Rational(long long n) : value_(Integer(static_cast<long>(n))) {}

Rational::Rational(const Integer& n) : value_(n) {}

Rational::Rational(const Integer& n, const Integer& d) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    value_ = mpq_class(n, d);
    value_.canonicalize();
}

Rational Rational::from_mpq(mpq_class q) {
    q.canonicalize();
    Rational r;
    r.value_ = std::move(q);
    return r;
}

Rational Rational::operator-() const { return from_mpq(-value_); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("rational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

Rational rat(const Integer& n, const Integer& d) { return Rational(n, d); }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational pow10(long e) {
    if (e >= 0) return Rational(pow10_int(static_cast<unsigned long>(e)));
    return Rational(Integer(1), pow10_int(static_cast<unsigned long>(-e)));
}

Integer floor(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.mpq().get_num_mpz_t(), x.mpq().get_den_mpz_t());
    return q;
}

Integer ceil(const Rational& x) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.mpq().get_num_mpz_t(), x.mpq().get_den_mpz_t());
    return q;
}

DecimalRendering to_decimal(const Rational& x, unsigned scale, Rounding rounding) {
    if (scale > kMaxDecimalScale) throw std::invalid_argument("to_decimal: scale too large");

    const Integer num = abs(x.numerator()) * pow10_int(scale);
    const Integer q = round_nonneg(num, x.denominator(), rounding);

    std::string body = q.get_str();
    if (body.size() <= scale) body.insert(0, scale + 1 - body.size(), '0');

    std::string out;
    if (x.sign() < 0 && q != 0) out.push_back('-');
    out.append(body, 0, body.size() - scale);
    if (scale > 0) {
        out.push_back('.');
        out.append(body, body.size() - scale, scale);
    }
    return DecimalRendering{std::move(out), scale, rounding};
}

Rational DecimalRendering::value() const { return parse_decimal(digits); }

Rational parse_decimal(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    std::string mantissa;
    long fraction_digits = 0;
    bool seen_point = false;
    for (char c : text) {
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (c >= '0' && c <= '9') {
            mantissa.push_back(c);
            if (seen_point) ++fraction_digits;
        } else {
            throw std::invalid_argument("parse_decimal: malformed number '" + std::string(text) + "'");
        }
    }
    if (mantissa.empty()) throw std::invalid_argument("parse_decimal: empty number");

    Rational r = Rational(Integer(mantissa, 10)) * pow10(-fraction_digits);
    return negative ? -r : r;
}

std::string to_scientific_upper(const Rational& x, unsigned significant) {
    if (significant == 0) significant = 1;
    const Rational a = abs(x);
    if (a.is_zero()) return "0";

    // exponent e with 10^e <= a < 10^(e+1)
    long e = static_cast<long>(a.numerator().get_str().size()) -
             static_cast<long>(a.denominator().get_str().size());
    while (a < pow10(e)) --e;
    while (a >= pow10(e + 1)) ++e;

    const long shift = e - static_cast<long>(significant) + 1;
    Integer m = ceil(a * pow10(-shift));
    if (m == pow10_int(significant)) {
        m = pow10_int(significant - 1);
        ++e;
    }
    std::string digits = m.get_str();
    std::string out(1, digits[0]);
    if (digits.size() > 1) {
        out.push_back('.');
        out.append(digits, 1);
    }
    out += "e" + std::to_string(e);
    return out;
}

}  // namespace madhava
