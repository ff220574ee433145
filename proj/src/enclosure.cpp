#include "madhava/enclosure.hpp"

#include <stdexcept>

namespace madhava {

Enclosure::Enclosure(Rational lower, Rational upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (upper_ < lower_) throw std::invalid_argument("enclosure: lower bound exceeds upper bound");
}

Rational enclosure_width(const Enclosure& e) { return e.upper() - e.lower(); }

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lower() + b.lower(), a.upper() + b.upper());
}

Enclosure operator+(const Enclosure& a, const Rational& x) { return Enclosure(a.lower() + x, a.upper() + x); }

Enclosure operator-(const Enclosure& a, const Rational& x) { return Enclosure(a.lower() - x, a.upper() - x); }

Enclosure operator-(const Rational& x, const Enclosure& a) { return Enclosure(x - a.upper(), x - a.lower()); }

Enclosure operator*(const Rational& k, const Enclosure& a) {
    if (k.sign() >= 0) return Enclosure(k * a.lower(), k * a.upper());
    return Enclosure(k * a.upper(), k * a.lower());
}

Enclosure operator/(const Rational& x, const Enclosure& a) {
    if (a.contains_zero()) throw std::domain_error("enclosure: divisor interval contains zero");
    const Rational p = x / a.lower();
    const Rational q = x / a.upper();
    return Enclosure(min(p, q), max(p, q));
}

Enclosure abs(const Enclosure& e) {
    if (e.lower().sign() >= 0) return e;
    if (e.upper().sign() <= 0) return Enclosure(-e.upper(), -e.lower());
    return Enclosure(Rational(0), max(-e.lower(), e.upper()));
}

std::optional<Enclosure> intersect(const Enclosure& a, const Enclosure& b) {
    Rational lo = max(a.lower(), b.lower());
    Rational hi = min(a.upper(), b.upper());
    if (hi < lo) return std::nullopt;
    return Enclosure(std::move(lo), std::move(hi));
}

Rational max_distance(const Rational& x, const Enclosure& target) {
    return max(abs(x - target.lower()), abs(x - target.upper()));
}

}  // namespace madhava
