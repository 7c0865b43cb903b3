#include "support/rational.hpp"

#include <numeric>

namespace morse {

namespace {

long long checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("rational overflow");
    return static_cast<long long>(v);
}

} // namespace

Rational::Rational(long long n, long long d) : num_(n), den_(d) {
    if (d == 0)
        throw std::domain_error("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0)
        den_ = 1;
}

Rational Rational::operator+(const Rational& o) const {
    __int128 n = (__int128)num_ * o.den_ + (__int128)o.num_ * den_;
    __int128 d = (__int128)den_ * o.den_;
    // Reduce in 128 bits before narrowing.
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    return Rational(checked(n), checked(d));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    long long g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
    long long g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
    __int128 n = (__int128)(num_ / g1) * (o.num_ / g2);
    __int128 d = (__int128)(den_ / g2) * (o.den_ / g1);
    return Rational(checked(n), checked(d));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0)
        throw std::domain_error("rational division by zero");
    return *this * Rational(o.den_, o.num_);
}

bool Rational::operator<(const Rational& o) const {
    return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
}

std::string Rational::str() const {
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

} // namespace morse
