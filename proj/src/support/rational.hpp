#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace morse {

// Exact rational arithmetic on int64 numerator/denominator, always stored in
// lowest terms with a positive denominator. Intermediate products go through
// __int128 and overflow past int64 raises instead of wrapping.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator-() const { return Rational(-num_, den_); }
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    bool positive() const { return num_ > 0; }

    // "n/d", or just "n" when the denominator is 1.
    std::string str() const;
    static Rational parse(const std::string& s);

private:
    long long num_;
    long long den_;
    void normalize();
};

} // namespace morse
