#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cobcalc {

// Exact rational arithmetic on int64. Denominator is always positive and the
// fraction is kept reduced, so equality is plain member comparison.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator+(const Rational& o) const { return {num_ * o.den_ + o.num_ * den_, den_ * o.den_}; }
    Rational operator-(const Rational& o) const { return {num_ * o.den_ - o.num_ * den_, den_ * o.den_}; }
    Rational operator*(const Rational& o) const { return {num_ * o.num_, den_ * o.den_}; }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return {num_ * o.den_, den_ * o.num_};
    }
    Rational operator-() const { return {-num_, den_}; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rational& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    // Smallest integer >= value, computed exactly.
    long long ceil() const {
        long long q = num_ / den_;
        if (num_ % den_ > 0) ++q;
        return q;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace cobcalc
