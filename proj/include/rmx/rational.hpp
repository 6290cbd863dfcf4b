#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "rmx/errors.hpp"

namespace rmx {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Always kept in lowest terms with denominator >= 1;
// zero is stored as 0/1, so equal values have equal representations.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d);

    const BigInt &num() const { return num_; }
    const BigInt &den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational inverse() const;

    friend Rational operator+(const Rational &a, const Rational &b);
    friend Rational operator-(const Rational &a, const Rational &b);
    friend Rational operator*(const Rational &a, const Rational &b);
    friend Rational operator/(const Rational &a, const Rational &b);
    Rational &operator+=(const Rational &o) { return *this = *this + o; }
    Rational &operator-=(const Rational &o) { return *this = *this - o; }
    Rational &operator*=(const Rational &o) { return *this = *this * o; }

    bool operator==(const Rational &o) const = default;

    // "3", "-1/2"
    std::string str() const;
    double to_double() const;

  private:
    BigInt num_;
    BigInt den_;
};

} // namespace rmx
