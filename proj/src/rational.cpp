#include "rmx/rational.hpp"

namespace rmx {

using boost::multiprecision::gcd;

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0)
        throw DivisionByZero("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
    } else if (den_ != 1) {
        BigInt g = gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::inverse() const {
    if (num_ == 0)
        throw DivisionByZero("inverse of zero rational");
    return Rational(den_, num_);
}

Rational operator+(const Rational &a, const Rational &b) {
    if (a.den_ == 1 && b.den_ == 1)
        return Rational(a.num_ + b.num_);
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational &a, const Rational &b) {
    if (a.den_ == 1 && b.den_ == 1)
        return Rational(a.num_ - b.num_);
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational &a, const Rational &b) {
    if (a.num_ == 0 || b.num_ == 0)
        return Rational();
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational &a, const Rational &b) {
    if (b.num_ == 0)
        throw DivisionByZero("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1)
        s += "/" + den_.str();
    return s;
}

double Rational::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

} // namespace rmx
