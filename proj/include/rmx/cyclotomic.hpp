#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rmx/rational.hpp"

namespace rmx {

int euler_phi(int n);

// Coefficients of the N-th cyclotomic polynomial, constant term first.
// Monic of degree phi(N); computed by exact division of x^N - 1 by the
// cyclotomic polynomials of the proper divisors of N.
std::vector<BigInt> cyclotomic_polynomial(int n);

// Exact element of the cyclotomic field Q(zeta_N). Stored as phi(N) rational
// coordinates in the power basis {1, z, ..., z^{phi(N)-1}} reduced modulo the
// N-th cyclotomic polynomial. The representation is canonical: two values are
// equal iff their coefficient vectors are equal (at equal conductor).
//
// All operations require equal conductors; use lift() to move a value into a
// larger field Q(zeta_M) with N | M.
class Cyc {
  public:
    Cyc(); // zero at conductor 1

    static Cyc zero(int conductor);
    static Cyc one(int conductor);
    static Cyc rational(int conductor, Rational r);
    static Cyc root_of_unity(int conductor, long long k); // zeta_N^k

    int conductor() const { return conductor_; }
    const std::vector<Rational> &coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const; // all coordinates above the constant one vanish

    Cyc operator-() const;
    friend Cyc operator+(const Cyc &a, const Cyc &b);
    friend Cyc operator-(const Cyc &a, const Cyc &b);
    friend Cyc operator*(const Cyc &a, const Cyc &b);
    friend Cyc operator/(const Cyc &a, const Cyc &b);
    Cyc &operator+=(const Cyc &o);
    Cyc &operator-=(const Cyc &o);
    Cyc &operator*=(const Cyc &o);

    Cyc inverse() const; // extended Euclid modulo the cyclotomic polynomial
    Cyc pow(long long k) const;

    // Galois automorphism zeta -> zeta^{-1} (complex conjugation).
    Cyc conjugate() const;

    // Re-express at conductor M, N | M.
    Cyc lift(int m) const;

    bool operator==(const Cyc &o) const; // throws ConductorMismatch
    bool operator!=(const Cyc &o) const { return !(*this == o); }

    // Exact form, e.g. "1/2 - 1/2*z4".
    std::string str() const;
    // Display-only complex approximation; never used in comparisons.
    std::pair<double, double> approx() const;

  private:
    Cyc(int conductor, std::vector<Rational> coeffs)
        : conductor_(conductor), coeffs_(std::move(coeffs)) {}

    int conductor_;
    std::vector<Rational> coeffs_; // length phi(conductor_)

    friend class CycContext;
};

} // namespace rmx
