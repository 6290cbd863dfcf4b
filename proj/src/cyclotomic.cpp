#include "rmx/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "rmx/errors.hpp"

namespace rmx {

int euler_phi(int n) {
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0)
                m /= p;
            result -= result / p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

namespace {

// x^n - 1 as an integer coefficient vector, constant term first.
std::vector<BigInt> power_minus_one(int n) {
    std::vector<BigInt> p(n + 1, BigInt(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

// Exact division of integer polynomials; remainder must vanish.
std::vector<BigInt> exact_div(std::vector<BigInt> a, const std::vector<BigInt> &b) {
    int da = static_cast<int>(a.size()) - 1;
    int db = static_cast<int>(b.size()) - 1;
    std::vector<BigInt> q(da - db + 1, BigInt(0));
    for (int i = da - db; i >= 0; --i) {
        BigInt c = a[i + db] / b[db];
        q[i] = c;
        if (c != 0)
            for (int j = 0; j <= db; ++j)
                a[i + j] -= c * b[j];
    }
    return q;
}

} // namespace

std::vector<BigInt> cyclotomic_polynomial(int n) {
    static std::map<int, std::vector<BigInt>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);

    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, filling the cache
    // bottom-up so the recursion is just a loop.
    for (int m = 1; m <= n; ++m) {
        if (n % m != 0 || cache.count(m))
            continue;
        std::vector<BigInt> poly = power_minus_one(m);
        for (int d = 1; d < m; ++d)
            if (m % d == 0)
                poly = exact_div(std::move(poly), cache.at(d));
        cache.emplace(m, std::move(poly));
    }
    return cache.at(n);
}

// ---------------------------------------------------------------------------
// Per-conductor context: the cyclotomic polynomial, reduction rows for the
// powers z^j with phi <= j <= 2*phi-2 (enough to reduce any product of two
// reduced elements), and the reduced form of every root of unity z^k.

class CycContext {
  public:
    explicit CycContext(int n) : n_(n), phi_(euler_phi(n)) {
        poly_ = cyclotomic_polynomial(n);

        // Row j holds the coefficients of z^j reduced mod Phi_n. Built
        // iteratively: z^{j+1} = shift of z^j, then eliminate degree phi.
        std::vector<BigInt> cur(phi_, BigInt(0));
        if (phi_ > 0)
            cur[0] = 1; // z^0
        rows_.resize(std::max(2 * phi_ - 1, n_));
        for (int j = 0; j < static_cast<int>(rows_.size()); ++j) {
            rows_[j] = cur;
            // multiply by z
            BigInt top = cur[phi_ - 1];
            for (int i = phi_ - 1; i > 0; --i)
                cur[i] = cur[i - 1];
            cur[0] = 0;
            if (top != 0)
                for (int i = 0; i < phi_; ++i)
                    cur[i] -= top * poly_[i];
        }
    }

    int n() const { return n_; }
    int phi() const { return phi_; }
    const std::vector<BigInt> &poly() const { return poly_; }
    const std::vector<BigInt> &row(int j) const { return rows_[j]; }

    static const CycContext &get(int n) {
        static std::map<int, std::unique_ptr<CycContext>> cache;
        static std::mutex mutex;
        std::lock_guard<std::mutex> lock(mutex);
        auto &slot = cache[n];
        if (!slot)
            slot = std::make_unique<CycContext>(n);
        return *slot;
    }

  private:
    int n_;
    int phi_;
    std::vector<BigInt> poly_;
    std::vector<std::vector<BigInt>> rows_;
};

namespace {

void check_conductor(int n) {
    if (n < 1)
        throw Error("conductor must be positive");
}

void require_same_conductor(const Cyc &a, const Cyc &b) {
    if (a.conductor() != b.conductor())
        throw ConductorMismatch("conductor mismatch: " + std::to_string(a.conductor()) +
                                " vs " + std::to_string(b.conductor()));
}

// --- dense polynomial helpers over Rational, used only for inversion ---

using PolyQ = std::vector<Rational>;

int degree(const PolyQ &p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero())
            return i;
    return -1;
}

PolyQ poly_sub_scaled(PolyQ a, const PolyQ &b, const Rational &c, int shift) {
    if (static_cast<int>(a.size()) < static_cast<int>(b.size()) + shift)
        a.resize(b.size() + shift);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i + shift] -= c * b[i];
    return a;
}

// a mod b together with the quotient.
std::pair<PolyQ, PolyQ> divmod(PolyQ a, const PolyQ &b) {
    int db = degree(b);
    PolyQ q(std::max(degree(a) - db + 1, 1), Rational());
    Rational lead = b[db].inverse();
    while (degree(a) >= db) {
        int da = degree(a);
        Rational c = a[da] * lead;
        q[da - db] = c;
        a = poly_sub_scaled(std::move(a), b, c, da - db);
    }
    return {q, a};
}

} // namespace

// ---------------------------------------------------------------------------

Cyc::Cyc() : conductor_(1), coeffs_(1) {}

Cyc Cyc::zero(int conductor) {
    check_conductor(conductor);
    const CycContext &ctx = CycContext::get(conductor);
    return Cyc(conductor, std::vector<Rational>(ctx.phi()));
}

Cyc Cyc::one(int conductor) {
    Cyc c = zero(conductor);
    c.coeffs_[0] = Rational(1);
    return c;
}

Cyc Cyc::rational(int conductor, Rational r) {
    Cyc c = zero(conductor);
    c.coeffs_[0] = std::move(r);
    return c;
}

Cyc Cyc::root_of_unity(int conductor, long long k) {
    check_conductor(conductor);
    const CycContext &ctx = CycContext::get(conductor);
    long long r = k % conductor;
    if (r < 0)
        r += conductor;
    const std::vector<BigInt> &row = ctx.row(static_cast<int>(r));
    std::vector<Rational> coeffs(ctx.phi());
    for (int i = 0; i < ctx.phi(); ++i)
        coeffs[i] = Rational(row[i]);
    return Cyc(conductor, std::move(coeffs));
}

bool Cyc::is_zero() const {
    for (const Rational &c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

bool Cyc::is_one() const {
    if (!coeffs_[0].is_one())
        return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero())
            return false;
    return true;
}

bool Cyc::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero())
            return false;
    return true;
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (Rational &c : r.coeffs_)
        c = -c;
    return r;
}

Cyc operator+(const Cyc &a, const Cyc &b) {
    Cyc r = a;
    r += b;
    return r;
}

Cyc operator-(const Cyc &a, const Cyc &b) {
    Cyc r = a;
    r -= b;
    return r;
}

Cyc &Cyc::operator+=(const Cyc &o) {
    require_same_conductor(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

Cyc &Cyc::operator-=(const Cyc &o) {
    require_same_conductor(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Cyc operator*(const Cyc &a, const Cyc &b) {
    require_same_conductor(a, b);
    const CycContext &ctx = CycContext::get(a.conductor());
    int phi = ctx.phi();

    std::vector<Rational> prod(2 * phi - 1);
    for (int i = 0; i < phi; ++i) {
        if (a.coeffs()[i].is_zero())
            continue;
        for (int j = 0; j < phi; ++j) {
            if (b.coeffs()[j].is_zero())
                continue;
            prod[i + j] += a.coeffs()[i] * b.coeffs()[j];
        }
    }
    // fold the overflow degrees back using the precomputed rows
    std::vector<Rational> result(prod.begin(), prod.begin() + phi);
    for (int j = phi; j < 2 * phi - 1; ++j) {
        if (prod[j].is_zero())
            continue;
        const std::vector<BigInt> &row = ctx.row(j);
        for (int i = 0; i < phi; ++i)
            if (row[i] != 0)
                result[i] += prod[j] * Rational(row[i]);
    }
    return Cyc(a.conductor(), std::move(result));
}

Cyc &Cyc::operator*=(const Cyc &o) { return *this = *this * o; }

Cyc operator/(const Cyc &a, const Cyc &b) { return a * b.inverse(); }

Cyc Cyc::inverse() const {
    if (is_zero())
        throw DivisionByZero("inverse of zero cyclotomic number");
    const CycContext &ctx = CycContext::get(conductor_);

    if (is_rational()) {
        Cyc r = zero(conductor_);
        r.coeffs_[0] = coeffs_[0].inverse();
        return r;
    }

    // Extended Euclid on (this, Phi_N) over Q[x]: find u with u*this = 1.
    PolyQ r0(ctx.poly().size());
    for (std::size_t i = 0; i < ctx.poly().size(); ++i)
        r0[i] = Rational(ctx.poly()[i]);
    PolyQ r1(coeffs_.begin(), coeffs_.end());
    PolyQ s0{Rational(0)}, s1{Rational(1)}; // s tracks the coefficient of `this`

    while (degree(r1) > 0) {
        auto [q, rem] = divmod(std::move(r0), r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        // s_{k+1} = s_{k-1} - q*s_k
        PolyQ s2 = s0;
        int dq = degree(q);
        for (int i = 0; i <= dq; ++i)
            if (!q[i].is_zero())
                s2 = poly_sub_scaled(std::move(s2), s1, q[i], i);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (degree(r1) != 0)
        throw Error("cyclotomic inverse: gcd not constant"); // cannot happen for Phi_N irreducible
    Rational scale = r1[0].inverse();

    Cyc result = zero(conductor_);
    int top = std::min<int>(degree(s1), ctx.phi() - 1);
    for (int i = 0; i <= top; ++i)
        result.coeffs_[i] = s1[i] * scale;
    return result;
}

Cyc Cyc::pow(long long k) const {
    if (k < 0)
        return inverse().pow(-k);
    Cyc acc = one(conductor_);
    Cyc base = *this;
    while (k > 0) {
        if (k & 1)
            acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

Cyc Cyc::conjugate() const {
    const CycContext &ctx = CycContext::get(conductor_);
    int n = conductor_;
    Cyc result = zero(conductor_);
    for (int j = 0; j < ctx.phi(); ++j) {
        if (coeffs_[j].is_zero())
            continue;
        const std::vector<BigInt> &row = ctx.row((n - j) % n);
        for (int i = 0; i < ctx.phi(); ++i)
            if (row[i] != 0)
                result.coeffs_[i] += coeffs_[j] * Rational(row[i]);
    }
    return result;
}

Cyc Cyc::lift(int m) const {
    if (m == conductor_)
        return *this;
    if (m % conductor_ != 0)
        throw ConductorMismatch("lift target " + std::to_string(m) +
                                " is not a multiple of " + std::to_string(conductor_));
    int step = m / conductor_;
    const CycContext &ctx = CycContext::get(m);
    Cyc result = zero(m);
    for (int j = 0; j < static_cast<int>(coeffs_.size()); ++j) {
        if (coeffs_[j].is_zero())
            continue;
        const std::vector<BigInt> &row = ctx.row((j * step) % m);
        for (int i = 0; i < ctx.phi(); ++i)
            if (row[i] != 0)
                result.coeffs_[i] += coeffs_[j] * Rational(row[i]);
    }
    return result;
}

bool Cyc::operator==(const Cyc &o) const {
    require_same_conductor(*this, o);
    return coeffs_ == o.coeffs_;
}

std::string Cyc::str() const {
    if (is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        const Rational &c = coeffs_[j];
        if (c.is_zero())
            continue;
        Rational a = c;
        bool neg = c.num() < 0;
        if (neg)
            a = -a;
        if (first) {
            if (neg)
                out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mag = a.str();
        if (j == 0) {
            out += mag;
        } else {
            if (mag != "1")
                out += mag + "*";
            out += "z" + std::to_string(conductor_);
            if (j > 1)
                out += "^" + std::to_string(j);
        }
    }
    return out;
}

std::pair<double, double> Cyc::approx() const {
    double re = 0, im = 0;
    const double tau = 2.0 * 3.14159265358979323846;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero())
            continue;
        double c = coeffs_[j].to_double();
        re += c * std::cos(tau * static_cast<double>(j) / conductor_);
        im += c * std::sin(tau * static_cast<double>(j) / conductor_);
    }
    return {re, im};
}

} // namespace rmx
