#include "rmx/rmatrix.hpp"

#include <numeric>

#include "rmx/errors.hpp"

namespace rmx {

namespace {

std::string tuple3_str(const std::array<GroupElement, 3> &k) {
    return k[0].str() + "(x)" + k[1].str() + "(x)" + k[2].str();
}

template <typename TensorT>
std::string witness_of(const TensorT &lhs, const TensorT &rhs);

template <>
std::string witness_of(const Tensor2 &lhs, const Tensor2 &rhs) {
    auto ia = lhs.coeffs.begin(), ib = rhs.coeffs.begin();
    while (ia != lhs.coeffs.end() && ib != rhs.coeffs.end()) {
        if (ia->first != ib->first) {
            const auto &k = ia->first < ib->first ? ia->first : ib->first;
            return k.first.str() + "(x)" + k.second.str();
        }
        if (!(ia->second == ib->second))
            return ia->first.first.str() + "(x)" + ia->first.second.str();
        ++ia;
        ++ib;
    }
    if (ia != lhs.coeffs.end())
        return ia->first.first.str() + "(x)" + ia->first.second.str();
    if (ib != rhs.coeffs.end())
        return ib->first.first.str() + "(x)" + ib->first.second.str();
    return "";
}

template <>
std::string witness_of(const Tensor3 &lhs, const Tensor3 &rhs) {
    auto ia = lhs.coeffs.begin(), ib = rhs.coeffs.begin();
    while (ia != lhs.coeffs.end() && ib != rhs.coeffs.end()) {
        if (ia->first != ib->first)
            return tuple3_str(ia->first < ib->first ? ia->first : ib->first);
        if (!(ia->second == ib->second))
            return tuple3_str(ia->first);
        ++ia;
        ++ib;
    }
    if (ia != lhs.coeffs.end())
        return tuple3_str(ia->first);
    if (ib != rhs.coeffs.end())
        return tuple3_str(ib->first);
    return "";
}

} // namespace

Tensor2 r_from_bicharacter(const Bicharacter &sigma) {
    const GroupSpec &spec = sigma.spec;
    int e = spec.exponent();
    long long n = spec.order();
    std::vector<GroupElement> all = spec.elements();

    // cache the bicharacter and pairing exponent tables
    std::vector<std::vector<int>> sig(all.size(), std::vector<int>(all.size()));
    std::vector<std::vector<int>> pair_t(all.size(), std::vector<int>(all.size()));
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
            sig[i][j] = sigma.exponent(all[i], all[j]);
            pair_t[i][j] = pairing_exponent(spec, all[i], all[j]);
        }

    Rational scale(BigInt(1), BigInt(n) * BigInt(n));
    Tensor2 r{spec, Side::Star, {}};
    for (std::size_t i1 = 0; i1 < all.size(); ++i1) {
        for (std::size_t i2 = 0; i2 < all.size(); ++i2) {
            std::vector<long long> hist(e, 0);
            for (std::size_t a = 0; a < all.size(); ++a)
                for (std::size_t b = 0; b < all.size(); ++b) {
                    int t = sig[a][b] - pair_t[i1][a] - pair_t[i2][b];
                    hist[((t % e) + e) % e] += 1;
                }
            Cyc coeff = Cyc::zero(e);
            for (int j = 0; j < e; ++j)
                if (hist[j] != 0)
                    coeff += Cyc::rational(e, Rational(hist[j])) * Cyc::root_of_unity(e, j);
            r.add_term({all[i1], all[i2]}, coeff * Cyc::rational(e, scale));
        }
    }
    return r;
}

Tensor2 r_from_pairing(const PairingData &pairing) {
    const GroupSpec &spec = pairing.N1.ambient;
    int e = spec.exponent();
    Cyc scale = Cyc::rational(e, Rational(BigInt(1), BigInt(pairing.m)));
    Tensor2 r{spec, Side::Star, {}};
    for (std::size_t i = 0; i < pairing.Delta1.elements.size(); ++i)
        for (std::size_t j = 0; j < pairing.Delta2.elements.size(); ++j)
            r.add_term({pairing.Delta1.elements[i], pairing.Delta2.elements[j]},
                       pairing.tau_at(i, j) * scale);
    return r;
}

Tensor2 r_cyclic(int n, long long k) {
    if (n < 1)
        throw Error("cyclic group order must be positive");
    k %= n;
    if (k <= 0)
        k += n; // k in {1, ..., n}; k = n is the trivial bicharacter
    long long d = std::gcd(k, static_cast<long long>(n));
    long long q = n / d;
    // l = (k/d)^{-1} mod q via the extended Euclidean algorithm
    long long a = (k / d) % q, l = 0;
    {
        long long r0 = q, r1 = a, s0 = 0, s1 = 1;
        while (r1 != 0) {
            long long t = r0 / r1;
            r0 -= t * r1;
            std::swap(r0, r1);
            s0 -= t * s1;
            std::swap(s0, s1);
        }
        l = ((s0 % q) + q) % q; // for q = 1 this is 0
    }

    GroupSpec spec{{n}};
    Cyc scale = Cyc::rational(n, Rational(BigInt(d), BigInt(n)));
    Tensor2 r{spec, Side::Star, {}};
    for (long long x = 0; x < q; ++x)
        for (long long y = 0; y < q; ++y) {
            Cyc root = Cyc::root_of_unity(n, -(d * l % n) * x * y);
            r.add_term({GroupElement{{static_cast<int>(d * x % n)}},
                        GroupElement{{static_cast<int>(d * y % n)}}},
                       root * scale);
        }
    return r;
}

FunctionTable sigma_from_tensor(const Tensor2 &r) { return function_from_tensor2(r); }

AxiomReport verify_urm(const Tensor2 &r) {
    AxiomReport report;
    const GroupSpec &spec = r.spec;
    int c = scalar_conductor(r);

    Tensor2Inverse inv = invert_tensor2(r);
    report.add("R invertible", inv.ok(), inv.zero_witness);

    // R Delta(h) = (T Delta(h)) R for every basis element h
    {
        bool pass = true;
        std::string witness;
        for (const GroupElement &g : spec.elements()) {
            Tensor2 delta = lift_scalars(coproduct(hopf_basis(spec, Side::Star, g)), c);
            if (!(r * delta == twist(delta) * r)) {
                pass = false;
                witness = g.str();
                break;
            }
        }
        report.add("R Delta(h) = T(Delta(h)) R", pass, witness);
    }
    {
        Tensor3 lhs = coproduct_slot1(r);
        Tensor3 rhs = lift13(r) * lift23(r);
        bool pass = lhs == rhs;
        report.add("(Delta x id)(R) = R13 R23", pass, pass ? "" : witness_of(lhs, rhs));
    }
    {
        Tensor3 lhs = coproduct_slot2(r);
        Tensor3 rhs = lift13(r) * lift12(r);
        bool pass = lhs == rhs;
        report.add("(id x Delta)(R) = R13 R12", pass, pass ? "" : witness_of(lhs, rhs));
    }
    {
        HopfElement unit = lift_scalars(hopf_unit(spec, Side::Star), c);
        HopfElement left = counit_slot1(r);
        HopfElement right = counit_slot2(r);
        report.add("(eps x id)(R) = 1", left == unit, left == unit ? "" : left.str());
        report.add("(id x eps)(R) = 1", right == unit, right == unit ? "" : right.str());
    }
    if (inv.ok()) {
        Tensor2 lhs = antipode_slot1(r);
        bool pass = lhs == *inv.inverse;
        report.add("(S x id)(R) = R^{-1}", pass, pass ? "" : witness_of(lhs, *inv.inverse));
    } else {
        report.add("(S x id)(R) = R^{-1}", false, "R is not invertible");
    }
    return report;
}

bool is_triangular(const Tensor2 &r) {
    Tensor2Inverse inv = invert_tensor2(r);
    if (!inv.ok())
        throw Error("triangularity is undefined: " + inv.zero_witness);
    return twist(r) == *inv.inverse;
}

bool yang_baxter_holds(const Tensor2 &r) {
    Tensor3 r12 = lift12(r), r13 = lift13(r), r23 = lift23(r);
    return r12 * r13 * r23 == r23 * r13 * r12;
}

} // namespace rmx
