#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rmx/group.hpp"

namespace rmx {

// Map sigma: Gamma x Gamma -> C*, multiplicative in each slot, in canonical
// form: the k x k exponent matrix K with K[i][j] in [0, gcd(d_i, d_j)) and
// sigma(e_i, e_j) = zeta_{gcd(d_i,d_j)}^{K[i][j]} on the cyclic generators.
// Every bicharacter arises from exactly one such matrix (test-verified
// against brute-force table validation).
struct Bicharacter {
    GroupSpec spec;
    std::vector<std::vector<int>> K;

    // sigma(a, b) = zeta_e^t; the exponent t is exact (values are e-th roots
    // of unity for e the group exponent).
    int exponent(const GroupElement &a, const GroupElement &b) const;
    Cyc evaluate(const GroupElement &a, const GroupElement &b) const;

    bool operator==(const Bicharacter &) const = default;
    std::string k_str() const; // "0,1;1,0"
};

// Reduces entries mod gcd(d_i, d_j); *reduced reports whether anything was
// out of range. Throws SpecMismatch on a wrongly shaped matrix.
Bicharacter make_bicharacter(const GroupSpec &spec, std::vector<std::vector<int>> k_matrix,
                             bool *reduced = nullptr);
Bicharacter trivial_bicharacter(const GroupSpec &spec);

// sigma_k(g^r, g^s) = omega^{krs} on the cyclic group of order n.
Bicharacter cyclic_bicharacter(int n, long long k);

// All bicharacters, iterating the K entries in row-major lexicographic
// order; the count is prod_{i,j} gcd(d_i, d_j).
std::vector<Bicharacter> enumerate_all(const GroupSpec &spec);
long long bicharacter_count(const GroupSpec &spec);

// sigma(a,b) sigma(b,a) = 1 for all a, b. On the canonical form this is
// K[i][j] + K[j][i] = 0 mod gcd(d_i, d_j).
bool is_commutation_factor(const Bicharacter &sigma);

Bicharacter transpose(const Bicharacter &sigma);
Bicharacter pointwise_product(const Bicharacter &a, const Bicharacter &b);
Bicharacter pointwise_inverse(const Bicharacter &sigma);

// Complete table Gamma x Gamma -> Q(zeta_C). Arbitrary values are allowed,
// including zero; the conductor C must be a multiple of the group exponent.
struct FunctionTable {
    GroupSpec spec;
    int conductor = 1;
    std::vector<Cyc> values; // n*n, row-major over the lex element order

    static FunctionTable constant(const GroupSpec &spec, const Cyc &value);
    const Cyc &at(const GroupElement &a, const GroupElement &b) const;
    Cyc &at(const GroupElement &a, const GroupElement &b);
    bool operator==(const FunctionTable &) const = default;
};

FunctionTable table_of(const Bicharacter &sigma); // values at conductor e

// Accepts iff the table is nowhere zero and both multiplicativity laws hold
// exhaustively; on acceptance returns the canonical matrix read off the
// generator values. The rejection names the lexicographically first
// violation.
struct FromTableResult {
    std::optional<Bicharacter> bicharacter;
    std::string rejection;
    bool accepted() const { return bicharacter.has_value(); }
};

FromTableResult from_table(const FunctionTable &table);

// Kernels N1 = {a | sigma(a,.) = 1} and N2 = {b | sigma(.,b) = 1}.
std::pair<Subgroup, Subgroup> kernels(const Bicharacter &sigma);

// The non-degenerate pairing tau on Delta_1 x Delta_2 (annihilators of the
// kernels) induced by sigma, via
//   sigma'(a',b') = (m/n^2) sum_{a,b} sigma(a,b) <a',a>^* <b',b>^*,
// which vanishes off Delta_1 x Delta_2.
struct PairingData {
    Subgroup N1, N2;         // kernels inside Gamma
    Subgroup Delta1, Delta2; // annihilators inside Gamma*
    long long m = 1;         // common order of the Deltas
    std::vector<Cyc> tau;    // m*m over Delta1.elements x Delta2.elements

    const Cyc &tau_at(std::size_t i, std::size_t j) const { return tau[i * Delta2.elements.size() + j]; }
};

PairingData induced_pairing(const Bicharacter &sigma);

} // namespace rmx
