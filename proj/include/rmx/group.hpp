#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rmx/cyclotomic.hpp"

namespace rmx {

// Element of a finite Abelian group presented as a product of cyclic factors,
// stored as the exponent vector (a_1, ..., a_k) with a_i reduced mod d_i.
struct GroupElement {
    std::vector<int> exps;
    auto operator<=>(const GroupElement &) const = default;
    std::string str() const; // "(a1,a2,...)"
};

// Characters of the group are identified with exponent vectors through the
// canonical pairing, so they share the element representation.
using Character = GroupElement;

// Presentation Z_{d_1} x ... x Z_{d_k}. Not normalized: Z6 and Z2xZ3 are
// distinct presentations with the same verified behavior.
struct GroupSpec {
    std::vector<int> orders;

    int rank() const { return static_cast<int>(orders.size()); }
    long long order() const;
    int exponent() const; // lcm of the cyclic orders, 1 for the trivial group

    GroupElement identity() const;
    GroupElement reduce(std::vector<int> raw) const;
    bool valid_element(const GroupElement &g) const;

    GroupElement mul(const GroupElement &a, const GroupElement &b) const;
    GroupElement inv(const GroupElement &a) const;
    GroupElement power(const GroupElement &a, long long k) const;
    int element_order(const GroupElement &a) const;

    // All elements in lexicographic order of exponent vectors.
    std::vector<GroupElement> elements() const;
    long long element_index(const GroupElement &a) const;

    bool operator==(const GroupSpec &) const = default;
    std::string str() const; // "Z4xZ2", "1"
};

// Grammar: Z<d> ( x Z<d> )*, case-insensitive; the literal "1" is the trivial
// group. Throws ParseError with the offending position.
GroupSpec parse_group_spec(const std::string &text);

// <chi, g> = zeta_e^t with t = sum_i (e/d_i) r_i a_i mod e.
int pairing_exponent(const GroupSpec &spec, const Character &chi, const GroupElement &g);
Cyc pairing(const GroupSpec &spec, const Character &chi, const GroupElement &g);

struct Subgroup {
    GroupSpec ambient;
    std::vector<GroupElement> elements; // sorted, closed, contains identity

    long long order() const { return static_cast<long long>(elements.size()); }
    bool contains(const GroupElement &g) const;
    bool operator==(const Subgroup &) const = default;
};

Subgroup subgroup_closure(const GroupSpec &spec, const std::vector<GroupElement> &generators);
Subgroup trivial_subgroup(const GroupSpec &spec);
Subgroup full_subgroup(const GroupSpec &spec);

struct QuotientData {
    GroupSpec ambient;
    Subgroup subgroup;
    std::vector<GroupElement> coset_reps; // lexicographically least per coset
    long long index() const { return static_cast<long long>(coset_reps.size()); }
};

QuotientData quotient(const GroupSpec &spec, const Subgroup &n);

// Annihilator in the character group: all chi with <chi, g> = 1 for g in N.
Subgroup annihilator(const GroupSpec &spec, const Subgroup &n);

// Exact check of the character orthogonality and completeness relations,
// sum_a <a',a><b',a>^* = n * delta and its dual.
struct OrthogonalityReport {
    bool pass = true;
    long long diagonal = 0; // the group order n
    std::vector<std::string> failures;
};

OrthogonalityReport check_orthogonality_completeness(const GroupSpec &spec);

} // namespace rmx
