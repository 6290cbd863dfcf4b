#pragma once

#include "rmx/coquasi.hpp"
#include "rmx/rmatrix.hpp"

namespace rmx {

// Graded vector space with a chosen ordered basis; degrees[i] is the degree
// of the i-th basis vector. Spaces built from a dimension table list their
// basis by (degree, index) in lexicographic order; tensor products keep the
// Kronecker pair order (left factor major) so that matrix conventions stay
// deterministic.
struct GradedSpace {
    GroupSpec spec;
    std::vector<GroupElement> degrees;

    static GradedSpace from_dims(const GroupSpec &spec, const std::map<GroupElement, int> &dims);
    int dim() const { return static_cast<int>(degrees.size()); }
    std::map<GroupElement, int> dims() const;
    bool operator==(const GradedSpace &) const = default;
};

GradedSpace tensor(const GradedSpace &v, const GradedSpace &w);

// Linear map in the chosen bases; row-major target.dim() x source.dim().
struct GradedMap {
    GradedSpace source;
    GradedSpace target;
    std::vector<Cyc> mat;

    const Cyc &at(int row, int col) const { return mat[static_cast<std::size_t>(row) * source.dim() + col]; }
    Cyc &at(int row, int col) { return mat[static_cast<std::size_t>(row) * source.dim() + col]; }
    bool operator==(const GradedMap &) const = default;
};

GradedMap zero_map(const GradedSpace &source, const GradedSpace &target);
GradedMap identity_map(const GradedSpace &v);
GradedMap compose(const GradedMap &f, const GradedMap &g); // f after g
GradedMap tensor(const GradedMap &f, const GradedMap &g);
GradedMap flip_map(const GradedSpace &v, const GradedSpace &w); // plain transposition

// Action of a character on a graded space: scale the degree-g block by
// <chi, g>.
GradedMap module_action(const Character &chi, const GradedSpace &v);

// The braiding in its three equivalent forms: directly from the bicharacter
// (x (x) y -> sigma(deg x, deg y) y (x) x), through the module actions of an
// R-matrix summed over its support, and through the comodule structure
// against a bilinear form.
GradedMap braid_graded(const Bicharacter &sigma, const GradedSpace &v, const GradedSpace &w);
GradedMap braid_from_r(const Tensor2 &r, const GradedSpace &v, const GradedSpace &w);
GradedMap braid_from_coquasi(const BilinearForm &rho, const GradedSpace &v, const GradedSpace &w);

// Comodule structure map of a graded space: delta(x) = x (x) degree(x).
struct ComoduleStructure {
    GroupSpec spec;
    std::vector<GroupElement> coaction; // degree attached to each basis vector
    bool operator==(const ComoduleStructure &) const = default;
};

ComoduleStructure comodule_from_grading(const GradedSpace &v);
GradedSpace grading_from_comodule(const ComoduleStructure &c);

// Module structure: one action matrix per character. Valid structures are
// exactly those with a simultaneous eigenbasis labelled by group degrees;
// recovering the grading throws Error otherwise.
struct ModuleStructure {
    GroupSpec spec;
    int dim = 0;
    std::map<Character, std::vector<Cyc>> action; // dense dim x dim, row-major
};

ModuleStructure module_from_grading(const GradedSpace &v);
GradedSpace grading_from_module(const ModuleStructure &m);

// Hexagon identities, the braid relation on V (x) W (x) U, and the symmetry
// criterion (psi_{W,V} psi_{V,W} = id iff the bicharacter is a commutation
// factor; the equivalence needs spaces supporting every degree).
AxiomReport verify_category_axioms(const Bicharacter &sigma, const GradedSpace &v,
                                   const GradedSpace &w, const GradedSpace &u);

} // namespace rmx
