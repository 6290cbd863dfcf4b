#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "rmx/bicharacter.hpp"
#include "rmx/report.hpp"

namespace rmx {

// The two group Hopf algebras attached to a finite Abelian group: the group
// algebra of the character group (where universal R-matrices live) and the
// group algebra of the group itself (where coquasitriangular forms live).
// Both are spanned by exponent vectors; the side marker keeps them apart.
enum class Side { Star, Group };

std::string side_str(Side side);

// Finitely supported linear combination of basis elements. Zero coefficients
// are never stored, so equal values have equal representations and map
// iteration is the canonical basis order.
struct HopfElement {
    GroupSpec spec;
    Side side = Side::Star;
    std::map<GroupElement, Cyc> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    void add_term(const GroupElement &key, const Cyc &c);
    bool operator==(const HopfElement &) const = default;
    std::string str() const;
};

struct Tensor2 {
    GroupSpec spec;
    Side side = Side::Star;
    std::map<std::pair<GroupElement, GroupElement>, Cyc> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    void add_term(const std::pair<GroupElement, GroupElement> &key, const Cyc &c);
    bool operator==(const Tensor2 &) const = default;
    std::string str() const;
};

struct Tensor3 {
    GroupSpec spec;
    Side side = Side::Star;
    std::map<std::array<GroupElement, 3>, Cyc> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    void add_term(const std::array<GroupElement, 3> &key, const Cyc &c);
    bool operator==(const Tensor3 &) const = default;
};

HopfElement hopf_zero(const GroupSpec &spec, Side side);
HopfElement hopf_basis(const GroupSpec &spec, Side side, const GroupElement &g);
HopfElement hopf_unit(const GroupSpec &spec, Side side); // basis identity

Tensor2 tensor2_zero(const GroupSpec &spec, Side side);
Tensor2 tensor2_unit(const GroupSpec &spec, Side side); // 1 (x) 1
Tensor3 tensor3_unit(const GroupSpec &spec, Side side);
Tensor2 tensor_product(const HopfElement &a, const HopfElement &b);

// Bilinear extensions of the group law on basis elements (componentwise on
// basis tuples for the tensor powers).
HopfElement operator*(const HopfElement &a, const HopfElement &b);
Tensor2 operator*(const Tensor2 &a, const Tensor2 &b);
Tensor3 operator*(const Tensor3 &a, const Tensor3 &b);
HopfElement operator+(const HopfElement &a, const HopfElement &b);
Tensor2 operator+(const Tensor2 &a, const Tensor2 &b);
HopfElement operator-(const HopfElement &a, const HopfElement &b);
Tensor2 operator-(const Tensor2 &a, const Tensor2 &b);
HopfElement operator*(const Cyc &c, const HopfElement &a);
Tensor2 operator*(const Cyc &c, const Tensor2 &a);

// Group-like coproduct, counit, antipode.
Tensor2 coproduct(const HopfElement &x);
Cyc counit(const HopfElement &x);
HopfElement antipode(const HopfElement &x);

// Multiplication map applied to a tensor: a (x) b -> a b.
HopfElement contract_product(const Tensor2 &t);

Tensor2 twist(const Tensor2 &t);
Tensor2 antipode_slot1(const Tensor2 &t);
Tensor2 antipode_slot2(const Tensor2 &t);

// Embeddings into the triple tensor power: t (x) 1, 1 (x) t, and the
// outer-slot embedding (twist (x) id)(1 (x) t).
Tensor3 lift12(const Tensor2 &t);
Tensor3 lift23(const Tensor2 &t);
Tensor3 lift13(const Tensor2 &t);

// Coproduct applied in one slot of a tensor.
Tensor3 coproduct_slot1(const Tensor2 &t);
Tensor3 coproduct_slot2(const Tensor2 &t);

// Counit applied in one slot.
HopfElement counit_slot1(const Tensor2 &t);
HopfElement counit_slot2(const Tensor2 &t);
Tensor2 counit_slot3(const Tensor3 &t);

// The Hopf pairing of the two sides, extending the group pairing bilinearly.
Cyc hopf_pairing(const HopfElement &star_side, const HopfElement &group_side);

// Exhaustively checks the four pairing axioms on basis elements, the
// unit/counit compatibilities, and antipode intertwining.
AxiomReport verify_hopf_pairing_axioms(const GroupSpec &spec);

// The algebra isomorphism between the tensor square of the star side and the
// function algebra on Gamma x Gamma:
//   table(a, b)  = sum_{a',b'} c_{a',b'} <a',a> <b',b>
//   tensor       = (1/n^2) sum_{a,b} table(a,b) <a',a>^* <b',b>^*  a' (x) b'.
FunctionTable function_from_tensor2(const Tensor2 &t);
Tensor2 tensor2_from_function(const FunctionTable &table);

// Inversion through the function algebra: pointwise reciprocal of the
// associated function; rejects iff that function has a zero. The result is
// re-verified by an exact product against the unit tensor.
struct Tensor2Inverse {
    std::optional<Tensor2> inverse;
    std::string zero_witness;
    bool ok() const { return inverse.has_value(); }
};

Tensor2Inverse invert_tensor2(const Tensor2 &t);

// Conductor shared by the scalars of a tensor (group exponent when empty).
int scalar_conductor(const Tensor2 &t);

// Re-express all scalars at a larger conductor.
HopfElement lift_scalars(const HopfElement &x, int conductor);
Tensor2 lift_scalars(const Tensor2 &t, int conductor);

} // namespace rmx
