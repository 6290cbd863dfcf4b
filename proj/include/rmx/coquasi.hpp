#pragma once

#include "rmx/hopf.hpp"

namespace rmx {

// Bilinear forms on the group algebra are determined by their values on
// Gamma x Gamma, so they share the complete-table representation.
using BilinearForm = FunctionTable;

// Unit of the convolution algebra: eps(a) eps(b), the constant-1 table.
BilinearForm counit_form(const GroupSpec &spec, int conductor);

// Convolution product (psi * psi')(a,b) = sum psi(a1,b1) psi'(a2,b2) over
// the coproduct terms of a and b. Written against the coproduct expansion of
// the basis elements; for group-likes this collapses to the pointwise
// product, which tests assert separately.
BilinearForm convolution(const BilinearForm &psi, const BilinearForm &psi2);

struct FormInverse {
    std::optional<BilinearForm> inverse;
    std::string zero_witness;
    bool ok() const { return inverse.has_value(); }
};

// Pointwise reciprocal when the table is nowhere zero; the result is
// re-verified by convolving back to the counit form.
FormInverse convolution_inverse(const BilinearForm &form);

// Checks convolution invertibility, the generalized commutation relation on
// basis pairs (evaluated literally in the group algebra even though it is
// automatic for an Abelian group), the two coproduct-splitting relations on
// basis triples, and the unit condition rho(1,a) = rho(a,1) = eps(a). Also
// cross-asserts the equivalence with the table being a bicharacter.
AxiomReport verify_coquasi(const BilinearForm &rho);

// rho' o T = rho, i.e. the transposed table equals the pointwise
// reciprocal. Requires rho to pass verify_coquasi and throws Error otherwise.
bool is_cotriangular(const BilinearForm &rho);

// rho(S a, b) = rho'(a, b), rho'(a, S b) = rho(a, b) and
// rho(S a, S b) = rho(a, b) on all basis pairs.
AxiomReport antipode_relations_check(const BilinearForm &rho);

} // namespace rmx
