#pragma once

#include "rmx/hopf.hpp"

namespace rmx {

// The universal R-matrix attached to a bicharacter,
//   R = (1/n^2) sum_{a,b} sigma(a,b) <a',a>^* <b',b>^*  a' (x) b',
// computed by the full double sum over the group per output pair. All terms
// of one coefficient are powers of the same root of unity, so they are
// collected in an exponent histogram before any field arithmetic.
Tensor2 r_from_bicharacter(const Bicharacter &sigma);

// The same element rebuilt from the induced non-degenerate pairing,
//   R = (1/m) sum_{a1 in Delta1, a2 in Delta2} tau(a1,a2) a1 (x) a2.
Tensor2 r_from_pairing(const PairingData &pairing);

// Closed form on the cyclic group of order n: with d = gcd(k, n) for k taken
// in {1, ..., n} and l the inverse of k/d modulo n/d,
//   R = (d/n) sum_{x,y in Z_{n/d}} omega^{-d l x y} chi^{d x} (x) chi^{d y}.
// k = 0 is normalized to k = n (the trivial bicharacter).
Tensor2 r_cyclic(int n, long long k);

// Pointwise evaluation of the function associated to a tensor,
// sigma(a,b) = sum c_{a',b'} <a',a> <b',b>; inverse of the construction
// above on its image.
FunctionTable sigma_from_tensor(const Tensor2 &r);

// Exact check of the universal R-matrix axioms: invertibility, the
// quasi-cocommutativity relation R Delta(h) = (T Delta(h)) R on every basis
// element, the two coproduct factorizations (Delta (x) id)(R) = R13 R23 and
// (id (x) Delta)(R) = R13 R12, the counit conditions, and (S (x) id)(R) =
// R^{-1}. Nothing is assumed from commutativity; every identity is evaluated
// by raw tensor arithmetic.
AxiomReport verify_urm(const Tensor2 &r);

// T(R) = R^{-1}. Throws Error when R is not invertible.
bool is_triangular(const Tensor2 &r);

// R12 R13 R23 = R23 R13 R12 in the triple tensor power.
bool yang_baxter_holds(const Tensor2 &r);

} // namespace rmx
