#pragma once

#include "shifted/bialg.hpp"

namespace shifted {

/// The canonical degree-1 tensor sum_a x_a (x) eps^a of a matched triple.
struct RMatrix {
    RatTensor tensor; // arity 2 over the double
};

/// delta_g = delta restricted to h+ direct sum -delta* on h-, one arity-2
/// tensor per double basis vector.
struct DoubleCobracket {
    std::vector<RatTensor> delta;
};

RMatrix canonical_r(const ManinTriple& T);

/// Defining contraction identities of the canonical r-matrix:
/// (1 (x) kappa)(r, X) = -X on h+ and (kappa (x) 1)(r, Y) = (-1)^{|Y|} Y on h-.
Report check_rmatrix_contractions(const ManinTriple& T, const RMatrix& r);

/// Slot-placed commutators of two arity-2 tensors sharing exactly one slot,
/// with Koszul signs from routing both tensors to standard position:
///   [A^{12}, B^{13}] = sum (-1)^{|v||u'|} [u,u'] (x) v (x) v'
///   [A^{12}, B^{23}] = sum          u (x) [v,u'] (x) v'
///   [A^{13}, B^{23}] = sum (-1)^{|v||u'|} u (x) u' (x) [v,v']
RatTensor commutator_12_13(const GradedLieAlgebra& L, const RatTensor& A, const RatTensor& B);
RatTensor commutator_12_23(const GradedLieAlgebra& L, const RatTensor& A, const RatTensor& B);
RatTensor commutator_13_23(const GradedLieAlgebra& L, const RatTensor& A, const RatTensor& B);

/// [a, x (x) 1 + 1 (x) x] for an arity-2 tensor a.
RatTensor adjoint_commutator_2slot(const GradedLieAlgebra& L, const RatTensor& a, const RatTensor& x);

/// Coboundary formula: [-r, Delta(v)] = delta_g(v) for every basis v.
Report check_coboundary(const ManinTriple& T, const RMatrix& r);

/// The 1-shifted classical Yang-Baxter equation in the 3-fold tensor power:
/// [r12, r13] + [r12, r23] + [r13, r23] = 0.
Report check_cybe(const ManinTriple& T, const RMatrix& r);

/// delta_g (x) 1 (r) = [r13, r23] and 1 (x) delta_g (r) = [r12, r13].
Report check_dr_identities(const ManinTriple& T, const RMatrix& r);

/// Omega = r - sigma(r); antisymmetric and ad-invariant, and independent of
/// the Lagrangian pair (the quadratic Casimir of kappa).
RatTensor omega_of(const RMatrix& r);
Report check_omega(const ManinTriple& T, const RMatrix& r);

DoubleCobracket make_double_cobracket(const ManinTriple& T);

} // namespace shifted
