#pragma once

#include "shifted/graded.hpp"
#include "shifted/linalg.hpp"
#include "shifted/report.hpp"

#include <functional>
#include <map>
#include <optional>
#include <span>

namespace shifted {

/// Predicate selecting which basis-index tuples a verification loop asserts.
/// Loop truncations exclude boundary tuples whose brackets would leave the
/// representable window; the default accepts everything.
using TupleFilter = std::function<bool(std::span<const int>)>;
TupleFilter all_tuples();

struct BracketSpec {
    int a, b;
    std::vector<std::pair<int, Rational>> terms; // [e_a, e_b] = sum terms
};

/// Graded Lie algebra given by structure constants over a fixed basis.
/// Only the triangle a < b is stored (a == b only in odd degree); the other
/// half is derived from graded antisymmetry, which therefore holds by
/// construction. Jacobi is a check, not an assumption.
class GradedLieAlgebra {
  public:
    GradedLieAlgebra(BasisPtr basis, const std::vector<BracketSpec>& specs,
                     Report* validation = nullptr);

    const BasisPtr& basis() const { return basis_; }
    int dim() const { return basis_->dim(); }
    int degree(int a) const { return basis_->degree(a); }

    /// [e_a, e_b] as (index, coefficient) pairs.
    std::vector<std::pair<int, Rational>> bracket_basis(int a, int b) const;
    RatTensor bracket(const RatTensor& x, const RatTensor& y) const;
    RatTensor basis_vector(int a) const;

    /// Slot-wise adjoint action [Delta(e_a), t] on arity-2 tensors:
    /// [x, u (x) v] = [x,u] (x) v + (-1)^{|x||u|} u (x) [x,v].
    RatTensor ad2(int a, const RatTensor& t) const;
    /// Same derivation rule on arity-3 tensors.
    RatTensor ad3(int a, const RatTensor& t) const;

    Report check_jacobi(const TupleFilter& filter = all_tuples()) const;

  private:
    BasisPtr basis_;
    // canonical triangle: key (a,b) with a < b, or a == b odd
    std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>> f_;
};

/// The degree-1 antisymmetric invariant pairing kappa, stored two-sided for
/// O(1) lookup; antisymmetry of the stored table is validated by check_metric.
class ShiftedMetric {
  public:
    ShiftedMetric(BasisPtr basis, std::vector<std::tuple<int, int, Rational>> entries);

    const BasisPtr& basis() const { return basis_; }
    Rational kappa(int a, int b) const;
    Rational kappa(const RatTensor& x, const RatTensor& y) const;
    RatTensor as_tensor() const;

  private:
    BasisPtr basis_;
    std::map<std::pair<int, int>, Rational> k_;
};

/// Verifies degree-1 support, antisymmetry, invariance
/// kappa([y,x],z) = (-1)^{|x|} kappa(y,[x,z]) on all (filtered) triples, and
/// nondegeneracy of every g_n x g_{1-n} block.
Report check_metric(const GradedLieAlgebra& L, const ShiftedMetric& kappa,
                    const TupleFilter& filter = all_tuples());

/// Subspace spanned by explicit coefficient vectors (kept linearly
/// independent).
class Subspace {
  public:
    Subspace(BasisPtr basis, std::vector<RatTensor> span);
    static Subspace from_indices(const BasisPtr& basis, std::span<const int> ids);

    int dim() const { return static_cast<int>(span_.size()); }
    const std::vector<RatTensor>& span() const { return span_; }
    const BasisPtr& basis() const { return basis_; }
    bool contains(const RatTensor& v) const;
    /// Coordinates of v in the spanning set, if v lies in the subspace.
    std::optional<std::vector<Rational>> coordinates(const RatTensor& v) const;

  private:
    BasisPtr basis_;
    std::vector<RatTensor> span_;
};

Subspace orthogonal_complement(const Subspace& S, const GradedLieAlgebra& L,
                               const ShiftedMetric& kappa);

Report check_lagrangian_pair(const GradedLieAlgebra& L, const ShiftedMetric& kappa,
                             const Subspace& h_plus, const Subspace& h_minus,
                             const TupleFilter& filter = all_tuples());

/// The canonical degree-split transverse pair: h+ = deg <= 0, h- = deg >= 1.
std::pair<Subspace, Subspace> canonical_lagrangians(const GradedLieAlgebra& L,
                                                    const ShiftedMetric& kappa);

/// Coadjoint action on the dual basis: x_a . eps^b = f_{ca}^b eps^c.
/// Returned coefficients are indexed by the dual label c.
std::vector<std::pair<int, Rational>> coadjoint_action(const GradedLieAlgebra& L, int a, int b);

} // namespace shifted
