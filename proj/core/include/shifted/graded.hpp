#pragma once

#include "shifted/hbar.hpp"

#include <array>
#include <concepts>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace shifted {

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BasisVector {
    std::string label;
    int degree = 0;
};

/// Finite ordered basis of a Z-graded vector space. The ordering is fixed and
/// meaningful: PBW normal forms and the structure-constant triangle use it.
class GradedBasis {
  public:
    GradedBasis() = default;
    explicit GradedBasis(std::vector<BasisVector> vectors) : vectors_(std::move(vectors)) {}

    int dim() const { return static_cast<int>(vectors_.size()); }
    const BasisVector& operator[](int id) const { return vectors_.at(id); }
    int degree(int id) const { return vectors_.at(id).degree; }
    const std::string& label(int id) const { return vectors_.at(id).label; }
    int find(const std::string& label) const; // -1 if absent
    const std::vector<BasisVector>& vectors() const { return vectors_; }

  private:
    std::vector<BasisVector> vectors_;
};

using BasisPtr = std::shared_ptr<const GradedBasis>;

template <class K>
concept CoeffRing = requires(K a, K b) {
    { a += b };
    { a * b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
};

/// Sign of the graded rearrangement given by `perm` acting on homogeneous
/// slots of the given degrees: the product of (-1)^{d_i d_j} over inversions.
/// perm[k] is the destination slot of the element currently in slot k.
int koszul_sign(std::span<const int> perm, std::span<const int> degrees);

using IndexTuple = std::array<int, 3>; // slots beyond arity hold -1

/// Exact sparse tensor of arity 1..3 over a graded basis (same space in every
/// slot). No zero entries are stored.
template <CoeffRing K>
class Tensor {
  public:
    Tensor(int arity, BasisPtr basis) : arity_(arity), basis_(std::move(basis)) {
        if (arity_ < 1 || arity_ > 3) throw AlgebraError("tensor: arity must be 1, 2 or 3");
    }

    int arity() const { return arity_; }
    const BasisPtr& basis() const { return basis_; }
    bool is_zero() const { return entries_.empty(); }
    const std::map<IndexTuple, K>& entries() const { return entries_; }

    void add(IndexTuple idx, const K& c) {
        if (c.is_zero()) return;
        for (int s = 0; s < arity_; ++s)
            if (idx[s] < 0 || idx[s] >= basis_->dim())
                throw AlgebraError("tensor: index out of range");
        for (int s = arity_; s < 3; ++s) idx[s] = -1;
        auto it = entries_.find(idx);
        if (it == entries_.end()) {
            entries_.emplace(idx, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }

    K coeff(IndexTuple idx) const {
        for (int s = arity_; s < 3; ++s) idx[s] = -1;
        auto it = entries_.find(idx);
        return it == entries_.end() ? K{} : it->second;
    }

    int entry_degree(const IndexTuple& idx) const {
        int d = 0;
        for (int s = 0; s < arity_; ++s) d += basis_->degree(idx[s]);
        return d;
    }

    /// Total degree common to all entries; throws if inhomogeneous or zero.
    int homogeneous_degree() const {
        if (entries_.empty()) throw AlgebraError("tensor: zero tensor has no degree");
        int d = entry_degree(entries_.begin()->first);
        for (const auto& [idx, c] : entries_)
            if (entry_degree(idx) != d) throw AlgebraError("tensor: inhomogeneous entries");
        return d;
    }

    Tensor operator-() const {
        Tensor t(arity_, basis_);
        for (const auto& [idx, c] : entries_) t.entries_.emplace(idx, -c);
        return t;
    }
    Tensor& operator+=(const Tensor& o) {
        check_same_shape(o);
        for (const auto& [idx, c] : o.entries_) add(idx, c);
        return *this;
    }
    Tensor& operator-=(const Tensor& o) { return *this += -o; }
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend bool operator==(const Tensor& a, const Tensor& b) {
        a.check_same_shape(b);
        return a.entries_ == b.entries_;
    }

    Tensor& scale(const K& c) {
        Tensor t(arity_, basis_);
        for (const auto& [idx, e] : entries_) t.add(idx, e * c);
        return *this = t;
    }

    void check_same_shape(const Tensor& o) const {
        if (arity_ != o.arity_) throw AlgebraError("tensor: arity mismatch");
        if (basis_ != o.basis_) throw AlgebraError("tensor: basis mismatch");
    }

    std::string str() const {
        std::string out;
        for (const auto& [idx, c] : entries_) {
            if (!out.empty()) out += " + ";
            out += "(";
            if constexpr (requires { c.str(); }) out += c.str();
            out += ")*";
            for (int s = 0; s < arity_; ++s) {
                if (s) out += (std::string) "\xE2\x8A\x97"; // tensor sign
                out += basis_->label(idx[s]);
            }
        }
        return out.empty() ? "0" : out;
    }

  private:
    int arity_;
    BasisPtr basis_;
    std::map<IndexTuple, K> entries_;
};

using RatTensor = Tensor<Rational>;

/// Apply the slot permutation to a tensor with Koszul signs:
/// the element in slot k moves to slot perm[k].
template <CoeffRing K>
Tensor<K> apply_perm(const Tensor<K>& t, std::span<const int> perm);

/// The braiding sigma on an arity-2 tensor; an involution.
template <CoeffRing K>
Tensor<K> braid(const Tensor<K>& t);

/// True iff sigma(t) == t, i.e. t lies in the image of Sym^2 inside the
/// 2-fold tensor power.
template <CoeffRing K>
bool sym2_check(const Tensor<K>& t);

/// Graded symmetrization: the average over all slot permutations. Projects
/// onto the image of Sym^n inside the n-fold tensor power.
template <CoeffRing K>
Tensor<K> symmetrize_tensor(const Tensor<K>& t);

/// Contract slot `slot` (0-based) of t against the arity-1 tensor x through
/// the bilinear form `pairing`: entries pick up the sign of moving x leftward
/// past the slots after `slot`. Result has arity one less.
template <CoeffRing K>
Tensor<K> contract(const Tensor<K>& pairing, const Tensor<K>& t, int slot, const Tensor<K>& x);

extern template class Tensor<Rational>;
extern template class Tensor<HbarPoly>;
extern template Tensor<Rational> apply_perm(const Tensor<Rational>&, std::span<const int>);
extern template Tensor<HbarPoly> apply_perm(const Tensor<HbarPoly>&, std::span<const int>);
extern template Tensor<Rational> braid(const Tensor<Rational>&);
extern template Tensor<HbarPoly> braid(const Tensor<HbarPoly>&);
extern template bool sym2_check(const Tensor<Rational>&);
extern template bool sym2_check(const Tensor<HbarPoly>&);
extern template Tensor<Rational> symmetrize_tensor(const Tensor<Rational>&);
extern template Tensor<HbarPoly> symmetrize_tensor(const Tensor<HbarPoly>&);
extern template Tensor<Rational> contract(const Tensor<Rational>&, const Tensor<Rational>&, int,
                                          const Tensor<Rational>&);
extern template Tensor<HbarPoly> contract(const Tensor<HbarPoly>&, const Tensor<HbarPoly>&, int,
                                          const Tensor<HbarPoly>&);

} // namespace shifted
