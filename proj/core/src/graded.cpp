#include "shifted/graded.hpp"

#include <algorithm>
#include <numeric>

namespace shifted {

int GradedBasis::find(const std::string& label) const {
    for (int i = 0; i < dim(); ++i)
        if (vectors_[i].label == label) return i;
    return -1;
}

int koszul_sign(std::span<const int> perm, std::span<const int> degrees) {
    const size_t n = perm.size();
    if (degrees.size() != n) throw AlgebraError("koszul_sign: length mismatch");
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 0 || static_cast<size_t>(p) >= n || seen[p])
            throw AlgebraError("koszul_sign: not a permutation");
        seen[p] = true;
    }
    int exponent = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (perm[i] > perm[j]) exponent += degrees[i] * degrees[j];
    return (exponent % 2 == 0) ? 1 : -1;
}

template <CoeffRing K>
Tensor<K> apply_perm(const Tensor<K>& t, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != t.arity())
        throw AlgebraError("apply_perm: permutation length must match arity");
    Tensor<K> out(t.arity(), t.basis());
    for (const auto& [idx, c] : t.entries()) {
        std::vector<int> degs(t.arity());
        for (int s = 0; s < t.arity(); ++s) degs[s] = t.basis()->degree(idx[s]);
        int sign = koszul_sign(perm, degs);
        IndexTuple moved{-1, -1, -1};
        for (int s = 0; s < t.arity(); ++s) moved[perm[s]] = idx[s];
        out.add(moved, sign < 0 ? -c : c);
    }
    return out;
}

template <CoeffRing K>
Tensor<K> braid(const Tensor<K>& t) {
    if (t.arity() != 2) throw AlgebraError("braid: arity must be 2");
    static constexpr int swap[2] = {1, 0};
    return apply_perm(t, std::span<const int>(swap, 2));
}

template <CoeffRing K>
bool sym2_check(const Tensor<K>& t) {
    if (t.arity() != 2) throw AlgebraError("sym2_check: arity must be 2");
    return braid(t) == t;
}

template <CoeffRing K>
Tensor<K> symmetrize_tensor(const Tensor<K>& t) {
    std::vector<int> perm(t.arity());
    std::iota(perm.begin(), perm.end(), 0);
    Tensor<K> out(t.arity(), t.basis());
    long count = 0;
    do {
        out += apply_perm(t, perm);
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rational inv(1, count);
    if constexpr (std::same_as<K, Rational>) {
        out.scale(inv);
    } else {
        // coefficient rings with a Rational scale
        Tensor<K> scaled(t.arity(), t.basis());
        for (const auto& [idx, c] : out.entries()) {
            K copy = c;
            copy.scale(inv);
            scaled.add(idx, copy);
        }
        out = scaled;
    }
    return out;
}

template <CoeffRing K>
Tensor<K> contract(const Tensor<K>& pairing, const Tensor<K>& t, int slot, const Tensor<K>& x) {
    if (pairing.arity() != 2) throw AlgebraError("contract: pairing must have arity 2");
    if (x.arity() != 1) throw AlgebraError("contract: argument must have arity 1");
    if (slot < 0 || slot >= t.arity()) throw AlgebraError("contract: slot out of range");
    if (t.arity() == 1) throw AlgebraError("contract: cannot contract arity-1 tensor");
    Tensor<K> out(t.arity() - 1, t.basis());
    for (const auto& [idx, c] : t.entries()) {
        // sign of moving x from the right end to just after `slot`
        int cross = 0;
        for (int s = slot + 1; s < t.arity(); ++s) cross += t.basis()->degree(idx[s]);
        for (const auto& [xi, xc] : x.entries()) {
            K pc = pairing.coeff({idx[slot], xi[0], -1});
            if (pc.is_zero()) continue;
            int sign = (cross * t.basis()->degree(xi[0])) % 2 == 0 ? 1 : -1;
            IndexTuple rest{-1, -1, -1};
            int k = 0;
            for (int s = 0; s < t.arity(); ++s)
                if (s != slot) rest[k++] = idx[s];
            K term = c * xc * pc;
            out.add(rest, sign < 0 ? -term : term);
        }
    }
    return out;
}

template class Tensor<Rational>;
template class Tensor<HbarPoly>;
template Tensor<Rational> apply_perm(const Tensor<Rational>&, std::span<const int>);
template Tensor<HbarPoly> apply_perm(const Tensor<HbarPoly>&, std::span<const int>);
template Tensor<Rational> braid(const Tensor<Rational>&);
template Tensor<HbarPoly> braid(const Tensor<HbarPoly>&);
template bool sym2_check(const Tensor<Rational>&);
template bool sym2_check(const Tensor<HbarPoly>&);
template Tensor<Rational> symmetrize_tensor(const Tensor<Rational>&);
template Tensor<HbarPoly> symmetrize_tensor(const Tensor<HbarPoly>&);
template Tensor<Rational> contract(const Tensor<Rational>&, const Tensor<Rational>&, int,
                                   const Tensor<Rational>&);
template Tensor<HbarPoly> contract(const Tensor<HbarPoly>&, const Tensor<HbarPoly>&, int,
                                   const Tensor<HbarPoly>&);

} // namespace shifted
