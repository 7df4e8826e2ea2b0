#include "shifted/graded.hpp"

#include <doctest.h>
#include <algorithm>
#include <numeric>
#include <random>

using namespace shifted;

namespace {

BasisPtr mixed_basis() {
    return std::make_shared<GradedBasis>(std::vector<BasisVector>{
        {"e", 0}, {"f", 0}, {"ee", 1}, {"ef", 1}});
}

RatTensor random_tensor(const BasisPtr& basis, int arity, std::mt19937& rng) {
    std::uniform_int_distribution<int> id(0, basis->dim() - 1);
    std::uniform_int_distribution<long> coeff(-5, 5);
    RatTensor t(arity, basis);
    for (int k = 0; k < 6; ++k) {
        IndexTuple idx{-1, -1, -1};
        for (int s = 0; s < arity; ++s) idx[s] = id(rng);
        t.add(idx, Rational(coeff(rng)));
    }
    return t;
}

} // namespace

TEST_CASE("koszul sign basics") {
    int swap01[] = {1, 0};
    int odd_odd[] = {1, 1};
    int even_odd[] = {0, 1};
    CHECK(koszul_sign(swap01, odd_odd) == -1);
    CHECK(koszul_sign(swap01, even_odd) == 1);
    int ident[] = {0, 1, 2};
    int degs[] = {1, 1, 1};
    CHECK(koszul_sign(ident, degs) == 1);
    int bad[] = {0, 0};
    CHECK_THROWS_AS(koszul_sign(bad, odd_odd), AlgebraError);
}

TEST_CASE("koszul sign is multiplicative over composition") {
    std::vector<int> base{0, 1, 2};
    std::vector<std::vector<int>> perms;
    std::vector<int> p = base;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    for (const auto& q : perms)
        for (const auto& pp : perms)
            for (int mask = 0; mask < 8; ++mask) {
                std::vector<int> deg{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1};
                // q moves slot k to q[k]; degrees after q:
                std::vector<int> deg_q(3);
                for (int k = 0; k < 3; ++k) deg_q[q[k]] = deg[k];
                std::vector<int> comp(3);
                for (int k = 0; k < 3; ++k) comp[k] = pp[q[k]];
                CHECK(koszul_sign(comp, deg) == koszul_sign(pp, deg_q) * koszul_sign(q, deg));
            }
}

TEST_CASE("braid on simple tensors") {
    auto basis = mixed_basis();
    RatTensor t(2, basis);
    t.add({0, 2, -1}, Rational(1)); // e (x) ee, degrees (0,1)
    RatTensor b = braid(t);
    CHECK(b.coeff({2, 0, -1}) == Rational(1));

    RatTensor odd(2, basis);
    odd.add({2, 3, -1}, Rational(1)); // degrees (1,1)
    RatTensor bo = braid(odd);
    CHECK(bo.coeff({3, 2, -1}) == Rational(-1));
}

TEST_CASE("braid is an involution on random tensors") {
    auto basis = mixed_basis();
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        RatTensor t = random_tensor(basis, 2, rng);
        CHECK(braid(braid(t)) == t);
    }
}

TEST_CASE("sym2 membership") {
    auto basis = mixed_basis();
    RatTensor t(2, basis);
    t.add({0, 1, -1}, Rational(1));
    t.add({1, 0, -1}, Rational(1)); // e(x)f + f(x)e, even degrees
    CHECK(sym2_check(t));

    RatTensor odd(2, basis);
    odd.add({2, 2, -1}, Rational(1)); // ee (x) ee, odd square
    CHECK_FALSE(sym2_check(odd));

    RatTensor zero(2, basis);
    CHECK(sym2_check(zero));
}

TEST_CASE("symmetrization always lands in Sym^2") {
    auto basis = mixed_basis();
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        RatTensor t = random_tensor(basis, 2, rng);
        CHECK(sym2_check(t + braid(t)));
        CHECK(braid(symmetrize_tensor(t)) == symmetrize_tensor(t));
    }
}

TEST_CASE("contraction of the zero tensor") {
    auto basis = mixed_basis();
    RatTensor pairing(2, basis);
    pairing.add({0, 2, -1}, Rational(1));
    RatTensor zero(2, basis);
    RatTensor x(1, basis);
    x.add({0, -1, -1}, Rational(1));
    CHECK(contract(pairing, zero, 1, x).is_zero());
    CHECK_THROWS_AS(contract(pairing, zero, 2, x), AlgebraError);
}
