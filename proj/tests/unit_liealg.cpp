#include "shifted/corpus.hpp"
#include "shifted/liealg.hpp"

#include <doctest.h>

using namespace shifted;

TEST_CASE("E1 brackets and Jacobi") {
    auto h = corpus::e1();
    const auto& L = h.algebra;
    RatTensor e = L.basis_vector(0), f = L.basis_vector(1);
    CHECK(L.bracket(e, f) == f);
    CHECK(L.bracket(f, e) == -f);
    CHECK(L.bracket(e, e).is_zero()); // even self-bracket
    RatTensor zero(1, L.basis());
    CHECK(L.bracket(zero, f).is_zero());
    CHECK(L.check_jacobi().ok());
}

TEST_CASE("abelian algebra passes Jacobi") {
    auto h = corpus::abelian({0, 0, 1});
    CHECK(h.algebra.check_jacobi().ok());
}

TEST_CASE("antisymmetry corruption is reported at construction") {
    auto basis = std::make_shared<GradedBasis>(std::vector<BasisVector>{{"e", 0}, {"f", 0}});
    // [e,f] = 2f but [f,e] = -f: inconsistent input
    std::vector<BracketSpec> specs = {
        {0, 1, {{1, Rational(2)}}},
        {1, 0, {{1, Rational(-1)}}},
    };
    Report validation("structure");
    GradedLieAlgebra bad(basis, specs, &validation);
    CHECK_FALSE(validation.ok());
    CHECK(validation.checks().back().witness.find("incompatible") != std::string::npos);
}

TEST_CASE("degree-incompatible bracket is reported") {
    auto basis = std::make_shared<GradedBasis>(std::vector<BasisVector>{{"a", 0}, {"b", 1}});
    Report validation("structure");
    GradedLieAlgebra bad(basis, {{0, 1, {{0, Rational(1)}}}}, &validation);
    CHECK_FALSE(validation.ok());
}

TEST_CASE("Jacobi failure names the violating triple") {
    // [a,b] = c, [a,c] = a, [b,c] = b: J(a,b,c) = [b,a] + [-a,b] = -2c != 0
    auto basis = std::make_shared<GradedBasis>(
        std::vector<BasisVector>{{"a", 0}, {"b", 0}, {"c", 0}});
    std::vector<BracketSpec> specs = {
        {0, 1, {{2, Rational(1)}}},
        {0, 2, {{0, Rational(1)}}},
        {1, 2, {{1, Rational(1)}}},
    };
    GradedLieAlgebra L(basis, specs);
    Report rep = L.check_jacobi();
    CHECK_FALSE(rep.ok());
    CHECK(rep.checks().front().witness.find("triple") != std::string::npos);
}

TEST_CASE("coadjoint action on E1") {
    auto h = corpus::e1();
    // e . eps^f = f_{ce}^f eps^c = -eps^f
    auto act_e = coadjoint_action(h.algebra, 0, 1);
    REQUIRE(act_e.size() == 1);
    CHECK(act_e[0].first == 1);
    CHECK(act_e[0].second == Rational(-1));
    // f . eps^f = f_{ef}^f eps^e = eps^e
    auto act_f = coadjoint_action(h.algebra, 1, 1);
    REQUIRE(act_f.size() == 1);
    CHECK(act_f[0].first == 0);
    CHECK(act_f[0].second == Rational(1));
    // abelian: zero
    auto ab = corpus::abelian({0, 0});
    CHECK(coadjoint_action(ab.algebra, 0, 1).empty());
}

TEST_CASE("sl2 structure") {
    auto g = corpus::sl2();
    CHECK(g.algebra.check_jacobi().ok());
    // invariance of the trace form: beta([x,y],z) = beta(x,[y,z])
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                Rational lhs, rhs;
                for (const auto& [t, f] : g.algebra.bracket_basis(a, b)) lhs += f * g.beta.at(t, c);
                for (const auto& [t, f] : g.algebra.bracket_basis(b, c)) rhs += f * g.beta.at(a, t);
                CHECK(lhs == rhs);
            }
}
