#include "shifted/bialg.hpp"
#include "shifted/corpus.hpp"

#include <doctest.h>

using namespace shifted;

namespace {

int idx_of(const ManinTriple& T, const std::string& label) {
    int i = T.dbl.basis()->find(label);
    REQUIRE(i >= 0);
    return i;
}

} // namespace

TEST_CASE("double of E1 with trivial cobracket") {
    auto h = corpus::e1();
    ManinTriple T = build_double(h);
    REQUIRE(T.dbl.dim() == 4);

    int e = idx_of(T, "e"), f = idx_of(T, "f"), ee = idx_of(T, "e*"), ef = idx_of(T, "f*");
    CHECK(T.dbl.basis()->degree(ee) == 1);
    CHECK(T.dbl.basis()->degree(ef) == 1);

    // mixed brackets from the kappa-invariance solve
    auto br = [&](int a, int b) { return T.dbl.bracket(T.dbl.basis_vector(a), T.dbl.basis_vector(b)); };
    RatTensor m_ef(1, T.dbl.basis());
    m_ef.add({ef, -1, -1}, Rational(-1));
    CHECK(br(e, ef) == m_ef); // [e, eps^f] = -eps^f
    RatTensor m_ee(1, T.dbl.basis());
    m_ee.add({ee, -1, -1}, Rational(1));
    CHECK(br(f, ef) == m_ee); // [f, eps^f] = eps^e
    CHECK(br(e, ee).is_zero());
    CHECK(br(f, ee).is_zero());

    CHECK(T.dbl.check_jacobi().ok());
    CHECK(check_metric(T.dbl, T.metric).ok());
    CHECK(check_lagrangian_pair(T.dbl, T.metric, T.h_plus, T.h_minus).ok());
}

TEST_CASE("mixed brackets are the sign-adjusted coadjoint action when delta = 0") {
    for (auto h : {corpus::e1(), corpus::abelian({0, 1}), corpus::negative_degree_example()}) {
        ManinTriple T = build_double(h);
        int n = h.algebra.dim();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                RatTensor mixed =
                    T.dbl.bracket(T.dbl.basis_vector(a), T.dbl.basis_vector(n + b));
                RatTensor expect(1, T.dbl.basis());
                for (const auto& [c, coeff] : coadjoint_action(h.algebra, a, b)) {
                    Rational v = coeff;
                    if (h.algebra.degree(a) % 2 != 0) v = -v;
                    expect.add({n + c, -1, -1}, v);
                }
                CHECK(mixed == expect);
            }
    }
}

TEST_CASE("round trip: cobracket_from_triple after build_double returns the input") {
    for (auto h : {corpus::e1(), corpus::abelian({0, 0, 1}), corpus::negative_degree_example()}) {
        ManinTriple T = build_double(h);
        ShiftedBialgebra back = cobracket_from_triple(T, TripleSide::Plus);
        REQUIRE(back.algebra.dim() == h.algebra.dim());
        for (int a = 0; a < h.algebra.dim(); ++a)
            for (int b = 0; b < h.algebra.dim(); ++b)
                CHECK(back.algebra.bracket_basis(a, b) == h.algebra.bracket_basis(a, b));
        for (int a = 0; a < h.algebra.dim(); ++a) {
            CHECK(back.cobracket.delta[a].entries() == h.cobracket.delta[a].entries());
        }
    }
}

TEST_CASE("minus-side cobracket of T*[-1]E1 agrees with dualize") {
    auto h = corpus::e1();
    ManinTriple T = build_double(h);
    ShiftedBialgebra minus = cobracket_from_triple(T, TripleSide::Minus);
    ShiftedBialgebra dual = dualize(h);
    REQUIRE(minus.algebra.dim() == dual.algebra.dim());
    for (int a = 0; a < 2; ++a) {
        CHECK(minus.algebra.basis()->degree(a) == 1);
        for (int b = 0; b < 2; ++b)
            CHECK(minus.algebra.bracket_basis(a, b) == dual.algebra.bracket_basis(a, b));
        CHECK(minus.cobracket.delta[a].entries() == dual.cobracket.delta[a].entries());
    }
    // delta*(eps^f) encodes [e,f] = f: entries -eps^e (x) eps^f + eps^f (x) eps^e
    RatTensor expect(2, dual.algebra.basis());
    expect.add({0, 1, -1}, Rational(-1));
    expect.add({1, 0, -1}, Rational(1));
    CHECK(dual.cobracket.delta[1] == expect);
    CHECK(dual.cobracket.delta[0].is_zero());
}

TEST_CASE("dualize is involutive via eta -> -x") {
    for (auto h : {corpus::e1(), dualize(corpus::e1()), corpus::negative_degree_example()}) {
        ShiftedBialgebra dd = dualize(dualize(h));
        REQUIRE(dd.algebra.dim() == h.algebra.dim());
        for (int a = 0; a < h.algebra.dim(); ++a) {
            CHECK(dd.algebra.basis()->degree(a) == h.algebra.basis()->degree(a));
            for (int b = 0; b < h.algebra.dim(); ++b) {
                auto fwd = h.algebra.bracket_basis(a, b);
                for (auto& [c, v] : fwd) v = -v;
                CHECK(dd.algebra.bracket_basis(a, b) == fwd);
            }
            CHECK(dd.cobracket.delta[a].entries() == (-h.cobracket.delta[a]).entries());
        }
    }
}

TEST_CASE("bialgebra axioms") {
    auto h = corpus::e1();
    CHECK(check_shifted_bialgebra(h.algebra, h.cobracket).ok()); // delta = 0
    ShiftedBialgebra dual = dualize(h);
    CHECK(check_shifted_bialgebra(dual.algebra, dual.cobracket).ok());

    // delta(x) := x (x) x for even x fails well-formedness by degree
    Cobracket bad = Cobracket::zero(h.algebra.basis());
    bad.delta[0].add({0, 0, -1}, Rational(1));
    Report rep = check_shifted_bialgebra(h.algebra, bad);
    CHECK_FALSE(rep.ok());
    CHECK(rep.checks().back().name.find("degree") != std::string::npos);
}

TEST_CASE("double cobracket of the double is itself a shifted bialgebra") {
    auto h = corpus::e1();
    ManinTriple T = build_double(h);
    std::vector<RatTensor> dg = double_cobracket(T);
    Cobracket delta_g{T.dbl.basis(), dg};
    CHECK(check_shifted_bialgebra(T.dbl, delta_g).ok());
}

TEST_CASE("prop delta identities hold on corpus doubles") {
    for (auto h : {corpus::e1(), corpus::abelian({0, 1}), corpus::negative_degree_example()}) {
        ManinTriple T = build_double(h);
        CHECK(verify_prop_delta(T).ok());
    }
}

TEST_CASE("perturbed mixed bracket breaks prop delta") {
    auto h = corpus::e1();
    ManinTriple good = build_double(h);
    // rebuild the double with [f, eps^f] corrupted from eps^e to 2 eps^e
    std::vector<BracketSpec> specs;
    const auto& basis = good.dbl.basis();
    for (int a = 0; a < 4; ++a)
        for (int b = a; b < 4; ++b) {
            auto terms = good.dbl.bracket_basis(a, b);
            if (a == 1 && b == 3 && !terms.empty()) terms[0].second = Rational(2);
            if (!terms.empty()) specs.push_back({a, b, terms});
        }
    GradedLieAlgebra corrupted(basis, specs);
    ManinTriple bad{corrupted, good.metric, good.h_plus, good.h_minus,
                    good.x_basis, good.eps_basis, all_tuples()};
    bool failed = !verify_prop_delta(bad).ok() || !bad.dbl.check_jacobi().ok() ||
                  !check_metric(bad.dbl, bad.metric).ok();
    CHECK(failed);
}

TEST_CASE("orthogonal complements on the double") {
    auto h = corpus::e1();
    ManinTriple T = build_double(h);
    Subspace perp = orthogonal_complement(T.h_plus, T.dbl, T.metric);
    CHECK(perp.dim() == 2);
    for (const auto& v : T.h_plus.span()) CHECK(perp.contains(v));

    Subspace zero(T.dbl.basis(), {});
    CHECK(orthogonal_complement(zero, T.dbl, T.metric).dim() == 4);
    Subspace all = Subspace::from_indices(T.dbl.basis(), std::vector<int>{0, 1, 2, 3});
    CHECK(orthogonal_complement(all, T.dbl, T.metric).dim() == 0);

    // involution on a non-Lagrangian subspace
    Subspace s = Subspace::from_indices(T.dbl.basis(), std::vector<int>{0});
    Subspace ss = orthogonal_complement(orthogonal_complement(s, T.dbl, T.metric), T.dbl, T.metric);
    CHECK(ss.dim() == 1);
    CHECK(ss.contains(s.span()[0]));
}

TEST_CASE("canonical lagrangians split by degree") {
    auto h = corpus::e1();
    ManinTriple T = build_double(h);
    auto [plus, minus] = canonical_lagrangians(T.dbl, T.metric);
    CHECK(plus.dim() == 2);
    CHECK(minus.dim() == 2);
    CHECK(check_lagrangian_pair(T.dbl, T.metric, plus, minus).ok());
}

TEST_CASE("a second transverse Lagrangian pair on T*[-1]E1") {
    auto h = corpus::e1();
    ManinTriple T = build_double(h);
    int e = idx_of(T, "e"), f = idx_of(T, "f"), ee = idx_of(T, "e*"), ef = idx_of(T, "f*");
    Subspace plus = Subspace::from_indices(T.dbl.basis(), std::vector<int>{e, ef});
    Subspace minus = Subspace::from_indices(T.dbl.basis(), std::vector<int>{f, ee});
    CHECK(check_lagrangian_pair(T.dbl, T.metric, plus, minus).ok());
    ManinTriple T2 = triple_from_subspaces(T.dbl, T.metric, plus, minus);
    CHECK(verify_prop_delta(T2).ok());
    // matched duality: kappa(x_i, eps^j) = delta_ij
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(T2.metric.kappa(T2.x_basis[i], T2.eps_basis[j]) ==
                  (i == j ? Rational(1) : Rational(0)));
}

TEST_CASE("lagrangian pair failures are witnessed") {
    auto h = corpus::e1();
    ManinTriple T = build_double(h);
    int e = idx_of(T, "e"), f = idx_of(T, "f"), ee = idx_of(T, "e*"), ef = idx_of(T, "f*");
    // span(e, eps^e) is not isotropic: kappa(e, eps^e) = 1
    Subspace bad_plus = Subspace::from_indices(T.dbl.basis(), std::vector<int>{e, ee});
    Subspace rest = Subspace::from_indices(T.dbl.basis(), std::vector<int>{f, ef});
    Report rep = check_lagrangian_pair(T.dbl, T.metric, bad_plus, rest);
    CHECK_FALSE(rep.ok());

    // overlapping pair fails transversality
    Subspace overlap = Subspace::from_indices(T.dbl.basis(), std::vector<int>{e, f});
    Report rep2 = check_lagrangian_pair(T.dbl, T.metric, T.h_plus, overlap);
    CHECK_FALSE(rep2.ok());
}

TEST_CASE("metric corruption is detected") {
    auto h = corpus::e1();
    ManinTriple T = build_double(h);
    // symmetric kappa violates antisymmetry
    std::vector<std::tuple<int, int, Rational>> sym_entries;
    for (int a = 0; a < 2; ++a) {
        sym_entries.emplace_back(a, 2 + a, Rational(1));
        sym_entries.emplace_back(2 + a, a, Rational(1));
    }
    ShiftedMetric sym(T.dbl.basis(), sym_entries);
    Report rep = check_metric(T.dbl, sym);
    CHECK_FALSE(rep.ok());

    // dropping a row kills nondegeneracy and names a radical vector
    ShiftedMetric degenerate(T.dbl.basis(), {{0, 2, Rational(1)}});
    Report rep2 = check_metric(T.dbl, degenerate);
    CHECK_FALSE(rep2.ok());
    bool has_radical = false;
    for (const auto& c : rep2.checks())
        if (c.witness.find("radical") != std::string::npos) has_radical = true;
    CHECK(has_radical);
}
