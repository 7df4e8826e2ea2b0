#include "shifted/hbar.hpp"
#include "shifted/laurent.hpp"
#include "shifted/rational.hpp"

#include <doctest.h>
#include <random>

using namespace shifted;

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(3, -7).str() == "-3/7");
    CHECK_THROWS_AS(Rational(3, 7) / Rational(0), ArithmeticError);
    CHECK(Rational::parse("3/7") == Rational(3, 7));
    CHECK(Rational::parse("-12") == Rational(-12));
    CHECK_THROWS_AS(Rational::parse("x/y"), ArithmeticError);
}

TEST_CASE("ring axioms on randomized triples") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 17);
    auto rnd = [&] { return Rational(num(rng), den(rng)); };
    for (int trial = 0; trial < 300; ++trial) {
        Rational a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("hbar truncation") {
    const int H = 2;
    HbarPoly one_plus = HbarPoly::constant(Rational(1), H) + HbarPoly::monomial(Rational(1), 1, H);
    HbarPoly one_minus = HbarPoly::constant(Rational(1), H) + HbarPoly::monomial(Rational(-1), 1, H);
    CHECK(one_plus * one_minus == HbarPoly::constant(Rational(1), H)); // hbar^2 truncated

    HbarPoly h3 = HbarPoly::monomial(Rational(1), 1, 3);
    CHECK(h3 * h3 == HbarPoly::monomial(Rational(1), 2, 3));

    HbarPoly x = HbarPoly::monomial(Rational(5, 3), 2, 4);
    CHECK(HbarPoly::constant(Rational(1), 4) * x == x); // unit law

    CHECK_THROWS_AS(HbarPoly(2) + HbarPoly(3), ArithmeticError);
}

TEST_CASE("hbar ring axioms on randomized triples") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> num(-9, 9);
    const int H = 4;
    auto rnd = [&] {
        HbarPoly p(H);
        for (int k = 0; k < H; ++k) p += HbarPoly::monomial(Rational(num(rng)), k, H);
        return p;
    };
    for (int trial = 0; trial < 200; ++trial) {
        HbarPoly a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("laurent windows") {
    const int H = 2;
    LaurentPoly za('z', -4, 4, H);
    za.add_term(2, HbarPoly::constant(Rational(1), H));
    LaurentPoly zb('z', -4, 4, H);
    zb.add_term(3, HbarPoly::constant(Rational(2), H));
    CHECK_THROWS_AS(za * zb, ArithmeticError); // z^5 leaves the window

    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            LaurentPoly pa('z', -4, 4, H), pb('z', -4, 4, H);
            pa.add_term(a, HbarPoly::constant(Rational(1), H));
            pb.add_term(b, HbarPoly::constant(Rational(1), H));
            LaurentPoly prod = pa * pb;
            CHECK(prod.coeff(a + b) == HbarPoly::constant(Rational(1), H));
        }
}

TEST_CASE("inverse shift expansion") {
    auto t0 = expand_inverse_shift(0);
    REQUIRE(t0.size() == 1);
    CHECK(t0[0].difference_power == 0);
    CHECK(t0[0].z_exponent == -1);

    auto t1 = expand_inverse_shift(1);
    REQUIRE(t1.size() == 2);
    CHECK(t1[1].difference_power == 1);
    CHECK(t1[1].z_exponent == -2);

    CHECK_THROWS_AS(expand_inverse_shift(-1), ArithmeticError);
}

// expand_inverse_shift(k) * (t1 + z - t2) = 1 + O(z^{-k-1}): multiply
// symbolically with bivariate coefficients in (t1, t2).
TEST_CASE("inverse shift expansion multiplies back to 1") {
    const int kmax = 5;
    auto terms = expand_inverse_shift(kmax);
    // coefficient map: (t1 exp, t2 exp, z exp) -> rational
    std::map<std::array<int, 3>, Rational> sum;
    for (const auto& term : terms) {
        // (t2 - t1)^k = sum_j binom(k, j) (-1)^{k-j} t1^{k-j} t2^j
        std::vector<Rational> binom(term.difference_power + 1, Rational(1));
        for (int j = 1; j <= term.difference_power; ++j)
            binom[j] = binom[j - 1] * Rational(term.difference_power - j + 1, j);
        for (int j = 0; j <= term.difference_power; ++j) {
            int i = term.difference_power - j;
            Rational c = binom[j];
            if (i % 2 != 0) c = -c;
            // multiply by (t1 + z - t2)
            sum[{i + 1, j, term.z_exponent}] += c;
            sum[{i, j, term.z_exponent + 1}] += c;
            sum[{i, j + 1, term.z_exponent}] -= c;
        }
    }
    for (const auto& [key, c] : sum) {
        if (c.is_zero()) continue;
        if (key == std::array<int, 3>{0, 0, 0}) {
            CHECK(c == Rational(1));
        } else {
            // all residual terms sit at z-order below the expansion window
            CHECK(key[2] <= -kmax - 1);
        }
    }
}
