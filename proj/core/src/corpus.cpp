#include "shifted/corpus.hpp"

#include <fmt/format.h>

namespace shifted::corpus {

ShiftedBialgebra e1() {
    auto basis = std::make_shared<GradedBasis>(std::vector<BasisVector>{{"e", 0}, {"f", 0}});
    GradedLieAlgebra algebra(basis, {{0, 1, {{1, Rational(1)}}}});
    return ShiftedBialgebra{std::move(algebra), Cobracket::zero(basis)};
}

ShiftedBialgebra abelian(const std::vector<int>& degrees) {
    std::vector<BasisVector> vecs;
    for (size_t i = 0; i < degrees.size(); ++i)
        vecs.push_back({fmt::format("a{}", i), degrees[i]});
    auto basis = std::make_shared<GradedBasis>(std::move(vecs));
    GradedLieAlgebra algebra(basis, {});
    return ShiftedBialgebra{std::move(algebra), Cobracket::zero(basis)};
}

ShiftedBialgebra negative_degree_example() {
    auto basis = std::make_shared<GradedBasis>(std::vector<BasisVector>{{"u", -1}, {"x", 0}});
    // [x, u] = u, degree -1 + 0 = -1
    GradedLieAlgebra algebra(basis, {{1, 0, {{0, Rational(1)}}}});
    return ShiftedBialgebra{std::move(algebra), Cobracket::zero(basis)};
}

QuadraticLieAlgebra sl2() {
    auto basis = std::make_shared<GradedBasis>(std::vector<BasisVector>{{"e", 0}, {"h", 0}, {"f", 0}});
    std::vector<BracketSpec> specs = {
        {1, 0, {{0, Rational(2)}}},  // [h, e] = 2e
        {1, 2, {{2, Rational(-2)}}}, // [h, f] = -2f
        {0, 2, {{1, Rational(1)}}},  // [e, f] = h
    };
    GradedLieAlgebra algebra(basis, specs);
    RatMatrix beta(3, 3);
    beta.at(0, 2) = Rational(1); // tr(ef) = 1
    beta.at(2, 0) = Rational(1);
    beta.at(1, 1) = Rational(2); // tr(hh) = 2
    return {std::move(algebra), std::move(beta)};
}

QuadraticLieAlgebra gl1() {
    auto basis = std::make_shared<GradedBasis>(std::vector<BasisVector>{{"x", 0}});
    GradedLieAlgebra algebra(basis, {});
    RatMatrix beta(1, 1);
    beta.at(0, 0) = Rational(1);
    return {std::move(algebra), std::move(beta)};
}

QuadraticLieAlgebra abelian2() {
    auto basis = std::make_shared<GradedBasis>(std::vector<BasisVector>{{"x", 0}, {"y", 0}});
    GradedLieAlgebra algebra(basis, {});
    RatMatrix beta(2, 2);
    beta.at(0, 0) = Rational(1);
    beta.at(1, 1) = Rational(1);
    return {std::move(algebra), std::move(beta)};
}

} // namespace shifted::corpus
