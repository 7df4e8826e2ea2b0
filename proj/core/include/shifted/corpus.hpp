#pragma once

#include "shifted/bialg.hpp"
#include "shifted/linalg.hpp"

namespace shifted::corpus {

/// The 2-dimensional solvable algebra in degree 0: [e, f] = f, trivial
/// cobracket.
ShiftedBialgebra e1();

/// Abelian bialgebra with the given generator degrees and zero cobracket.
ShiftedBialgebra abelian(const std::vector<int>& degrees);

/// A solvable algebra spread over degrees {-1, 0}: [x, u] = u with |u| = -1.
/// Its double has nonzero g_2, exercising the curved (c != 0) analysis.
ShiftedBialgebra negative_degree_example();

/// Ordinary (degree-0) Lie algebra with an invariant symmetric bilinear form,
/// the seed of the loop constructions.
struct QuadraticLieAlgebra {
    GradedLieAlgebra algebra;
    RatMatrix beta;
};

/// sl2 with basis (e, h, f) and the trace form of the fundamental
/// representation.
QuadraticLieAlgebra sl2();

/// One-dimensional abelian algebra with beta = (1).
QuadraticLieAlgebra gl1();

/// Two-dimensional abelian algebra with beta = identity.
QuadraticLieAlgebra abelian2();

} // namespace shifted::corpus
