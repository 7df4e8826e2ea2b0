#pragma once

#include "shifted/rational.hpp"

#include <optional>
#include <vector>

namespace shifted {

/// Dense matrix over Q with exact elimination. Sizes here are desk-scale
/// (dimensions in the tens), so no pivoting heuristics are needed beyond
/// nonzero selection.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows, std::vector<Rational>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return a_.at(r).at(c); }
    const Rational& at(int r, int c) const { return a_.at(r).at(c); }

    int rank() const;
    /// Basis of the right kernel {x : Ax = 0}, as rows.
    std::vector<std::vector<Rational>> kernel() const;
    /// One solution of Ax = b, if consistent.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;
    std::optional<RatMatrix> inverse() const;

    /// Row-reduce in place; returns pivot columns.
    std::vector<int> rref();

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::vector<Rational>> a_;
};

} // namespace shifted
