#include "shifted/linalg.hpp"

namespace shifted {

std::vector<int> RatMatrix::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int p = -1;
        for (int r = row; r < rows_; ++r)
            if (!a_[r][col].is_zero()) { p = r; break; }
        if (p < 0) continue;
        std::swap(a_[p], a_[row]);
        Rational inv_piv = shifted::inverse(a_[row][col]);
        for (int c = col; c < cols_; ++c) a_[row][c] *= inv_piv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row || a_[r][col].is_zero()) continue;
            Rational factor = a_[r][col];
            for (int c = col; c < cols_; ++c) a_[r][c] -= factor * a_[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int RatMatrix::rank() const {
    RatMatrix copy = *this;
    return static_cast<int>(copy.rref().size());
}

std::vector<std::vector<Rational>> RatMatrix::kernel() const {
    RatMatrix copy = *this;
    std::vector<int> pivots = copy.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols_);
        v[free] = Rational(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -copy.a_[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> RatMatrix::solve(const std::vector<Rational>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw ArithmeticError("solve: size mismatch");
    RatMatrix aug(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug.a_[r][c] = a_[r][c];
        aug.a_[r][cols_] = b[r];
    }
    std::vector<int> pivots = aug.rref();
    for (int c : pivots)
        if (c == cols_) return std::nullopt; // inconsistent
    std::vector<Rational> x(cols_);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.a_[r][cols_];
    return x;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
    if (rows_ != cols_) throw ArithmeticError("inverse: matrix not square");
    RatMatrix aug(rows_, 2 * cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug.a_[r][c] = a_[r][c];
        aug.a_[r][cols_ + r] = Rational(1);
    }
    std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_)
        return std::nullopt;
    RatMatrix inv(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) inv.a_[r][c] = aug.a_[r][cols_ + c];
    return inv;
}

} // namespace shifted
