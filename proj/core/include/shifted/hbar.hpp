#pragma once

#include "shifted/rational.hpp"

#include <vector>

namespace shifted {

/// Polynomial in the formal deformation parameter hbar, truncated at order H:
/// coefficients for hbar^0 .. hbar^{H-1}. Products silently drop hbar^{>=H};
/// mixing two different positive truncation orders is an error. The
/// default-constructed value is a universal zero compatible with any order
/// (sparse containers rely on this).
class HbarPoly {
  public:
    HbarPoly() = default;
    explicit HbarPoly(int order) : coeff_(order) {
        if (order <= 0) throw ArithmeticError("hbar: truncation order must be positive");
    }

    static HbarPoly constant(Rational c, int order);
    /// c * hbar^k (zero if k >= order).
    static HbarPoly monomial(Rational c, int k, int order);

    int order() const { return static_cast<int>(coeff_.size()); }
    const Rational& operator[](int k) const { return coeff_.at(k); }
    bool is_zero() const;

    HbarPoly operator-() const;
    HbarPoly& operator+=(const HbarPoly& o);
    HbarPoly& operator-=(const HbarPoly& o);
    HbarPoly& operator*=(const HbarPoly& o) { return *this = *this * o; }
    friend HbarPoly operator+(HbarPoly a, const HbarPoly& b) { return a += b; }
    friend HbarPoly operator-(HbarPoly a, const HbarPoly& b) { return a -= b; }
    friend HbarPoly operator*(const HbarPoly& a, const HbarPoly& b);
    friend bool operator==(const HbarPoly& a, const HbarPoly& b);

    HbarPoly& scale(const Rational& c);
    /// Multiply by hbar^k, truncating.
    HbarPoly shifted(int k) const;

    std::string str() const;

  private:
    void check_order(const HbarPoly& o) const;
    std::vector<Rational> coeff_;
};

} // namespace shifted
