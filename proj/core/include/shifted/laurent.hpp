#pragma once

#include "shifted/hbar.hpp"

#include <map>
#include <string>

namespace shifted {

/// Laurent polynomial in one auxiliary variable (z or w) with HbarPoly
/// coefficients and a hard exponent window. Products that would leave the
/// window are an error, never silently dropped.
class LaurentPoly {
  public:
    LaurentPoly(char variable, int min_exp, int max_exp, int hbar_order);

    char variable() const { return var_; }
    int min_exp() const { return min_exp_; }
    int max_exp() const { return max_exp_; }
    int hbar_order() const { return hbar_order_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<int, HbarPoly>& terms() const { return terms_; }

    void add_term(int exp, const HbarPoly& c);
    HbarPoly coeff(int exp) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

    std::string str() const;

  private:
    void check_compatible(const LaurentPoly& o) const;
    char var_;
    int min_exp_, max_exp_;
    int hbar_order_;
    std::map<int, HbarPoly> terms_; // exponent -> nonzero coefficient
};

/// One term of the formal expansion of 1/(t1+z-t2) in the region
/// |z| > |t1|, |t2|:  (t2-t1)^k / z^{k+1}, all signs positive.
struct InverseShiftTerm {
    int difference_power; // k, the power of (t2-t1)
    int z_exponent;       // -k-1
};

/// Terms k = 0..k_max of the geometric expansion of 1/(t1+z-t2) for large z.
std::vector<InverseShiftTerm> expand_inverse_shift(int k_max);

} // namespace shifted
