#include "shifted/laurent.hpp"

#include <fmt/format.h>

namespace shifted {

LaurentPoly::LaurentPoly(char variable, int min_exp, int max_exp, int hbar_order)
    : var_(variable), min_exp_(min_exp), max_exp_(max_exp), hbar_order_(hbar_order) {
    if (min_exp > max_exp)
        throw ArithmeticError("laurent: empty exponent window");
}

void LaurentPoly::add_term(int exp, const HbarPoly& c) {
    if (exp < min_exp_ || exp > max_exp_)
        throw ArithmeticError(fmt::format("laurent: exponent {} outside window [{}, {}] of {}",
                                          exp, min_exp_, max_exp_, var_));
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(exp, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

HbarPoly LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? HbarPoly(hbar_order_) : it->second;
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
    if (var_ != o.var_)
        throw ArithmeticError(fmt::format("laurent: mixed variables {} and {}", var_, o.var_));
    if (hbar_order_ != o.hbar_order_)
        throw ArithmeticError("laurent: mixed hbar truncation orders");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_compatible(o);
    min_exp_ = std::min(min_exp_, o.min_exp_);
    max_exp_ = std::max(max_exp_, o.max_exp_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    return *this += -o;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly p(a.var_, a.min_exp_, a.max_exp_, a.hbar_order_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            p.add_term(ea + eb, ca * cb); // window violation surfaces here
    return p;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    return a.terms_ == b.terms_;
}

std::string LaurentPoly::str() const {
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += fmt::format("({})*{}^{}", c.str(), var_, e);
    }
    return out.empty() ? "0" : out;
}

std::vector<InverseShiftTerm> expand_inverse_shift(int k_max) {
    if (k_max < 0)
        throw ArithmeticError("expand_inverse_shift: negative order");
    std::vector<InverseShiftTerm> terms;
    terms.reserve(k_max + 1);
    for (int k = 0; k <= k_max; ++k)
        terms.push_back({k, -k - 1});
    return terms;
}

} // namespace shifted
