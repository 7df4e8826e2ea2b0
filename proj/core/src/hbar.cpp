#include "shifted/hbar.hpp"

#include <fmt/format.h>

namespace shifted {

HbarPoly HbarPoly::constant(Rational c, int order) {
    HbarPoly p(order);
    p.coeff_[0] = std::move(c);
    return p;
}

HbarPoly HbarPoly::monomial(Rational c, int k, int order) {
    HbarPoly p(order);
    if (k < 0) throw ArithmeticError("hbar: negative exponent");
    if (k < order) p.coeff_[k] = std::move(c);
    return p;
}

bool HbarPoly::is_zero() const {
    for (const auto& c : coeff_)
        if (!c.is_zero()) return false;
    return true;
}

void HbarPoly::check_order(const HbarPoly& o) const {
    if (order() != 0 && o.order() != 0 && order() != o.order())
        throw ArithmeticError(fmt::format("hbar: mixed truncation orders {} and {}", order(), o.order()));
}

HbarPoly HbarPoly::operator-() const {
    HbarPoly p = *this;
    for (auto& c : p.coeff_) c = -c;
    return p;
}

HbarPoly& HbarPoly::operator+=(const HbarPoly& o) {
    check_order(o);
    if (o.order() == 0) return *this;
    if (order() == 0) return *this = o;
    for (int k = 0; k < order(); ++k) coeff_[k] += o.coeff_[k];
    return *this;
}

HbarPoly& HbarPoly::operator-=(const HbarPoly& o) {
    return *this += -o;
}

HbarPoly operator*(const HbarPoly& a, const HbarPoly& b) {
    a.check_order(b);
    if (a.order() == 0 || b.order() == 0) return HbarPoly();
    HbarPoly p(a.order());
    for (int i = 0; i < a.order(); ++i) {
        if (a.coeff_[i].is_zero()) continue;
        for (int j = 0; i + j < a.order(); ++j)
            p.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
    }
    return p;
}

bool operator==(const HbarPoly& a, const HbarPoly& b) {
    a.check_order(b);
    if (a.order() == 0) return b.is_zero();
    if (b.order() == 0) return a.is_zero();
    return a.coeff_ == b.coeff_;
}

HbarPoly& HbarPoly::scale(const Rational& c) {
    for (auto& x : coeff_) x *= c;
    return *this;
}

HbarPoly HbarPoly::shifted(int k) const {
    HbarPoly p(order());
    for (int i = 0; i + k < order(); ++i) p.coeff_[i + k] = coeff_[i];
    return p;
}

std::string HbarPoly::str() const {
    std::string out;
    for (int k = 0; k < order(); ++k) {
        if (coeff_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (k == 0)
            out += coeff_[k].str();
        else if (k == 1)
            out += fmt::format("{}*h", coeff_[k].str());
        else
            out += fmt::format("{}*h^{}", coeff_[k].str(), k);
    }
    return out.empty() ? "0" : out;
}

} // namespace shifted
