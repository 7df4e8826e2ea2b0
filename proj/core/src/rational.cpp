#include "shifted/rational.hpp"

namespace shifted {

void Rational::assign(const BigInt& num, const BigInt& den) {
    if (den.is_zero())
        throw ArithmeticError("rational: division by zero");
    if (den < 0)
        v_ = Rep(-num, -den); // cpp_rational normalizes to lowest terms
    else
        v_ = Rep(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw ArithmeticError("rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw ArithmeticError("rational: cannot parse '" + s + "'");
    }
}

std::string Rational::str() const {
    std::string out = num().str();
    if (den() != 1)
        out += "/" + den().str();
    return out;
}

} // namespace shifted
