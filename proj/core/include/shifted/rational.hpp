#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace shifted {

/// Error thrown by arithmetic preconditions (division by zero, mismatched
/// truncation orders, exponent-window violations, ...).
struct ArithmeticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with positive denominator.
/// Thin wrapper over boost cpp_rational; all arithmetic is exact.
class Rational {
  public:
    using Rep = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(long num, long den) { assign(BigInt(num), BigInt(den)); }
    Rational(const BigInt& num, const BigInt& den) { assign(num, den); }
    explicit Rational(Rep v) : v_(std::move(v)) {}

    static Rational parse(const std::string& s);

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }
    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return den() == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const { return Rational(Rep(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

  private:
    void assign(const BigInt& num, const BigInt& den);
    Rep v_;
};

inline Rational inverse(const Rational& a) { return Rational(1) / a; }

} // namespace shifted
