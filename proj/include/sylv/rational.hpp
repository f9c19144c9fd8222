#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace sylv {

// Arbitrary-precision rational, always kept in canonical form:
// gcd(num, den) == 1, den > 0, zero is 0/1.
class Rational {
public:
    using Int = boost::multiprecision::cpp_int;

    Rational() : value_(0) {}
    Rational(long long v) : value_(v) {}
    explicit Rational(const Int& v) : value_(v) {}
    Rational(Int num, Int den);

    // Accepts "p", "-p", "p/q" with optional sign on either part.
    static Rational parse(std::string_view text);

    Int numerator() const { return boost::multiprecision::numerator(value_); }
    Int denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    Rational abs() const;

    // "p/q", or just "p" when the denominator is 1.
    std::string to_string() const;
    double to_double() const;

private:
    using Rep = boost::multiprecision::cpp_rational;

    explicit Rational(Rep v) : value_(std::move(v)) {}

    Rep value_;
};

}  // namespace sylv
