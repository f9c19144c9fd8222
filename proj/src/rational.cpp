#include "sylv/rational.hpp"

#include "sylv/error.hpp"

#include <utility>

namespace sylv {

namespace {

bool valid_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

// cpp_int's string constructor rejects a leading '+'.
Rational::Int parse_integer(std::string_view s) {
    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational::Int v{std::string(s)};
    return neg ? Rational::Int(-v) : v;
}

}  // namespace

Rational::Rational(Int num, Int den) {
    if (den.is_zero()) throw Error(Errc::division_by_zero, "rational with zero denominator");
    // cpp_rational rejects negative denominators, so move the sign up front.
    if (den < 0) {
        num = -num;
        den = -den;
    }
    value_ = Rep(std::move(num), std::move(den));
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_integer_token(text))
            throw Error(Errc::parse, "invalid rational literal '" + std::string(text) + "'");
        return Rational(parse_integer(text));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw Error(Errc::parse, "invalid rational literal '" + std::string(text) + "'");
    return Rational(parse_integer(num), parse_integer(den));
}

Rational Rational::operator-() const {
    return Rational(Rep(-value_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.value_.is_zero()) throw Error(Errc::division_by_zero, "rational division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

std::string Rational::to_string() const {
    std::string s = numerator().str();
    if (!is_integer()) {
        s += '/';
        s += denominator().str();
    }
    return s;
}

double Rational::to_double() const {
    return value_.convert_to<double>();
}

}  // namespace sylv
