#pragma once

#include "sylv/op_counter.hpp"
#include "sylv/rational.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace sylv {

enum class Backend { exact, float64 };

inline const char* backend_name(Backend b) noexcept {
    return b == Backend::exact ? "exact" : "float64";
}

// One number in either the exact rational or the binary64 domain.  The two
// domains never mix inside a computation; arithmetic on mismatched backends
// is an error, not a coercion.
class Scalar {
public:
    Scalar() : value_(Rational()) {}
    explicit Scalar(Rational r) : value_(std::move(r)) {}
    explicit Scalar(double d) : value_(d) {}

    static Scalar zero(Backend b);
    static Scalar one(Backend b);
    static Scalar from_int(long long v, Backend b);

    Backend backend() const noexcept {
        return std::holds_alternative<Rational>(value_) ? Backend::exact : Backend::float64;
    }

    const Rational& rat() const;
    double dbl() const;

    bool is_zero() const;
    Scalar negated() const;

    // exact: "p/q" (or "p"); float64: shortest decimal that round-trips.
    std::string to_string() const;
    double to_double() const;

    // Same-backend equality; comparing across backends is an error.
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    std::variant<Rational, double> value_;
};

// |a| < |b|, used for pivot selection.  Backends must match.
bool abs_less(const Scalar& a, const Scalar& b);

// Counted scalar arithmetic: each call books exactly one operation on the
// counter.  Division by zero and backend mixing raise Error.
Scalar scalar_add(const Scalar& a, const Scalar& b, OpCounter& counter);
Scalar scalar_sub(const Scalar& a, const Scalar& b, OpCounter& counter);
Scalar scalar_mul(const Scalar& a, const Scalar& b, OpCounter& counter);
Scalar scalar_div(const Scalar& a, const Scalar& b, OpCounter& counter);

std::string format_double(double v);

}  // namespace sylv
