#include "sylv/scalar.hpp"

#include "sylv/error.hpp"

#include <charconv>
#include <cmath>

namespace sylv {

namespace {

void require_same_backend(const Scalar& a, const Scalar& b) {
    if (a.backend() != b.backend())
        throw Error(Errc::backend_mismatch,
                    std::string("mixed scalar backends: ") + backend_name(a.backend()) + " vs " +
                        backend_name(b.backend()));
}

}  // namespace

Scalar Scalar::zero(Backend b) {
    return b == Backend::exact ? Scalar(Rational(0)) : Scalar(0.0);
}

Scalar Scalar::one(Backend b) {
    return b == Backend::exact ? Scalar(Rational(1)) : Scalar(1.0);
}

Scalar Scalar::from_int(long long v, Backend b) {
    return b == Backend::exact ? Scalar(Rational(v)) : Scalar(static_cast<double>(v));
}

const Rational& Scalar::rat() const {
    if (const auto* r = std::get_if<Rational>(&value_)) return *r;
    throw Error(Errc::backend_mismatch, "float64 scalar has no rational value");
}

double Scalar::dbl() const {
    if (const auto* d = std::get_if<double>(&value_)) return *d;
    throw Error(Errc::backend_mismatch, "exact scalar has no float64 value");
}

bool Scalar::is_zero() const {
    if (const auto* r = std::get_if<Rational>(&value_)) return r->is_zero();
    return std::get<double>(value_) == 0.0;
}

Scalar Scalar::negated() const {
    if (const auto* r = std::get_if<Rational>(&value_)) return Scalar(-*r);
    return Scalar(-std::get<double>(value_));
}

std::string Scalar::to_string() const {
    if (const auto* r = std::get_if<Rational>(&value_)) return r->to_string();
    return format_double(std::get<double>(value_));
}

double Scalar::to_double() const {
    if (const auto* r = std::get_if<Rational>(&value_)) return r->to_double();
    return std::get<double>(value_);
}

bool operator==(const Scalar& a, const Scalar& b) {
    require_same_backend(a, b);
    if (a.backend() == Backend::exact) return a.rat() == b.rat();
    return a.dbl() == b.dbl();
}

bool abs_less(const Scalar& a, const Scalar& b) {
    require_same_backend(a, b);
    if (a.backend() == Backend::exact) return a.rat().abs() < b.rat().abs();
    return std::fabs(a.dbl()) < std::fabs(b.dbl());
}

Scalar scalar_add(const Scalar& a, const Scalar& b, OpCounter& counter) {
    require_same_backend(a, b);
    counter.add_sub += 1;
    if (a.backend() == Backend::exact) return Scalar(a.rat() + b.rat());
    return Scalar(a.dbl() + b.dbl());
}

Scalar scalar_sub(const Scalar& a, const Scalar& b, OpCounter& counter) {
    require_same_backend(a, b);
    counter.add_sub += 1;
    if (a.backend() == Backend::exact) return Scalar(a.rat() - b.rat());
    return Scalar(a.dbl() - b.dbl());
}

Scalar scalar_mul(const Scalar& a, const Scalar& b, OpCounter& counter) {
    require_same_backend(a, b);
    counter.mul_div += 1;
    if (a.backend() == Backend::exact) return Scalar(a.rat() * b.rat());
    return Scalar(a.dbl() * b.dbl());
}

Scalar scalar_div(const Scalar& a, const Scalar& b, OpCounter& counter) {
    require_same_backend(a, b);
    if (b.is_zero()) throw Error(Errc::division_by_zero, "scalar division by zero");
    counter.mul_div += 1;
    if (a.backend() == Backend::exact) return Scalar(a.rat() / b.rat());
    return Scalar(a.dbl() / b.dbl());
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace sylv
