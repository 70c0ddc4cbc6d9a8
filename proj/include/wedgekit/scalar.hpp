#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "wedgekit/rational.hpp"
#include "wedgekit/tolerance.hpp"

namespace wedgekit {

/// Two-tier real scalar: exact rational or double.  Arithmetic between two
/// rationals stays rational; any operation touching a float yields a float.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(const Rational& r) : v_(r) {}     // NOLINT(google-explicit-constructor)
    Scalar(double d) : v_(d) {}              // NOLINT(google-explicit-constructor)
    Scalar(int n) : v_(Rational(n)) {}       // NOLINT(google-explicit-constructor)
    Scalar(long n) : v_(Rational(n)) {}      // NOLINT(google-explicit-constructor)

    bool exact() const { return std::holds_alternative<Rational>(v_); }

    const Rational& rat() const {
        if (!exact()) throw std::logic_error("Scalar: float value has no rational form");
        return std::get<Rational>(v_);
    }

    double dbl() const {
        return exact() ? std::get<Rational>(v_).to_double() : std::get<double>(v_);
    }

    bool is_zero() const { return exact() ? rat().is_zero() : std::get<double>(v_) == 0.0; }

    int sign() const {
        if (exact()) return rat().sign();
        double d = std::get<double>(v_);
        return d > 0 ? 1 : (d < 0 ? -1 : 0);
    }

    Scalar operator-() const {
        return exact() ? Scalar(-rat()) : Scalar(-dbl());
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.exact() && b.exact()) return Scalar(a.rat() + b.rat());
        return Scalar(a.dbl() + b.dbl());
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.exact() && b.exact()) return Scalar(a.rat() - b.rat());
        return Scalar(a.dbl() - b.dbl());
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.exact() && b.exact()) return Scalar(a.rat() * b.rat());
        return Scalar(a.dbl() * b.dbl());
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (a.exact() && b.exact()) return Scalar(a.rat() / b.rat());
        double d = b.dbl();
        if (d == 0.0) throw std::domain_error("Scalar: division by zero");
        return Scalar(a.dbl() / d);
    }

    /// Exact equality on the rational tier, bitwise on floats.  For
    /// tolerance-based comparison use approx_equal.
    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.exact() && b.exact()) return a.rat() == b.rat();
        return a.dbl() == b.dbl();
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Ordering mixes tiers through doubles; exact-vs-exact is exact.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.exact() && b.exact()) return a.rat() < b.rat();
        return a.dbl() < b.dbl();
    }
    friend bool operator<=(const Scalar& a, const Scalar& b) {
        if (a.exact() && b.exact()) return a.rat() <= b.rat();
        return a.dbl() <= b.dbl();
    }
    friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return b <= a; }

    Scalar abs() const { return exact() ? Scalar(rat().abs()) : Scalar(std::abs(dbl())); }

    std::string str() const {
        if (exact()) return rat().str();
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.12g", dbl());
        return buf;
    }

    /// "p/q" and integer strings select the exact path, anything else that
    /// strtod accepts becomes a float.
    static std::optional<Scalar> parse(std::string_view s) {
        if (auto r = Rational::parse(s)) return Scalar(*r);
        std::string t(s);
        char* end = nullptr;
        double d = std::strtod(t.c_str(), &end);
        if (end == t.c_str() || *end != '\0') return std::nullopt;
        return Scalar(d);
    }

private:
    std::variant<Rational, double> v_;
};

inline bool approx_equal(const Scalar& a, const Scalar& b,
                         const ToleranceConfig& tol = default_tolerance()) {
    if (a.exact() && b.exact()) return a.rat() == b.rat();
    return approx_equal(a.dbl(), b.dbl(), tol);
}

/// Complex scalar as a pair of Scalars; no host complex type involved.
struct Complex {
    Scalar re;
    Scalar im;

    Complex() = default;
    Complex(Scalar r) : re(std::move(r)), im(Scalar(0)) {}  // NOLINT(google-explicit-constructor)
    Complex(Scalar r, Scalar i) : re(std::move(r)), im(std::move(i)) {}
    Complex(double r, double i) : re(r), im(i) {}

    bool exact() const { return re.exact() && im.exact(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    Complex conj() const { return {re, -im}; }
    Scalar abs2() const { return re * re + im * im; }
    double abs() const { return std::hypot(re.dbl(), im.dbl()); }

    Complex operator-() const { return {-re, -im}; }
    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Scalar& s, const Complex& a) { return {s * a.re, s * a.im}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Scalar d = b.abs2();
        if (d.is_zero()) throw std::domain_error("Complex: division by zero");
        Complex n = a * b.conj();
        return {n.re / d, n.im / d};
    }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
};

inline bool approx_equal(const Complex& a, const Complex& b,
                         const ToleranceConfig& tol = default_tolerance()) {
    return approx_equal(a.re, b.re, tol) && approx_equal(a.im, b.im, tol);
}

}  // namespace wedgekit
