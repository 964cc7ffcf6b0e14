#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace nilcoh {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps the invariants we rely on:
// always reduced, denominator > 0, zero stored as 0/1.
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);

// Accepts "p" or "p/q" with q > 0, no whitespace. Returns nullopt on anything else.
std::optional<Rational> parse_rational(std::string_view s);

// True iff r = (p/q)^2 for a rational p/q >= 0; the root is written when requested.
bool rational_square_root(const Rational& r, Rational* root = nullptr);

// Element of Q(i). All field operations are exact.
struct GQ {
    Rational re, im;

    GQ() = default;
    GQ(int v) : re(v) {}  // NOLINT: implicit by design, mirrors integer literals
    GQ(Rational r) : re(std::move(r)) {}
    GQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GQ conj() const { return GQ(re, -im); }
    // |z|^2 as a rational
    Rational norm2() const { return re * re + im * im; }

    GQ operator-() const { return GQ(-re, -im); }
    GQ& operator+=(const GQ& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GQ& operator-=(const GQ& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GQ& operator*=(const GQ& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GQ& operator/=(const GQ& o);

    friend GQ operator+(GQ a, const GQ& b) { return a += b; }
    friend GQ operator-(GQ a, const GQ& b) { return a -= b; }
    friend GQ operator*(GQ a, const GQ& b) { return a *= b; }
    friend GQ operator/(GQ a, const GQ& b) { return a /= b; }
    friend bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }
};

inline GQ gq_i() { return GQ(Rational(0), Rational(1)); }

// i^k for any integer k
GQ gq_i_pow(int k);

// Canonical text form: "a" when im = 0, else "a+b*i" / "a-b*i".
std::string to_string(const GQ& z);

// Accepts exactly the forms emitted by to_string. No whitespace.
std::optional<GQ> parse_scalar(std::string_view s);

// Rough size measure used for pivot selection; monotone in operand bit length.
std::size_t scalar_weight(const GQ& z);

}  // namespace nilcoh
