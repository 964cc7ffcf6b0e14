#include "nilcoh/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace nilcoh {

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

namespace {

bool is_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_token(s)) return std::nullopt;
        return Rational(BigInt(std::string(s)));
    }
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
    if (den[0] == '-' || den[0] == '+') return std::nullopt;  // denominator must be a bare positive integer
    BigInt d{std::string(den)};
    if (d == 0) return std::nullopt;
    return Rational(BigInt(std::string(num)), d);
}

bool rational_square_root(const Rational& r, Rational* root) {
    if (r < 0) return false;
    BigInt n = numerator(r), d = denominator(r);
    BigInt sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return false;
    if (root) *root = Rational(sn, sd);
    return true;
}

GQ& GQ::operator/=(const GQ& o) {
    if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
    Rational n2 = o.norm2();
    Rational r = (re * o.re + im * o.im) / n2;
    im = (im * o.re - re * o.im) / n2;
    re = std::move(r);
    return *this;
}

GQ gq_i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return GQ(1);
        case 1: return GQ(Rational(0), Rational(1));
        case 2: return GQ(-1);
        default: return GQ(Rational(0), Rational(-1));
    }
}

std::string to_string(const GQ& z) {
    if (z.im == 0) return to_string(z.re);
    std::string s = to_string(z.re);
    s += (z.im > 0) ? "+" : "-";
    s += to_string(abs(z.im));
    s += "*i";
    return s;
}

std::optional<GQ> parse_scalar(std::string_view s) {
    if (s.size() >= 2 && s.substr(s.size() - 2) == "*i") {
        std::string_view body = s.substr(0, s.size() - 2);
        // split at the last sign that is not the leading one
        std::size_t split = std::string_view::npos;
        for (std::size_t i = body.size(); i-- > 1;) {
            if (body[i] == '+' || body[i] == '-') {
                split = i;
                break;
            }
        }
        if (split == std::string_view::npos) return std::nullopt;
        auto re = parse_rational(body.substr(0, split));
        auto im_abs = parse_rational(body.substr(split + 1));
        if (!re || !im_abs) return std::nullopt;
        if (*im_abs < 0) return std::nullopt;
        return GQ(*re, body[split] == '-' ? -*im_abs : *im_abs);
    }
    auto re = parse_rational(s);
    if (!re) return std::nullopt;
    return GQ(*re);
}

namespace {
std::size_t bits(const BigInt& v) { return v == 0 ? 1 : msb(abs(v)) + 1; }
}  // namespace

std::size_t scalar_weight(const GQ& z) {
    return bits(numerator(z.re)) + bits(denominator(z.re)) + bits(numerator(z.im)) +
           bits(denominator(z.im));
}

}  // namespace nilcoh
