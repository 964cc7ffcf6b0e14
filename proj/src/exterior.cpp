#include "nilcoh/exterior.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "nilcoh/errors.hpp"

namespace nilcoh {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    static long long table[kMaxDim + 2][kMaxDim + 2] = {};
    static bool ready = false;
    if (!ready) {
        for (int a = 0; a <= kMaxDim + 1; ++a) {
            table[a][0] = 1;
            for (int b = 1; b <= a; ++b)
                table[a][b] = table[a - 1][b - 1] + (b <= a - 1 ? table[a - 1][b] : 0);
        }
        ready = true;
    }
    return table[n][k];
}

int mask_degree(Mask s) { return std::popcount(s); }

int mask_rank(Mask s) {
    // colex rank: sum of C(b_i, i) over set bits b_1 < b_2 < ... (1-based i)
    int r = 0, i = 1;
    while (s) {
        int b = std::countr_zero(s);
        r += int(binomial(b, i));
        ++i;
        s &= s - 1;
    }
    return r;
}

const std::vector<Mask>& masks_of_degree(int n, int k) {
    static std::vector<Mask> lists[kMaxDim + 1][kMaxDim + 1];
    if (n < 0 || n > kMaxDim || k < 0 || k > kMaxDim) throw std::out_of_range("masks_of_degree");
    auto& list = lists[n][k];
    if (list.empty() && binomial(n, k) > 0) {
        if (k == 0) {
            list.push_back(0);
        } else {
            list.reserve(std::size_t(binomial(n, k)));
            // ascending numeric order = colex order within fixed popcount
            for (Mask s = 0; s < (Mask(1) << n); ++s)
                if (std::popcount(s) == k) list.push_back(s);
        }
    }
    return list;
}

int wedge_sign(Mask s, Mask t) {
    // parity of |{(a,b) in S x T : a > b}|
    int inv = 0;
    Mask tt = t;
    while (tt) {
        int b = std::countr_zero(tt);
        inv += std::popcount(s >> (b + 1));
        tt &= tt - 1;
    }
    return (inv % 2 == 0) ? 1 : -1;
}

ExtForm ExtForm::monomial(int n, Mask s, GQ coeff, BasisMode mode) {
    ExtForm f(n, mask_degree(s), mode);
    f.add_term(s, coeff);
    return f;
}

ExtForm ExtForm::constant(int n, GQ value, BasisMode mode) { return monomial(n, 0, std::move(value), mode); }

ExtForm ExtForm::covector(const Vec& coeffs, BasisMode mode) {
    ExtForm f(int(coeffs.size()), 1, mode);
    for (std::size_t i = 0; i < coeffs.size(); ++i) f.add_term(Mask(1) << i, coeffs[i]);
    return f;
}

GQ ExtForm::coeff(Mask s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? GQ(0) : it->second;
}

void ExtForm::add_term(Mask s, const GQ& c) {
    if (c.is_zero()) return;
    if (mask_degree(s) != degree_) throw std::invalid_argument("term degree mismatch");
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ExtForm ExtForm::operator-() const { return scaled(GQ(-1)); }

ExtForm ExtForm::operator+(const ExtForm& o) const {
    if (n_ != o.n_ || mode_ != o.mode_) throw BasisModeMismatchError();
    if (degree_ != o.degree_ && !is_zero() && !o.is_zero())
        throw std::invalid_argument("sum of forms of different degrees");
    ExtForm r = is_zero() ? o : *this;
    if (!is_zero())
        for (const auto& [s, c] : o.terms_) r.add_term(s, c);
    return r;
}

ExtForm ExtForm::operator-(const ExtForm& o) const { return *this + (-o); }

ExtForm ExtForm::scaled(const GQ& c) const {
    ExtForm r(n_, degree_, mode_);
    if (c.is_zero()) return r;
    for (const auto& [s, v] : terms_) r.terms_.emplace(s, v * c);
    return r;
}

ExtForm ExtForm::conjugate() const {
    ExtForm r(n_, degree_, mode_);
    if (mode_ == BasisMode::real_dual) {
        for (const auto& [s, c] : terms_) r.add_term(s, c.conj());
        return r;
    }
    const int m = n_ / 2;
    const Mask low = (Mask(1) << m) - 1;
    for (const auto& [s, c] : terms_) {
        // bit a <-> bit a+m; re-sorting the factors moves the p holo factors
        // across the q antiholo factors, so the sign is (-1)^{pq}
        Mask holo = s & low;
        Mask anti = (s >> m) & low;
        Mask swapped = (holo << m) | anti;
        int pq = std::popcount(holo) * std::popcount(anti);
        r.add_term(swapped, pq % 2 == 0 ? c.conj() : -c.conj());
    }
    return r;
}

Vec ExtForm::dense_coords() const {
    Vec v(std::size_t(binomial(n_, degree_)));
    for (const auto& [s, c] : terms_) v[mask_rank(s)] = c;
    return v;
}

ExtForm ExtForm::from_dense(int n, int k, const Vec& coords, BasisMode mode) {
    const auto& masks = masks_of_degree(n, k);
    if (coords.size() != masks.size()) throw std::invalid_argument("dense coordinate length mismatch");
    ExtForm f(n, k, mode);
    for (std::size_t i = 0; i < masks.size(); ++i) f.add_term(masks[i], coords[i]);
    return f;
}

ExtForm wedge(const ExtForm& a, const ExtForm& b) {
    if (a.space_dim() != b.space_dim() || a.mode() != b.mode()) throw BasisModeMismatchError();
    ExtForm r(a.space_dim(), a.degree() + b.degree(), a.mode());
    for (const auto& [s, cs] : a.terms())
        for (const auto& [t, ct] : b.terms()) {
            if (s & t) continue;
            int sign = wedge_sign(s, t);
            GQ c = cs * ct;
            r.add_term(s | t, sign == 1 ? c : -c);
        }
    return r;
}

ExtForm transform_covectors(const ExtForm& f, const Matrix& m) {
    if (m.rows() != f.space_dim() || m.cols() != f.space_dim())
        throw std::invalid_argument("covector transform has wrong shape");
    ExtForm r(f.space_dim(), f.degree(), f.mode());
    for (const auto& [s, c] : f.terms()) {
        ExtForm prod = ExtForm::constant(f.space_dim(), GQ(1), f.mode());
        Mask ss = s;
        while (ss) {
            int i = std::countr_zero(ss);
            prod = wedge(prod, ExtForm::covector(m.row(i), f.mode()));
            ss &= ss - 1;
        }
        r = r + prod.scaled(c);
    }
    return r;
}

Bidegree mask_bidegree(Mask s, int m) {
    const Mask low = (Mask(1) << m) - 1;
    return Bidegree{std::popcount(s & low), std::popcount(s >> m)};
}

std::map<std::pair<int, int>, ExtForm> bidegree_split(const ExtForm& f) {
    if (f.mode() != BasisMode::hodge)
        throw std::invalid_argument("bidegree split needs a hodge-adapted form");
    const int m = f.space_dim() / 2;
    std::map<std::pair<int, int>, ExtForm> parts;
    for (const auto& [s, c] : f.terms()) {
        Bidegree b = mask_bidegree(s, m);
        auto key = std::make_pair(b.p, b.q);
        auto it = parts.find(key);
        if (it == parts.end())
            it = parts.emplace(key, ExtForm(f.space_dim(), f.degree(), f.mode())).first;
        it->second.add_term(s, c);
    }
    return parts;
}

std::map<std::pair<int, int>, ExtForm> bidegree_split(const ExtForm& f, const HodgeSplit&) {
    return bidegree_split(f);
}

ExtForm bidegree_component(const ExtForm& f, int p, int q) {
    if (f.mode() != BasisMode::hodge)
        throw std::invalid_argument("bidegree component needs a hodge-adapted form");
    const int m = f.space_dim() / 2;
    ExtForm r(f.space_dim(), f.degree(), f.mode());
    for (const auto& [s, c] : f.terms()) {
        Bidegree b = mask_bidegree(s, m);
        if (b.p == p && b.q == q) r.add_term(s, c);
    }
    return r;
}

bool is_pure_bidegree(const ExtForm& f, int p, int q) {
    const int m = f.space_dim() / 2;
    for (const auto& [s, c] : f.terms()) {
        (void)c;
        Bidegree b = mask_bidegree(s, m);
        if (b.p != p || b.q != q) return false;
    }
    return true;
}

ExtForm apply_I_hodge(const ExtForm& f) {
    if (f.mode() != BasisMode::hodge) throw std::invalid_argument("apply_I_hodge needs hodge mode");
    const int m = f.space_dim() / 2;
    ExtForm r(f.space_dim(), f.degree(), f.mode());
    for (const auto& [s, c] : f.terms()) {
        Bidegree b = mask_bidegree(s, m);
        r.add_term(s, c * gq_i_pow(b.q - b.p));
    }
    return r;
}

ExtForm apply_I(const ExtForm& f, const ComplexStructure& j) {
    if (f.mode() == BasisMode::hodge) return apply_I_hodge(f);
    // (I f)(x) = f(I^{-1} x) = f(-J x): coefficient rows transform by -J
    return transform_covectors(f, j.matrix().scaled(GQ(-1)));
}

GQ evaluate(const ExtForm& f, const std::vector<Vec>& vectors) {
    if (int(vectors.size()) != f.degree()) throw std::invalid_argument("evaluate: arity mismatch");
    const int k = f.degree();
    GQ total(0);
    for (const auto& [s, c] : f.terms()) {
        // det of the pairing matrix (covector_i applied to vector_j)
        std::vector<int> idx;
        Mask ss = s;
        while (ss) {
            idx.push_back(std::countr_zero(ss));
            ss &= ss - 1;
        }
        Matrix pairing(k, k);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) pairing.at(a, b) = vectors[b][idx[a]];
        // Laplace-free: tiny sizes only, plain elimination determinant
        GQ det(1);
        Matrix w = pairing;
        for (int col = 0; col < k; ++col) {
            int pr = -1;
            for (int row = col; row < k; ++row)
                if (!w.at(row, col).is_zero()) {
                    pr = row;
                    break;
                }
            if (pr < 0) {
                det = GQ(0);
                break;
            }
            if (pr != col) {
                w.swap_rows(pr, col);
                det = -det;
            }
            det *= w.at(col, col);
            for (int row = col + 1; row < k; ++row) {
                if (w.at(row, col).is_zero()) continue;
                GQ fct = w.at(row, col) / w.at(col, col);
                for (int cc = col; cc < k; ++cc) w.at(row, cc) -= fct * w.at(col, cc);
            }
        }
        total += c * det;
    }
    return total;
}

std::string form_to_string(const ExtForm& f, const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [s, c] : f.terms()) {
        if (!first) out << " ";
        first = false;
        out << to_string(c);
        if (s != 0) {
            out << " ";
            Mask ss = s;
            while (ss) {
                int i = std::countr_zero(ss);
                out << names.at(i) << "^";
                ss &= ss - 1;
            }
        }
    }
    return out.str();
}

std::optional<ExtForm> parse_form(const std::string& text, const std::vector<std::string>& names,
                                  BasisMode mode) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    if (tokens.empty()) return std::nullopt;
    const int n = int(names.size());
    if (tokens.size() == 1 && tokens[0] == "0") return ExtForm(n, 0, mode);

    ExtForm result;
    bool have_degree = false;
    for (std::size_t i = 0; i < tokens.size();) {
        auto c = parse_scalar(tokens[i]);
        if (!c) return std::nullopt;
        ++i;
        Mask s = 0;
        int deg = 0;
        if (i < tokens.size() && !parse_scalar(tokens[i])) {
            // monomial token: Name^Name^...
            const std::string& mono = tokens[i];
            std::size_t pos = 0;
            int prev = -1;
            while (pos < mono.size()) {
                auto caret = mono.find('^', pos);
                if (caret == std::string::npos) return std::nullopt;
                std::string name = mono.substr(pos, caret - pos);
                int idx = -1;
                for (int k = 0; k < n; ++k)
                    if (names[k] == name) idx = k;
                if (idx < 0 || idx <= prev) return std::nullopt;  // unknown or not increasing
                s |= Mask(1) << idx;
                ++deg;
                prev = idx;
                pos = caret + 1;
            }
            ++i;
        }
        if (!have_degree) {
            result = ExtForm(n, deg, mode);
            have_degree = true;
        } else if (deg != result.degree()) {
            return std::nullopt;
        }
        result.add_term(s, *c);
    }
    return result;
}

}  // namespace nilcoh
