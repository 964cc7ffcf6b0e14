#include "nilcoh/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nilcoh/errors.hpp"

namespace nilcoh {

namespace {

// Scale one row by the lcm of its denominators so Bareiss stays in Z[i].
void clear_row_denominators(Matrix& m, int i) {
    BigInt l = 1;
    for (int j = 0; j < m.cols(); ++j) {
        const GQ& z = m.at(i, j);
        l = lcm(l, denominator(z.re));
        l = lcm(l, denominator(z.im));
    }
    if (l == 1) return;
    GQ c{Rational(l)};
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) *= c;
}

// Fraction-free forward elimination on the given column order. Returns pivot
// (row, col) pairs in elimination order; `m` ends upper triangular w.r.t. them.
std::vector<std::pair<int, int>> bareiss_forward(Matrix& m, const std::vector<int>& col_order) {
    for (int i = 0; i < m.rows(); ++i) clear_row_denominators(m, i);
    std::vector<std::pair<int, int>> pivots;
    GQ prev(1);
    int r = 0;
    for (int c : col_order) {
        if (r >= m.rows()) break;
        int best = -1;
        std::size_t best_w = 0;
        for (int i = r; i < m.rows(); ++i) {
            if (m.at(i, c).is_zero()) continue;
            std::size_t w = scalar_weight(m.at(i, c));
            if (best < 0 || w < best_w) {
                best = i;
                best_w = w;
            }
        }
        if (best < 0) continue;
        m.swap_rows(r, best);
        const GQ pivot = m.at(r, c);
        for (int i = r + 1; i < m.rows(); ++i) {
            const GQ f = m.at(i, c);
            if (f.is_zero()) {
                // still rescale so the Bareiss minors stay aligned across rows
                for (int j = 0; j < m.cols(); ++j)
                    if (!m.at(i, j).is_zero()) m.at(i, j) = m.at(i, j) * pivot / prev;
                continue;
            }
            for (int j = 0; j < m.cols(); ++j) {
                m.at(i, j) = (m.at(i, j) * pivot - f * m.at(r, j)) / prev;
            }
            m.at(i, c) = GQ(0);
        }
        prev = pivot;
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

std::vector<int> natural_order(int cols) {
    std::vector<int> order(cols);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

}  // namespace

Echelon echelon_form(const Matrix& m) {
    Matrix w = m;
    auto pv = bareiss_forward(w, natural_order(m.cols()));
    Echelon e;
    e.rank = int(pv.size());
    e.pivots.reserve(pv.size());
    for (auto& [r, c] : pv) e.pivots.push_back(c);
    // normalize pivot rows and eliminate above, in plain rational arithmetic
    for (int r = e.rank - 1; r >= 0; --r) {
        int c = e.pivots[r];
        const GQ inv = GQ(1) / w.at(r, c);
        for (int j = 0; j < w.cols(); ++j)
            if (!w.at(r, j).is_zero()) w.at(r, j) *= inv;
        for (int i = 0; i < r; ++i) {
            const GQ f = w.at(i, c);
            if (f.is_zero()) continue;
            for (int j = 0; j < w.cols(); ++j)
                if (!w.at(r, j).is_zero()) w.at(i, j) -= f * w.at(r, j);
        }
    }
    Matrix out(e.rank, m.cols());
    for (int i = 0; i < e.rank; ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = w.at(i, j);
    e.rref = std::move(out);
    return e;
}

int rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Matrix w = m;
    // process sparse columns first; rank does not depend on the order
    std::vector<int> order = natural_order(m.cols());
    std::vector<int> nnz(m.cols(), 0);
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            if (!w.at(i, j).is_zero()) ++nnz[j];
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return nnz[a] < nnz[b]; });
    return int(bareiss_forward(w, order).size());
}

SubspaceBasis::SubspaceBasis(int ambient, const std::vector<Vec>& generators) : ambient_(ambient) {
    Echelon e = echelon_form(Matrix::from_rows(generators, ambient));
    mat_ = e.rref;
    pivots_ = e.pivots;
}

Vec SubspaceBasis::reduce(const Vec& v) const {
    Vec r = v;
    for (int i = 0; i < dim(); ++i) {
        const GQ f = r[pivots_[i]];
        if (f.is_zero()) continue;
        for (int j = 0; j < ambient_; ++j)
            if (!mat_.at(i, j).is_zero()) r[j] -= f * mat_.at(i, j);
    }
    return r;
}

bool SubspaceBasis::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.vector(i))) return false;
    return true;
}

std::optional<Vec> SubspaceBasis::coordinates_of(const Vec& v) const {
    Vec r = v;
    Vec coords(dim());
    for (int i = 0; i < dim(); ++i) {
        coords[i] = r[pivots_[i]];
        if (coords[i].is_zero()) continue;
        for (int j = 0; j < ambient_; ++j)
            if (!mat_.at(i, j).is_zero()) r[j] -= coords[i] * mat_.at(i, j);
    }
    if (!vec_is_zero(r)) return std::nullopt;
    return coords;
}

SubspaceBasis SubspaceBasis::conjugated() const {
    // conjugating an RREF matrix keeps it in RREF
    SubspaceBasis s(ambient_);
    s.mat_ = mat_.conj();
    s.pivots_ = pivots_;
    return s;
}

SubspaceBasis kernel_basis(const Matrix& m) {
    Echelon e = echelon_form(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : e.pivots) is_pivot[c] = true;
    std::vector<Vec> gens;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = GQ(1);
        for (int r = 0; r < e.rank; ++r) v[e.pivots[r]] = -e.rref.at(r, f);
        gens.push_back(std::move(v));
    }
    return SubspaceBasis(m.cols(), gens);
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (int(b.size()) != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    Echelon e = echelon_form(hstack(m, b));
    Vec x(m.cols());
    for (int r = 0; r < e.rank; ++r) {
        if (e.pivots[r] == m.cols()) return std::nullopt;  // pivot in the rhs column
        x[e.pivots[r]] = e.rref.at(r, m.cols());
    }
    return x;
}

int cohomology_dim(const Matrix& d_in, const Matrix& d_out) {
    if (d_out.cols() != d_in.rows())
        throw std::invalid_argument("cohomology_dim: differentials do not share the middle space");
    if (!(d_out * d_in).is_zero()) throw ComposeNonzeroError();
    int dim = (d_out.cols() - rank(d_out)) - rank(d_in);
    if (dim < 0) throw std::logic_error("negative cohomology dimension");
    return dim;
}

Inertia symmetric_inertia(const Matrix& s) {
    if (!s.is_square() || s != s.conj_transpose()) throw NotHermitianError();
    Matrix w = s;
    const int n = w.rows();
    std::vector<bool> done(n, false);
    Inertia inertia;
    for (int step = 0; step < n; ++step) {
        // prefer a nonzero diagonal pivot
        int p = -1;
        std::size_t best_w = 0;
        for (int i = 0; i < n; ++i) {
            if (done[i] || w.at(i, i).is_zero()) continue;
            std::size_t wt = scalar_weight(w.at(i, i));
            if (p < 0 || wt < best_w) {
                p = i;
                best_w = wt;
            }
        }
        if (p < 0) {
            // all remaining diagonal entries vanish; find any off-diagonal entry
            int a = -1, b = -1;
            for (int i = 0; i < n && a < 0; ++i) {
                if (done[i]) continue;
                for (int j = i + 1; j < n; ++j) {
                    if (done[j]) continue;
                    if (!w.at(i, j).is_zero()) {
                        a = i;
                        b = j;
                        break;
                    }
                }
            }
            if (a < 0) {  // remaining block is zero
                for (int i = 0; i < n; ++i)
                    if (!done[i]) ++inertia.zero;
                break;
            }
            // congruence e_a += conj(s_ab) e_b makes the (a,a) entry 2|s_ab|^2 > 0
            const GQ c = w.at(a, b).conj();
            for (int j = 0; j < n; ++j) w.at(a, j) += c.conj() * w.at(b, j);
            for (int i = 0; i < n; ++i) w.at(i, a) += c * w.at(i, b);
            p = a;
        }
        const GQ pivot = w.at(p, p);
        if (!pivot.is_real()) throw NotHermitianError("diagonal entry not real");
        if (pivot.re > 0)
            ++inertia.pos;
        else
            ++inertia.neg;
        done[p] = true;
        // rank-1 congruence update S[i][j] -= S[i][p] S[p][j] / pivot, from snapshots
        const Vec colp = w.col(p), rowp = w.row(p);
        for (int i = 0; i < n; ++i) {
            if (i == p || colp[i].is_zero()) continue;
            const GQ f = colp[i] / pivot;
            for (int j = 0; j < n; ++j)
                if (!rowp[j].is_zero()) w.at(i, j) -= f * rowp[j];
        }
        for (int j = 0; j < n; ++j)
            if (j != p) w.at(p, j) = GQ(0);
    }
    return inertia;
}

}  // namespace nilcoh
