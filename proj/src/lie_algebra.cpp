#include "nilcoh/lie_algebra.hpp"

#include <stdexcept>

#include "nilcoh/errors.hpp"

namespace nilcoh {

LieAlgebra LieAlgebra::validated(std::vector<std::string> basis_names,
                                 std::vector<Rational> constants) {
    LieAlgebra g;
    g.n_ = int(basis_names.size());
    if (g.n_ > kMaxDim)
        throw DimensionTooLargeError("dimension " + std::to_string(g.n_) + " exceeds supported maximum " +
                                     std::to_string(kMaxDim));
    if (constants.size() != std::size_t(g.n_) * g.n_ * g.n_)
        throw std::invalid_argument("structure constant tensor has wrong size");
    g.names_ = std::move(basis_names);
    g.c_ = std::move(constants);

    const int n = g.n_;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (g.c(i, j, k) != -g.c(j, i, k))
                    throw AntisymmetryViolationError(
                        i, j, k,
                        "antisymmetry fails on ([" + g.names_[i] + "," + g.names_[j] + "], " +
                            g.names_[k] + ")");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int m = 0; m < n; ++m) {
                    Rational s = 0;
                    for (int l = 0; l < n; ++l)
                        s += g.c(i, j, l) * g.c(l, k, m) + g.c(j, k, l) * g.c(l, i, m) +
                             g.c(k, i, l) * g.c(l, j, m);
                    if (s != 0)
                        throw JacobiViolationError(i, j, k,
                                                   "Jacobi fails on (" + g.names_[i] + ", " +
                                                       g.names_[j] + ", " + g.names_[k] + ")");
                }
    return g;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    Vec r(n_);
    for (int i = 0; i < n_; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < n_; ++j) {
            if (y[j].is_zero()) continue;
            const GQ f = x[i] * y[j];
            for (int k = 0; k < n_; ++k)
                if (c(i, j, k) != 0) r[k] += f * GQ(c(i, j, k));
        }
    }
    return r;
}

bool LieAlgebra::verify() const {
    try {
        validated(names_, c_);
        return true;
    } catch (const Error&) {
        return false;
    }
}

bool LieAlgebra::is_abelian() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

namespace {

Vec basis_vector(int n, int i) {
    Vec v(n);
    v[i] = GQ(1);
    return v;
}

SubspaceBasis bracket_span(const LieAlgebra& g, const SubspaceBasis& a, const SubspaceBasis& b) {
    std::vector<Vec> gens;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) gens.push_back(g.bracket(a.vector(i), b.vector(j)));
    return SubspaceBasis(g.dim(), gens);
}

}  // namespace

std::vector<SubspaceBasis> lower_central_series(const LieAlgebra& g) {
    std::vector<Vec> full;
    for (int i = 0; i < g.dim(); ++i) full.push_back(basis_vector(g.dim(), i));
    std::vector<SubspaceBasis> chain{SubspaceBasis(g.dim(), full)};
    for (;;) {
        SubspaceBasis next = bracket_span(g, chain.front(), chain.back());
        if (next.dim() == chain.back().dim()) break;
        chain.push_back(next);
        if (next.dim() == 0) break;
    }
    return chain;
}

bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).back().dim() == 0; }

SubspaceBasis derived_subalgebra(const LieAlgebra& g) {
    auto chain = lower_central_series(g);
    return chain.size() > 1 ? chain[1] : SubspaceBasis(g.dim(), {});
}

SubspaceBasis center(const LieAlgebra& g) {
    // x in center iff for all j, k: sum_i x_i c(i,j,k) = 0
    const int n = g.dim();
    Matrix m(n * n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) m.at(j * n + k, i) = GQ(g.c(i, j, k));
    return kernel_basis(m);
}

}  // namespace nilcoh
