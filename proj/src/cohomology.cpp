#include "nilcoh/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "nilcoh/errors.hpp"

namespace nilcoh {

void CochainComplex::check() const {
    for (std::size_t k = 0; k + 1 < d.size(); ++k)
        if (!(d[k + 1] * d[k]).is_zero())
            throw ComposeNonzeroError("complex " + label + " fails d∘d = 0 at degree " +
                                      std::to_string(k));
}

std::vector<int> CochainComplex::cohomology() const {
    std::vector<int> h;
    std::vector<int> rk(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) rk[k] = rank(d[k]);
    for (std::size_t k = 0; k < dims.size(); ++k) {
        int kernel = (k < d.size()) ? dims[k] - rk[k] : dims[k];
        int image = (k > 0 && k - 1 < d.size()) ? rk[k - 1] : 0;
        h.push_back(kernel - image);
    }
    return h;
}

CochainComplex complex_from_operator(const GradedOperator& op, std::string label) {
    CochainComplex c;
    c.label = std::move(label);
    for (int k = 0; k <= op.n; ++k) c.dims.push_back(int(binomial(op.n, k)));
    c.d = op.block;
    return c;
}

HodgeContext make_hodge_context(const LieAlgebra& g, const ComplexStructure& j) {
    HodgeSplit split = hodge_split(j);
    Frame fr = make_hodge_frame(g, split);
    return HodgeContext{std::move(split), std::move(fr)};
}

std::vector<int> betti(const LieAlgebra& g) {
    return complex_from_operator(chevalley_d(g), "chevalley").cohomology();
}

std::vector<int> twisted_betti(const LieAlgebra& g, const std::vector<Rational>& theta) {
    return complex_from_operator(twisted_d(g, theta), "twisted").cohomology();
}

namespace {

bool theta_is_zero(const std::vector<Rational>& theta) {
    return std::all_of(theta.begin(), theta.end(), [](const Rational& r) { return r == 0; });
}

std::vector<int> row_cohomology(const BidegreeComplex& row) {
    std::vector<int> h;
    std::vector<int> rk(row.d.size());
    for (std::size_t q = 0; q < row.d.size(); ++q) rk[q] = rank(row.d[q]);
    for (std::size_t q = 0; q < row.dims.size(); ++q) {
        int kernel = row.dims[q] - rk[q];
        int image = (q > 0) ? rk[q - 1] : 0;
        h.push_back(kernel - image);
    }
    return h;
}

}  // namespace

std::vector<int> twisted_dolbeault_pq(const LieAlgebra& g, const HodgeContext& ctx,
                                      const std::vector<Rational>& theta, int p) {
    (void)g;
    ExtForm theta_form = covector_in_frame(ctx.frame, theta);
    return row_cohomology(delbar_theta_row(ctx.frame, theta_form, p));
}

std::vector<int> twisted_dolbeault_pq(const LieAlgebra& g, const ComplexStructure& j,
                                      const std::vector<Rational>& theta, int p) {
    return twisted_dolbeault_pq(g, make_hodge_context(g, j), theta, p);
}

std::vector<int> twisted_dolbeault_0q(const LieAlgebra& g, const HodgeContext& ctx,
                                      const std::vector<Rational>& theta) {
    return twisted_dolbeault_pq(g, ctx, theta, 0);
}

std::vector<int> twisted_dolbeault_0q(const LieAlgebra& g, const ComplexStructure& j,
                                      const std::vector<Rational>& theta) {
    return twisted_dolbeault_0q(g, make_hodge_context(g, j), theta);
}

namespace {

// compact m-bit view of (0,q) forms: bit j <-> antiholo covector j
ExtForm compact_antiholo(const ExtForm& f, int m) {
    ExtForm r(m, f.degree(), BasisMode::real_dual);
    for (const auto& [s, c] : f.terms()) {
        if ((s & ((Mask(1) << m) - 1)) != 0)
            throw std::logic_error("form has holomorphic indices");
        r.add_term(s >> m, c);
    }
    return r;
}

ExtForm expand_antiholo(const ExtForm& f, int n) {
    const int m = n / 2;
    ExtForm r(n, f.degree(), BasisMode::hodge);
    for (const auto& [s, c] : f.terms()) r.add_term(Mask(s) << m, c);
    return r;
}

int monomial_excess(Mask s, const std::vector<int>& level) {
    int e = 0;
    while (s) {
        e += level[std::countr_zero(s)] - 1;
        s &= s - 1;
    }
    return e;
}

SpectralPages build_spectral(const LieAlgebra& g, const HodgeContext& ctx,
                             const std::vector<Rational>& theta, bool allow_zero_theta) {
    if (!allow_zero_theta && theta_is_zero(theta)) throw ThetaZeroError();
    if (!covector_closed(ctx.frame, theta)) throw ThetaNotClosedError();

    SpectralPages sp;
    sp.chain = antiholo_central_series(ctx.split, g);
    const int m = ctx.split.m;
    const int s_len = int(sp.chain.a_chain.size());  // A_0 .. A_{s}
    sp.levels = s_len - 1;

    // graded dual basis compatible with the A-chain; level k rows span A_k mod A_{k-1}
    std::vector<Vec> rows;
    for (int k = 1; k < s_len; ++k) {
        const SubspaceBasis& a = sp.chain.a_chain[k];
        for (int i = 0; i < a.dim(); ++i) {
            SubspaceBasis sofar(m, rows);
            Vec cand = a.vector(i);
            if (!sofar.contains(cand)) {
                rows.push_back(cand);
                sp.basis_level.push_back(k);
            }
        }
    }
    if (int(rows.size()) != m) throw std::logic_error("graded dual basis incomplete");
    sp.graded_dual_basis = Matrix::from_rows(rows, m);

    // invert for the eta-bar -> lambda change of covector coordinates
    Matrix c_inv;
    {
        Echelon e = echelon_form(hstack(sp.graded_dual_basis, Matrix::identity(m)));
        if (e.rank != m) throw std::logic_error("graded dual basis singular");
        c_inv = Matrix(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) c_inv.at(i, j) = e.rref.at(i, m + j);
    }

    // (a) delbar(A_k) ⊂ Λ²(A_{k-1}), checked on basis covectors
    sp.annihilator_shift_ok = true;
    for (int k = 1; k < s_len && sp.annihilator_shift_ok; ++k) {
        const SubspaceBasis& prev = sp.chain.a_chain[k - 1];
        std::vector<Vec> span_rows;
        for (int a = 0; a < prev.dim(); ++a)
            for (int b = a + 1; b < prev.dim(); ++b) {
                ExtForm w = wedge(ExtForm::covector(prev.vector(a), BasisMode::real_dual),
                                  ExtForm::covector(prev.vector(b), BasisMode::real_dual));
                span_rows.push_back(w.dense_coords());
            }
        SubspaceBasis lambda2_prev(int(binomial(m, 2)), span_rows);
        for (int i = 0; i < sp.chain.a_chain[k].dim(); ++i) {
            ExtForm lam = expand_antiholo(
                ExtForm::covector(sp.chain.a_chain[k].vector(i), BasisMode::real_dual), ctx.frame.n);
            ExtForm db = bidegree_component(d_form(ctx.frame, lam), 0, 2);
            if (!lambda2_prev.contains(compact_antiholo(db, m).dense_coords())) {
                sp.annihilator_shift_ok = false;
                break;
            }
        }
    }

    // theta^{0,1} in lambda coordinates; must be supported on level-1 covectors
    ExtForm theta_form = covector_in_frame(ctx.frame, theta);
    ExtForm theta01_lambda = transform_covectors(
        compact_antiholo(bidegree_component(theta_form, 0, 1), m), c_inv);
    for (const auto& [s, c] : theta01_lambda.terms()) {
        (void)c;
        if (sp.basis_level[std::countr_zero(Mask(s))] != 1)
            throw std::logic_error("closed theta^{0,1} escapes A_1");
    }

    sp.max_excess = 0;
    for (int j = 0; j < m; ++j) sp.max_excess += sp.basis_level[j] - 1;

    // graded pieces and their induced differentials
    sp.piece_masks.assign(sp.max_excess + 1, std::vector<std::vector<Mask>>(m + 1));
    for (int q = 0; q <= m; ++q)
        for (Mask s : masks_of_degree(m, q))
            sp.piece_masks[monomial_excess(s, sp.basis_level)][q].push_back(s);

    auto lambda_to_eta = [&](const ExtForm& f) {
        return transform_covectors(f, sp.graded_dual_basis);
    };
    auto eta_to_lambda = [&](const ExtForm& f) { return transform_covectors(f, c_inv); };

    sp.e0_equals_mult = true;
    sp.e0.assign(sp.max_excess + 1, {});
    sp.mult.assign(sp.max_excess + 1, {});
    sp.v.assign(sp.max_excess + 1, {});
    for (int p = 0; p <= sp.max_excess; ++p) {
        for (int q = 0; q <= m; ++q) {
            // V_p in degree q: all monomials of excess <= p
            std::vector<Vec> vrows;
            for (int pp = 0; pp <= p; ++pp)
                for (Mask s : sp.piece_masks[pp][q])
                    vrows.push_back(
                        lambda_to_eta(ExtForm::monomial(m, s, GQ(1), BasisMode::real_dual))
                            .dense_coords());
            sp.v[p].push_back(SubspaceBasis(int(binomial(m, q)), vrows));
        }
        for (int q = 0; q < m; ++q) {
            const auto& src = sp.piece_masks[p][q];
            const auto& dst = sp.piece_masks[p][q + 1];
            auto index_of = [&](Mask s) {
                auto it = std::lower_bound(dst.begin(), dst.end(), s);
                return (it != dst.end() && *it == s) ? int(it - dst.begin()) : -1;
            };
            Matrix e0(int(dst.size()), int(src.size()));
            Matrix mu(int(dst.size()), int(src.size()));
            for (int col = 0; col < int(src.size()); ++col) {
                ExtForm mono_lambda = ExtForm::monomial(m, src[col], GQ(1), BasisMode::real_dual);
                // full delbar_theta on the expanded monomial
                ExtForm full = expand_antiholo(lambda_to_eta(mono_lambda), ctx.frame.n);
                ExtForm image = bidegree_component(
                    d_theta_form(ctx.frame, theta_form, full), 0, q + 1);
                ExtForm image_lambda = eta_to_lambda(compact_antiholo(image, m));
                for (const auto& [s, c] : image_lambda.terms()) {
                    int e = monomial_excess(s, sp.basis_level);
                    if (e > p) throw std::logic_error("differential raises the filtration");
                    if (e == p) e0.at(index_of(s), col) = c;
                }
                // multiplication part of the twist: -theta^{0,1} ∧ .
                ExtForm tm = wedge(theta01_lambda, mono_lambda).scaled(GQ(-1));
                for (const auto& [s, c] : tm.terms()) {
                    int idx = index_of(s);
                    if (idx < 0) throw std::logic_error("theta wedge leaves the graded piece");
                    mu.at(idx, col) = c;
                }
            }
            if (e0 != mu) sp.e0_equals_mult = false;
            sp.e0[p].push_back(std::move(e0));
            sp.mult[p].push_back(std::move(mu));
        }
        sp.e0[p].push_back(Matrix(0, int(sp.piece_masks[p][m].size())));
        sp.mult[p].push_back(Matrix(0, int(sp.piece_masks[p][m].size())));

        std::vector<int> h;
        std::vector<int> rk(sp.e0[p].size());
        for (std::size_t q = 0; q < sp.e0[p].size(); ++q) rk[q] = rank(sp.e0[p][q]);
        for (int q = 0; q <= m; ++q) {
            int kernel = int(sp.piece_masks[p][q].size()) - rk[q];
            int image = q > 0 ? rk[q - 1] : 0;
            h.push_back(kernel - image);
            sp.e1_total += kernel - image;
        }
        sp.e1.push_back(std::move(h));
    }
    return sp;
}

}  // namespace

SpectralPages spectral_pages(const LieAlgebra& g, const HodgeContext& ctx,
                             const std::vector<Rational>& theta) {
    return build_spectral(g, ctx, theta, false);
}

SpectralPages spectral_pages(const LieAlgebra& g, const ComplexStructure& j,
                             const std::vector<Rational>& theta) {
    return build_spectral(g, make_hodge_context(g, j), theta, false);
}

SpectralPages spectral_pages_untwisted_ok(const LieAlgebra& g, const HodgeContext& ctx,
                                          const std::vector<Rational>& theta) {
    return build_spectral(g, ctx, theta, true);
}

bool koszul_exactness(int dim, const Vec& covector) {
    if (vec_is_zero(covector)) throw ZeroCovectorError();
    if (int(covector.size()) != dim) throw std::invalid_argument("covector length mismatch");
    ExtForm e = ExtForm::covector(covector, BasisMode::real_dual);
    std::vector<int> rk(dim + 1);
    for (int k = 0; k <= dim; ++k) {
        const auto& src = masks_of_degree(dim, k);
        Matrix blk(int(binomial(dim, k + 1)), int(src.size()));
        for (int col = 0; col < int(src.size()); ++col) {
            ExtForm image = wedge(e, ExtForm::monomial(dim, src[col], GQ(1), BasisMode::real_dual));
            for (const auto& [s, c] : image.terms()) blk.at(mask_rank(s), col) = c;
        }
        rk[k] = rank(blk);
    }
    for (int k = 0; k <= dim; ++k) {
        int kernel = int(binomial(dim, k)) - rk[k];
        int image = k > 0 ? rk[k - 1] : 0;
        if (kernel != image) return false;
    }
    return true;
}

namespace {

// columns of the full degree-k coordinate space that carry (p,q) monomials
std::vector<int> bidegree_columns(int n, int m, int k, int p, int q) {
    std::vector<int> cols;
    const auto& masks = masks_of_degree(n, k);
    for (int i = 0; i < int(masks.size()); ++i)
        if (mask_bidegree(masks[i], m) == Bidegree{p, q}) cols.push_back(i);
    return cols;
}

}  // namespace

std::vector<ExtForm> d_theta_closed_11_forms(const LieAlgebra& g, const HodgeContext& ctx,
                                             const std::vector<Rational>& theta) {
    (void)g;
    ExtForm theta_form = covector_in_frame(ctx.frame, theta);
    if (!d_form(ctx.frame, theta_form).is_zero()) throw ThetaNotClosedError();
    const int n = ctx.frame.n, m = ctx.split.m;
    std::vector<int> cols = bidegree_columns(n, m, 2, 1, 1);
    const auto& masks2 = masks_of_degree(n, 2);
    // d_theta restricted to the (1,1) coordinate subspace of degree 2
    Matrix restricted(int(binomial(n, 3)), int(cols.size()));
    for (int j = 0; j < int(cols.size()); ++j) {
        ExtForm image = d_theta_form(ctx.frame, theta_form,
                                     ExtForm::monomial(n, masks2[cols[j]], GQ(1), BasisMode::hodge));
        for (const auto& [s, c] : image.terms()) restricted.at(mask_rank(s), j) = c;
    }
    SubspaceBasis ker = kernel_basis(restricted);
    std::vector<ExtForm> out;
    for (int i = 0; i < ker.dim(); ++i) {
        ExtForm f(n, 2, BasisMode::hodge);
        Vec v = ker.vector(i);
        for (int j = 0; j < int(cols.size()); ++j) f.add_term(masks2[cols[j]], v[j]);
        out.push_back(std::move(f));
    }
    return out;
}

int bott_chern_11_dim(const LieAlgebra& g, const HodgeContext& ctx,
                      const std::vector<Rational>& theta) {
    int kernel = int(d_theta_closed_11_forms(g, ctx, theta).size());
    ExtForm one = ExtForm::constant(ctx.frame.n, GQ(1), BasisMode::hodge);
    std::optional<ExtForm> theta_form;
    ExtForm phi(ctx.frame.n, 2, BasisMode::hodge);
    if (theta_is_zero(theta)) {
        // d d^c(1) = 0; image is trivial
    } else {
        theta_form = covector_in_frame(ctx.frame, theta);
        if (!d_form(ctx.frame, *theta_form).is_zero()) throw ThetaNotClosedError();
        ExtForm dc1 = apply_diff(DiffKind::dc_theta, ctx.frame, theta_form, one);
        phi = d_theta_form(ctx.frame, *theta_form, dc1);
    }
    int image = phi.is_zero() ? 0 : 1;
    if (!phi.is_zero() && !is_pure_bidegree(phi, 1, 1))
        throw std::logic_error("d_theta d^c_theta(1) is not of type (1,1)");
    int dim = kernel - image;
    if (dim < 0) throw std::logic_error("negative Bott-Chern dimension");
    return dim;
}

int bott_chern_11_dim(const LieAlgebra& g, const ComplexStructure& j,
                      const std::vector<Rational>& theta) {
    return bott_chern_11_dim(g, make_hodge_context(g, j), theta);
}

std::optional<ChaseResult> hodge_chase(const LieAlgebra& g, const HodgeContext& ctx,
                                       const std::vector<Rational>& theta, const ExtForm& omega_in) {
    ExtForm omega = omega_in.mode() == BasisMode::hodge ? omega_in : to_frame(ctx.frame, omega_in);
    if (!omega.is_zero() && !is_pure_bidegree(omega, 1, 1))
        throw std::invalid_argument("hodge_chase expects a (1,1)-form");
    ExtForm theta_form = covector_in_frame(ctx.frame, theta);
    if (!d_form(ctx.frame, theta_form).is_zero()) throw ThetaNotClosedError();
    if (!d_theta_form(ctx.frame, theta_form, omega).is_zero())
        throw NotClosedError("omega is not d_theta-closed");

    const int n = ctx.frame.n;
    if (omega.is_zero())
        return ChaseResult{ExtForm(n, 1, BasisMode::real_dual), GQ(0)};

    ExtForm one = ExtForm::constant(n, GQ(1), BasisMode::hodge);
    ExtForm phi = d_theta_form(ctx.frame, theta_form,
                               apply_diff(DiffKind::dc_theta, ctx.frame, theta_form, one));
    if (!phi.is_zero()) {
        const auto& [s0, c0] = *phi.terms().begin();
        GQ f = omega.coeff(s0) / c0;
        if (omega == phi.scaled(f)) {
            ExtForm theta_c = apply_I_hodge(theta_form);
            ExtForm tau = theta_c.scaled(-f);
            // defining equations, rechecked exactly
            if (!(d_theta_form(ctx.frame, theta_form, tau) == omega) ||
                !d_theta_form(ctx.frame, theta_form, apply_I_hodge(tau)).is_zero())
                throw std::logic_error("chase solution fails its defining equations");
            return ChaseResult{from_frame(ctx.frame, tau), f};
        }
    }

    // fallback: joint linear system d_theta(tau) = omega, d_theta(I tau) = 0
    Matrix a(int(binomial(n, 2)), n);
    for (int t = 0; t < n; ++t) {
        ExtForm image =
            d_theta_form(ctx.frame, theta_form, ExtForm::monomial(n, Mask(1) << t, GQ(1), BasisMode::hodge));
        for (const auto& [s, c] : image.terms()) a.at(mask_rank(s), t) = c;
    }
    Matrix i_on_1forms(n, n);
    for (int t = 0; t < n; ++t) i_on_1forms.at(t, t) = gq_i_pow(t < ctx.split.m ? -1 : 1);
    Matrix stacked = vstack(a, a * i_on_1forms);
    Vec rhs = omega.dense_coords();
    Vec zero(a.rows());
    rhs.insert(rhs.end(), zero.begin(), zero.end());
    auto sol = solve(stacked, rhs);
    if (!sol) return std::nullopt;
    ExtForm tau = ExtForm::from_dense(n, 1, *sol, BasisMode::hodge);
    return ChaseResult{from_frame(ctx.frame, tau), std::nullopt};
}

std::optional<ChaseResult> hodge_chase(const LieAlgebra& g, const ComplexStructure& j,
                                       const std::vector<Rational>& theta, const ExtForm& omega) {
    return hodge_chase(g, make_hodge_context(g, j), theta, omega);
}

std::vector<std::vector<Rational>> closed_covector_basis(const LieAlgebra& g) {
    GradedOperator d = chevalley_d(g);
    SubspaceBasis ker = kernel_basis(d.blk(1));
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < ker.dim(); ++i) {
        Vec v = ker.vector(i);
        std::vector<Rational> row;
        for (const GQ& z : v) {
            if (!z.is_real()) throw std::logic_error("closed covector basis not real");
            row.push_back(z.re);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace nilcoh
