#include "nilcoh/lck.hpp"

#include <bit>
#include <stdexcept>

#include "nilcoh/errors.hpp"

namespace nilcoh {

namespace {

Matrix invert(const Matrix& m) {
    Echelon e = echelon_form(hstack(m, Matrix::identity(m.rows())));
    if (e.rank != m.rows()) throw std::invalid_argument("singular matrix");
    Matrix inv(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) inv.at(i, j) = e.rref.at(i, m.cols() + j);
    return inv;
}

Vec to_gq(const std::vector<Rational>& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = GQ(v[i]);
    return r;
}

std::vector<Rational> to_rational(const Vec& v, const char* what) {
    std::vector<Rational> r;
    for (const GQ& z : v) {
        if (!z.is_real()) throw std::logic_error(std::string(what) + ": expected real coordinates");
        r.push_back(z.re);
    }
    return r;
}

bool covector_is_zero(const std::vector<Rational>& v) {
    for (const auto& r : v)
        if (r != 0) return false;
    return true;
}

}  // namespace

HermitianMetric HermitianMetric::validated(Matrix gram, const ComplexStructure& j) {
    const int n = gram.rows();
    if (!gram.is_square() || n != j.dim())
        throw IncompatibleMetricError("metric has wrong shape");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!gram.at(a, b).is_real()) throw IncompatibleMetricError("metric must be real rational");
    if (gram != gram.transpose()) throw IncompatibleMetricError("metric is not symmetric");
    Inertia in = symmetric_inertia(gram);
    if (in.pos != n) throw IncompatibleMetricError("metric is not positive definite");
    if (j.matrix().transpose() * gram * j.matrix() != gram)
        throw IncompatibleMetricError("metric is not compatible with the complex structure");
    Matrix gi = invert(gram);
    return HermitianMetric(std::move(gram), std::move(gi));
}

std::vector<Rational> HermitianMetric::sharp(const std::vector<Rational>& covector) const {
    return to_rational(gram_inv_.apply(to_gq(covector)), "sharp");
}

Rational HermitianMetric::norm2(const std::vector<Rational>& covector) const {
    auto s = sharp(covector);
    Rational r = 0;
    for (std::size_t i = 0; i < s.size(); ++i) r += covector[i] * s[i];
    return r;
}

ExtForm fundamental_form(const LieAlgebra& g, const ComplexStructure& j, const HermitianMetric& h) {
    const int n = g.dim();
    Matrix w = j.matrix().transpose() * h.gram();  // w_ij = h(I e_i, e_j)
    if (w != w.transpose().scaled(GQ(-1)))
        throw IncompatibleMetricError("fundamental form is not antisymmetric");
    ExtForm omega(n, 2, BasisMode::real_dual);
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            omega.add_term((Mask(1) << i) | (Mask(1) << k), w.at(i, k));
    return omega;
}

std::optional<std::vector<Rational>> extract_lee(const LieAlgebra& g, const ExtForm& omega) {
    const int n = g.dim();
    // nondegeneracy of the pairing matrix
    Matrix pairing(n, n);
    for (const auto& [s, c] : omega.terms()) {
        int i = std::countr_zero(s);
        int k = std::countr_zero(s & (s - 1));  // the higher of the two set bits
        pairing.at(i, k) = c;
        pairing.at(k, i) = -c;
    }
    if (rank(pairing) != n) throw DegenerateFormError();

    Frame fr = make_real_frame(g);
    ExtForm domega = d_form(fr, omega);
    // unknowns: theta components; rows: wedge-with-omega into Λ³, then closedness
    Matrix wedge_block(int(binomial(n, 3)), n);
    Matrix closed_block(int(binomial(n, 2)), n);
    for (int t = 0; t < n; ++t) {
        ExtForm cov = ExtForm::monomial(n, Mask(1) << t, GQ(1), BasisMode::real_dual);
        ExtForm w = wedge(cov, omega);
        for (const auto& [s, c] : w.terms()) wedge_block.at(mask_rank(s), t) = c;
        ExtForm dc = d_form(fr, cov);
        for (const auto& [s, c] : dc.terms()) closed_block.at(mask_rank(s), t) = c;
    }
    Matrix system = vstack(wedge_block, closed_block);
    Vec rhs = domega.dense_coords();
    rhs.resize(std::size_t(system.rows()));
    auto sol = solve(system, rhs);
    if (!sol) return std::nullopt;
    return to_rational(*sol, "lee form");
}

Connection levi_civita(const LieAlgebra& g, const HermitianMetric& h) {
    const int n = g.dim();
    auto pair_h = [&](const Vec& x, int k) {
        GQ r(0);
        for (int a = 0; a < n; ++a)
            if (!x[a].is_zero()) r += x[a] * h.gram().at(a, k);
        return r;
    };
    Connection conn;
    std::vector<Vec> e(n);
    for (int i = 0; i < n; ++i) {
        e[i] = Vec(n);
        e[i][i] = GQ(1);
    }
    for (int i = 0; i < n; ++i) {
        Matrix rhs(n, n);
        for (int j = 0; j < n; ++j) {
            Vec bij = g.bracket(e[i], e[j]);
            for (int k = 0; k < n; ++k) {
                Vec bjk = g.bracket(e[j], e[k]);
                Vec bki = g.bracket(e[k], e[i]);
                // 2 h(∇_i e_j, e_k) = h([e_i,e_j], e_k) - h([e_j,e_k], e_i) + h([e_k,e_i], e_j)
                rhs.at(k, j) = (pair_h(bij, k) - pair_h(bjk, i) + pair_h(bki, j)) / GQ(2);
            }
        }
        conn.gamma.push_back(h.gram_inv() * rhs);
    }
    return conn;
}

bool is_parallel_lee(const LieAlgebra& g, const HermitianMetric& h,
                     const std::vector<Rational>& theta) {
    Connection conn = levi_civita(g, h);
    Vec sharp = to_gq(h.sharp(theta));
    for (int i = 0; i < g.dim(); ++i)
        if (!vec_is_zero(conn.gamma[i].apply(sharp))) return false;
    return true;
}

std::optional<Rational> potential_constant(const LieAlgebra& g, const ComplexStructure& j,
                                           const std::vector<Rational>& theta,
                                           const ExtForm& omega) {
    HodgeContext ctx = make_hodge_context(g, j);
    ExtForm theta_form = covector_in_frame(ctx.frame, theta);
    if (!d_form(ctx.frame, theta_form).is_zero()) throw ThetaNotClosedError();
    if (theta_form.is_zero()) throw ThetaZeroError();
    ExtForm one = ExtForm::constant(ctx.frame.n, GQ(1), BasisMode::hodge);
    ExtForm phi = d_theta_form(ctx.frame, theta_form,
                               apply_diff(DiffKind::dc_theta, ctx.frame, theta_form, one));
    ExtForm omega_h = omega.mode() == BasisMode::hodge ? omega : to_frame(ctx.frame, omega);
    if (phi.is_zero()) return omega_h.is_zero() ? std::optional<Rational>(Rational(0)) : std::nullopt;
    const auto& [s0, c0] = *phi.terms().begin();
    GQ f = omega_h.coeff(s0) / c0;
    if (!(omega_h == phi.scaled(f))) return std::nullopt;
    if (!f.is_real()) throw std::logic_error("potential constant is not real");
    return f.re;
}

ExtForm omega0_form(const LieAlgebra& g, const ComplexStructure& j,
                    const std::vector<Rational>& theta) {
    HodgeContext ctx = make_hodge_context(g, j);
    ExtForm theta_form = covector_in_frame(ctx.frame, theta);
    if (!d_form(ctx.frame, theta_form).is_zero()) throw ThetaNotClosedError();
    ExtForm omega0 = dc_form(ctx.frame, theta_form).scaled(GQ(-1));
    return from_frame(ctx.frame, omega0);
}

Inertia omega0_inertia(const LieAlgebra& g, const ComplexStructure& j, const HermitianMetric& h,
                       const std::vector<Rational>& theta) {
    std::vector<Rational> t = theta;
    Rational n2 = h.norm2(theta);
    Rational root;
    if (n2 != 0 && rational_square_root(n2, &root)) {
        for (auto& c : t) c /= root;
    }
    HodgeContext ctx = make_hodge_context(g, j);
    ExtForm theta_form = covector_in_frame(ctx.frame, t);
    if (!d_form(ctx.frame, theta_form).is_zero()) throw ThetaNotClosedError();
    ExtForm omega0 = dc_form(ctx.frame, theta_form).scaled(GQ(-1));
    // Hermitian pairing H_ab = -i * omega0(u_a, conj(u_b)) on g^{1,0};
    // in frame coordinates u_a and conj(u_b) are coordinate vectors
    const int m = ctx.split.m;
    Matrix big(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            Mask mask = (Mask(1) << a) | (Mask(1) << (m + b));
            big.at(a, b) = omega0.coeff(mask) * GQ(Rational(0), Rational(-1));
        }
    return symmetric_inertia(big);
}

LeeIdealReport lee_ideal_check(const LieAlgebra& g, const ComplexStructure& j,
                               const HermitianMetric& h, const std::vector<Rational>& theta) {
    LeeIdealReport rep;
    const int n = g.dim();
    Vec sharp = to_gq(h.sharp(theta));
    Vec anti = j.matrix().apply(sharp);
    SubspaceBasis s(n, {sharp, anti});
    rep.span_dim2 = (s.dim() == 2);
    rep.is_ideal = true;
    for (int i = 0; i < n && rep.is_ideal; ++i) {
        Vec ei(n);
        ei[i] = GQ(1);
        for (int b = 0; b < s.dim(); ++b)
            if (!s.contains(g.bracket(ei, s.vector(b)))) {
                rep.is_ideal = false;
                break;
            }
    }
    if (!rep.is_ideal) return rep;

    // quotient on the complement of the pivot coordinates of s
    std::vector<int> free_cols;
    {
        std::vector<bool> pivot(n, false);
        for (int i = 0; i < s.dim(); ++i) {
            Vec row = s.vector(i);
            for (int c = 0; c < n; ++c)
                if (!row[c].is_zero()) {
                    pivot[c] = true;
                    break;
                }
        }
        for (int c = 0; c < n; ++c)
            if (!pivot[c]) free_cols.push_back(c);
    }
    const int q = int(free_cols.size());
    std::vector<Rational> constants(std::size_t(q) * q * q, Rational(0));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            Vec ea(n), eb(n);
            ea[free_cols[a]] = GQ(1);
            eb[free_cols[b]] = GQ(1);
            Vec w = s.reduce(g.bracket(ea, eb));
            for (int c = 0; c < q; ++c) {
                const GQ& z = w[free_cols[c]];
                if (!z.is_real()) throw std::logic_error("quotient constants not real");
                constants[std::size_t((a * q + b)) * q + c] = z.re;
            }
        }
    std::vector<std::string> names;
    for (int c : free_cols) names.push_back(g.basis_names()[c]);
    rep.quotient = LieAlgebra::validated(names, constants);
    rep.quotient_abelian = rep.quotient->is_abelian();
    return rep;
}

bool is_heisenberg_x_line(const LieAlgebra& g) {
    SubspaceBasis derived = derived_subalgebra(g);
    if (derived.dim() != 1) return false;
    SubspaceBasis z = center(g);
    if (z.dim() != 2) return false;
    if (!z.contains(derived)) return false;
    // induced alternating form on g/center along the derived line
    const int n = g.dim();
    Vec w = derived.vector(0);
    int lead = -1;
    for (int c = 0; c < n; ++c)
        if (!w[c].is_zero()) {
            lead = c;
            break;
        }
    std::vector<int> free_cols;
    {
        std::vector<bool> pivot(n, false);
        for (int i = 0; i < z.dim(); ++i) {
            Vec row = z.vector(i);
            for (int c = 0; c < n; ++c)
                if (!row[c].is_zero()) {
                    pivot[c] = true;
                    break;
                }
        }
        for (int c = 0; c < n; ++c)
            if (!pivot[c]) free_cols.push_back(c);
    }
    const int q = int(free_cols.size());
    Matrix b(q, q);
    for (int a = 0; a < q; ++a)
        for (int c = 0; c < q; ++c) {
            Vec ea(n), ec(n);
            ea[free_cols[a]] = GQ(1);
            ec[free_cols[c]] = GQ(1);
            Vec br = g.bracket(ea, ec);
            // coefficient along the derived line
            if (!derived.contains(br)) return false;
            b.at(a, c) = br[lead] / w[lead];
        }
    return rank(b) == q;
}

std::vector<ExtForm> closed_real_11_basis(const LieAlgebra& g, const ComplexStructure& j) {
    const int n = g.dim();
    const int d2 = int(binomial(n, 2));
    Frame fr = make_real_frame(g);
    // rows: J-invariance sigma(I.,I.) = sigma, then closedness
    Matrix invariance(d2, d2);
    Matrix closedness(int(binomial(n, 3)), d2);
    const auto& masks2 = masks_of_degree(n, 2);
    for (int col = 0; col < d2; ++col) {
        ExtForm mono = ExtForm::monomial(n, masks2[col], GQ(1), BasisMode::real_dual);
        ExtForm pulled = transform_covectors(mono, j.matrix());
        for (const auto& [s, c] : pulled.terms()) invariance.at(mask_rank(s), col) += c;
        invariance.at(col, col) -= GQ(1);
        ExtForm dm = d_form(fr, mono);
        for (const auto& [s, c] : dm.terms()) closedness.at(mask_rank(s), col) = c;
    }
    SubspaceBasis ker = kernel_basis(vstack(invariance, closedness));
    std::vector<ExtForm> out;
    for (int i = 0; i < ker.dim(); ++i)
        out.push_back(ExtForm::from_dense(n, 2, ker.vector(i), BasisMode::real_dual));
    return out;
}

LckCertificate classify_lck(const LieAlgebra& g, const ComplexStructure& j,
                            const HermitianMetric& h) {
    if (!is_nilpotent(g)) throw NotNilpotentError();
    HodgeContext ctx = make_hodge_context(g, j);
    if (!frame_integrable(ctx.frame)) throw NotIntegrableError();

    LckCertificate cert;
    cert.omega = fundamental_form(g, j, h);
    auto lee = extract_lee(g, cert.omega);
    if (!lee) return cert;
    cert.lee = *lee;

    Frame real_fr = make_real_frame(g);
    ExtForm theta_real = ExtForm::covector(to_gq(*lee), BasisMode::real_dual);
    cert.lee_closed = d_form(real_fr, theta_real).is_zero();
    cert.is_lck =
        (d_form(real_fr, cert.omega) - wedge(theta_real, cert.omega)).is_zero() && cert.lee_closed;
    if (!cert.is_lck) return cert;

    if (covector_is_zero(*lee)) {
        cert.kahler = true;  // closed fundamental form; the twisted chain does not apply
        return cert;
    }

    cert.lee_unit_norm = (h.norm2(*lee) == 1);
    cert.potential = potential_constant(g, j, *lee, cert.omega);
    cert.potential_positive = cert.potential && *cert.potential > 0;
    cert.vaisman = is_parallel_lee(g, h, *lee);
    cert.omega0 = omega0_inertia(g, j, h, *lee);

    if (cert.lee_unit_norm) {
        // d theta^c - theta ^ theta^c + omega = 0
        ExtForm theta_c = apply_I(theta_real, j);
        ExtForm residual =
            d_form(real_fr, theta_c) - wedge(theta_real, theta_c) + cert.omega;
        cert.dctheta_identity = residual.is_zero();
    }

    LeeIdealReport ideal = lee_ideal_check(g, j, h, *lee);
    cert.lee_ideal_ok = ideal.is_ideal && ideal.span_dim2;
    cert.quotient_abelian = ideal.quotient_abelian;
    cert.heisenberg_x_line = is_heisenberg_x_line(g);

    cert.green = cert.is_lck && cert.potential_positive && cert.vaisman.value_or(false) &&
                 cert.lee_ideal_ok.value_or(false) && cert.quotient_abelian.value_or(false) &&
                 cert.heisenberg_x_line.value_or(false);
    return cert;
}

}  // namespace nilcoh
