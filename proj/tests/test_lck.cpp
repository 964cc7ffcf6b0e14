#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilcoh/errors.hpp"
#include "oracles.hpp"

using namespace nilcoh;

namespace {

ExtForm mono(int n, std::initializer_list<int> idx, GQ c = GQ(1)) {
    Mask s = 0;
    for (int i : idx) s |= Mask(1) << i;
    return ExtForm::monomial(n, s, c, BasisMode::real_dual);
}

// random metric compatible with j: A^T A + n*id averaged over {id, J}
HermitianMetric random_compatible_metric(std::mt19937& rng, const ComplexStructure& j) {
    const int n = j.dim();
    Matrix a(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a.at(r, c) = GQ(oracle::random_rational(rng, 2, 2));
    Matrix g = a.transpose() * a + Matrix::identity(n).scaled(GQ(n));
    Matrix sym = g + j.matrix().transpose() * g * j.matrix();
    return HermitianMetric::validated(sym, j);
}

}  // namespace

TEST_CASE("metric validation") {
    auto heis = make_heisenberg_x_line(1);
    CHECK_NOTHROW(HermitianMetric::validated(Matrix::identity(4), *heis.complex_structure));

    // not positive definite
    Matrix neg = Matrix::identity(4).scaled(GQ(-1));
    CHECK_THROWS_AS(HermitianMetric::validated(neg, *heis.complex_structure),
                    IncompatibleMetricError);

    // positive definite but not J-invariant
    Matrix skewed = Matrix::identity(4);
    skewed.at(0, 0) = GQ(2);
    CHECK_THROWS_AS(HermitianMetric::validated(skewed, *heis.complex_structure),
                    IncompatibleMetricError);
}

TEST_CASE("fundamental form of the model structures") {
    auto heis = make_heisenberg_x_line(2);
    HermitianMetric h = HermitianMetric::validated(*heis.metric, *heis.complex_structure);
    ExtForm omega = fundamental_form(heis.algebra, *heis.complex_structure, h);
    // X1^Y1^ + X2^Y2^ - Z^T^
    ExtForm expected = mono(6, {0, 1}) + mono(6, {2, 3}) - mono(6, {4, 5});
    CHECK(omega == expected);

    // plane: omega(e1, e2) = h(I e1, e2) = 1
    auto ab = make_abelian(2);
    HermitianMetric hab = HermitianMetric::validated(*ab.metric, *ab.complex_structure);
    CHECK(fundamental_form(ab.algebra, *ab.complex_structure, hab) == mono(2, {0, 1}));

    // scaling the metric scales the form
    auto heis1 = make_heisenberg_x_line(1);
    HermitianMetric h2 = HermitianMetric::validated(Matrix::identity(4).scaled(GQ(2)),
                                                    *heis1.complex_structure);
    CHECK(fundamental_form(heis1.algebra, *heis1.complex_structure, h2) ==
          fundamental_form(heis1.algebra, *heis1.complex_structure,
                           HermitianMetric::validated(Matrix::identity(4),
                                                      *heis1.complex_structure))
              .scaled(GQ(2)));
}

TEST_CASE("lee form extraction") {
    auto heis = make_heisenberg_x_line(1);
    HermitianMetric h = HermitianMetric::validated(*heis.metric, *heis.complex_structure);
    ExtForm omega = fundamental_form(heis.algebra, *heis.complex_structure, h);
    auto lee = extract_lee(heis.algebra, omega);
    REQUIRE(lee.has_value());
    CHECK(*lee == std::vector<Rational>{0, 0, 0, 1});  // T*

    // closed nondegenerate form on an abelian algebra: lee = 0
    auto ab = make_abelian(4);
    HermitianMetric hab = HermitianMetric::validated(*ab.metric, *ab.complex_structure);
    auto lee_ab = extract_lee(ab.algebra, fundamental_form(ab.algebra, *ab.complex_structure, hab));
    REQUIRE(lee_ab.has_value());
    CHECK(*lee_ab == std::vector<Rational>(4, Rational(0)));

    // degenerate input is rejected
    CHECK_THROWS_AS(extract_lee(heis.algebra, mono(4, {0, 1})), DegenerateFormError);
}

TEST_CASE("every nondegenerate 2-form on the kodaira-thurston algebra has a lee form") {
    // the joint system d(omega) = theta ^ omega, d theta = 0 is solvable here
    // whenever omega is nondegenerate, so the NoSolution branch needs a
    // different algebra (see the iwasawa case below)
    auto heis = make_heisenberg_x_line(1);
    ExtForm sigma = mono(4, {0, 3}) + mono(4, {1, 2}) + mono(4, {2, 3}, GQ(Rational(1, 2)));
    auto lee = extract_lee(heis.algebra, sigma);
    REQUIRE(lee.has_value());
    // verify the defining equations exactly
    Frame fr = make_real_frame(heis.algebra);
    ExtForm theta(4, 1, BasisMode::real_dual);
    for (int i = 0; i < 4; ++i) theta.add_term(Mask(1) << i, GQ((*lee)[i]));
    CHECK(d_form(fr, sigma) == wedge(theta, sigma));
    CHECK(d_form(fr, theta).is_zero());
}

TEST_CASE("iwasawa fundamental form admits no lee form") {
    auto iw = make_iwasawa();
    HermitianMetric h = HermitianMetric::validated(Matrix::identity(6), *iw.complex_structure);
    ExtForm omega = fundamental_form(iw.algebra, *iw.complex_structure, h);
    auto lee = extract_lee(iw.algebra, omega);
    // cross-check with an independent rank computation of the joint system
    Frame fr = make_real_frame(iw.algebra);
    Matrix sys(int(binomial(6, 3)) + int(binomial(6, 2)), 6);
    for (int t = 0; t < 6; ++t) {
        ExtForm cov = mono(6, {t});
        for (const auto& [s, c] : wedge(cov, omega).terms()) sys.at(mask_rank(s), t) = c;
        for (const auto& [s, c] : d_form(fr, cov).terms())
            sys.at(int(binomial(6, 3)) + mask_rank(s), t) = c;
    }
    Vec rhs = d_form(fr, omega).dense_coords();
    rhs.resize(std::size_t(sys.rows()));
    int rank_a = oracle::naive_rank(sys);
    int rank_ab = oracle::naive_rank(hstack(sys, rhs));
    CHECK(lee.has_value() == (rank_a == rank_ab));
    if (!lee) CHECK(rank_ab > rank_a);
}

TEST_CASE("levi-civita connection") {
    // abelian algebra: flat
    auto ab = make_abelian(4);
    HermitianMetric hab = HermitianMetric::validated(*ab.metric, *ab.complex_structure);
    for (const Matrix& gamma : levi_civita(ab.algebra, hab).gamma) CHECK(gamma.is_zero());

    auto heis = make_heisenberg_x_line(1);
    HermitianMetric h = HermitianMetric::validated(*heis.metric, *heis.complex_structure);
    Connection conn = levi_civita(heis.algebra, h);
    // ∇_X Y = Z/2
    Vec expect(4);
    expect[2] = GQ(Rational(1, 2));
    CHECK(conn.gamma[0].col(1) == expect);
    // ∇_X T = 0 for every direction X
    for (int i = 0; i < 4; ++i) CHECK(vec_is_zero(conn.gamma[i].col(3)));
}

TEST_CASE("levi-civita is torsion-free and metric-compatible") {
    std::mt19937 rng(6101);
    for (auto entry : {make_heisenberg_x_line(1), make_iwasawa()}) {
        const int n = entry.algebra.dim();
        HermitianMetric h = random_compatible_metric(rng, *entry.complex_structure);
        Connection conn = levi_civita(entry.algebra, h);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Vec ei(n), ej(n);
                ei[i] = GQ(1);
                ej[j] = GQ(1);
                // torsion: ∇_i e_j - ∇_j e_i = [e_i, e_j]
                Vec lhs = conn.gamma[i].col(j);
                Vec rhs_v = conn.gamma[j].col(i);
                Vec br = entry.algebra.bracket(ei, ej);
                for (int k = 0; k < n; ++k) CHECK(lhs[k] - rhs_v[k] == br[k]);
            }
        // compatibility: h(∇_i e_j, e_k) + h(e_j, ∇_i e_k) = 0
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    GQ s(0);
                    for (int a = 0; a < n; ++a) {
                        s += conn.gamma[i].at(a, j) * h.gram().at(a, k);
                        s += conn.gamma[i].at(a, k) * h.gram().at(a, j);
                    }
                    CHECK(s.is_zero());
                }
    }
}

TEST_CASE("vaisman condition on the model") {
    auto heis = make_heisenberg_x_line(1);
    HermitianMetric h = HermitianMetric::validated(*heis.metric, *heis.complex_structure);
    CHECK(is_parallel_lee(heis.algebra, h, {0, 0, 0, 1}));
}

TEST_CASE("potential constant") {
    auto heis = make_heisenberg_x_line(1);
    HermitianMetric h = HermitianMetric::validated(*heis.metric, *heis.complex_structure);
    ExtForm omega = fundamental_form(heis.algebra, *heis.complex_structure, h);
    auto c = potential_constant(heis.algebra, *heis.complex_structure, {0, 0, 0, 1}, omega);
    REQUIRE(c.has_value());
    CHECK(*c == 1);

    auto c5 = potential_constant(heis.algebra, *heis.complex_structure, {0, 0, 0, 1},
                                 omega.scaled(GQ(5)));
    REQUIRE(c5.has_value());
    CHECK(*c5 == 5);

    CHECK_THROWS_AS(
        potential_constant(heis.algebra, *heis.complex_structure, {0, 0, 0, 0}, omega),
        ThetaZeroError);
}

TEST_CASE("omega_0 and its inertia") {
    auto heis1 = make_heisenberg_x_line(1);
    // omega_0 = -d^c theta = X*^Y* in the model basis
    CHECK(omega0_form(heis1.algebra, *heis1.complex_structure, {0, 0, 0, 1}) == mono(4, {0, 1}));
    HermitianMetric h1 = HermitianMetric::validated(*heis1.metric, *heis1.complex_structure);
    CHECK(omega0_inertia(heis1.algebra, *heis1.complex_structure, h1, {0, 0, 0, 1}) ==
          Inertia{1, 1, 0});

    auto heis2 = make_heisenberg_x_line(2);
    HermitianMetric h2 = HermitianMetric::validated(*heis2.metric, *heis2.complex_structure);
    CHECK(omega0_inertia(heis2.algebra, *heis2.complex_structure, h2, {0, 0, 0, 0, 0, 1}) ==
          Inertia{2, 1, 0});

    auto ab = make_abelian(4);
    HermitianMetric hab = HermitianMetric::validated(*ab.metric, *ab.complex_structure);
    CHECK(omega0_inertia(ab.algebra, *ab.complex_structure, hab, {1, 0, 0, 0}) ==
          Inertia{0, 2, 0});
}

TEST_CASE("real and complex inertia of omega_0 agree up to doubling") {
    auto heis = make_heisenberg_x_line(2);
    HermitianMetric h = HermitianMetric::validated(*heis.metric, *heis.complex_structure);
    std::vector<Rational> theta{0, 0, 0, 0, 0, 1};
    ExtForm omega0 = omega0_form(heis.algebra, *heis.complex_structure, theta);
    // real symmetric form eta(x, y) = omega0(x, I y)
    const int n = 6;
    Matrix eta(n, n);
    for (int a = 0; a < n; ++a) {
        Vec ea(n);
        ea[a] = GQ(1);
        for (int b = 0; b < n; ++b) {
            Vec eb(n);
            eb[b] = GQ(1);
            eta.at(a, b) = evaluate(omega0, {ea, heis.complex_structure->matrix().apply(eb)});
        }
    }
    CHECK(eta == eta.transpose());
    Inertia real_inertia = symmetric_inertia(eta);
    Inertia cplx = omega0_inertia(heis.algebra, *heis.complex_structure, h, theta);
    CHECK(real_inertia.pos == 2 * cplx.pos);
    CHECK(real_inertia.zero == 2 * cplx.zero);
    CHECK(real_inertia.neg == 2 * cplx.neg);
}

TEST_CASE("lee ideal and quotient") {
    auto heis = make_heisenberg_x_line(2);
    HermitianMetric h = HermitianMetric::validated(*heis.metric, *heis.complex_structure);
    LeeIdealReport rep =
        lee_ideal_check(heis.algebra, *heis.complex_structure, h, {0, 0, 0, 0, 0, 1});
    CHECK(rep.span_dim2);
    CHECK(rep.is_ideal);
    REQUIRE(rep.quotient.has_value());
    CHECK(rep.quotient->dim() == 4);
    CHECK(rep.quotient_abelian);
}

TEST_CASE("heisenberg-times-line detector") {
    CHECK(is_heisenberg_x_line(make_heisenberg_x_line(1).algebra));
    CHECK(is_heisenberg_x_line(make_heisenberg_x_line(2).algebra));
    CHECK(!is_heisenberg_x_line(make_abelian(4).algebra));
    CHECK(!is_heisenberg_x_line(make_iwasawa().algebra));
    // bare h3: center is one-dimensional
    std::vector<Rational> c(27, Rational(0));
    c[std::size_t((0 * 3 + 1)) * 3 + 2] = 1;
    c[std::size_t((1 * 3 + 0)) * 3 + 2] = -1;
    CHECK(!is_heisenberg_x_line(LieAlgebra::validated({"X", "Y", "Z"}, c)));
}

TEST_CASE("classification of the model structures") {
    for (int k = 1; k <= 3; ++k) {
        auto e = make_heisenberg_x_line(k);
        HermitianMetric h = HermitianMetric::validated(*e.metric, *e.complex_structure);
        LckCertificate cert = classify_lck(e.algebra, *e.complex_structure, h);
        CHECK(cert.is_lck);
        CHECK(cert.lee_closed);
        REQUIRE(cert.lee.has_value());
        std::vector<Rational> t_star(e.algebra.dim(), Rational(0));
        t_star.back() = 1;
        CHECK(*cert.lee == t_star);
        CHECK(cert.lee_unit_norm);
        CHECK(*cert.potential == 1);
        CHECK(cert.potential_positive);
        CHECK(cert.vaisman.value_or(false));
        CHECK(*cert.omega0 == Inertia{k, 1, 0});
        CHECK(cert.dctheta_identity);
        CHECK(cert.lee_ideal_ok.value_or(false));
        CHECK(cert.quotient_abelian.value_or(false));
        CHECK(cert.heisenberg_x_line.value_or(false));
        CHECK(cert.green);
    }
}

TEST_CASE("kahler branch on the abelian algebra") {
    auto ab = make_abelian(4);
    HermitianMetric h = HermitianMetric::validated(*ab.metric, *ab.complex_structure);
    LckCertificate cert = classify_lck(ab.algebra, *ab.complex_structure, h);
    CHECK(cert.is_lck);
    CHECK(cert.kahler);
    CHECK(!cert.green);
}

TEST_CASE("iwasawa carries no invariant lck structure") {
    auto iw = make_iwasawa();
    std::mt19937 rng(6102);
    HermitianMetric h0 = HermitianMetric::validated(Matrix::identity(6), *iw.complex_structure);
    LckCertificate cert = classify_lck(iw.algebra, *iw.complex_structure, h0);
    CHECK(!cert.green);
    for (int trial = 0; trial < 3; ++trial) {
        HermitianMetric h = random_compatible_metric(rng, *iw.complex_structure);
        CHECK(!classify_lck(iw.algebra, *iw.complex_structure, h).green);
    }
}

TEST_CASE("closed (1,1) space of the kodaira-thurston algebra") {
    auto heis = make_heisenberg_x_line(1);
    auto basis = closed_real_11_basis(heis.algebra, *heis.complex_structure);
    CHECK(basis.size() == 3);

    // the space contains a nondegenerate element: sigma = X*^Z* - Y*^T* is
    // closed, J-invariant and has sigma^sigma = 2 X*^Y*^Z*^T* (the algebra is
    // the classical symplectic-but-not-kahler example)
    ExtForm sigma = mono(4, {0, 2}) - mono(4, {1, 3});
    SubspaceBasis span(6, [&] {
        std::vector<Vec> rows;
        for (const auto& f : basis) rows.push_back(f.dense_coords());
        return rows;
    }());
    CHECK(span.contains(sigma.dense_coords()));
    CHECK(wedge(sigma, sigma) == mono(4, {0, 1, 2, 3}, GQ(2)));

    // the kahler obstruction that does hold: no element of the space is
    // positive, because sigma(Z, IZ) = -sigma(Z, T) = 0 for the whole space
    for (const auto& f : basis) CHECK(f.coeff((Mask(1) << 2) | (Mask(1) << 3)).is_zero());
}
