#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilcoh/errors.hpp"
#include "oracles.hpp"

using namespace nilcoh;

namespace {

Matrix mat(int rows, int cols, std::vector<GQ> entries) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = entries[std::size_t(i) * cols + j];
    return m;
}

const GQ I = gq_i();

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(*parse_rational("-3")) == "-3");
    CHECK(to_string(*parse_rational("6/4")) == "3/2");
    CHECK(!parse_rational("1/-2").has_value());
    CHECK(!parse_rational("1/0").has_value());
    CHECK(!parse_rational("a").has_value());
    CHECK(!parse_rational("1 /2").has_value());

    CHECK(to_string(GQ(Rational(1, 2), Rational(-3))) == "1/2-3*i");
    CHECK(*parse_scalar("1/2-3*i") == GQ(Rational(1, 2), Rational(-3)));
    CHECK(*parse_scalar("0+1*i") == I);
    CHECK(!parse_scalar("i").has_value());
    CHECK(!parse_scalar("1+2i").has_value());
}

TEST_CASE("gaussian rational field ops") {
    GQ z(Rational(2), Rational(-3));
    CHECK(z * z.conj() == GQ(z.norm2()));
    CHECK(z / z == GQ(1));
    CHECK((GQ(1) / I) == -I);
    CHECK(gq_i_pow(-1) == -I);
    CHECK(gq_i_pow(2) == GQ(-1));
}

TEST_CASE("rational square root") {
    Rational root;
    CHECK(rational_square_root(Rational(9, 4), &root));
    CHECK(root == Rational(3, 2));
    CHECK(!rational_square_root(Rational(2), nullptr));
    CHECK(!rational_square_root(Rational(-1), nullptr));
}

TEST_CASE("rank on the pinned examples") {
    CHECK(rank(Matrix::identity(2)) == 2);
    CHECK(rank(Matrix(3, 5)) == 0);
    // second row = i * first row
    CHECK(rank(mat(2, 2, {GQ(1), I, I, GQ(-1)})) == 1);
}

TEST_CASE("kernel bases are canonical") {
    CHECK(kernel_basis(Matrix::identity(3)).dim() == 0);
    CHECK(kernel_basis(Matrix(2, 3)).dim() == 3);

    SubspaceBasis k = kernel_basis(mat(1, 2, {GQ(1), I}));
    SubspaceBasis expected(2, {Vec{-I, GQ(1)}});
    CHECK(k == expected);
}

TEST_CASE("solve picks the echelon-canonical particular solution") {
    Vec b{GQ(5), GQ(7)};
    CHECK(*solve(Matrix::identity(2), b) == b);

    auto x = solve(mat(1, 2, {GQ(1), GQ(1)}), Vec{GQ(2)});
    REQUIRE(x.has_value());
    CHECK(*x == Vec{GQ(2), GQ(0)});

    CHECK(!solve(mat(2, 1, {GQ(1), GQ(1)}), Vec{GQ(1), GQ(2)}).has_value());
}

TEST_CASE("cohomology_dim") {
    // no incoming differential, zero outgoing: everything is cohomology
    CHECK(cohomology_dim(Matrix(3, 0), Matrix(0, 3)) == 3);
    // full image, zero target
    CHECK(cohomology_dim(Matrix::identity(3), Matrix(0, 3)) == 0);
    // abelian R^2 in degree 1: both differentials vanish
    CHECK(cohomology_dim(Matrix(2, 1), Matrix(1, 2)) == 2);
    CHECK_THROWS_AS(cohomology_dim(Matrix::identity(2), Matrix::identity(2)),
                    ComposeNonzeroError);
}

TEST_CASE("symmetric inertia on pinned matrices") {
    CHECK(symmetric_inertia(Matrix::identity(4)) == Inertia{4, 0, 0});
    Matrix d(3, 3);
    d.at(0, 0) = GQ(1);
    d.at(2, 2) = GQ(-1);
    CHECK(symmetric_inertia(d) == Inertia{1, 1, 1});

    Matrix off(2, 2);  // zero diagonal, complex off-diagonal pair
    off.at(0, 1) = I;
    off.at(1, 0) = -I;
    CHECK(symmetric_inertia(off) == Inertia{1, 0, 1});

    Matrix bad(2, 2);
    bad.at(0, 1) = GQ(1);
    CHECK_THROWS_AS(symmetric_inertia(bad), NotHermitianError);
}

TEST_CASE("rank-nullity, solve consistency and oracle agreement on random matrices") {
    std::mt19937 rng(7001);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 1 + int(rng() % 6), cols = 1 + int(rng() % 6);
        Matrix m = oracle::random_matrix(rng, rows, cols);
        int r = rank(m);
        CHECK(r == oracle::naive_rank(m));
        CHECK(r + kernel_basis(m).dim() == cols);

        Vec x(cols);
        for (int j = 0; j < cols; ++j) x[j] = oracle::random_gq(rng);
        Vec b = m.apply(x);
        auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == b);
    }
}

TEST_CASE("echelon form is idempotent and spans correctly") {
    std::mt19937 rng(7002);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = oracle::random_matrix(rng, 4, 5);
        Echelon e = echelon_form(m);
        Echelon e2 = echelon_form(e.rref);
        CHECK(e.rref == e2.rref);
        // every original row reduces to zero against the echelon basis
        SubspaceBasis basis(5, {m.row(0), m.row(1), m.row(2), m.row(3)});
        for (int i = 0; i < e.rank; ++i) CHECK(basis.contains(e.rref.row(i)));
    }
}

TEST_CASE("inertia is a congruence invariant") {
    std::mt19937 rng(7003);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + int(rng() % 4);
        Matrix a = oracle::random_matrix(rng, n, n);
        Matrix s = a + a.conj_transpose();  // Hermitian
        Matrix p = oracle::random_unimodular(rng, n);
        Matrix congruent = p.conj_transpose() * s * p;
        CHECK(symmetric_inertia(s) == symmetric_inertia(congruent));
    }
}

TEST_CASE("subspace equality is literal equality of echelon matrices") {
    std::mt19937 rng(7004);
    for (int trial = 0; trial < 15; ++trial) {
        Matrix m = oracle::random_matrix(rng, 3, 5);
        std::vector<Vec> rows{m.row(0), m.row(1), m.row(2)};
        // same span, different generators
        std::vector<Vec> mixed{rows[0], rows[1], rows[2]};
        for (int i = 0; i < 5; ++i) {
            mixed[0][i] = rows[0][i] + rows[1][i] * GQ(3);
            mixed[2][i] = rows[2][i] - rows[0][i] * I;
        }
        CHECK(SubspaceBasis(5, rows) == SubspaceBasis(5, mixed));
    }
}
