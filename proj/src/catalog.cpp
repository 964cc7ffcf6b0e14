#include "nilcoh/catalog.hpp"

#include "nilcoh/errors.hpp"

namespace nilcoh {

namespace {

std::vector<Rational> zero_constants(int n) {
    return std::vector<Rational>(std::size_t(n) * n * n, Rational(0));
}

void set_bracket(std::vector<Rational>& c, int n, int i, int j, int k, const Rational& v) {
    c[std::size_t((i * n + j)) * n + k] = v;
    c[std::size_t((j * n + i)) * n + k] = -v;
}

}  // namespace

CatalogEntry make_heisenberg_x_line(int k) {
    if (k < 1) throw std::invalid_argument("need at least one X,Y pair");
    const int n = 2 * k + 2;
    if (n > kMaxDim) throw DimensionTooLargeError("heisenberg x line needs dimension " +
                                                  std::to_string(n) + " > " + std::to_string(kMaxDim));
    std::vector<std::string> names;
    for (int i = 1; i <= k; ++i) {
        names.push_back("X" + std::to_string(i));
        names.push_back("Y" + std::to_string(i));
    }
    names.push_back("Z");
    names.push_back("T");
    const int z = 2 * k, t = 2 * k + 1;
    auto c = zero_constants(n);
    for (int i = 0; i < k; ++i) set_bracket(c, n, 2 * i, 2 * i + 1, z, Rational(1));

    Matrix j(n, n);
    for (int i = 0; i < k; ++i) {
        j.at(2 * i + 1, 2 * i) = GQ(1);   // I X_i = Y_i
        j.at(2 * i, 2 * i + 1) = GQ(-1);  // I Y_i = -X_i
    }
    j.at(t, z) = GQ(-1);  // I Z = -T
    j.at(z, t) = GQ(1);   // I T = Z

    CatalogEntry e;
    e.name = k == 1 ? "kodaira-thurston" : "heisenberg-x-line-" + std::to_string(k);
    e.algebra = LieAlgebra::validated(names, c);
    e.complex_structure = ComplexStructure::validated(std::move(j));
    e.metric = Matrix::identity(n);
    e.theta = std::vector<Rational>(n, Rational(0));
    (*e.theta)[t] = Rational(1);
    e.notes = "heisenberg algebra times a line, orthonormal basis, Lee form T*";
    return e;
}

CatalogEntry make_abelian(int n) {
    if (n % 2 != 0) throw std::invalid_argument("abelian catalog entry needs even dimension");
    if (n > kMaxDim) throw DimensionTooLargeError("dimension exceeds supported maximum");
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
    Matrix j(n, n);
    for (int i = 0; i + 1 < n; i += 2) {
        j.at(i + 1, i) = GQ(1);
        j.at(i, i + 1) = GQ(-1);
    }
    CatalogEntry e;
    e.name = "abelian-" + std::to_string(n);
    e.algebra = LieAlgebra::validated(names, zero_constants(n));
    e.complex_structure = ComplexStructure::validated(std::move(j));
    e.metric = Matrix::identity(n);
    e.theta = std::vector<Rational>(n, Rational(0));
    e.notes = "torus algebra with the standard block complex structure";
    return e;
}

CatalogEntry make_iwasawa() {
    const int n = 6;
    std::vector<std::string> names{"e1", "e2", "e3", "e4", "e5", "e6"};
    auto c = zero_constants(n);
    // real form of [Z1, Z2] = 2 Z3 on the complex Heisenberg group
    set_bracket(c, n, 0, 2, 4, Rational(1));   // [e1,e3] = e5
    set_bracket(c, n, 1, 3, 4, Rational(-1));  // [e2,e4] = -e5
    set_bracket(c, n, 0, 3, 5, Rational(1));   // [e1,e4] = e6
    set_bracket(c, n, 1, 2, 5, Rational(1));   // [e2,e3] = e6
    Matrix j(n, n);
    for (int i = 0; i + 1 < n; i += 2) {
        j.at(i + 1, i) = GQ(1);
        j.at(i, i + 1) = GQ(-1);
    }
    CatalogEntry e;
    e.name = "iwasawa";
    e.algebra = LieAlgebra::validated(names, c);
    e.complex_structure = ComplexStructure::validated(std::move(j));
    e.notes = "complex Heisenberg as a real algebra; g^{0,1} is non-abelian";
    return e;
}

std::optional<CatalogEntry> catalog_by_name(const std::string& name, int k) {
    if (name == "heisenberg") return make_heisenberg_x_line(k);
    if (name == "kodaira-thurston") return make_heisenberg_x_line(1);
    if (name == "abelian") return make_abelian(k);  // k is the dimension here
    if (name == "iwasawa") return make_iwasawa();
    return std::nullopt;
}

}  // namespace nilcoh
