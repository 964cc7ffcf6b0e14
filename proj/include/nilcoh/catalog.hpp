#pragma once

#include <optional>

#include "nilcoh/lck.hpp"

namespace nilcoh {

struct CatalogEntry {
    std::string name;
    LieAlgebra algebra;
    std::optional<ComplexStructure> complex_structure;
    std::optional<Matrix> metric;                 // Gram matrix
    std::optional<std::vector<Rational>> theta;   // real covector
    std::string notes;
};

// h_{2k+1} x R with basis X1 Y1 .. Xk Yk Z T, [X_i, Y_i] = Z, I X_i = Y_i,
// I Z = -T, orthonormal metric and Lee form T*. k = 1 is the Kodaira-Thurston
// algebra. Throws DimensionTooLarge for k > 7.
CatalogEntry make_heisenberg_x_line(int k);

// R^n with zero brackets, block J (e_{2i-1} -> e_{2i}), identity metric, theta = 0
CatalogEntry make_abelian(int n);

// real dim 6, [e1,e3] = e5, [e2,e4] = -e5, [e1,e4] = e6, [e2,e3] = e6,
// I e_{2i-1} = e_{2i}; the complex Heisenberg algebra as a real algebra
CatalogEntry make_iwasawa();

// names: heisenberg | kodaira-thurston | abelian | iwasawa (k applies to the first two)
std::optional<CatalogEntry> catalog_by_name(const std::string& name, int k);

}  // namespace nilcoh
