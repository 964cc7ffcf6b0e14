#pragma once

#include <iosfwd>
#include <optional>

#include "nilcoh/catalog.hpp"

namespace nilcoh {

// Parsed algebra description. The grammar:
//
//   dim 4
//   basis X Y Z T
//   bracket X Y -> 1 Z
//   J X -> 1 Y
//   J Z -> -1 T
//   metric diag 1 1 1 1
//   theta 0 0 0 1
//
// Unlisted brackets vanish; listing both [a,b] and [b,a] requires exact
// antisymmetry. J may be partial: missing columns are completed from
// J^2 = -id when that determines them. `metric rows` is followed by dim rows.
// Comments start with '#'. All scalars use the exact rational syntax.
struct AlgebraInput {
    LieAlgebra algebra;
    std::optional<ComplexStructure> complex_structure;
    std::optional<Matrix> metric;
    std::optional<std::vector<Rational>> theta;
};

// throws ParseError / SemanticError with 1-based positions
AlgebraInput parse_algebra_file(const std::string& text);

// canonical printing; parse(print(x)) reproduces x and print(parse(f)) = f on
// canonical files
std::string print_algebra_file(const AlgebraInput& input);

AlgebraInput entry_to_input(const CatalogEntry& e);

}  // namespace nilcoh
