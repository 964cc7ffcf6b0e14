#pragma once

#include <string>
#include <vector>

#include "nilcoh/linalg.hpp"

namespace nilcoh {

inline constexpr int kMaxDim = 16;

// Finite-dimensional real Lie algebra given by rational structure constants
// [e_i, e_j] = sum_k c(i,j,k) e_k. Constants are stored for both orientations
// and antisymmetry + Jacobi are validated on construction.
class LieAlgebra {
public:
    LieAlgebra() = default;  // empty placeholder; real values come from validated()

    // throws DimensionTooLarge / AntisymmetryViolation / JacobiViolation
    static LieAlgebra validated(std::vector<std::string> basis_names,
                                std::vector<Rational> constants /* n*n*n, c[(i*n+j)*n+k] */);

    int dim() const { return n_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Rational& c(int i, int j, int k) const { return c_[std::size_t((i * n_ + j)) * n_ + k]; }

    // complexified bracket of coordinate vectors
    Vec bracket(const Vec& x, const Vec& y) const;

    // re-runs the construction-time checks; true when they still hold
    bool verify() const;

    bool is_abelian() const;

private:
    int n_ = 0;
    std::vector<std::string> names_;
    std::vector<Rational> c_;
};

// g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ... until stabilization; first entry is the full space.
std::vector<SubspaceBasis> lower_central_series(const LieAlgebra& g);

bool is_nilpotent(const LieAlgebra& g);

// span of all brackets
SubspaceBasis derived_subalgebra(const LieAlgebra& g);

// {x : [x, g] = 0}
SubspaceBasis center(const LieAlgebra& g);

}  // namespace nilcoh
