#pragma once

#include <optional>
#include <vector>

#include "nilcoh/matrix.hpp"

namespace nilcoh {

// Reduced row echelon form with the zero rows dropped. RREF over a field is
// unique, so `rref` is a canonical representative of the row space.
struct Echelon {
    Matrix rref;              // rank x cols, pivots normalized to 1
    std::vector<int> pivots;  // pivot column per row, strictly increasing
    int rank = 0;
};

// Fraction-free forward elimination (Bareiss) followed by an exact back pass.
Echelon echelon_form(const Matrix& m);

// Exact rank. Uses a sparsity-guided pivot order; the result is basis independent.
int rank(const Matrix& m);

// Canonical basis of a subspace of Q(i)^ambient: rows kept in RREF so that
// subspace equality is literal matrix equality.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    explicit SubspaceBasis(int ambient) : ambient_(ambient) {}
    SubspaceBasis(int ambient, const std::vector<Vec>& generators);

    int ambient_dim() const { return ambient_; }
    int dim() const { return mat_.rows(); }
    const Matrix& matrix() const { return mat_; }
    Vec vector(int i) const { return mat_.row(i); }

    bool contains(const Vec& v) const;
    bool contains(const SubspaceBasis& other) const;
    // reduce v modulo the subspace (subtract the unique combination matching pivots)
    Vec reduce(const Vec& v) const;
    // coefficients c with c * mat = v, when v lies in the subspace
    std::optional<Vec> coordinates_of(const Vec& v) const;

    SubspaceBasis conjugated() const;

    friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
        return a.ambient_ == b.ambient_ && a.mat_ == b.mat_;
    }
    friend bool operator!=(const SubspaceBasis& a, const SubspaceBasis& b) { return !(a == b); }

private:
    int ambient_ = 0;
    Matrix mat_;  // dim x ambient, RREF
    std::vector<int> pivots_;
};

// Canonical basis of the right null space; rank + dim = cols.
SubspaceBasis kernel_basis(const Matrix& m);

// One exact solution of m x = b, or nullopt when the system is inconsistent.
// Free variables of the echelon system are set to zero.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// dim ker(d_out) - rank(d_in) for consecutive differentials; throws
// ComposeNonzero unless d_out * d_in = 0 exactly.
int cohomology_dim(const Matrix& d_in, const Matrix& d_out);

struct Inertia {
    int pos = 0, zero = 0, neg = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Sylvester inertia of a Hermitian matrix by exact congruence elimination.
Inertia symmetric_inertia(const Matrix& s);

}  // namespace nilcoh
