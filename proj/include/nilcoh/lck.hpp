#pragma once

#include "nilcoh/cohomology.hpp"

namespace nilcoh {

// Left-invariant Hermitian metric: real symmetric positive definite Gram
// matrix, compatible with the complex structure (g(Ix, Iy) = g(x, y)).
class HermitianMetric {
public:
    // throws IncompatibleMetric when any of the three conditions fails
    static HermitianMetric validated(Matrix gram, const ComplexStructure& j);

    int dim() const { return gram_.rows(); }
    const Matrix& gram() const { return gram_; }
    const Matrix& gram_inv() const { return gram_inv_; }

    // metric dual of a real covector
    std::vector<Rational> sharp(const std::vector<Rational>& covector) const;
    // |theta|^2 = theta(theta^sharp)
    Rational norm2(const std::vector<Rational>& covector) const;

private:
    HermitianMetric(Matrix g, Matrix gi) : gram_(std::move(g)), gram_inv_(std::move(gi)) {}
    Matrix gram_;
    Matrix gram_inv_;
};

// omega(x, y) := h(Ix, y), a real nondegenerate (1,1)-form in the real dual basis
ExtForm fundamental_form(const LieAlgebra& g, const ComplexStructure& j, const HermitianMetric& h);

// Solves d(omega) = theta ^ omega together with d(theta) = 0.
// Throws Degenerate when omega is degenerate; nullopt when no Lee form exists.
std::optional<std::vector<Rational>> extract_lee(const LieAlgebra& g, const ExtForm& omega);

// Levi-Civita connection of a left-invariant metric via the Koszul formula:
// gamma[i] column j = coordinates of ∇_{e_i} e_j.
struct Connection {
    std::vector<Matrix> gamma;
};
Connection levi_civita(const LieAlgebra& g, const HermitianMetric& h);

// ∇(theta^sharp) = 0 for all directions
bool is_parallel_lee(const LieAlgebra& g, const HermitianMetric& h,
                     const std::vector<Rational>& theta);

// c with omega = c * d_theta d^c_theta(1); nullopt when inconsistent
std::optional<Rational> potential_constant(const LieAlgebra& g, const ComplexStructure& j,
                                           const std::vector<Rational>& theta, const ExtForm& omega);

// inertia of the Hermitian form -i * omega_0(u, v-bar) on g^{1,0}, where
// omega_0 = -d^c(theta / |theta|); theta is normalized when |theta|^2 is a
// rational square (scaling does not move the inertia otherwise)
Inertia omega0_inertia(const LieAlgebra& g, const ComplexStructure& j, const HermitianMetric& h,
                       const std::vector<Rational>& theta);
// omega_0 itself, as a real-dual form (built from the unnormalized theta)
ExtForm omega0_form(const LieAlgebra& g, const ComplexStructure& j,
                    const std::vector<Rational>& theta);

struct LeeIdealReport {
    bool is_ideal = false;
    bool span_dim2 = false;
    std::optional<LieAlgebra> quotient;
    bool quotient_abelian = false;
};

// span(theta^sharp, I theta^sharp): ideal test and induced quotient algebra
LeeIdealReport lee_ideal_check(const LieAlgebra& g, const ComplexStructure& j,
                               const HermitianMetric& h, const std::vector<Rational>& theta);

// dim[g,g] = 1 inside the center, dim center = 2, and the induced alternating
// form on g/center nondegenerate: exactly the heisenberg-times-line algebras
bool is_heisenberg_x_line(const LieAlgebra& g);

// basis of the space of d-closed real J-invariant 2-forms
std::vector<ExtForm> closed_real_11_basis(const LieAlgebra& g, const ComplexStructure& j);

struct LckCertificate {
    ExtForm omega;  // real dual basis
    std::optional<std::vector<Rational>> lee;
    bool is_lck = false;
    bool lee_closed = false;
    bool kahler = false;  // Lee form is zero; the remaining checks do not apply
    bool lee_unit_norm = false;
    std::optional<Rational> potential;
    bool potential_positive = false;
    std::optional<bool> vaisman;
    std::optional<Inertia> omega0;
    std::optional<bool> lee_ideal_ok;
    std::optional<bool> quotient_abelian;
    std::optional<bool> heisenberg_x_line;
    bool dctheta_identity = false;  // d theta^c = theta ^ theta^c - omega, for |theta| = 1
    bool green = false;
};

// Full verification chain; throws NotNilpotent / NotIntegrable / IncompatibleMetric.
LckCertificate classify_lck(const LieAlgebra& g, const ComplexStructure& j,
                            const HermitianMetric& h);

}  // namespace nilcoh
