#pragma once

#include "nilcoh/differentials.hpp"

namespace nilcoh {

// A finite cochain complex of exact matrices with D_{k+1} D_k = 0.
struct CochainComplex {
    std::string label;
    std::vector<int> dims;  // dims[k], k = 0..len
    std::vector<Matrix> d;  // d[k]: dims[k] -> dims[k+1]; d.back() maps into 0

    void check() const;  // throws ComposeNonzero on a bad pair
    // dim H^k = dim ker d[k] - rank d[k-1]
    std::vector<int> cohomology() const;
};

CochainComplex complex_from_operator(const GradedOperator& op, std::string label);

// Shared per-(g, J) data for the Dolbeault-side computations.
struct HodgeContext {
    HodgeSplit split;
    Frame frame;
};
HodgeContext make_hodge_context(const LieAlgebra& g, const ComplexStructure& j);

// dims of H^k(Λ*(g_C*), d), k = 0..n
std::vector<int> betti(const LieAlgebra& g);

// dims of H^k(d_theta); all zero for nilpotent g and closed theta != 0
std::vector<int> twisted_betti(const LieAlgebra& g, const std::vector<Rational>& theta);

// dims of H^q(Λ^{0,*}, delbar_theta), q = 0..n/2
std::vector<int> twisted_dolbeault_0q(const LieAlgebra& g, const ComplexStructure& j,
                                      const std::vector<Rational>& theta);
std::vector<int> twisted_dolbeault_0q(const LieAlgebra& g, const HodgeContext& ctx,
                                      const std::vector<Rational>& theta);

// dims of H^q(Λ^{p,*}, delbar_theta)
std::vector<int> twisted_dolbeault_pq(const LieAlgebra& g, const ComplexStructure& j,
                                      const std::vector<Rational>& theta, int p);
std::vector<int> twisted_dolbeault_pq(const LieAlgebra& g, const HodgeContext& ctx,
                                      const std::vector<Rational>& theta, int p);

// Spectral sequence of (Λ^{0,*}, delbar_theta) filtered through the annihilator
// chain of the central series of g^{0,1}. Monomials in a level-graded dual
// basis are filtered by their total level excess; the induced E0 differential
// is then exactly the multiplication by theta^{0,1} coming from the twist.
struct SpectralPages {
    FiltrationChain chain;
    int levels = 0;                  // length of the strictly increasing A-chain
    std::vector<int> basis_level;    // level of each graded dual basis covector
    Matrix graded_dual_basis;        // rows: the level-compatible basis of (g^{0,1})*
    int max_excess = 0;

    // per excess p and degree q (coordinates over the graded basis monomials)
    std::vector<std::vector<std::vector<Mask>>> piece_masks;
    std::vector<std::vector<SubspaceBasis>> v;  // V_p ∩ Λ^{0,q}, ascending in p
    std::vector<std::vector<Matrix>> e0;        // induced differential per piece
    std::vector<std::vector<Matrix>> mult;      // wedge by theta^{0,1}, for comparison
    bool e0_equals_mult = false;
    bool annihilator_shift_ok = false;  // delbar(A_k) ⊂ Λ²(A_{k-1})
    std::vector<std::vector<int>> e1;   // e1[p][q]
    int e1_total = 0;
};

// throws NotIntegrable / ThetaNotClosed / ThetaZero / NotNilpotent
SpectralPages spectral_pages(const LieAlgebra& g, const ComplexStructure& j,
                             const std::vector<Rational>& theta);
SpectralPages spectral_pages(const LieAlgebra& g, const HodgeContext& ctx,
                             const std::vector<Rational>& theta);
// same machinery with theta = 0 permitted (E0 is then the graded part of delbar);
// used for the E1-upper-bound consistency check
SpectralPages spectral_pages_untwisted_ok(const LieAlgebra& g, const HodgeContext& ctx,
                                          const std::vector<Rational>& theta);

// exactness of (Λ*(Q(i)^dim), e ∧ .), verified by ranks; throws ZeroCovector
bool koszul_exactness(int dim, const Vec& covector);

// dim(ker d_theta ∩ Λ^{1,1}) - rank(d_theta d^c_theta : Λ⁰ -> Λ^{1,1})
int bott_chern_11_dim(const LieAlgebra& g, const ComplexStructure& j,
                      const std::vector<Rational>& theta);
int bott_chern_11_dim(const LieAlgebra& g, const HodgeContext& ctx,
                      const std::vector<Rational>& theta);

// basis of ker d_theta ∩ Λ^{1,1} as hodge-mode forms
std::vector<ExtForm> d_theta_closed_11_forms(const LieAlgebra& g, const HodgeContext& ctx,
                                             const std::vector<Rational>& theta);

struct ChaseResult {
    ExtForm tau;                // 1-form in the real dual basis, d_theta(tau) = omega
    std::optional<GQ> constant; // f with omega = f * d_theta d^c_theta(1), when that system is consistent
};

// Solves omega = d_theta(tau) with d_theta(I tau) = 0 for a d_theta-closed
// (1,1)-form omega. Returns nullopt when no such tau exists (which the
// vanishing theorems forbid in scope; surfacing it is the alarm).
std::optional<ChaseResult> hodge_chase(const LieAlgebra& g, const ComplexStructure& j,
                                       const std::vector<Rational>& theta, const ExtForm& omega);
std::optional<ChaseResult> hodge_chase(const LieAlgebra& g, const HodgeContext& ctx,
                                       const std::vector<Rational>& theta, const ExtForm& omega);

// rational coefficient rows spanning the closed real covectors (ker of d on Λ¹)
std::vector<std::vector<Rational>> closed_covector_basis(const LieAlgebra& g);

}  // namespace nilcoh
