#pragma once

#include "nilcoh/lie_algebra.hpp"

namespace nilcoh {

// Almost complex structure operator on g: real rational matrix with J^2 = -id.
class ComplexStructure {
public:
    // throws on non-square, odd dimension, non-real entries or J^2 != -id
    static ComplexStructure validated(Matrix j);

    int dim() const { return j_.rows(); }
    const Matrix& matrix() const { return j_; }

private:
    explicit ComplexStructure(Matrix j) : j_(std::move(j)) {}
    Matrix j_;
};

// Eigenbasis decomposition g_C = g^{1,0} (+) g^{0,1} for the +/- i eigenvalues.
// Both bases are echelon-canonical and antiholo is exactly the conjugate of holo.
struct HodgeSplit {
    SubspaceBasis holo;
    SubspaceBasis antiholo;
    int n = 0;
    int m = 0;  // = n/2
};

HodgeSplit hodge_split(const ComplexStructure& j);
inline HodgeSplit hodge_split(const LieAlgebra&, const ComplexStructure& j) { return hodge_split(j); }

// true iff [g^{1,0}, g^{1,0}] is contained in g^{1,0} (exact membership test)
bool is_integrable(const LieAlgebra& g, const ComplexStructure& j);
bool is_integrable(const LieAlgebra& g, const HodgeSplit& split);

// Central series of g^{0,1} and the annihilators of its members.
//   w_chain: W_0 = g^{0,1} ⊇ W_1 = [W_0, W_0] ⊇ ... ⊇ 0, in ambient g_C coordinates
//   a_chain: A_k = Ann(W_k) ⊂ (g^{0,1})*, coordinates in the dual of the antiholo
//            echelon basis; ascending, A_0 = 0, A_last = everything
struct FiltrationChain {
    std::vector<SubspaceBasis> w_chain;
    std::vector<SubspaceBasis> a_chain;
};

// throws NotIntegrable; throws NotNilpotent when the series does not reach zero
FiltrationChain antiholo_central_series(const HodgeSplit& split, const LieAlgebra& g);

}  // namespace nilcoh
