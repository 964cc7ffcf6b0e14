#pragma once

#include "nilcoh/exterior.hpp"

namespace nilcoh {

// An ordered basis of g_C together with the complexified structure constants
// expressed in it. Forms are always indexed against some frame: the real dual
// frame, or the hodge-adapted frame (holo covectors first, then antiholo).
struct Frame {
    int n = 0;
    int holo = -1;  // number of leading holo vectors; -1 for the real frame
    BasisMode mode = BasisMode::real_dual;
    Matrix cols;      // column a = frame vector u_a in ambient coordinates
    Matrix cols_inv;  // inverse, for ambient -> frame coordinates
    std::vector<std::string> covector_names;
    // frame coordinates of [u_a, u_b]
    std::vector<std::vector<Vec>> brk;
    // d of each frame covector: d(u^c) = -sum_{a<b} brk[a][b][c] u^a ^ u^b
    std::vector<ExtForm> d1;

    bool is_hodge() const { return holo >= 0; }
};

Frame make_real_frame(const LieAlgebra& g);
Frame make_hodge_frame(const LieAlgebra& g, const HodgeSplit& split);

// coefficient rows transform by P when passing from the ambient dual basis to
// the frame dual basis (P = frame columns)
ExtForm to_frame(const Frame& fr, const ExtForm& real_form);
ExtForm from_frame(const Frame& fr, const ExtForm& frame_form);

// real covector (coefficients in the real dual basis) as a 1-form in the frame
ExtForm covector_in_frame(const Frame& fr, const std::vector<Rational>& theta);

}  // namespace nilcoh
