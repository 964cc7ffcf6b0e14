#pragma once

#include <optional>

#include "nilcoh/frame.hpp"

namespace nilcoh {

enum class DiffKind { d, d_theta, del, delbar, del_theta, delbar_theta, dc, dc_theta };

bool diff_kind_twisted(DiffKind k);
// kinds other than d / d_theta need an integrable hodge frame
bool diff_kind_needs_hodge(DiffKind k);
std::string diff_kind_name(DiffKind k);

// d extended from the frame covectors as an antiderivation
ExtForm d_form(const Frame& fr, const ExtForm& f);
// d_theta = d - theta ^ .
ExtForm d_theta_form(const Frame& fr, const ExtForm& theta, const ExtForm& f);

// Hodge components on an integrable hodge frame: del keeps the (p+1,q) part of
// d applied to each (p,q) term, delbar the (p,q+1) part.
ExtForm del_form(const Frame& fr, const ExtForm& f);
ExtForm delbar_form(const Frame& fr, const ExtForm& f);

// d^c = i(del - delbar); twisted versions subtract the wedge with theta resp. I theta
ExtForm dc_form(const Frame& fr, const ExtForm& f);

// one entry point for every operator kind; theta given in frame coordinates
ExtForm apply_diff(DiffKind kind, const Frame& fr, const std::optional<ExtForm>& theta,
                   const ExtForm& f);

// true iff d of holo covectors has no (0,2) part and conjugately; equivalent to
// g^{1,0} being a subalgebra
bool frame_integrable(const Frame& fr);

// Materialized operator: one exact matrix per degree, acting on colex coordinates.
struct GradedOperator {
    DiffKind kind = DiffKind::d;
    int n = 0;
    BasisMode mode = BasisMode::real_dual;
    int holo = -1;
    std::vector<Matrix> block;  // block[k]: C(n,k) -> C(n,k+1), k = 0..n
    std::optional<std::vector<Rational>> theta;  // real covector the twist was built with

    const Matrix& blk(int k) const { return block.at(k); }
    // composing consecutive blocks must give zero; throws otherwise
    void check_square_zero() const;
};

// Builds the operator and (for d, d_theta and the delbar family) verifies
// square-zero. Twisted kinds require a closed theta (ThetaNotClosed otherwise);
// hodge kinds require an integrable hodge frame (NotIntegrable otherwise).
GradedOperator materialize(DiffKind kind, const Frame& fr,
                           std::optional<std::vector<Rational>> theta = std::nullopt);

// convenience entry points on the real frame
GradedOperator chevalley_d(const LieAlgebra& g);
GradedOperator twisted_d(const LieAlgebra& g, const std::vector<Rational>& theta);

// del/delbar blocks of a materialized d or d_theta
std::pair<GradedOperator, GradedOperator> hodge_components(const GradedOperator& dop,
                                                           const Frame& fr);

// delbar_theta restricted to one Dolbeault row p: blocks Λ^{p,q} -> Λ^{p,q+1}
struct BidegreeComplex {
    int p = 0;
    int m = 0;
    std::vector<std::vector<Mask>> masks;  // masks[q], ascending
    std::vector<int> dims;                 // dims[q] = C(m,p) * C(m,q)
    std::vector<Matrix> d;                 // d[q]: dims[q] -> dims[q+1]
};

BidegreeComplex delbar_theta_row(const Frame& fr, const std::optional<ExtForm>& theta, int p);

// is d(theta-as-1-form) zero
bool covector_closed(const Frame& fr, const std::vector<Rational>& theta);

}  // namespace nilcoh
