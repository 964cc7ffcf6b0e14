#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilcoh/complex_structure.hpp"

namespace nilcoh {

// Strictly increasing multi-indices are stored as bitmasks over a fixed ordered
// basis of covectors (bit i = basis covector i). For equal popcount, numeric
// order of masks is exactly colexicographic order of the index sets, which is
// the coordinate order used everywhere.
using Mask = std::uint32_t;

long long binomial(int n, int k);
int mask_degree(Mask s);
// colex position of s among all masks of the same popcount
int mask_rank(Mask s);
// ascending list of all popcount-k masks on n bits
const std::vector<Mask>& masks_of_degree(int n, int k);
// sign of e_S ^ e_T for disjoint S, T (number of transpositions to interleave)
int wedge_sign(Mask s, Mask t);

enum class BasisMode { real_dual, hodge };

struct Bidegree {
    int p = 0, q = 0;
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

// Exterior form with exact coefficients, stored sparsely by multi-index.
// Homogeneous: every stored index has length = degree; zero coefficients are
// never stored, so equality of term maps is equality of forms.
class ExtForm {
public:
    ExtForm() = default;
    ExtForm(int n, int degree, BasisMode mode) : n_(n), degree_(degree), mode_(mode) {}

    static ExtForm monomial(int n, Mask s, GQ coeff, BasisMode mode);
    static ExtForm constant(int n, GQ value, BasisMode mode);
    // 1-form with the given coefficient row
    static ExtForm covector(const Vec& coeffs, BasisMode mode);

    int space_dim() const { return n_; }
    int degree() const { return degree_; }
    BasisMode mode() const { return mode_; }
    const std::map<Mask, GQ>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GQ coeff(Mask s) const;
    void add_term(Mask s, const GQ& c);  // accumulates, drops zeros

    ExtForm operator-() const;
    ExtForm operator+(const ExtForm& o) const;
    ExtForm operator-(const ExtForm& o) const;
    ExtForm scaled(const GQ& c) const;
    friend bool operator==(const ExtForm& a, const ExtForm& b) {
        return a.n_ == b.n_ && a.degree_ == b.degree_ && a.mode_ == b.mode_ && a.terms_ == b.terms_;
    }

    // complex conjugate; in hodge mode this swaps holo and antiholo indices
    ExtForm conjugate() const;

    // dense colex coordinates on degree-k forms
    Vec dense_coords() const;
    static ExtForm from_dense(int n, int k, const Vec& coords, BasisMode mode);

private:
    int n_ = 0;
    int degree_ = 0;
    BasisMode mode_ = BasisMode::real_dual;
    std::map<Mask, GQ> terms_;
};

// Graded-commutative wedge with the determinant normalization:
// (a ^ b)(x, y) = a(x) b(y) - a(y) b(x) on 1-forms. Throws BasisModeMismatch.
ExtForm wedge(const ExtForm& a, const ExtForm& b);

// substitute basis covector i -> sum_j M(i,j) * covector j (same indexing space)
ExtForm transform_covectors(const ExtForm& f, const Matrix& m);

// bidegree of a hodge-mode monomial: (# holo indices, # antiholo indices)
Bidegree mask_bidegree(Mask s, int m);

// split of a hodge-mode form into its (p,q) components; components sum to f
std::map<std::pair<int, int>, ExtForm> bidegree_split(const ExtForm& f);
std::map<std::pair<int, int>, ExtForm> bidegree_split(const ExtForm& f, const HodgeSplit&);

// single (p,q) component
ExtForm bidegree_component(const ExtForm& f, int p, int q);

// true when every term has bidegree (p,q)
bool is_pure_bidegree(const ExtForm& f, int p, int q);

// Action of the complex structure on forms: (I f)(x_1..x_k) = f(I^{-1}x_1, ..).
// Multiplies (p,q) components by i^(q-p); applying it twice on a k-form gives
// (-1)^k. Works in either basis mode.
ExtForm apply_I(const ExtForm& f, const ComplexStructure& j);

// same action on a hodge-adapted form, where no operator matrix is needed
ExtForm apply_I_hodge(const ExtForm& f);

// evaluation on coordinate vectors (determinant convention)
GQ evaluate(const ExtForm& f, const std::vector<Vec>& vectors);

// rendering in `<coeff> <Name^Name^..>` terms; parse accepts exactly this shape
std::string form_to_string(const ExtForm& f, const std::vector<std::string>& names);
std::optional<ExtForm> parse_form(const std::string& text, const std::vector<std::string>& names,
                                  BasisMode mode);

}  // namespace nilcoh
