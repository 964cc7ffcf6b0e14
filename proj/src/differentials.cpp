#include "nilcoh/differentials.hpp"

#include <bit>
#include <stdexcept>

#include "nilcoh/errors.hpp"

namespace nilcoh {

bool diff_kind_twisted(DiffKind k) {
    return k == DiffKind::d_theta || k == DiffKind::del_theta || k == DiffKind::delbar_theta ||
           k == DiffKind::dc_theta;
}

bool diff_kind_needs_hodge(DiffKind k) { return k != DiffKind::d && k != DiffKind::d_theta; }

std::string diff_kind_name(DiffKind k) {
    switch (k) {
        case DiffKind::d: return "d";
        case DiffKind::d_theta: return "d_theta";
        case DiffKind::del: return "del";
        case DiffKind::delbar: return "delbar";
        case DiffKind::del_theta: return "del_theta";
        case DiffKind::delbar_theta: return "delbar_theta";
        case DiffKind::dc: return "dc";
        case DiffKind::dc_theta: return "dc_theta";
    }
    return "?";
}

ExtForm d_form(const Frame& fr, const ExtForm& f) {
    ExtForm r(fr.n, f.degree() + 1, fr.mode);
    for (const auto& [s, c] : f.terms()) {
        int pos = 0;
        Mask ss = s;
        while (ss) {
            int t = std::countr_zero(ss);
            ss &= ss - 1;
            if (!fr.d1[t].is_zero()) {
                // d(u^t) is a 2-form, so pulling it to the front costs (-1)^pos
                ExtForm rest = ExtForm::monomial(fr.n, s & ~(Mask(1) << t),
                                                 pos % 2 == 0 ? c : -c, fr.mode);
                r = r + wedge(fr.d1[t], rest);
            }
            ++pos;
        }
    }
    return r;
}

ExtForm d_theta_form(const Frame& fr, const ExtForm& theta, const ExtForm& f) {
    return d_form(fr, f) - wedge(theta, f);
}

namespace {

// (p,q)-term-wise projection of d to the requested offset
ExtForm hodge_part(const Frame& fr, const ExtForm& f, int dp, int dq) {
    if (!fr.is_hodge()) throw std::invalid_argument("hodge component needs a hodge frame");
    ExtForm r(fr.n, f.degree() + 1, fr.mode);
    for (const auto& [s, c] : f.terms()) {
        Bidegree b = mask_bidegree(s, fr.holo);
        ExtForm df = d_form(fr, ExtForm::monomial(fr.n, s, c, fr.mode));
        r = r + bidegree_component(df, b.p + dp, b.q + dq);
    }
    return r;
}

}  // namespace

ExtForm del_form(const Frame& fr, const ExtForm& f) { return hodge_part(fr, f, 1, 0); }
ExtForm delbar_form(const Frame& fr, const ExtForm& f) { return hodge_part(fr, f, 0, 1); }

ExtForm dc_form(const Frame& fr, const ExtForm& f) {
    // d^c = i(del - delbar); this is I^{-1} d I for the i^{q-p} action of I,
    // the sign that makes -d^c(theta) come out semi-positive on the model case
    return (del_form(fr, f) - delbar_form(fr, f)).scaled(gq_i());
}

bool frame_integrable(const Frame& fr) {
    if (!fr.is_hodge()) return false;
    for (int t = 0; t < fr.n; ++t) {
        const ExtForm& d1 = fr.d1[t];
        for (const auto& [s, c] : d1.terms()) {
            (void)c;
            Bidegree b = mask_bidegree(s, fr.holo);
            if (t < fr.holo && b.q == 2) return false;  // holo covector leaking into (0,2)
            if (t >= fr.holo && b.p == 2) return false;
        }
    }
    return true;
}

ExtForm apply_diff(DiffKind kind, const Frame& fr, const std::optional<ExtForm>& theta,
                   const ExtForm& f) {
    switch (kind) {
        case DiffKind::d: return d_form(fr, f);
        case DiffKind::d_theta: return d_theta_form(fr, *theta, f);
        case DiffKind::del: return del_form(fr, f);
        case DiffKind::delbar: return delbar_form(fr, f);
        case DiffKind::del_theta:
            return del_form(fr, f) - wedge(bidegree_component(*theta, 1, 0), f);
        case DiffKind::delbar_theta:
            return delbar_form(fr, f) - wedge(bidegree_component(*theta, 0, 1), f);
        case DiffKind::dc: return dc_form(fr, f);
        case DiffKind::dc_theta: return dc_form(fr, f) - wedge(apply_I_hodge(*theta), f);
    }
    throw std::logic_error("unknown differential kind");
}

void GradedOperator::check_square_zero() const {
    for (int k = 0; k + 1 < int(block.size()); ++k)
        if (!(block[k + 1] * block[k]).is_zero())
            throw std::logic_error("operator " + diff_kind_name(kind) +
                                   " does not square to zero at degree " + std::to_string(k));
}

GradedOperator materialize(DiffKind kind, const Frame& fr,
                           std::optional<std::vector<Rational>> theta) {
    if (diff_kind_twisted(kind) != theta.has_value())
        throw std::invalid_argument("twist mismatch for " + diff_kind_name(kind));
    if (diff_kind_needs_hodge(kind) && !frame_integrable(fr)) throw NotIntegrableError();

    std::optional<ExtForm> theta_form;
    if (theta) {
        theta_form = covector_in_frame(fr, *theta);
        if (!d_form(fr, *theta_form).is_zero()) throw ThetaNotClosedError();
    }

    GradedOperator op;
    op.kind = kind;
    op.n = fr.n;
    op.mode = fr.mode;
    op.holo = fr.holo;
    op.theta = std::move(theta);
    for (int k = 0; k <= fr.n; ++k) {
        const auto& src = masks_of_degree(fr.n, k);
        Matrix blk(int(binomial(fr.n, k + 1)), int(src.size()));
        for (int col = 0; col < int(src.size()); ++col) {
            ExtForm image =
                apply_diff(kind, fr, theta_form, ExtForm::monomial(fr.n, src[col], GQ(1), fr.mode));
            for (const auto& [s, c] : image.terms()) blk.at(mask_rank(s), col) = c;
        }
        op.block.push_back(std::move(blk));
    }
    if (kind == DiffKind::d || kind == DiffKind::d_theta || kind == DiffKind::delbar ||
        kind == DiffKind::delbar_theta)
        op.check_square_zero();
    return op;
}

GradedOperator chevalley_d(const LieAlgebra& g) { return materialize(DiffKind::d, make_real_frame(g)); }

GradedOperator twisted_d(const LieAlgebra& g, const std::vector<Rational>& theta) {
    return materialize(DiffKind::d_theta, make_real_frame(g), theta);
}

std::pair<GradedOperator, GradedOperator> hodge_components(const GradedOperator& dop,
                                                           const Frame& fr) {
    if (!frame_integrable(fr)) throw NotIntegrableError();
    DiffKind dk = dop.kind == DiffKind::d ? DiffKind::del : DiffKind::del_theta;
    DiffKind bk = dop.kind == DiffKind::d ? DiffKind::delbar : DiffKind::delbar_theta;
    if (dop.kind != DiffKind::d && dop.kind != DiffKind::d_theta)
        throw std::invalid_argument("hodge_components splits d or d_theta");
    return {materialize(dk, fr, dop.theta), materialize(bk, fr, dop.theta)};
}

BidegreeComplex delbar_theta_row(const Frame& fr, const std::optional<ExtForm>& theta, int p) {
    if (!frame_integrable(fr)) throw NotIntegrableError();
    if (theta && !d_form(fr, *theta).is_zero()) throw ThetaNotClosedError();
    const int m = fr.holo;
    BidegreeComplex row;
    row.p = p;
    row.m = m;
    for (int q = 0; q <= m; ++q) {
        std::vector<Mask> list;
        for (Mask s : masks_of_degree(fr.n, p + q))
            if (mask_bidegree(s, m) == Bidegree{p, q}) list.push_back(s);
        row.dims.push_back(int(list.size()));
        row.masks.push_back(std::move(list));
    }
    auto index_of = [&](int q, Mask s) {
        const auto& list = row.masks[q];
        auto it = std::lower_bound(list.begin(), list.end(), s);
        if (it == list.end() || *it != s) throw std::logic_error("mask outside bidegree row");
        return int(it - list.begin());
    };
    for (int q = 0; q < m; ++q) {
        Matrix blk(row.dims[q + 1], row.dims[q]);
        for (int col = 0; col < row.dims[q]; ++col) {
            ExtForm mono = ExtForm::monomial(fr.n, row.masks[q][col], GQ(1), fr.mode);
            ExtForm image = theta ? d_theta_form(fr, *theta, mono) : d_form(fr, mono);
            for (const auto& [s, c] : image.terms()) {
                Bidegree b = mask_bidegree(s, m);
                if (b.p == p && b.q == q + 1)
                    blk.at(index_of(q + 1, s), col) = c;
                else if (!(b.p == p + 1 && b.q == q))
                    throw NotIntegrableError("differential leaks outside the Dolbeault row");
            }
        }
        row.d.push_back(std::move(blk));
    }
    // top antiholomorphic degree maps to zero
    row.d.push_back(Matrix(0, row.dims[m]));
    return row;
}

bool covector_closed(const Frame& fr, const std::vector<Rational>& theta) {
    return d_form(fr, covector_in_frame(fr, theta)).is_zero();
}

}  // namespace nilcoh
