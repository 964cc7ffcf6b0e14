#include "nilcoh/frame.hpp"

#include <stdexcept>

namespace nilcoh {

namespace {

Matrix invert(const Matrix& m) {
    Echelon e = echelon_form(hstack(m, Matrix::identity(m.rows())));
    if (e.rank != m.rows()) throw std::invalid_argument("singular frame matrix");
    Matrix inv(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) inv.at(i, j) = e.rref.at(i, m.cols() + j);
    return inv;
}

void fill_brackets_and_d1(Frame& fr, const LieAlgebra& g) {
    const int n = fr.n;
    fr.brk.assign(n, std::vector<Vec>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Vec w = g.bracket(fr.cols.col(a), fr.cols.col(b));
            fr.brk[a][b] = fr.cols_inv.apply(w);
        }
    fr.d1.clear();
    for (int c = 0; c < n; ++c) {
        ExtForm d(n, 2, fr.mode);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                const GQ& coef = fr.brk[a][b][c];
                if (!coef.is_zero()) d.add_term((Mask(1) << a) | (Mask(1) << b), -coef);
            }
        fr.d1.push_back(std::move(d));
    }
}

}  // namespace

Frame make_real_frame(const LieAlgebra& g) {
    Frame fr;
    fr.n = g.dim();
    fr.holo = -1;
    fr.mode = BasisMode::real_dual;
    fr.cols = Matrix::identity(fr.n);
    fr.cols_inv = fr.cols;
    fr.covector_names = g.basis_names();
    fill_brackets_and_d1(fr, g);
    return fr;
}

Frame make_hodge_frame(const LieAlgebra& g, const HodgeSplit& split) {
    Frame fr;
    fr.n = g.dim();
    fr.holo = split.m;
    fr.mode = BasisMode::hodge;
    fr.cols = Matrix(fr.n, fr.n);
    for (int a = 0; a < split.m; ++a) {
        Vec h = split.holo.vector(a);
        Vec ah = split.antiholo.vector(a);
        for (int i = 0; i < fr.n; ++i) {
            fr.cols.at(i, a) = h[i];
            fr.cols.at(i, split.m + a) = ah[i];
        }
    }
    fr.cols_inv = invert(fr.cols);
    for (int a = 0; a < split.m; ++a) fr.covector_names.push_back("h" + std::to_string(a + 1));
    for (int a = 0; a < split.m; ++a) fr.covector_names.push_back("a" + std::to_string(a + 1));
    fill_brackets_and_d1(fr, g);
    return fr;
}

ExtForm to_frame(const Frame& fr, const ExtForm& real_form) {
    if (real_form.mode() != BasisMode::real_dual)
        throw std::invalid_argument("to_frame expects a real-dual form");
    if (!fr.is_hodge()) return real_form;
    ExtForm relabeled(real_form.space_dim(), real_form.degree(), BasisMode::hodge);
    for (const auto& [s, c] : real_form.terms()) relabeled.add_term(s, c);
    return transform_covectors(relabeled, fr.cols);
}

ExtForm from_frame(const Frame& fr, const ExtForm& frame_form) {
    if (!fr.is_hodge()) return frame_form;
    ExtForm out = transform_covectors(frame_form, fr.cols_inv);
    ExtForm relabeled(out.space_dim(), out.degree(), BasisMode::real_dual);
    for (const auto& [s, c] : out.terms()) relabeled.add_term(s, c);
    return relabeled;
}

ExtForm covector_in_frame(const Frame& fr, const std::vector<Rational>& theta) {
    if (int(theta.size()) != fr.n) throw std::invalid_argument("covector length mismatch");
    Vec row(fr.n);
    for (int i = 0; i < fr.n; ++i) row[i] = GQ(theta[i]);
    ExtForm real = ExtForm::covector(row, BasisMode::real_dual);
    return to_frame(fr, real);
}

}  // namespace nilcoh
