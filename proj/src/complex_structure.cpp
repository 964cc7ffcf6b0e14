#include "nilcoh/complex_structure.hpp"

#include <stdexcept>

#include "nilcoh/errors.hpp"

namespace nilcoh {

ComplexStructure ComplexStructure::validated(Matrix j) {
    if (!j.is_square()) throw std::invalid_argument("complex structure matrix must be square");
    const int n = j.rows();
    if (n % 2 != 0) throw std::invalid_argument("complex structure needs even dimension");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!j.at(a, b).is_real())
                throw std::invalid_argument("complex structure matrix must be real rational");
    Matrix sq = j * j;
    if (sq != Matrix::identity(n).scaled(GQ(-1)))
        throw std::invalid_argument("operator does not square to -identity");
    return ComplexStructure(std::move(j));
}

HodgeSplit hodge_split(const ComplexStructure& j) {
    const int n = j.dim();
    // +i eigenspace = kernel of (J - i id)
    Matrix shifted = j.matrix() - Matrix::identity(n).scaled(gq_i());
    HodgeSplit s;
    s.n = n;
    s.m = n / 2;
    s.holo = kernel_basis(shifted);
    s.antiholo = s.holo.conjugated();
    if (s.holo.dim() != s.m) throw std::logic_error("holomorphic eigenspace has wrong dimension");
    return s;
}

bool is_integrable(const LieAlgebra& g, const HodgeSplit& split) {
    for (int a = 0; a < split.holo.dim(); ++a)
        for (int b = a + 1; b < split.holo.dim(); ++b)
            if (!split.holo.contains(g.bracket(split.holo.vector(a), split.holo.vector(b))))
                return false;
    return true;
}

bool is_integrable(const LieAlgebra& g, const ComplexStructure& j) {
    return is_integrable(g, hodge_split(j));
}

FiltrationChain antiholo_central_series(const HodgeSplit& split, const LieAlgebra& g) {
    if (!is_integrable(g, split)) throw NotIntegrableError();
    FiltrationChain chain;
    chain.w_chain.push_back(split.antiholo);
    for (;;) {
        const SubspaceBasis& w0 = chain.w_chain.front();
        const SubspaceBasis& prev = chain.w_chain.back();
        std::vector<Vec> gens;
        for (int a = 0; a < w0.dim(); ++a)
            for (int b = 0; b < prev.dim(); ++b)
                gens.push_back(g.bracket(w0.vector(a), prev.vector(b)));
        SubspaceBasis next(g.dim(), gens);
        if (next.dim() == prev.dim()) break;
        chain.w_chain.push_back(next);
        if (next.dim() == 0) break;
    }
    if (chain.w_chain.back().dim() != 0)
        throw NotNilpotentError("antiholomorphic central series does not terminate");

    // A_k = kernel of the evaluation matrix of W_k written in antiholo coordinates
    const int m = split.m;
    for (const auto& w : chain.w_chain) {
        std::vector<Vec> rows;
        for (int i = 0; i < w.dim(); ++i) {
            auto coords = split.antiholo.coordinates_of(w.vector(i));
            if (!coords) throw std::logic_error("W_k is not inside g^{0,1}");
            rows.push_back(*coords);
        }
        chain.a_chain.push_back(kernel_basis(Matrix::from_rows(rows, m)));
    }
    return chain;
}

}  // namespace nilcoh
