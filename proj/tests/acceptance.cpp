// Acceptance suite: runs every verification criterion at its exact (zero)
// tolerance and prints one PASS/FAIL line per criterion. Exit code is the
// number of failed criteria.
#include <chrono>
#include <iostream>
#include <sstream>

#include "nilcoh/algebra_file.hpp"
#include "oracles.hpp"

using namespace nilcoh;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << "criterion " << number << " [" << name << "] " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << "  -- " << detail;
    std::cout << "\n";
    if (!pass) ++failures;
}

struct Input {
    std::string note;
    LieAlgebra g;
    ComplexStructure j;
};

std::vector<Input> theorem_scope_inputs() {
    std::vector<Input> inputs;
    for (int k = 1; k <= 4; ++k) {
        auto e = make_heisenberg_x_line(k);
        inputs.push_back({"heisenberg k=" + std::to_string(k), e.algebra, *e.complex_structure});
    }
    {
        auto e = make_iwasawa();
        inputs.push_back({"iwasawa", e.algebra, *e.complex_structure});
    }
    std::mt19937 rng(20260809);
    for (auto& s : oracle::sampled_nilpotent_with_j(rng)) inputs.push_back({s.note, s.g, s.j});
    return inputs;
}

constexpr int kThetaSamples = 20;

std::string vec_str(const std::vector<int>& v) {
    std::ostringstream o;
    for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
    return o.str();
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Input> inputs = theorem_scope_inputs();
    std::mt19937 rng(424242);

    // shared theta samples per input
    std::vector<std::vector<std::vector<Rational>>> thetas;
    for (const auto& in : inputs)
        thetas.push_back(oracle::sample_closed_thetas(rng, in.g, kThetaSamples));

    // 1. twisted Dolbeault vanishing on Λ^{0,*}
    {
        bool pass = true;
        std::string detail;
        auto t_start = std::chrono::steady_clock::now();
        for (std::size_t i = 0; i < inputs.size() && pass; ++i) {
            HodgeContext ctx = make_hodge_context(inputs[i].g, inputs[i].j);
            for (const auto& theta : thetas[i]) {
                auto h = twisted_dolbeault_0q(inputs[i].g, ctx, theta);
                for (int v : h)
                    if (v != 0) pass = false;
                if (!pass) {
                    detail = inputs[i].note + " gives H = (" + vec_str(h) + ")";
                    break;
                }
            }
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t_start)
                      .count();
        if (pass)
            detail = std::to_string(inputs.size()) + " algebras x " +
                     std::to_string(kThetaSamples) + " twists, " + std::to_string(ms) + " ms";
        report(1, "twisted-dolbeault-vanishing", pass, detail);
    }

    // 2. twisted de Rham vanishing
    {
        bool pass = true;
        std::string detail;
        for (std::size_t i = 0; i < inputs.size() && pass; ++i) {
            for (const auto& theta : thetas[i]) {
                auto h = twisted_betti(inputs[i].g, theta);
                for (int v : h)
                    if (v != 0) pass = false;
                if (!pass) {
                    detail = inputs[i].note + " gives H = (" + vec_str(h) + ")";
                    break;
                }
            }
        }
        report(2, "twisted-de-rham-vanishing", pass, detail);
    }

    // 3. untwisted sanity rows against the independent oracle
    {
        auto heis = make_heisenberg_x_line(1).algebra;
        auto b = betti(heis);
        bool pass = (b == std::vector<int>{1, 3, 4, 3, 1});
        // independent route: evaluation-formula differential + textbook ranks
        Frame fr = make_real_frame(heis);
        std::vector<int> via_oracle;
        for (int k = 0; k <= 4; ++k) {
            Matrix dk = oracle::chevalley_block_by_evaluation(fr, k);
            int kernel = int(binomial(4, k)) - oracle::naive_rank(dk);
            int image = k > 0
                            ? oracle::naive_rank(oracle::chevalley_block_by_evaluation(fr, k - 1))
                            : 0;
            via_oracle.push_back(kernel - image);
        }
        pass = pass && (b == via_oracle);
        for (int n : {2, 4, 6}) {
            auto ab = betti(make_abelian(n).algebra);
            for (int k = 0; k <= n; ++k) pass = pass && ab[k] == int(binomial(n, k));
        }
        report(3, "untwisted-betti-sanity", pass,
               "betti(h3 x R) = (" + vec_str(b) + ")");
    }

    // 4. spectral mechanics and Koszul exactness
    {
        bool pass = true;
        std::string detail;
        for (std::size_t i = 0; i < inputs.size() && pass; ++i) {
            HodgeContext ctx = make_hodge_context(inputs[i].g, inputs[i].j);
            for (const auto& theta : thetas[i]) {
                SpectralPages sp = spectral_pages(inputs[i].g, ctx, theta);
                if (!sp.annihilator_shift_ok || !sp.e0_equals_mult || sp.e1_total != 0) {
                    pass = false;
                    detail = inputs[i].note + ": shift=" +
                             std::string(sp.annihilator_shift_ok ? "ok" : "BAD") +
                             " e0=" + (sp.e0_equals_mult ? "theta-wedge" : "MISMATCH") +
                             " e1_total=" + std::to_string(sp.e1_total);
                    break;
                }
            }
        }
        int koszul_runs = 0;
        std::mt19937 krng(99173);
        while (pass && koszul_runs < 100) {
            int dim = 1 + int(krng() % 8);
            Vec e(dim);
            while (vec_is_zero(e))
                for (int i = 0; i < dim; ++i) e[i] = GQ(oracle::random_rational(krng));
            if (!koszul_exactness(dim, e)) {
                pass = false;
                detail = "koszul failure in dim " + std::to_string(dim);
            }
            ++koszul_runs;
        }
        if (pass) detail = "E0 = theta-wedge and E1 = 0 everywhere; 100 koszul samples exact";
        report(4, "spectral-mechanics", pass, detail);
    }

    // 5. the full certificate on the model structures
    {
        bool pass = true;
        std::string detail;
        for (int k = 1; k <= 4 && pass; ++k) {
            auto e = make_heisenberg_x_line(k);
            HermitianMetric h = HermitianMetric::validated(*e.metric, *e.complex_structure);
            LckCertificate cert = classify_lck(e.algebra, *e.complex_structure, h);
            std::vector<Rational> t_star(e.algebra.dim(), Rational(0));
            t_star.back() = 1;
            bool ok = cert.is_lck && cert.lee && *cert.lee == t_star && cert.lee_closed &&
                      cert.vaisman.value_or(false) && cert.potential &&
                      *cert.potential == 1 && cert.potential_positive &&
                      cert.omega0 == Inertia{k, 1, 0} && cert.lee_ideal_ok.value_or(false) &&
                      cert.quotient_abelian.value_or(false) &&
                      cert.heisenberg_x_line.value_or(false) && cert.green;
            if (!ok) {
                pass = false;
                detail = "k=" + std::to_string(k);
            }
        }
        report(5, "vaisman-certificate", pass,
               pass ? "lee=T*, parallel, potential 1, inertia (k,1,0), quotient abelian" : detail);
    }

    // 6. hodge chasing with exact residuals
    {
        bool pass = true;
        std::string detail;
        for (std::size_t i = 0; i < inputs.size() && pass; ++i) {
            HodgeContext ctx = make_hodge_context(inputs[i].g, inputs[i].j);
            Frame real_fr = make_real_frame(inputs[i].g);
            for (const auto& theta : thetas[i]) {
                auto closed = d_theta_closed_11_forms(inputs[i].g, ctx, theta);
                if (int(closed.size()) > 1) {
                    pass = false;
                    detail = inputs[i].note + ": closed (1,1) space has dim " +
                             std::to_string(closed.size());
                    break;
                }
                if (bott_chern_11_dim(inputs[i].g, ctx, theta) != 0) {
                    pass = false;
                    detail = inputs[i].note + ": bott-chern (1,1) nonzero";
                    break;
                }
                ExtForm theta_form = covector_in_frame(real_fr, theta);
                for (const auto& omega_h : closed) {
                    ExtForm omega = from_frame(ctx.frame, omega_h);
                    auto res = hodge_chase(inputs[i].g, ctx, theta, omega);
                    if (!res) {
                        pass = false;
                        detail = inputs[i].note + ": chase returned no solution";
                        break;
                    }
                    ExtForm r1 = d_theta_form(real_fr, theta_form, res->tau) - omega;
                    ExtForm itau = apply_I(res->tau, inputs[i].j);
                    ExtForm r2 = d_theta_form(real_fr, theta_form, itau);
                    if (!r1.is_zero() || !r2.is_zero()) {
                        pass = false;
                        detail = inputs[i].note + ": nonzero chase residual";
                        break;
                    }
                }
                if (!pass) break;
            }
        }
        report(6, "hodge-chasing", pass,
               pass ? "exact residuals, dim(ker d_theta ∩ Λ^{1,1}) <= 1, bott-chern = 0" : detail);
    }

    // 7. degeneracy of every d-closed real (1,1)-form on h3 x R, tested
    // literally via sigma ^ sigma = 0 on a basis with polarization. The
    // computed space genuinely contains nondegenerate elements (this algebra
    // is the classical symplectic-but-not-kahler example), so the literal
    // check reports its counterexample instead of passing. The kahler
    // obstruction that does hold is recorded by the following line.
    {
        auto heis = make_heisenberg_x_line(1);
        auto basis = closed_real_11_basis(heis.algebra, *heis.complex_structure);
        bool pass = true;
        std::string witness;
        for (std::size_t a = 0; a < basis.size() && pass; ++a)
            for (std::size_t b = a; b < basis.size(); ++b) {
                ExtForm cross = wedge(basis[a], basis[b]) + wedge(basis[b], basis[a]);
                if (!cross.is_zero()) {
                    pass = false;
                    witness = "sigma_" + std::to_string(a) + " ^ sigma_" + std::to_string(b) +
                              " + sigma_" + std::to_string(b) + " ^ sigma_" + std::to_string(a) +
                              " = " +
                              form_to_string(cross, heis.algebra.basis_names());
                    break;
                }
            }
        report(7, "closed-11-degeneracy", pass,
               pass ? "" : "space of dim " + std::to_string(basis.size()) +
                               " contains nondegenerate elements: " + witness);
        // informational: no element of the space is positive (the coefficient
        // on Z^^T^ vanishes identically, so Z is a null direction throughout)
        bool no_positive = true;
        for (const auto& f : basis)
            if (!f.coeff((Mask(1) << 2) | (Mask(1) << 3)).is_zero()) no_positive = false;
        std::cout << "criterion 7 note: no positive element in the closed (1,1) space: "
                  << (no_positive ? "confirmed" : "violated") << "\n";
    }

    // 8. the d theta^c identity and the potential equation on the models
    {
        bool pass = true;
        for (int k = 1; k <= 4 && pass; ++k) {
            auto e = make_heisenberg_x_line(k);
            const int n = e.algebra.dim();
            HermitianMetric h = HermitianMetric::validated(*e.metric, *e.complex_structure);
            if (h.norm2(*e.theta) != 1) {
                pass = false;
                break;
            }
            Frame fr = make_real_frame(e.algebra);
            HodgeContext ctx = make_hodge_context(e.algebra, *e.complex_structure);
            ExtForm omega = fundamental_form(e.algebra, *e.complex_structure, h);
            ExtForm theta_real = covector_in_frame(fr, *e.theta);
            ExtForm theta_c = apply_I(theta_real, *e.complex_structure);
            ExtForm residual = d_form(fr, theta_c) - wedge(theta_real, theta_c) + omega;
            if (!residual.is_zero()) pass = false;
            ExtForm theta_h = covector_in_frame(ctx.frame, *e.theta);
            ExtForm one = ExtForm::constant(n, GQ(1), BasisMode::hodge);
            ExtForm pot = d_theta_form(ctx.frame, theta_h,
                                       apply_diff(DiffKind::dc_theta, ctx.frame, theta_h, one));
            if (!(from_frame(ctx.frame, pot) == omega)) pass = false;
        }
        report(8, "dctheta-identity", pass,
               pass ? "d theta^c - theta^theta^c + omega = 0 and d_t d^c_t(1) = omega, k = 1..4"
                    : "");
    }

    // 9. infrastructure: square-zero operators and file round trips
    {
        bool pass = true;
        std::string detail;
        for (std::size_t i = 0; i < inputs.size() && pass; ++i) {
            try {
                HodgeContext ctx = make_hodge_context(inputs[i].g, inputs[i].j);
                chevalley_d(inputs[i].g).check_square_zero();
                // one sampled twist per input; materialize re-checks square-zero
                twisted_d(inputs[i].g, thetas[i][0]).check_square_zero();
                materialize(DiffKind::delbar_theta, ctx.frame, thetas[i][0]).check_square_zero();
            } catch (const std::exception& e) {
                pass = false;
                detail = inputs[i].note + ": " + e.what();
            }
        }
        for (int k = 1; k <= 4 && pass; ++k) {
            AlgebraInput input = entry_to_input(make_heisenberg_x_line(k));
            std::string text = print_algebra_file(input);
            if (print_algebra_file(parse_algebra_file(text)) != text) {
                pass = false;
                detail = "round trip failed for heisenberg k=" + std::to_string(k);
            }
        }
        {
            AlgebraInput input = entry_to_input(make_iwasawa());
            std::string text = print_algebra_file(input);
            if (print_algebra_file(parse_algebra_file(text)) != text) pass = false;
        }
        report(9, "infrastructure", pass, detail);
    }

    auto total_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    std::cout << "total " << (9 - failures) << "/9 criteria passed in " << total_ms << " ms\n";
    return failures;
}
