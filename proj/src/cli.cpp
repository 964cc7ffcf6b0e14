#include "nilcoh/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nilcoh/algebra_file.hpp"
#include "nilcoh/errors.hpp"

namespace nilcoh {

namespace {

constexpr const char* kConventions = "wedge=determinant omega=h(I.,.) dc=i(del-delbar)";

struct Report {
    std::string command;
    std::string format = "lines";
    std::vector<std::string> rows;

    void add(const std::string& line) { rows.push_back(line); }
    void print(std::ostream& out) const {
        if (format == "text") {
            out << "nilcoh " << command << "\n";
            out << "# " << kConventions << "\n";
            for (const auto& r : rows) out << "  " << r << "\n";
        } else {
            out << "# " << kConventions << "\n";
            for (const auto& r : rows) out << r << "\n";
        }
    }
};

std::string read_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw Error("IOError", "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

std::vector<Rational> parse_theta_arg(const std::string& text, int dim) {
    std::istringstream in(text);
    std::vector<Rational> theta;
    for (std::string tok; in >> tok;) {
        auto r = parse_rational(tok);
        if (!r) throw Error("UsageError", "malformed theta component '" + tok + "'");
        theta.push_back(*r);
    }
    if (int(theta.size()) != dim)
        throw Error("UsageError", "theta needs " + std::to_string(dim) + " components");
    return theta;
}

std::vector<Rational> resolve_theta(const std::string& arg, const AlgebraInput& input) {
    if (!arg.empty()) return parse_theta_arg(arg, input.algebra.dim());
    if (input.theta) return *input.theta;
    throw Error("UsageError", "no theta given (use --theta or a theta line in the file)");
}

const ComplexStructure& need_j(const AlgebraInput& input) {
    if (!input.complex_structure) throw Error("UsageError", "input has no complex structure");
    return *input.complex_structure;
}

HermitianMetric need_metric(const AlgebraInput& input) {
    if (!input.metric) throw Error("UsageError", "input has no metric");
    return HermitianMetric::validated(*input.metric, need_j(input));
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

void append_certificate(Report& rep, const LckCertificate& cert,
                        const std::vector<std::string>& names) {
    rep.add("omega " + form_to_string(cert.omega, names));
    if (!cert.lee) {
        rep.add("lee none");
        rep.add("is_lck false");
        return;
    }
    ExtForm lee(cert.omega.space_dim(), 1, BasisMode::real_dual);
    for (std::size_t i = 0; i < cert.lee->size(); ++i)
        lee.add_term(Mask(1) << i, GQ((*cert.lee)[i]));
    rep.add("lee " + form_to_string(lee, names));
    rep.add("is_lck " + bool_str(cert.is_lck));
    rep.add("lee_closed " + bool_str(cert.lee_closed));
    if (!cert.is_lck) return;
    if (cert.kahler) {
        rep.add("kahler true");
        return;
    }
    rep.add("kahler false");
    rep.add("lee_unit_norm " + bool_str(cert.lee_unit_norm));
    rep.add("potential_constant " + (cert.potential ? to_string(*cert.potential) : "none"));
    rep.add("potential_positive " + bool_str(cert.potential_positive));
    rep.add("is_vaisman " + bool_str(cert.vaisman.value_or(false)));
    if (cert.omega0)
        rep.add("omega0_inertia " + std::to_string(cert.omega0->pos) + " " +
                std::to_string(cert.omega0->zero) + " " + std::to_string(cert.omega0->neg));
    rep.add("dctheta_identity " + bool_str(cert.dctheta_identity));
    rep.add("lee_ideal_ok " + bool_str(cert.lee_ideal_ok.value_or(false)));
    rep.add("quotient_abelian " + bool_str(cert.quotient_abelian.value_or(false)));
    rep.add("green " + bool_str(cert.green));
    rep.add("is_heisenberg_x_line " + bool_str(cert.heisenberg_x_line.value_or(false)));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact cohomology of nilpotent Lie algebras with complex structures"};
    app.require_subcommand(1);

    std::string format = "lines";
    app.add_option("--format", format, "output format: lines | text")
        ->check(CLI::IsMember({"lines", "text"}));

    std::string file, theta_arg, omega_arg, export_path, catalog_name;
    int p_row = 0, catalog_n = 1;

    auto add_input = [&](CLI::App* cmd) { cmd->add_option("file", file, "algebra file ('-' = stdin)"); };

    CLI::App* c_validate = app.add_subcommand("validate", "check a file and its algebra axioms");
    add_input(c_validate);
    CLI::App* c_betti = app.add_subcommand("betti", "cohomology dimensions of d");
    add_input(c_betti);
    CLI::App* c_tbetti = app.add_subcommand("twisted-betti", "cohomology dimensions of d_theta");
    add_input(c_tbetti);
    c_tbetti->add_option("--theta", theta_arg, "Lee covector, real dual coordinates");
    CLI::App* c_dolb = app.add_subcommand("dolbeault", "H^q(Λ^{p,*}, delbar_theta)");
    add_input(c_dolb);
    c_dolb->add_option("--theta", theta_arg, "Lee covector");
    c_dolb->add_option("--p", p_row, "holomorphic row (default 0)");
    CLI::App* c_spectral = app.add_subcommand("spectral", "filtration, E0 and E1 of the twisted row");
    add_input(c_spectral);
    c_spectral->add_option("--theta", theta_arg, "Lee covector");
    CLI::App* c_bc = app.add_subcommand("bott-chern", "twisted Bott-Chern H^{1,1} dimension");
    add_input(c_bc);
    c_bc->add_option("--theta", theta_arg, "Lee covector");
    CLI::App* c_chase = app.add_subcommand("chase", "solve omega = d_theta(tau), d_theta(I tau) = 0");
    add_input(c_chase);
    c_chase->add_option("--theta", theta_arg, "Lee covector");
    c_chase->add_option("--omega", omega_arg, "(1,1)-form in real dual coordinates")->required();
    CLI::App* c_lck = app.add_subcommand("lck", "fundamental form and Lee form of the metric");
    add_input(c_lck);
    CLI::App* c_classify = app.add_subcommand("classify", "full verification chain");
    add_input(c_classify);
    CLI::App* c_catalog = app.add_subcommand("catalog", "print a built-in algebra");
    c_catalog->add_option("name", catalog_name, "heisenberg | kodaira-thurston | abelian | iwasawa")
        ->required();
    c_catalog->add_option("--n", catalog_n, "pairs for heisenberg, dimension for abelian");
    c_catalog->add_flag_callback("--export", [] {}, "write the file format (default behavior)");
    c_catalog->add_option("--out", export_path, "write to a path instead of stdout");

    std::vector<std::string> argv_like = args;
    try {
        std::vector<const char*> argv;
        argv.push_back("nilcoh");
        for (const auto& a : argv_like) argv.push_back(a.c_str());
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    Report rep;
    rep.format = format;
    try {
        if (c_catalog->parsed()) {
            rep.command = "catalog";
            auto entry = catalog_by_name(catalog_name, catalog_n);
            if (!entry) throw Error("UsageError", "unknown catalog name '" + catalog_name + "'");
            std::string text = print_algebra_file(entry_to_input(*entry));
            if (export_path.empty()) {
                out << text;
            } else {
                std::ofstream f(export_path);
                if (!f) throw Error("IOError", "cannot write '" + export_path + "'");
                f << text;
            }
            return 0;
        }

        AlgebraInput input = parse_algebra_file(read_input(file, in));
        const auto& names = input.algebra.basis_names();

        if (c_validate->parsed()) {
            rep.command = "validate";
            rep.add("valid true");
            rep.add("dim " + std::to_string(input.algebra.dim()));
            rep.add("nilpotent " + bool_str(is_nilpotent(input.algebra)));
            if (input.complex_structure)
                rep.add("integrable " +
                        bool_str(is_integrable(input.algebra, *input.complex_structure)));
            if (input.metric) {
                need_metric(input);
                rep.add("metric_ok true");
            }
        } else if (c_betti->parsed()) {
            rep.command = "betti";
            auto b = betti(input.algebra);
            for (std::size_t k = 0; k < b.size(); ++k)
                rep.add("b" + std::to_string(k) + " " + std::to_string(b[k]));
        } else if (c_tbetti->parsed()) {
            rep.command = "twisted-betti";
            auto theta = resolve_theta(theta_arg, input);
            auto b = twisted_betti(input.algebra, theta);
            for (std::size_t k = 0; k < b.size(); ++k)
                rep.add("b" + std::to_string(k) + " " + std::to_string(b[k]));
        } else if (c_dolb->parsed()) {
            rep.command = "dolbeault";
            auto theta = resolve_theta(theta_arg, input);
            auto h = twisted_dolbeault_pq(input.algebra, need_j(input), theta, p_row);
            for (std::size_t q = 0; q < h.size(); ++q)
                rep.add("H " + std::to_string(p_row) + "," + std::to_string(q) + " " +
                        std::to_string(h[q]));
        } else if (c_spectral->parsed()) {
            rep.command = "spectral";
            auto theta = resolve_theta(theta_arg, input);
            SpectralPages sp = spectral_pages(input.algebra, need_j(input), theta);
            rep.add("filtration_levels " + std::to_string(sp.levels));
            rep.add("max_excess " + std::to_string(sp.max_excess));
            rep.add("annihilator_shift_ok " + bool_str(sp.annihilator_shift_ok));
            rep.add("e0_equals_theta_wedge " + bool_str(sp.e0_equals_mult));
            for (int p = 0; p <= sp.max_excess; ++p) {
                std::string line = "e1 " + std::to_string(p);
                for (int v : sp.e1[p]) line += " " + std::to_string(v);
                rep.add(line);
            }
            rep.add("e1_total " + std::to_string(sp.e1_total));
        } else if (c_bc->parsed()) {
            rep.command = "bott-chern";
            auto theta = resolve_theta(theta_arg, input);
            rep.add("bott_chern_11 " +
                    std::to_string(bott_chern_11_dim(input.algebra, need_j(input), theta)));
        } else if (c_chase->parsed()) {
            rep.command = "chase";
            auto theta = resolve_theta(theta_arg, input);
            auto omega = parse_form(omega_arg, names, BasisMode::real_dual);
            if (!omega) throw Error("UsageError", "malformed omega '" + omega_arg + "'");
            auto res = hodge_chase(input.algebra, need_j(input), theta, *omega);
            if (!res) {
                rep.add("solution none");
                rep.print(out);
                return 1;
            }
            rep.add("tau " + form_to_string(res->tau, names));
            rep.add("constant " + (res->constant ? to_string(*res->constant) : "none"));
        } else if (c_lck->parsed()) {
            rep.command = "lck";
            HermitianMetric h = need_metric(input);
            ExtForm omega = fundamental_form(input.algebra, need_j(input), h);
            rep.add("omega " + form_to_string(omega, names));
            auto lee = extract_lee(input.algebra, omega);
            if (!lee) {
                rep.add("lee none");
                rep.add("is_lck false");
            } else {
                ExtForm lf(input.algebra.dim(), 1, BasisMode::real_dual);
                for (std::size_t i = 0; i < lee->size(); ++i) lf.add_term(Mask(1) << i, GQ((*lee)[i]));
                rep.add("lee " + form_to_string(lf, names));
                rep.add("is_lck true");
            }
        } else if (c_classify->parsed()) {
            rep.command = "classify";
            LckCertificate cert = classify_lck(input.algebra, need_j(input), need_metric(input));
            append_certificate(rep, cert, names);
        }
    } catch (const Error& e) {
        err << "error " << e.kind() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    rep.print(out);
    return 0;
}

}  // namespace nilcoh
