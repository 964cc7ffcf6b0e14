#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "nilcoh/cli.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = nilcoh::run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        if (l == line) return true;
    return false;
}

const char* kAbelian2 =
    "dim 2\n"
    "basis X Y\n";

}  // namespace

TEST_CASE("catalog export parses back through the pipeline") {
    RunResult cat = run({"catalog", "heisenberg", "--n", "1"});
    REQUIRE(cat.code == 0);
    CHECK(cat.out.find("dim 4") == 0);

    RunResult cls = run({"classify"}, cat.out);
    REQUIRE(cls.code == 0);
    CHECK(has_line(cls.out, "potential_constant 1"));
    CHECK(has_line(cls.out, "is_heisenberg_x_line true"));
    CHECK(has_line(cls.out, "is_vaisman true"));
    CHECK(has_line(cls.out, "green true"));
}

TEST_CASE("betti on the abelian plane") {
    RunResult r = run({"betti"}, kAbelian2);
    REQUIRE(r.code == 0);
    CHECK(has_line(r.out, "b0 1"));
    CHECK(has_line(r.out, "b1 2"));
    CHECK(has_line(r.out, "b2 1"));
}

TEST_CASE("dolbeault vanishing through the cli") {
    RunResult cat = run({"catalog", "kodaira-thurston"});
    RunResult r = run({"dolbeault", "--theta", "0 0 0 1"}, cat.out);
    REQUIRE(r.code == 0);
    CHECK(has_line(r.out, "H 0,0 0"));
    CHECK(has_line(r.out, "H 0,1 0"));
    CHECK(has_line(r.out, "H 0,2 0"));
}

TEST_CASE("theta defaults to the file value") {
    RunResult cat = run({"catalog", "heisenberg", "--n", "1"});
    RunResult r = run({"twisted-betti"}, cat.out);
    REQUIRE(r.code == 0);
    for (int k = 0; k <= 4; ++k) CHECK(has_line(r.out, "b" + std::to_string(k) + " 0"));
}

TEST_CASE("spectral and bott-chern reports") {
    RunResult cat = run({"catalog", "iwasawa"});
    RunResult sp = run({"spectral", "--theta", "1 0 0 0 0 0"}, cat.out);
    REQUIRE(sp.code == 0);
    CHECK(has_line(sp.out, "filtration_levels 2"));
    CHECK(has_line(sp.out, "e0_equals_theta_wedge true"));
    CHECK(has_line(sp.out, "annihilator_shift_ok true"));
    CHECK(has_line(sp.out, "e1_total 0"));

    RunResult bc = run({"bott-chern", "--theta", "1 0 0 0 0 0"}, cat.out);
    REQUIRE(bc.code == 0);
    CHECK(has_line(bc.out, "bott_chern_11 0"));
}

TEST_CASE("chase through the cli") {
    RunResult cat = run({"catalog", "heisenberg", "--n", "1"});
    RunResult r =
        run({"chase", "--theta", "0 0 0 1", "--omega", "1 X1^Y1^ -1 Z^T^"}, cat.out);
    REQUIRE(r.code == 0);
    CHECK(has_line(r.out, "tau -1 Z^"));
    CHECK(has_line(r.out, "constant 1"));
}

TEST_CASE("validate reports diagnostics and exit codes") {
    RunResult ok = run({"validate"}, kAbelian2);
    CHECK(ok.code == 0);
    CHECK(has_line(ok.out, "valid true"));
    CHECK(has_line(ok.out, "nilpotent true"));

    RunResult bad = run({"validate"}, "dim 3\nbasis X Y Z\nbracket X Y -> 1 Z\n"
                                      "bracket X Z -> 1 X\n");
    CHECK(bad.code == 1);
    CHECK(bad.err.find("Jacobi") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("missing theta is a reported error") {
    RunResult r = run({"twisted-betti"}, kAbelian2);
    CHECK(r.code == 1);
    CHECK(r.err.find("theta") != std::string::npos);
}

TEST_CASE("lck summary") {
    RunResult cat = run({"catalog", "heisenberg", "--n", "2"});
    RunResult r = run({"lck"}, cat.out);
    REQUIRE(r.code == 0);
    CHECK(has_line(r.out, "is_lck true"));
    CHECK(has_line(r.out, "lee 1 T^"));
}

TEST_CASE("output is deterministic across runs") {
    RunResult cat = run({"catalog", "iwasawa"});
    RunResult a = run({"spectral", "--theta", "0 1 0 0 0 0"}, cat.out);
    RunResult b = run({"spectral", "--theta", "0 1 0 0 0 0"}, cat.out);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
}

TEST_CASE("text format carries the conventions header") {
    RunResult r = run({"--format", "text", "betti"}, kAbelian2);
    REQUIRE(r.code == 0);
    CHECK(r.out.find("wedge=determinant omega=h(I.,.) dc=i(del-delbar)") != std::string::npos);
}
