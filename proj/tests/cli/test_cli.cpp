#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gharm/io.hpp"
#include "gharm/symbol.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

const fs::path tmp_root = GHARM_TEST_TMP;

int run_cli(const std::string& args, const fs::path& log) {
    const std::string cmd = std::string(GHARM_CLI_PATH) + " " + args + " >" + log.string() +
                            " 2>" + log.string() + ".err";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = tmp_root / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

// small grids keep the CLI tests quick
const std::string grid_block = R"("grid": {"T": 10, "N": 256}, "freq_grid": {"xi_max": 8, "M": 257})";

} // namespace

TEST_SUITE("cli") {

TEST_CASE("solve: prandtl with c1 = 0 succeeds and is deterministic") {
    const fs::path dir = fresh_dir("solve_prandtl");
    write_file(dir / "spec.json", R"({
      "family": "prandtl",
      "coeffs": {"c0": 1.0, "c1": 0.0},
      "rhs": {"kind": "builtin", "name": "gauss"},
      )" + grid_block + "}");

    const int code = run_cli("solve --config " + (dir / "spec.json").string() + " --out " +
                                 (dir / "out1").string(),
                             dir / "run1.log");
    CHECK(code == 0);
    CHECK(fs::exists(dir / "out1" / "solution.csv"));
    CHECK(fs::exists(dir / "out1" / "report.json"));
    CHECK(fs::exists(dir / "out1" / "manifest.json"));

    const json report = json::parse(slurp(dir / "out1" / "report.json"));
    CHECK(report["family"] == "prandtl");
    CHECK(report["freq_residual"].get<double>() < 1e-8);
    CHECK(report.contains("space_residual"));
    CHECK(report["diagnostics"].contains("zygmund_seminorm_half"));

    // the solution is (1-x^2) f; spot check the center row against exp(0) = 1
    const auto csv = gharm::io::read_csv(dir / "out1" / "solution.csv");
    CHECK(csv.coords.size() == 256);

    const int code2 = run_cli("solve --config " + (dir / "spec.json").string() + " --out " +
                                  (dir / "out2").string(),
                              dir / "run2.log");
    CHECK(code2 == 0);
    CHECK(slurp(dir / "out1" / "solution.csv") == slurp(dir / "out2" / "solution.csv"));
    CHECK(slurp(dir / "out1" / "report.json") == slurp(dir / "out2" / "report.json"));
}

TEST_CASE("solve: lb with c0 = 0 exits 2 and names the symbol zero") {
    const fs::path dir = fresh_dir("solve_lb_gate");
    write_file(dir / "spec.json", R"({
      "family": "lb",
      "coeffs": {"c0": 0.0, "c1": 1.0},
      "rhs": {"kind": "builtin", "name": "gauss"},
      )" + grid_block + "}");
    const int code = run_cli("solve --config " + (dir / "spec.json").string() + " --out " +
                                 (dir / "out").string(),
                             dir / "run.log");
    CHECK(code == 2);
    const json report = json::parse(slurp(dir / "out" / "report.json"));
    CHECK(report["error"] == "not_elliptic");
    CHECK(std::abs(report["xi"].get<double>()) <= 0.01);
}

TEST_CASE("solve: ide with a kernel term round-trips the JSON schema") {
    const fs::path dir = fresh_dir("solve_ide_ok");
    write_file(dir / "spec.json", R"({
      "family": "ide",
      "coeffs": {"c": [3.0, 1.0], "d": [1.0, 0.0], "mk": [0, 0], "nk": [0, 0]},
      "kernels": [{"kind": "builtin", "name": "sech"}],
      "rhs": {"kind": "builtin", "name": "gauss"},
      )" + grid_block + "}");
    const int code = run_cli("solve --config " + (dir / "spec.json").string() + " --out " +
                                 (dir / "out").string(),
                             dir / "run.log");
    CHECK(code == 0);
    const json report = json::parse(slurp(dir / "out" / "report.json"));
    CHECK(report["family"] == "ide");
    CHECK(report["freq_residual"].get<double>() < 1e-6);
}

TEST_CASE("solve: ide order violation exits 3") {
    const fs::path dir = fresh_dir("solve_ide_bad");
    write_file(dir / "spec.json", R"({
      "family": "ide",
      "coeffs": {"c": [1.0, 1.0], "d": [1.0, 0.0], "mk": [1, 0], "nk": [1, 0]},
      "kernels": [{"kind": "builtin", "name": "sech"}],
      "rhs": {"kind": "builtin", "name": "gauss"},
      )" + grid_block + "}");
    const int code = run_cli("solve --config " + (dir / "spec.json").string() + " --out " +
                                 (dir / "out").string(),
                             dir / "run.log");
    CHECK(code == 3);
    CHECK(slurp(dir / "run.log.err").find("order hypothesis violated") != std::string::npos);
}

TEST_CASE("solve: malformed JSON exits 3 with line/column diagnostics") {
    const fs::path dir = fresh_dir("solve_badjson");
    write_file(dir / "spec.json", "{\n  \"family\": \"prandtl\",\n  oops\n}\n");
    const int code = run_cli("solve --config " + (dir / "spec.json").string() + " --out " +
                                 (dir / "out").string(),
                             dir / "run.log");
    CHECK(code == 3);
    const std::string err = slurp(dir / "run.log.err");
    CHECK(err.find("line 3") != std::string::npos);
    CHECK(err.find("column") != std::string::npos);
}

TEST_CASE("symbol: table values match in-process evaluation") {
    const fs::path dir = fresh_dir("symbol_prandtl");
    write_file(dir / "spec.json", R"({
      "family": "prandtl",
      "coeffs": {"c0": 1.0, "c1": 1.0},
      "table": {"points": [-2.0, 0.0, 2.0]},
      )" + grid_block + "}");
    const int code = run_cli("symbol --config " + (dir / "spec.json").string() + " --out " +
                                 (dir / "out").string(),
                             dir / "run.log");
    CHECK(code == 0);
    const auto csv = gharm::io::read_csv(dir / "out" / "symbol.csv");
    REQUIRE(csv.coords.size() == 3);
    const gharm::Symbol p = gharm::Symbol::prandtl({1.0, 0.0}, {1.0, 0.0});
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(std::abs(csv.values[i] - p.eval(csv.coords[i])) < 1e-14);
    const json diag = json::parse(slurp(dir / "out" / "diagnostics.json"));
    CHECK(diag["verdict"] == "multiplier");
    CHECK(diag.contains("margin"));
    CHECK(diag.contains("M0"));
    CHECK(diag.contains("M1"));
    CHECK(diag.contains("tv"));
}

TEST_CASE("symbol: coth is not a multiplier; constants have zero variation") {
    const fs::path dir = fresh_dir("symbol_coth");
    write_file(dir / "coth.json", R"({"family": "coth", )" + grid_block + "}");
    CHECK(run_cli("symbol --config " + (dir / "coth.json").string() + " --out " +
                      (dir / "out_coth").string(),
                  dir / "run1.log") == 0);
    const json diag = json::parse(slurp(dir / "out_coth" / "diagnostics.json"));
    CHECK(diag["verdict"] == "not a multiplier");

    write_file(dir / "const.json", R"({"family": "constant", "coeffs": {"c0": [2.0, 1.0]}, )" +
                                       grid_block + "}");
    CHECK(run_cli("symbol --config " + (dir / "const.json").string() + " --out " +
                      (dir / "out_const").string(),
                  dir / "run2.log") == 0);
    const json cdiag = json::parse(slurp(dir / "out_const" / "diagnostics.json"));
    CHECK(cdiag["tv"].get<double>() < 1e-12);
    CHECK(cdiag["verdict"] == "multiplier");
}

TEST_CASE("transform: forward of a builtin writes a spectrum") {
    const fs::path dir = fresh_dir("transform_fwd");
    write_file(dir / "spec.json", R"({
      "direction": "forward",
      "input": {"kind": "builtin", "name": "sech"},
      )" + grid_block + "}");
    CHECK(run_cli("transform --config " + (dir / "spec.json").string() + " --out " +
                      (dir / "out").string(),
                  dir / "run.log") == 0);
    const auto csv = gharm::io::read_csv(dir / "out" / "spectrum.csv");
    CHECK(csv.coords.size() == 257);
    // center row is the total mass, pi
    CHECK(std::abs(csv.values[128] - gharm::complex(3.14159265358979, 0.0)) < 1e-6);
}

TEST_CASE("transform: file round trip through forward then inverse") {
    const fs::path dir = fresh_dir("transform_roundtrip");
    write_file(dir / "fwd.json", R"({
      "direction": "forward",
      "input": {"kind": "builtin", "name": "gauss"},
      )" + grid_block + "}");
    REQUIRE(run_cli("transform --config " + (dir / "fwd.json").string() + " --out " +
                        (dir / "out_fwd").string(),
                    dir / "run1.log") == 0);
    write_file(dir / "inv.json", R"({
      "direction": "inverse",
      "input": {"kind": "spectrum", "path": ")" +
                                      (dir / "out_fwd" / "spectrum.csv").string() + R"("},
      )" + grid_block + "}");
    REQUIRE(run_cli("transform --config " + (dir / "inv.json").string() + " --out " +
                        (dir / "out_inv").string(),
                    dir / "run2.log") == 0);
    const auto back = gharm::io::read_csv(dir / "out_inv" / "function.csv");
    REQUIRE(back.values.size() == 256);
    double worst = 0.0;
    for (std::size_t j = 0; j < back.values.size(); ++j)
        worst = std::max(worst,
                         std::abs(back.values[j] - gharm::complex(std::exp(-back.coords[j] * back.coords[j]), 0.0)));
    CHECK(worst < 1e-8);
}

TEST_CASE("verify: empty selection warns and exits 0") {
    const fs::path dir = fresh_dir("verify_empty");
    const int code = run_cli("verify --checks \"\"", dir / "run.log");
    CHECK(code == 0);
    CHECK(slurp(dir / "run.log").find("no checks selected") != std::string::npos);
}

TEST_CASE("verify: filtered subset passes on the default grid") {
    const fs::path dir = fresh_dir("verify_subset");
    const int code = run_cli("verify --checks roundtrip,parseval", dir / "run.log");
    CHECK(code == 0);
    const std::string log = slurp(dir / "run.log");
    CHECK(log.find("roundtrip_sech") != std::string::npos);
    CHECK(log.find("pair_inv_y_coth") == std::string::npos);
}

TEST_CASE("verify: degraded grid reports failures with exit 1") {
    const fs::path dir = fresh_dir("verify_tiny");
    const int code = run_cli("verify --grid-N 32 --checks pair", dir / "run.log");
    CHECK(code == 1);
    CHECK(slurp(dir / "run.log").find("FAIL") != std::string::npos);
}

} // TEST_SUITE
