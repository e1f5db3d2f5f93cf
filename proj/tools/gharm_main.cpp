// Command-line front end: solve equation specs, evaluate transforms and
// symbols, run the verification suite.  Exit codes: 0 success, 1 verification
// failure, 2 symbol not elliptic, 3 input/validation error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gharm/equations.hpp"
#include "gharm/errors.hpp"
#include "gharm/io.hpp"
#include "gharm/operators.hpp"
#include "gharm/spaces.hpp"
#include "gharm/symbol.hpp"
#include "gharm/transform.hpp"
#include "gharm/verify.hpp"

namespace fs = std::filesystem;
using gharm::complex;
using json = nlohmann::json;

namespace {

struct Options {
    std::string config;
    std::string out_dir = ".";
    std::optional<double> grid_T;
    std::optional<int> grid_N;
    std::optional<double> xi_max;
    std::optional<int> xi_N;
    std::optional<double> tol;
    std::optional<std::string> checks; // comma-separated name filter for verify
};

gharm::LineGrid resolve_grid(const Options& opt, const json* cfg) {
    double T = 20.0;
    int N = 4096;
    if (cfg && cfg->contains("grid")) {
        const json& g = (*cfg)["grid"];
        if (g.contains("T")) T = g["T"].get<double>();
        if (g.contains("N")) N = g["N"].get<int>();
    }
    if (opt.grid_T) T = *opt.grid_T;
    if (opt.grid_N) N = *opt.grid_N;
    if (N > (1 << 20)) throw gharm::ValidationError("grid N exceeds the sanity bound 2^20");
    return gharm::LineGrid(T, N);
}

gharm::FreqGrid resolve_freqs(const Options& opt, const json* cfg) {
    double Xi = 8.0;
    int M = 1025;
    if (cfg && cfg->contains("freq_grid")) {
        const json& g = (*cfg)["freq_grid"];
        if (g.contains("xi_max")) Xi = g["xi_max"].get<double>();
        if (g.contains("M")) M = g["M"].get<int>();
    }
    if (opt.xi_max) Xi = *opt.xi_max;
    if (opt.xi_N) M = *opt.xi_N;
    if (M > (1 << 20)) throw gharm::ValidationError("frequency grid M exceeds the sanity bound 2^20");
    return gharm::FreqGrid(Xi, M);
}

gharm::SampledFunction load_rhs(const json& rhs, const gharm::LineGrid& grid) {
    const std::string kind = rhs.at("kind").get<std::string>();
    if (kind == "builtin")
        return gharm::builtin_function(rhs.at("name").get<std::string>(), grid);
    if (kind == "samples") {
        const auto data = gharm::io::read_csv(rhs.at("path").get<std::string>());
        if (static_cast<int>(data.values.size()) != grid.count)
            throw gharm::ValidationError("samples row count does not match grid N");
        for (int j = 0; j < grid.count; ++j)
            if (std::abs(data.coords[j] - grid.node(j)) > 1e-9)
                throw gharm::ValidationError("sample coordinates do not match the grid nodes (t)");
        return gharm::SampledFunction(grid, data.values);
    }
    throw gharm::ValidationError("rhs kind must be \"builtin\" or \"samples\"");
}

void write_manifest(const fs::path& out, const std::string& command, const Options& opt,
                    const gharm::LineGrid& grid, const gharm::FreqGrid& freqs,
                    const std::vector<std::string>& outputs) {
    json m;
    m["tool"] = "gharm 0.1.0";
    m["command"] = command;
    m["config"] = opt.config;
    m["grid"] = {{"T", grid.half_width}, {"N", grid.count}};
    m["freq_grid"] = {{"xi_max", freqs.xi_max}, {"M", freqs.count}};
    m["outputs"] = outputs;
    std::ofstream f(out / "manifest.json");
    f << m.dump(2) << '\n';
}

std::vector<double> solution_coordinates(const std::string& family, const gharm::LineGrid& grid) {
    std::vector<double> xs(grid.count);
    for (int j = 0; j < grid.count; ++j) {
        const double x = std::tanh(grid.node(j));
        xs[j] = family == "lb" ? 0.5 * (1.0 + x) : x;
    }
    return xs;
}

int cmd_solve(const Options& opt) {
    const json cfg = gharm::io::parse_json_file(opt.config);
    const gharm::LineGrid grid = resolve_grid(opt, &cfg);
    const gharm::FreqGrid freqs = resolve_freqs(opt, &cfg);
    const std::string family = cfg.at("family").get<std::string>();
    const json& coeffs = cfg.at("coeffs");
    const fs::path out(opt.out_dir);
    fs::create_directories(out);

    auto cplx = [&coeffs](const char* key, complex dflt = complex(0.0, 0.0)) {
        return coeffs.contains(key) ? gharm::io::parse_complex(coeffs[key]) : dflt;
    };

    try {
        gharm::SolveReport rep;
        if (family == "prandtl") {
            rep = gharm::solve_prandtl({cplx("c0"), cplx("c1"), load_rhs(cfg.at("rhs"), grid)},
                                       freqs);
        } else if (family == "tricomi") {
            rep = gharm::solve_tricomi(
                {cplx("c0"), cplx("c1"), cplx("c2"), load_rhs(cfg.at("rhs"), grid)}, freqs);
        } else if (family == "lb") {
            gharm::LBSpec spec{cplx("c0"), cplx("c1"),
                               load_rhs(cfg.at("rhs"), grid).values};
            rep = gharm::solve_lb(spec, grid, freqs);
        } else if (family == "ide") {
            gharm::IDESpec spec;
            for (const json& v : coeffs.at("c")) spec.c.push_back(gharm::io::parse_complex(v));
            for (const json& v : coeffs.at("d")) spec.d.push_back(gharm::io::parse_complex(v));
            spec.mk = coeffs.value("mk", std::vector<int>(spec.c.size(), 0));
            spec.nk = coeffs.value("nk", std::vector<int>(spec.c.size(), 0));
            if (cfg.contains("kernels"))
                for (const json& k : cfg["kernels"]) spec.kernels.push_back(load_rhs(k, grid));
            spec.w = load_rhs(cfg.at("rhs"), grid);
            rep = gharm::solve_ide(spec, freqs);
        } else {
            throw gharm::ValidationError("unknown family: " + family);
        }

        if (family == "prandtl") {
            gharm::PrandtlSpec spec{cplx("c0"), cplx("c1"), load_rhs(cfg.at("rhs"), grid)};
            rep.space_residual = gharm::prandtl_space_residual(spec, rep.solution, 33, freqs);
        } else if (family == "tricomi") {
            gharm::TricomiSpec spec{cplx("c0"), cplx("c1"), cplx("c2"),
                                    load_rhs(cfg.at("rhs"), grid)};
            rep.space_residual = gharm::tricomi_space_residual(spec, rep.g_side_solution, 33);
        }

        gharm::io::write_csv(out / "solution.csv", solution_coordinates(family, grid),
                             rep.solution.values);
        json report = gharm::io::report_to_json(rep, family);
        std::ofstream rf(out / "report.json");
        rf << report.dump(2) << '\n';
        write_manifest(out, "solve", opt, grid, freqs, {"solution.csv", "report.json"});
        std::cout << "solved " << family << ": margin " << rep.symbol_margin << ", freq residual "
                  << rep.freq_residual << "\n";
        return 0;
    } catch (const gharm::NotElliptic& e) {
        json report = {{"error", "not_elliptic"},
                       {"family", family},
                       {"xi", e.xi_at_min()},
                       {"margin", e.margin()},
                       {"message", e.what()}};
        std::ofstream rf(out / "report.json");
        rf << report.dump(2) << '\n';
        write_manifest(out, "solve", opt, grid, freqs, {"report.json"});
        std::cerr << "not elliptic: " << e.what() << "\n";
        return 2;
    }
}

gharm::Symbol symbol_from_config(const json& cfg, const gharm::LineGrid& grid, double& weight) {
    const std::string family = cfg.at("family").get<std::string>();
    const json coeffs = cfg.value("coeffs", json::object());
    auto cplx = [&coeffs](const char* key, complex dflt = complex(0.0, 0.0)) {
        return coeffs.contains(key) ? gharm::io::parse_complex(coeffs[key]) : dflt;
    };
    weight = 0.0;
    if (family == "prandtl") {
        weight = 1.0;
        return gharm::prandtl_symbol(cplx("c0"), cplx("c1"));
    }
    if (family == "tricomi") return gharm::tricomi_symbol(cplx("c0"), cplx("c1"), cplx("c2"));
    if (family == "lb") return gharm::lb_symbol(cplx("c0"), cplx("c1"));
    if (family == "tanh_family")
        return gharm::Symbol::tanh_family(cplx("c0"), cplx("c1"), cplx("c2"),
                                          coeffs.value("h", 3.141592653589793));
    if (family == "coth") return gharm::Symbol::coth();
    if (family == "constant") return gharm::Symbol::constant(cplx("c0", complex(1.0, 0.0)));
    if (family == "bessel") {
        weight = coeffs.value("s", 1.0);
        return gharm::Symbol::bessel_weight(coeffs.value("s", 1.0));
    }
    if (family == "polynomial") {
        std::vector<complex> cs;
        for (const json& v : coeffs.at("c")) cs.push_back(gharm::io::parse_complex(v));
        gharm::Symbol s = gharm::Symbol::polynomial(cs);
        weight = s.weight_order();
        return s;
    }
    if (family == "kernel_transform") {
        const auto data = gharm::io::read_csv(coeffs.at("path").get<std::string>());
        if (static_cast<int>(data.values.size()) != grid.count)
            throw gharm::ValidationError("kernel sample count does not match grid N");
        return gharm::Symbol::kernel_transform(gharm::SampledFunction(grid, data.values));
    }
    throw gharm::ValidationError("unknown symbol family: " + family);
}

int cmd_symbol(const Options& opt) {
    const json cfg = gharm::io::parse_json_file(opt.config);
    const gharm::LineGrid grid = resolve_grid(opt, &cfg);
    const gharm::FreqGrid freqs = resolve_freqs(opt, &cfg);
    double weight = 0.0;
    const gharm::Symbol sym = symbol_from_config(cfg, grid, weight);
    if (cfg.contains("weight_order")) weight = cfg["weight_order"].get<double>();

    std::vector<double> xs;
    if (cfg.contains("table") && cfg["table"].contains("points")) {
        for (const json& v : cfg["table"]["points"]) xs.push_back(v.get<double>());
    } else {
        for (int k = 0; k < freqs.count; ++k) xs.push_back(freqs.node(k));
    }
    std::vector<complex> vals(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        try {
            vals[i] = sym.eval(xs[i]);
        } catch (const std::domain_error&) {
            vals[i] = complex(std::numeric_limits<double>::infinity(), 0.0);
        }
    }

    const fs::path out(opt.out_dir);
    fs::create_directories(out);
    gharm::io::write_csv(out / "symbol.csv", xs, vals);
    const gharm::MultiplierReport rep = gharm::multiplier_diagnostics(sym, weight);
    std::ofstream df(out / "diagnostics.json");
    df << gharm::io::multiplier_report_to_json(rep).dump(2) << '\n';
    write_manifest(out, "symbol", opt, grid, freqs, {"symbol.csv", "diagnostics.json"});
    std::cout << "symbol diagnostics: margin " << rep.margin << ", verdict " << rep.verdict << "\n";
    return 0;
}

int cmd_transform(const Options& opt) {
    const json cfg = gharm::io::parse_json_file(opt.config);
    const gharm::LineGrid grid = resolve_grid(opt, &cfg);
    const gharm::FreqGrid freqs = resolve_freqs(opt, &cfg);
    const std::string direction = cfg.value("direction", "forward");
    const fs::path out(opt.out_dir);
    fs::create_directories(out);
    gharm::WarningLog warnings;

    if (direction == "forward" || direction == "forward_pv") {
        const gharm::SampledFunction f = load_rhs(cfg.at("input"), grid);
        const gharm::Spectrum S = direction == "forward"
                                      ? gharm::forward(f, freqs, &warnings)
                                      : gharm::forward_pv(f, freqs, &warnings);
        gharm::io::write_spectrum_csv(out / "spectrum.csv", S);
        write_manifest(out, "transform", opt, grid, freqs, {"spectrum.csv"});
    } else if (direction == "inverse") {
        const auto data = gharm::io::read_csv(cfg.at("input").at("path").get<std::string>());
        if (static_cast<int>(data.values.size()) != freqs.count)
            throw gharm::ValidationError("spectrum row count does not match frequency grid M");
        const gharm::Spectrum S(freqs, data.values);
        const gharm::SampledFunction f = gharm::inverse(S, grid, &warnings);
        gharm::io::write_function_csv(out / "function.csv", f);
        write_manifest(out, "transform", opt, grid, freqs, {"function.csv"});
    } else {
        throw gharm::ValidationError("direction must be forward, forward_pv or inverse");
    }
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    return 0;
}

int cmd_verify(const Options& opt) {
    gharm::VerifyConfig cfg;
    if (!opt.config.empty()) {
        const json j = gharm::io::parse_json_file(opt.config);
        cfg.grid = resolve_grid(opt, &j);
        cfg.freqs = resolve_freqs(opt, &j);
    } else {
        cfg.grid = resolve_grid(opt, nullptr);
        cfg.freqs = resolve_freqs(opt, nullptr);
    }
    if (opt.checks) {
        std::vector<std::string> names;
        std::stringstream ss(*opt.checks);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) names.push_back(item);
        cfg.filter = names;
    }

    const auto results = gharm::run_acceptance_checks(cfg);
    if (results.empty()) {
        std::cout << "warning: no checks selected\n";
        return 0;
    }

    std::printf("%-36s %14s %14s %10s  %s\n", "check", "expected", "got", "tolerance", "status");
    int failures = 0;
    for (const auto& r : results) {
        const char* status = r.pass ? "pass" : "FAIL";
        if (!r.pass) ++failures;
        const double expected = r.kind == gharm::CheckResult::Kind::max_error ? 0.0 : r.expected;
        std::printf("%-36s %14.6g %14.6g %10.2g  %s\n", r.name.c_str(), expected, r.got, r.tol,
                    status);
    }
    std::printf("%d/%zu checks passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"harmonic analysis and convolution-equation solvers on the interval group (-1,1)"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&opt](CLI::App* sub, bool config_required) {
        auto* c = sub->add_option("--config", opt.config, "JSON configuration file");
        if (config_required) c->required();
        sub->add_option("--out", opt.out_dir, "output directory");
        sub->add_option("--grid-T", opt.grid_T, "line grid half-width");
        sub->add_option("--grid-N", opt.grid_N, "line grid point count (power of two)");
        sub->add_option("--xi-max", opt.xi_max, "frequency grid extent");
        sub->add_option("--xi-N", opt.xi_N, "frequency grid point count");
        sub->add_option("--tol", opt.tol, "truncation-warning tolerance override");
    };

    auto* solve = app.add_subcommand("solve", "solve an equation spec");
    add_common(solve, true);
    auto* transform = app.add_subcommand("transform", "evaluate a transform");
    add_common(transform, true);
    auto* symbol = app.add_subcommand("symbol", "tabulate a symbol and its diagnostics");
    add_common(symbol, true);
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    add_common(verify, false);
    verify->add_option("--checks", opt.checks, "comma-separated check-name filter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 3;
    }

    if (opt.tol) {
        if (!(*opt.tol > 0.0)) {
            std::cerr << "error: --tol must be positive\n";
            return 3;
        }
        gharm::truncation_tolerance = *opt.tol;
    }

    try {
        if (solve->parsed()) return cmd_solve(opt);
        if (transform->parsed()) return cmd_transform(opt);
        if (symbol->parsed()) return cmd_symbol(opt);
        if (verify->parsed()) return cmd_verify(opt);
    } catch (const gharm::NotElliptic& e) {
        std::cerr << "not elliptic: " << e.what() << "\n";
        return 2;
    } catch (const gharm::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
