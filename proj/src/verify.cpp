#include "gharm/verify.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "gharm/equations.hpp"
#include "gharm/errors.hpp"
#include "gharm/operators.hpp"
#include "gharm/symbol.hpp"
#include "gharm/transform.hpp"

namespace gharm {

namespace {

constexpr double pi = std::numbers::pi;
constexpr complex I(0.0, 1.0);

struct Collector {
    const VerifyConfig& cfg;
    std::vector<CheckResult> results;

    bool wanted(const std::string& name) const {
        if (!cfg.filter) return true;
        for (const auto& s : *cfg.filter)
            if (!s.empty() && name.find(s) != std::string::npos) return true;
        return false;
    }
    bool wanted_any(std::initializer_list<const char*> names) const {
        for (const char* n : names)
            if (wanted(n)) return true;
        return false;
    }
    void max_error(int crit, const std::string& name, double got, double tol) {
        if (!wanted(name)) return;
        results.push_back({crit, name, CheckResult::Kind::max_error, 0.0, got, tol,
                           std::isfinite(got) && got <= tol});
    }
    void near_value(int crit, const std::string& name, double expected, double got, double tol) {
        if (!wanted(name)) return;
        results.push_back({crit, name, CheckResult::Kind::near_value, expected, got, tol,
                           std::isfinite(got) && std::abs(got - expected) <= tol});
    }
    void at_most(int crit, const std::string& name, double bound, double got, double tol) {
        if (!wanted(name)) return;
        results.push_back({crit, name, CheckResult::Kind::at_most, bound, got, tol,
                           std::isfinite(got) && got <= bound + tol});
    }
};

double rel_l2(const std::vector<complex>& a, const std::vector<complex>& b) {
    double e = 0.0, r = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) e += std::norm(a[i] - b[i]);
    for (const complex& v : b) r += std::norm(v);
    return std::sqrt(e / std::max(r, 1e-300));
}

std::vector<double> pair_freq_nodes() {
    std::vector<double> xs(161);
    for (int k = 0; k < 161; ++k) xs[k] = 0.05 * (k - 80);
    return xs;
}

// --- criterion 1: Fourier transform pairs ---------------------------------

void check_pairs(Collector& c) {
    if (!c.wanted_any({"pair_inv_y_coth", "pair_sqrt_sech", "pair_sqrt_over_y_tanh", "pair_y_sinh",
                       "pair_one_minus_y2"}))
        return;
    const LineGrid& g = c.cfg.grid;
    const FreqGrid fg(4.0, 161); // nodes at 0.05 k, k = -80..80
    const auto xs = pair_freq_nodes();

    auto max_rel = [&xs](const Spectrum& S, const std::function<complex(double)>& exact,
                         double exclude_radius) {
        double worst = 0.0;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            const double xi = xs[k];
            if (std::abs(xi) < exclude_radius) continue;
            const complex ref = exact(xi);
            const double den = std::abs(ref);
            const double err = std::abs(S.values[k] - ref);
            worst = std::max(worst, den > 0.0 ? err / den : err);
        }
        return worst;
    };

    // 1/y  ->  pi i coth(pi xi)
    {
        const Spectrum S = forward_pv([](double) { return complex(1.0, 0.0); }, g, fg);
        c.max_error(1, "pair_inv_y_coth",
                    max_rel(S, [](double xi) { return I * pi * std::cosh(pi * xi) / std::sinh(pi * xi); },
                            0.05),
                    1e-6);
    }
    // sqrt(1-y^2)  ->  pi / cosh(pi xi)
    {
        const Spectrum S = forward(builtin_function("sech", g), fg);
        c.max_error(1, "pair_sqrt_sech",
                    max_rel(S, [](double xi) { return complex(pi / std::cosh(pi * xi), 0.0); }, 0.0),
                    1e-6);
    }
    // sqrt(1-y^2)/y  ->  pi i tanh(pi xi)   (value at 0 is 0; compared absolutely there)
    {
        const Spectrum S = forward_pv([](double t) { return complex(1.0 / std::cosh(t), 0.0); }, g, fg);
        c.max_error(1, "pair_sqrt_over_y_tanh",
                    max_rel(S, [](double xi) { return I * pi * std::tanh(pi * xi); }, 0.0), 1e-6);
    }
    // y  ->  pi i / sinh(pi xi)
    {
        const Spectrum S = forward(sample(g, [](double t) { return complex(std::tanh(t), 0.0); }), fg);
        c.max_error(1, "pair_y_sinh",
                    max_rel(S, [](double xi) { return I * pi / std::sinh(pi * xi); }, 0.05), 1e-6);
    }
    // 1-y^2  ->  2 pi xi / sinh(pi xi)
    {
        const Spectrum S = forward(builtin_function("sech2", g), fg);
        c.max_error(1, "pair_one_minus_y2",
                    max_rel(S, [](double xi) { return complex(two_pi_xi_over_sinh_pi(xi), 0.0); }, 0.0),
                    1e-6);
    }
}

// --- criterion 2: Parseval constant ----------------------------------------

void check_parseval(Collector& c) {
    if (!c.wanted_any({"parseval_1_sech_sech", "parseval_2_sech_sech2", "parseval_3_sech2_sech2",
                       "parseval_4_gauss_sech", "parseval_5_gauss_gauss"}))
        return;
    const LineGrid& g = c.cfg.grid;
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"sech", "sech"}, {"sech", "sech2"}, {"sech2", "sech2"}, {"gauss", "sech"}, {"gauss", "gauss"}};
    int i = 0;
    for (const auto& [a, b] : pairs) {
        const double ratio =
            parseval_ratio(builtin_function(a, g), builtin_function(b, g), c.cfg.freqs);
        c.near_value(2, "parseval_" + std::to_string(++i) + "_" + a + "_" + b, pi, ratio, 1e-8);
    }
}

// --- criterion 3: derivative symbol ----------------------------------------

void check_derivative_symbol(Collector& c) {
    if (!c.wanted_any({"derivative_symbol_sech", "derivative_symbol_sech2"})) return;

    const LineGrid& g = c.cfg.grid;
    struct Case {
        const char* name;
        std::function<complex(double)> u, du; // du = d/dt of the pullback
    };
    const Case cases[] = {
        {"sech", [](double t) { return complex(1.0 / std::cosh(t), 0.0); },
         [](double t) { return complex(-std::tanh(t) / std::cosh(t), 0.0); }},
        {"sech2",
         [](double t) {
             const double s = 1.0 / std::cosh(t);
             return complex(s * s, 0.0);
         },
         [](double t) {
             const double s = 1.0 / std::cosh(t);
             return complex(-2.0 * s * s * std::tanh(t), 0.0);
         }},
    };
    for (const auto& cs : cases) {
        const Spectrum U = forward(sample(g, cs.u), c.cfg.freqs);
        const Spectrum D = forward(sample(g, cs.du), c.cfg.freqs);
        double peak = 0.0, scale = 0.0;
        for (int k = 0; k < c.cfg.freqs.count; ++k) {
            const double xi = c.cfg.freqs.node(k);
            peak = std::max(peak, std::abs(D.values[k] + 2.0 * I * xi * U.values[k]));
            scale = std::max(scale, std::abs(U.values[k]));
        }
        c.max_error(3, std::string("derivative_symbol_") + cs.name, peak / scale, 1e-6);
    }
}

// --- criterion 4: round trips ----------------------------------------------

void check_round_trips(Collector& c) {
    if (!c.wanted_any({"roundtrip_sech", "roundtrip_sech2", "roundtrip_gauss"})) return;

    for (const char* name : {"sech", "sech2", "gauss"}) {
        const SampledFunction u = builtin_function(name, c.cfg.grid);
        const SampledFunction v = inverse(forward(u, c.cfg.freqs), c.cfg.grid);
        c.max_error(4, std::string("roundtrip_") + name, rel_l2(v.values, u.values), 1e-8);
    }
}

// --- criterion 5: tanh-family inverse decomposition -------------------------

void check_inverse_decomposition(Collector& c) {
    if (!c.wanted_any({"lemma_inverse_reassembly", "lemma_inverse_tail_slope"})) return;

    const complex c0(2.0, 0.0), c1(1.0, 0.0), c2(1.0, 0.0);
    const double h = pi;
    const InverseDecomposition dec = invert_tanh_family(c0, c1, c2, h, c.cfg.freqs);
    const Symbol a = Symbol::tanh_family(c0, c1, c2, h);
    double worst = 0.0;
    for (int k = 0; k < dec.grid.count; ++k)
        worst = std::max(worst,
                         std::abs(a.eval(dec.grid.node(k)) * dec.reassemble(k) - complex(1.0, 0.0)));
    c.max_error(5, "lemma_inverse_reassembly", worst, 1e-12);
    c.at_most(5, "lemma_inverse_tail_slope", -0.9 * h, tail_decay_slope(dec), 0.0);
}

// --- criterion 6: manufactured solutions ------------------------------------

void check_manufactured(Collector& c) {
    if (!c.wanted_any({"manufactured_prandtl", "manufactured_prandtl_freq_residual",
                       "manufactured_ide", "manufactured_ide_freq_residual",
                       "manufactured_tricomi", "manufactured_tricomi_freq_residual",
                       "manufactured_lb", "manufactured_lb_freq_residual"}))
        return;

    const LineGrid& g = c.cfg.grid;
    const FreqGrid& fg = c.cfg.freqs;

    { // Prandtl, u* = 1-x^2
        const complex c0(1.0, 0.0), c1(1.0, 0.0);
        const SampledFunction ustar = builtin_function("sech2", g);
        const SampledFunction rhs0 = ConvolutionOperator{prandtl_symbol(c0, c1), g, fg}.apply(ustar);
        SampledFunction f = rhs0;
        for (int j = 0; j < g.count; ++j) {
            const double ch = std::cosh(g.node(j));
            f.values[j] *= ch * ch;
        }
        const SolveReport rep = solve_prandtl({c0, c1, f}, fg);
        c.max_error(6, "manufactured_prandtl", rel_l2(rep.solution.values, ustar.values), 1e-6);
        c.max_error(6, "manufactured_prandtl_freq_residual", rep.freq_residual, 1e-8);
    }
    { // IDE, m = 1, one kernel term
        IDESpec spec;
        spec.c = {complex(3.0, 0.0), complex(1.0, 0.0)};
        spec.d = {complex(1.0, 0.0), complex(0.0, 0.0)};
        spec.mk = {0, 0};
        spec.nk = {0, 0};
        spec.kernels = {builtin_function("sech", g), SampledFunction{}};
        const SampledFunction ustar = builtin_function("gauss", g);
        const Symbol a = ide_symbol(spec.c, spec.d, spec.mk, spec.nk, spec.kernels);
        spec.w = ConvolutionOperator{a, g, fg}.apply(ustar);
        const SolveReport rep = solve_ide(spec, fg);
        c.max_error(6, "manufactured_ide", rel_l2(rep.solution.values, ustar.values), 1e-6);
        c.max_error(6, "manufactured_ide_freq_residual", rep.freq_residual, 1e-8);
    }
    { // Tricomi, v0* = sech pullback
        const complex c0(2.0, 0.0), c1(1.0, 0.0), c2(0.5, 0.0);
        const SampledFunction v0star = builtin_function("sech", g);
        const SampledFunction g0 =
            ConvolutionOperator{tricomi_symbol(c0, c1, c2), g, fg}.apply(v0star);
        SampledFunction grhs = g0;
        for (int j = 0; j < g.count; ++j) grhs.values[j] *= std::cosh(g.node(j));
        const SolveReport rep = solve_tricomi({c0, c1, c2, grhs}, fg);
        c.max_error(6, "manufactured_tricomi", rel_l2(rep.g_side_solution.values, v0star.values),
                    1e-6);
        c.max_error(6, "manufactured_tricomi_freq_residual", rep.freq_residual, 1e-8);
    }
    { // Lavrentjev-Bitsadze, w* = sech^2 pullback
        const complex c0(2.0, 0.0), c1(1.0, 0.0);
        const SampledFunction wstar = builtin_function("sech2", g);
        const SampledFunction h0 = ConvolutionOperator{lb_symbol(c0, c1), g, fg}.apply(wstar);
        LBSpec spec{c0, c1, {}};
        spec.h.resize(g.count);
        for (int j = 0; j < g.count; ++j) {
            const double ch = std::cosh(g.node(j));
            spec.h[j] = h0.values[j] * ch * ch;
        }
        const SolveReport rep = solve_lb(spec, g, fg);
        c.max_error(6, "manufactured_lb", rel_l2(rep.g_side_solution.values, wstar.values), 1e-6);
        c.max_error(6, "manufactured_lb_freq_residual", rep.freq_residual, 1e-8);
    }
}

// --- criterion 7: non-ellipticity gating -------------------------------------

void check_gating(Collector& c) {
    if (!c.wanted_any({"gate_prandtl", "gate_tricomi", "gate_lb"})) return;

    const LineGrid& g = c.cfg.grid;
    const FreqGrid& fg = c.cfg.freqs;
    const SampledFunction rhs = builtin_function("sech2", g);

    auto gate = [&](const std::string& name, const std::function<void()>& run) {
        double xi = std::numeric_limits<double>::infinity();
        try {
            run();
        } catch (const NotElliptic& e) {
            xi = std::abs(e.xi_at_min());
        }
        c.at_most(7, name, 0.01, xi, 0.0);
    };
    gate("gate_prandtl", [&] { solve_prandtl({complex(-1.0, 0.0), complex(0.5 * pi, 0.0), rhs}, fg); });
    gate("gate_tricomi", [&] {
        solve_tricomi({complex(1.0, 0.0), complex(0.0, 0.0), complex(-1.0, 0.0), rhs}, fg);
    });
    gate("gate_lb", [&] {
        LBSpec spec{complex(0.0, 0.0), complex(1.0, 0.0), std::vector<complex>(g.count)};
        for (int j = 0; j < g.count; ++j) spec.h[j] = rhs.values[j];
        solve_lb(spec, g, fg);
    });
}

// --- criterion 8: Cauchy singular operator -----------------------------------

void check_cauchy(Collector& c) {
    if (!c.wanted_any({"cauchy_vs_pv_quadrature"})) return;

    const LineGrid& g = c.cfg.grid;
    const SampledFunction u = builtin_function("sech2", g); // 1-y^2 on the group
    const SampledFunction s = cauchy_singular(u, c.cfg.freqs);

    const int points = 64;
    const double h = g.spacing();
    std::vector<complex> got(points), ref(points);
    for (int i = 0; i < points; ++i) {
        const double target = -2.0 + 4.0 * i / (points - 1);
        const double tau = std::floor((target - g.node(0)) / h) * h + g.node(0) + 0.5 * h;
        got[i] = interpolate_cubic(s, tau);
        // (1/(pi i)) pv-integral u(y)/(y-x) dy = (i/pi) pv-integral u(y)/(x-y) dy
        ref[i] = I / pi * pv_integral_line(u, tau);
    }
    c.max_error(8, "cauchy_vs_pv_quadrature", rel_l2(got, ref), 1e-4);
}

// --- criterion 9: convolution theorem ----------------------------------------

void check_convolution(Collector& c) {
    if (!c.wanted_any({"convolution_spectral_vs_direct", "convolution_l1_bound"})) return;

    const LineGrid g(c.cfg.grid.half_width, 256);
    const SampledFunction k0 = builtin_function("sech", g);
    const SampledFunction u = builtin_function("sech", g);
    const SampledFunction spectral = convolve(k0, u, c.cfg.freqs);

    // direct double quadrature; the composed argument (x_i - y_j)/(1 - x_i y_j)
    // equals tanh(t_i - t_j), where the kernel is evaluated in closed form
    std::vector<complex> direct(g.count);
    for (int i = 0; i < g.count; ++i) {
        complex acc(0.0, 0.0);
        for (int j = 0; j < g.count; ++j)
            acc += g.weight(j) * (1.0 / std::cosh(g.node(i) - g.node(j))) * u.values[j];
        direct[i] = acc;
    }
    c.max_error(9, "convolution_spectral_vs_direct", rel_l2(spectral.values, direct), 1e-6);
    c.at_most(9, "convolution_l1_bound", l1_norm_g(k0) * l2_norm_g(u), l2_norm_g(spectral), 1e-12);
}

// --- criterion 10: algebraic identities --------------------------------------

void check_identities(Collector& c) {
    if (!c.wanted_any({"identity_lb_kernel", "identity_tricomi_paths"})) return;

    { // kernel identity behind the change of variables to (0,1)
        std::mt19937 gen(20240811);
        std::uniform_real_distribution<double> dist(-0.99, 0.99);
        double worst = 0.0;
        int n = 0;
        while (n < 100) {
            const double x = dist(gen), y = dist(gen);
            if (std::abs(x - y) < 1e-3) continue;
            ++n;
            const double lhs = (1.0 - x * x) * (1.0 - y * y) / ((y - x) * (1.0 - x * y));
            const double z = (x - y) / (1.0 - x * y);
            const double rhs = z - 1.0 / z;
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
        }
        c.max_error(10, "identity_lb_kernel", worst, 1e-13);
    }
    { // Tricomi forward operator: kernel-transform path vs closed-form symbol
        const LineGrid& g = c.cfg.grid;
        const FreqGrid& fg = c.cfg.freqs;
        const complex c0(2.0, 0.0), c1(1.0, 0.0), c2(0.5, 0.0);
        const SampledFunction v0 = builtin_function("sech", g);

        const Spectrum ka = forward_pv([](double t) { return complex(1.0 / std::cosh(t), 0.0); }, g, fg);
        const Spectrum kb = forward(builtin_function("sech", g), fg);
        Spectrum V = forward(v0, fg);
        for (int k = 0; k < fg.count; ++k)
            V.values[k] *= c0 - c1 / pi * ka.values[k] + c2 / pi * kb.values[k];
        const SampledFunction via_kernels = inverse(V, g);

        const SampledFunction via_symbol =
            ConvolutionOperator{tricomi_symbol(c0, c1, c2), g, fg}.apply(v0);
        c.max_error(10, "identity_tricomi_paths", rel_l2(via_kernels.values, via_symbol.values),
                    1e-6);
    }
}

} // namespace

std::vector<CheckResult> run_acceptance_checks(const VerifyConfig& cfg) {
    Collector c{cfg, {}};
    // a block that throws (degraded grids reject inputs outright) is recorded
    // as a failed check rather than aborting the suite
    const auto guarded = [&c](int crit, const char* block, void (*fn)(Collector&)) {
        try {
            fn(c);
        } catch (const std::exception& e) {
            c.results.push_back({crit, std::string(block) + " [threw: " + e.what() + "]",
                                 CheckResult::Kind::max_error, 0.0,
                                 std::numeric_limits<double>::quiet_NaN(), 0.0, false});
        }
    };
    guarded(1, "transform_pairs", check_pairs);
    guarded(2, "parseval", check_parseval);
    guarded(3, "derivative_symbol", check_derivative_symbol);
    guarded(4, "round_trips", check_round_trips);
    guarded(5, "inverse_decomposition", check_inverse_decomposition);
    guarded(6, "manufactured", check_manufactured);
    guarded(7, "gating", check_gating);
    guarded(8, "cauchy", check_cauchy);
    guarded(9, "convolution", check_convolution);
    guarded(10, "identities", check_identities);
    return std::move(c.results);
}

} // namespace gharm
