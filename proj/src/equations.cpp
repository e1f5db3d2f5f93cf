#include "gharm/equations.hpp"

#include <cmath>
#include <numbers>

#include "gharm/errors.hpp"
#include "gharm/operators.hpp"

namespace gharm {

namespace {

constexpr double pi = std::numbers::pi;

void require_decay(const SampledFunction& rhs0, const char* what) {
    const double end = std::max(std::abs(rhs0.values.front()), std::abs(rhs0.values.back()));
    if (end > 1e-6)
        throw NonDecaying(std::string(what) + ": weighted right-hand side does not decay at the grid ends");
}

struct CoreResult {
    SampledFunction solution;
    double margin;
    double freq_residual;
    WarningLog warnings;
};

CoreResult solve_core(const Symbol& a, double weight, const SampledFunction& rhs0,
                      const FreqGrid& freqs) {
    const EllipticityScan scan = ellipticity_scan(a, weight);
    if (scan.margin <= ellipticity_threshold)
        throw NotElliptic(scan.xi_at_min, scan.margin,
                          "symbol is not elliptic: weighted modulus " +
                              std::to_string(scan.margin) + " at xi = " +
                              std::to_string(scan.xi_at_min));
    CoreResult out{.solution = {}, .margin = scan.margin, .freq_residual = 0.0, .warnings = {}};
    Spectrum S = forward(rhs0, freqs, &out.warnings);
    for (int k = 0; k < freqs.count; ++k) S.values[k] /= a.eval(freqs.node(k));
    out.solution = inverse(S, rhs0.grid, &out.warnings);
    out.solution.chart = Chart::g_chart;
    out.freq_residual = frequency_residual(a, out.solution, rhs0, freqs);
    return out;
}

} // namespace

Symbol prandtl_symbol(complex c0, complex c1) { return Symbol::prandtl(c0, c1); }
Symbol tricomi_symbol(complex c0, complex c1, complex c2) {
    return Symbol::tanh_family(c0, c1, c2, pi);
}
Symbol lb_symbol(complex c0, complex c1) {
    return Symbol::tanh_family(c0, c1, complex(0.0, 0.0), 0.5 * pi);
}

double frequency_residual(const Symbol& a, const SampledFunction& solution_g_side,
                          const SampledFunction& rhs0, const FreqGrid& freqs) {
    const Spectrum U = forward(solution_g_side, freqs);
    const Spectrum F0 = forward(rhs0, freqs);
    double peak = 0.0, scale = 0.0;
    for (int k = 0; k < freqs.count; ++k) {
        const double xi = freqs.node(k);
        peak = std::max(peak, std::abs(a.eval(xi) * U.values[k] - F0.values[k]));
        scale = std::max(scale, std::abs(F0.values[k]));
    }
    return peak / std::max(scale, 1e-300);
}

SolveReport solve_prandtl(const PrandtlSpec& spec, const FreqGrid& freqs) {
    const LineGrid& g = spec.f.grid;
    std::vector<complex> f0(g.count);
    for (int j = 0; j < g.count; ++j) {
        const double sech = 1.0 / std::cosh(g.node(j));
        f0[j] = sech * sech * spec.f.values[j];
    }
    SampledFunction rhs0(g, std::move(f0), Chart::g_chart);
    require_decay(rhs0, "prandtl");

    // weight 1 while the singular term is present; the c1 = 0 equation is a
    // plain order-zero multiplication
    const Symbol p = prandtl_symbol(spec.c0, spec.c1);
    CoreResult core = solve_core(p, p.weight_order(), rhs0, freqs);
    SolveReport rep;
    rep.solution = core.solution;
    rep.g_side_solution = core.solution;
    rep.symbol_margin = core.margin;
    rep.freq_residual = core.freq_residual;
    rep.warnings = std::move(core.warnings);
    return rep;
}

SolveReport solve_tricomi(const TricomiSpec& spec, const FreqGrid& freqs) {
    const LineGrid& g = spec.g.grid;
    std::vector<complex> g0(g.count);
    for (int j = 0; j < g.count; ++j) g0[j] = spec.g.values[j] / std::cosh(g.node(j));
    SampledFunction rhs0(g, std::move(g0), Chart::g_chart);
    require_decay(rhs0, "tricomi");

    CoreResult core = solve_core(tricomi_symbol(spec.c0, spec.c1, spec.c2), 0.0, rhs0, freqs);
    SolveReport rep;
    rep.g_side_solution = core.solution;
    std::vector<complex> v(g.count);
    for (int j = 0; j < g.count; ++j) v[j] = core.solution.values[j] * std::cosh(g.node(j));
    rep.solution = SampledFunction(g, std::move(v), Chart::g_chart);
    rep.symbol_margin = core.margin;
    rep.freq_residual = core.freq_residual;
    rep.warnings = std::move(core.warnings);
    rep.decomposition = invert_tanh_family(spec.c0, spec.c1, spec.c2, pi, freqs);
    return rep;
}

SolveReport solve_lb(const LBSpec& spec, const LineGrid& grid, const FreqGrid& freqs) {
    if (static_cast<int>(spec.h.size()) != grid.count)
        throw ValidationError("lb: right-hand side sample count does not match the grid");
    std::vector<complex> h0(grid.count);
    for (int j = 0; j < grid.count; ++j) {
        const double sech = 1.0 / std::cosh(grid.node(j));
        h0[j] = sech * sech * spec.h[j];
    }
    SampledFunction rhs0(grid, std::move(h0), Chart::g_chart);
    require_decay(rhs0, "lb");

    CoreResult core = solve_core(lb_symbol(spec.c0, spec.c1), 0.0, rhs0, freqs);
    SolveReport rep;
    rep.g_side_solution = core.solution;
    // phi(s_j) = w(x_j) / (1 - x_j^2), s_j = (1 + x_j)/2
    std::vector<complex> phi(grid.count);
    for (int j = 0; j < grid.count; ++j) {
        const double c = std::cosh(grid.node(j));
        phi[j] = core.solution.values[j] * c * c;
    }
    rep.solution = SampledFunction(grid, std::move(phi), Chart::g_chart);
    rep.symbol_margin = core.margin;
    rep.freq_residual = core.freq_residual;
    rep.warnings = std::move(core.warnings);
    rep.decomposition = invert_tanh_family(spec.c0, spec.c1, complex(0.0, 0.0), 0.5 * pi, freqs);
    return rep;
}

SolveReport solve_ide(const IDESpec& spec, const FreqGrid& freqs) {
    const Symbol a = ide_symbol(spec.c, spec.d, spec.mk, spec.nk, spec.kernels);
    const double m = static_cast<double>(spec.c.size()) - 1.0;
    require_decay(spec.w, "ide");
    CoreResult core = solve_core(a, m, spec.w, freqs);
    SolveReport rep;
    rep.solution = core.solution;
    rep.g_side_solution = core.solution;
    rep.symbol_margin = core.margin;
    rep.freq_residual = core.freq_residual;
    rep.warnings = std::move(core.warnings);
    return rep;
}

complex pv_integral_line(const SampledFunction& q, double tau0) {
    const LineGrid& g = q.grid;
    const double x = std::tanh(tau0);
    const complex qx = interpolate_cubic(q, tau0);
    complex acc(0.0, 0.0);
    for (int j = 0; j < g.count; ++j) {
        const double y = std::tanh(g.node(j));
        const double sech2 = (1.0 - y) * (1.0 + y);
        acc += g.weight(j) * sech2 * (q.values[j] - qx) / (x - y);
    }
    return acc + qx * 2.0 * std::atanh(x);
}

namespace {

// off-node collocation points, roughly uniform over [-span, span]
std::vector<double> collocation_points(const LineGrid& g, int points, double span = 2.0) {
    std::vector<double> taus(points);
    const double h = g.spacing();
    for (int i = 0; i < points; ++i) {
        const double target = -span + 2.0 * span * i / (points - 1);
        const double base = std::floor((target - g.node(0)) / h) * h + g.node(0);
        taus[i] = base + 0.5 * h;
    }
    return taus;
}

double rel_l2(const std::vector<complex>& err, const std::vector<complex>& ref) {
    double e = 0.0, r = 0.0;
    for (const complex& v : err) e += std::norm(v);
    for (const complex& v : ref) r += std::norm(v);
    return std::sqrt(e / std::max(r, 1e-300));
}

} // namespace

double prandtl_space_residual(const PrandtlSpec& spec, const SampledFunction& u, int points,
                              const FreqGrid& freqs) {
    const LineGrid& g = u.grid;
    SampledFunction du = d_g(u, 1, freqs); // (1-x^2) u'
    SampledFunction uprime(g, du.values, u.chart);
    for (int j = 0; j < g.count; ++j) {
        const double c = std::cosh(g.node(j));
        uprime.values[j] *= c * c;
    }
    std::vector<complex> err(points), ref(points);
    const auto taus = collocation_points(g, points);
    for (int i = 0; i < points; ++i) {
        const double tau = taus[i];
        const double x = std::tanh(tau);
        const complex ux = interpolate_cubic(u, tau);
        const complex fx = interpolate_cubic(spec.f, tau);
        const complex lhs =
            spec.c0 * ux / ((1.0 - x) * (1.0 + x)) + spec.c1 / pi * pv_integral_line(uprime, tau);
        err[i] = lhs - fx;
        ref[i] = fx;
    }
    return rel_l2(err, ref);
}

double tricomi_space_residual(const TricomiSpec& spec, const SampledFunction& v0, int points) {
    const LineGrid& g = v0.grid;
    SampledFunction v(g, v0.values, v0.chart);
    for (int j = 0; j < g.count; ++j) v.values[j] *= std::cosh(g.node(j));

    std::vector<complex> err(points), ref(points);
    const auto taus = collocation_points(g, points);
    for (int i = 0; i < points; ++i) {
        const double tau = taus[i];
        const double x = std::tanh(tau);
        const complex vx = interpolate_cubic(v0, tau) * std::cosh(tau);
        const complex gx = interpolate_cubic(spec.g, tau);
        complex regular(0.0, 0.0);
        for (int j = 0; j < g.count; ++j) {
            const double y = std::tanh(g.node(j));
            const double sech2 = (1.0 - y) * (1.0 + y);
            regular += g.weight(j) * sech2 * v.values[j] / (1.0 - x * y);
        }
        const complex lhs = spec.c0 * vx - spec.c1 / pi * pv_integral_line(v, tau) +
                            spec.c2 / pi * regular;
        err[i] = lhs - gx;
        ref[i] = gx;
    }
    return rel_l2(err, ref);
}

} // namespace gharm
