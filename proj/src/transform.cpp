#include "gharm/transform.hpp"

#include <cmath>
#include <numbers>

#include "gharm/errors.hpp"

namespace gharm {

namespace {

constexpr double pi = std::numbers::pi;

// Ends whose outermost two samples agree to this relative tolerance count as
// settled plateaus (tanh-type tails); decaying ends are modeled as
// exponentials instead.  Anything below the floor is left alone.
constexpr double plateau_flatness = 1e-3;
constexpr double exp_tail_floor = 1e-14;

struct ExpTail {
    bool active = false;
    complex end_value{0.0, 0.0};
    complex rate{0.0, 0.0}; // Re > 0, decay away from the grid
    double anchor = 0.0;
};

// Prepared quadrature of integral f(t) e^{i zeta t} dt over the real line:
// weighted in-grid sum plus closed-form corrections for the parts of f the
// grid cannot see (a bounded odd plateau and first-order exponential tails).
struct PreparedIntegral {
    std::vector<double> nodes;
    std::vector<complex> weighted;
    complex odd_coeff{0.0, 0.0}; // subtracted c * tanh(t)
    bool odd_active = false;
    ExpTail upper, lower;

    complex tail_terms(double zeta) const {
        complex acc(0.0, 0.0);
        if (odd_active) {
            // integral tanh(t) e^{i zeta t} dt = pi i / sinh(pi zeta / 2)
            const complex ic(-odd_coeff.imag(), odd_coeff.real());
            acc += detail::scale_possibly_infinite(ic, pi / std::sinh(0.5 * pi * zeta));
        }
        const complex izeta(0.0, zeta);
        if (upper.active)
            acc += upper.end_value * std::polar(1.0, zeta * upper.anchor) / (upper.rate - izeta);
        if (lower.active)
            acc += lower.end_value * std::polar(1.0, zeta * lower.anchor) / (lower.rate + izeta);
        return acc;
    }

    void eval(std::span<const double> zetas, std::span<complex> out) const {
        kernels::oscillatory_sum(nodes, weighted, zetas, 1.0, out);
        for (std::size_t k = 0; k < zetas.size(); ++k) out[k] += tail_terms(zetas[k]);
    }
    complex eval_at(double zeta) const {
        return kernels::oscillatory_sum_at(nodes, weighted, zeta, 1.0) + tail_terms(zeta);
    }
};

ExpTail fit_exp_tail(complex at_end, complex inboard, double anchor, double spacing) {
    ExpTail tail;
    const double m_end = std::abs(at_end);
    const double m_in = std::abs(inboard);
    if (m_end <= exp_tail_floor) return tail;
    if (!(m_in > m_end * (1.0 + 1e-9))) return tail; // need genuine decay outward
    const complex rate = std::log(inboard / at_end) / spacing;
    // a rate the domain cannot resolve is indistinguishable from noise, and
    // 1/(rate - i zeta) would blow up near zeta = 0
    const double min_rate = 0.5 / (std::abs(anchor) + 1.0);
    if (!std::isfinite(rate.real()) || !std::isfinite(rate.imag()) || rate.real() <= min_rate)
        return tail;
    tail.active = true;
    tail.end_value = at_end;
    tail.rate = rate;
    tail.anchor = anchor;
    return tail;
}

template <class NodeAt, class WeightAt>
PreparedIntegral prepare_integral(int count, NodeAt node, WeightAt weight,
                                  const std::vector<complex>& values, bool allow_plateau,
                                  WarningLog* warnings, const char* who) {
    PreparedIntegral p;
    p.nodes.resize(count);
    for (int j = 0; j < count; ++j) p.nodes[j] = node(j);
    std::vector<complex> work = values;

    auto flat_end = [&work, count](int at, int inboard) {
        (void)count;
        const double mag = std::abs(work[at]);
        return mag > exp_tail_floor && std::abs(work[at] - work[inboard]) <= plateau_flatness * mag;
    };
    if (allow_plateau && flat_end(0, 1) && flat_end(count - 1, count - 2)) {
        p.odd_coeff = 0.5 * (work.back() - work.front());
        const complex even = 0.5 * (work.back() + work.front());
        if (std::abs(p.odd_coeff) > 1e-9) {
            p.odd_active = true;
            for (int j = 0; j < count; ++j) work[j] -= p.odd_coeff * std::tanh(p.nodes[j]);
        }
        if (warnings && std::abs(even) > 1e-6)
            warnings->push_back(std::string(who) + ": non-decaying even tail (magnitude " +
                                std::to_string(std::abs(even)) +
                                "); spectrum misses a point mass at zero frequency");
    }

    const double h = count > 1 ? p.nodes[1] - p.nodes[0] : 1.0;
    p.upper = fit_exp_tail(work[count - 1], work[count - 2], p.nodes[count - 1], h);
    p.lower = fit_exp_tail(work[0], work[1], p.nodes[0], h);

    if (warnings) {
        // a fitted tail that decays by less than ~e^{-4} per domain length is
        // closer to a power tail than an exponential one; flag it alongside
        // plainly unmodeled ends
        auto unresolved = [](const ExpTail& tail, double extent) {
            return !tail.active || tail.rate.real() * (extent + 1.0) < 4.0;
        };
        const double extent = std::abs(p.nodes[count - 1]);
        const double mass_lo = std::abs(work.front()) * weight(0);
        const double mass_hi = std::abs(work.back()) * weight(count - 1);
        if ((mass_lo > truncation_tolerance && unresolved(p.lower, extent)) ||
            (mass_hi > truncation_tolerance && unresolved(p.upper, extent)))
            warnings->push_back(std::string(who) + ": end-sample mass " +
                                std::to_string(std::max(mass_lo, mass_hi)) +
                                " leaves an unresolved tail (domain too small)");
    }

    p.weighted.resize(count);
    for (int j = 0; j < count; ++j) p.weighted[j] = weight(j) * work[j];
    return p;
}

PreparedIntegral prepare_line(const SampledFunction& f, WarningLog* warnings, const char* who) {
    const LineGrid& g = f.grid;
    return prepare_integral(
        g.count, [&g](int j) { return g.node(j); }, [&g](int j) { return g.weight(j); }, f.values,
        /*allow_plateau=*/true, warnings, who);
}

} // namespace

namespace detail {

complex scale_possibly_infinite(complex v, double r) {
    auto mul = [](double a, double b) { return a == 0.0 ? 0.0 : a * b; };
    return complex(mul(v.real(), r), mul(v.imag(), r));
}

} // namespace detail

Spectrum forward(const SampledFunction& f, const FreqGrid& freqs, WarningLog* warnings) {
    if (warnings && pi / f.grid.spacing() < 2.0 * freqs.xi_max)
        warnings->push_back("forward: line grid spacing undersamples the requested frequencies"
                            " (aliasing): need spacing <= pi / (2 xi_max)");
    const PreparedIntegral p = prepare_line(f, warnings, "forward");
    std::vector<double> zetas(freqs.count);
    for (int k = 0; k < freqs.count; ++k) zetas[k] = 2.0 * freqs.node(k);
    std::vector<complex> out(freqs.count);
    p.eval(zetas, out);
    return Spectrum(freqs, std::move(out));
}

complex line_transform_at(const SampledFunction& f, double zeta) {
    return prepare_line(f, nullptr, "line_transform").eval_at(zeta);
}

complex forward_at(const SampledFunction& f, double xi) { return line_transform_at(f, 2.0 * xi); }

struct LineTransformEvaluator::Impl {
    PreparedIntegral prepared;
};

LineTransformEvaluator::LineTransformEvaluator(const SampledFunction& f)
    : impl_(std::make_shared<Impl>(Impl{prepare_line(f, nullptr, "kernel_transform")})) {}

complex LineTransformEvaluator::at(double zeta) const { return impl_->prepared.eval_at(zeta); }

SampledFunction inverse(const Spectrum& spectrum, const LineGrid& grid, WarningLog* warnings) {
    const FreqGrid& fg = spectrum.freqs;
    if (warnings && pi / fg.spacing() < 2.0 * grid.half_width)
        warnings->push_back("inverse: frequency grid spacing periodizes inside the line grid"
                            " (aliasing): need spacing <= pi / (2 T)");
    const PreparedIntegral p = prepare_integral(
        fg.count, [&fg](int k) { return fg.node(k); }, [&fg](int k) { return fg.weight(k); },
        spectrum.values, /*allow_plateau=*/false, warnings, "inverse");

    std::vector<double> zetas(grid.count);
    for (int j = 0; j < grid.count; ++j) zetas[j] = -2.0 * grid.node(j);
    std::vector<complex> out(grid.count);
    p.eval(zetas, out);
    const double inv_pi = 1.0 / pi;
    for (complex& v : out) v *= inv_pi;
    return SampledFunction(grid, std::move(out), Chart::line_chart);
}

Spectrum forward_pv(const std::function<complex(double)>& p_line, const LineGrid& grid,
                    const FreqGrid& freqs, WarningLog* warnings) {
    const LineGrid pv_grid = grid.staggered ? grid : grid.staggered_twin();
    std::vector<complex> g(pv_grid.count);
    for (int j = 0; j < pv_grid.count; ++j) {
        const double t = pv_grid.node(j);
        g[j] = p_line(t) / std::tanh(t);
    }
    const PreparedIntegral p = prepare_integral(
        pv_grid.count, [&pv_grid](int j) { return pv_grid.node(j); },
        [&pv_grid](int j) { return pv_grid.weight(j); }, g, /*allow_plateau=*/true, warnings,
        "forward_pv");

    std::vector<double> zetas(freqs.count);
    for (int k = 0; k < freqs.count; ++k) zetas[k] = 2.0 * freqs.node(k);
    std::vector<complex> out(freqs.count);
    p.eval(zetas, out);
    return Spectrum(freqs, std::move(out));
}

// Cubic (Catmull-Rom) interpolation on a uniform grid; zero outside.
complex interpolate_cubic(const SampledFunction& f, double t) {
    const LineGrid& g = f.grid;
    const double h = g.spacing();
    const double s = (t - g.node(0)) / h;
    const int j = static_cast<int>(std::floor(s));
    if (j < 1 || j > g.count - 3) {
        // fall back to nearest sample near the edges, zero beyond
        if (s < -0.5 || s > g.count - 0.5) return complex(0.0, 0.0);
        const int n = std::min(std::max(static_cast<int>(std::lround(s)), 0), g.count - 1);
        return f.values[n];
    }
    const double u = s - j;
    const complex pm1 = f.values[j - 1], p0 = f.values[j], p1 = f.values[j + 1],
                  p2 = f.values[j + 2];
    return 0.5 * ((2.0 * p0) + (-pm1 + p1) * u + (2.0 * pm1 - 5.0 * p0 + 4.0 * p1 - p2) * (u * u) +
                  (-pm1 + 3.0 * p0 - 3.0 * p1 + p2) * (u * u * u));
}

Spectrum forward_pv(const SampledFunction& p, const FreqGrid& freqs, WarningLog* warnings) {
    if (p.grid.staggered)
        throw ValidationError("forward_pv expects the numerator on a regular grid");
    return forward_pv([&p](double t) { return interpolate_cubic(p, t); }, p.grid, freqs, warnings);
}

complex inner_product_g(const SampledFunction& f, const SampledFunction& g) {
    if (!(f.grid == g.grid))
        throw ValidationError("inner product operands must share a grid");
    complex acc(0.0, 0.0);
    for (int j = 0; j < f.grid.count; ++j)
        acc += f.grid.weight(j) * f.values[j] * std::conj(g.values[j]);
    return acc;
}

double parseval_ratio(const SampledFunction& f, const SampledFunction& g, const FreqGrid& freqs) {
    const complex denom = inner_product_g(f, g);
    if (std::abs(denom) < 1e-12)
        throw DegeneratePairing("parseval_ratio: |(f,g)_G| below 1e-12");
    const Spectrum F = forward(f, freqs);
    const Spectrum G = forward(g, freqs);
    complex num(0.0, 0.0);
    for (int k = 0; k < freqs.count; ++k)
        num += freqs.weight(k) * F.values[k] * std::conj(G.values[k]);
    return (num / denom).real();
}

} // namespace gharm
