#include "gharm/operators.hpp"

#include <cmath>
#include <numbers>

#include "gharm/errors.hpp"

namespace gharm {

namespace {
constexpr double pi = std::numbers::pi;
}

SampledFunction ConvolutionOperator::apply(const SampledFunction& u, WarningLog* warnings) const {
    if (!(u.grid == grid)) throw ValidationError("apply: sample grid differs from operator grid");
    Spectrum S = forward(u, freqs, warnings);
    for (int k = 0; k < freqs.count; ++k) S.values[k] *= symbol.eval(freqs.node(k));
    if (warnings) {
        const double tail = std::max(std::abs(S.values.front()) * freqs.weight(0),
                                     std::abs(S.values.back()) * freqs.weight(freqs.count - 1));
        if (tail > truncation_tolerance)
            warnings->push_back("apply: multiplied spectrum does not decay at +-Xi");
    }
    return inverse(S, grid, nullptr);
}

SampledFunction d_g(const SampledFunction& u, int order, const FreqGrid& freqs,
                    WarningLog* warnings) {
    if (order < 0) throw ValidationError("d_g: order must be >= 0");
    if (order == 0) return u;
    std::vector<complex> mono(static_cast<std::size_t>(order) + 1, complex(0.0, 0.0));
    mono.back() = complex(1.0, 0.0);
    return ConvolutionOperator{Symbol::polynomial(std::move(mono)), u.grid, freqs}.apply(u, warnings);
}

SampledFunction bessel_potential(double s, const SampledFunction& u, const FreqGrid& freqs,
                                 WarningLog* warnings) {
    return ConvolutionOperator{Symbol::bessel_weight(s), u.grid, freqs}.apply(u, warnings);
}

SampledFunction convolve(const SampledFunction& k0, const SampledFunction& u,
                         const FreqGrid& freqs, WarningLog* warnings) {
    if (!(k0.grid == u.grid)) throw ValidationError("convolve: operands must share a grid");
    const Spectrum K = forward(k0, freqs, warnings);
    Spectrum S = forward(u, freqs, warnings);
    for (int k = 0; k < freqs.count; ++k) S.values[k] *= K.values[k];
    return inverse(S, u.grid, warnings);
}

SampledFunction convolve_direct(const SampledFunction& k0, const SampledFunction& u) {
    if (!(k0.grid == u.grid)) throw ValidationError("convolve: operands must share a grid");
    const LineGrid& g = u.grid;
    const int n = g.count;
    // kernel sample at t_i - t_j lives at index i - j + n/2 (regular grid)
    std::vector<complex> out(n, complex(0.0, 0.0));
    for (int i = 0; i < n; ++i) {
        complex acc(0.0, 0.0);
        for (int j = 0; j < n; ++j) {
            const int m = i - j + n / 2;
            if (m < 0 || m >= n) continue;
            acc += g.weight(j) * k0.values[m] * u.values[j];
        }
        out[i] = acc;
    }
    return SampledFunction(g, std::move(out), u.chart);
}

complex mean_functional(const SampledFunction& u) {
    complex acc(0.0, 0.0);
    for (int j = 0; j < u.grid.count; ++j)
        acc += u.grid.weight(j) * std::tanh(u.grid.node(j)) * u.values[j];
    return acc / complex(0.0, pi);
}

SampledFunction cauchy_singular(const SampledFunction& u, const FreqGrid& freqs,
                                WarningLog* warnings) {
    const double end_mag = std::max(std::abs(u.values.front()), std::abs(u.values.back()));
    if (end_mag > 1e-6)
        throw NonDecaying("cauchy_singular: samples do not decay at the interval ends");

    const FreqGrid stag = freqs.staggered ? freqs : freqs.staggered_twin();
    Spectrum S = forward(u, stag, warnings);
    const complex s0 = forward_at(u, 0.0);

    // -coth(pi xi) * [S(xi) - S(0) sech(pi xi)] is smooth and decaying; the
    // split-off part -S(0)/sinh(pi xi) inverts to (i/pi) S(0) tanh(t).
    for (int k = 0; k < stag.count; ++k) {
        const double xi = stag.node(k);
        const double coth = std::cosh(pi * xi) / std::sinh(pi * xi);
        S.values[k] = -coth * (S.values[k] - s0 / std::cosh(pi * xi));
    }
    SampledFunction r = inverse(S, u.grid, warnings);

    const complex f = mean_functional(u);
    const complex is0_over_pi = complex(0.0, 1.0) * s0 / pi;
    for (int j = 0; j < u.grid.count; ++j)
        r.values[j] += is0_over_pi * std::tanh(u.grid.node(j)) - f;
    r.chart = u.chart;
    return r;
}

SampledFunction shift_in_chart(const SampledFunction& u, double dt) {
    std::vector<complex> out(u.grid.count);
    for (int j = 0; j < u.grid.count; ++j)
        out[j] = interpolate_cubic(u, u.grid.node(j) + dt);
    return SampledFunction(u.grid, std::move(out), u.chart);
}

double l1_norm_g(const SampledFunction& k0) {
    double acc = 0.0;
    for (int j = 0; j < k0.grid.count; ++j) acc += k0.grid.weight(j) * std::abs(k0.values[j]);
    return acc;
}

double l2_norm_g(const SampledFunction& u) {
    double acc = 0.0;
    for (int j = 0; j < u.grid.count; ++j) acc += u.grid.weight(j) * std::norm(u.values[j]);
    return std::sqrt(acc);
}

} // namespace gharm
