#include "gharm/spaces.hpp"

#include <cmath>
#include <numbers>

#include "gharm/errors.hpp"
#include "gharm/kernels.hpp"
#include "gharm/operators.hpp"

namespace gharm {

namespace {

double power_sum(const SampledFunction& u, double p, double window) {
    double acc = 0.0;
    for (int j = 0; j < u.grid.count; ++j) {
        if (std::abs(u.grid.node(j)) > window) continue;
        acc += u.grid.weight(j) * std::pow(std::abs(u.values[j]), p);
    }
    return acc;
}

} // namespace

NormResult lp_norm(const SampledFunction& u, double p) {
    if (p < 1.0) throw ValidationError("lp_norm: p must be >= 1");
    NormResult r;
    if (std::isinf(p)) {
        for (const complex& v : u.values) r.value = std::max(r.value, std::abs(v));
        return r;
    }
    const double full = power_sum(u, p, u.grid.half_width + 1.0);
    const double half = power_sum(u, p, 0.5 * u.grid.half_width);
    r.value = std::pow(full, 1.0 / p);
    r.divergent = full > half * 1.01 + 1e-300;
    return r;
}

NormResult sobolev_norm(const SampledFunction& u, int m, double p, const FreqGrid& freqs) {
    if (m < 0) throw ValidationError("sobolev_norm: m must be >= 0");
    NormResult out;
    double acc = 0.0;
    for (int k = 0; k <= m; ++k) {
        const NormResult nk = lp_norm(k == 0 ? u : d_g(u, k, freqs), p);
        out.divergent = out.divergent || nk.divergent;
        if (std::isinf(p))
            acc += nk.value;
        else
            acc += std::pow(nk.value, p);
    }
    out.value = std::isinf(p) ? acc : std::pow(acc, 1.0 / p);
    return out;
}

NormResult bessel_norm(const SampledFunction& u, double s, double p, const FreqGrid& freqs) {
    return lp_norm(bessel_potential(s, u, freqs), p);
}

double zygmund_seminorm(const SampledFunction& u, double alpha, const FreqGrid& freqs) {
    if (!(alpha > 0.0)) throw ValidationError("zygmund_seminorm: alpha must be positive");
    const int k = static_cast<int>(std::floor(alpha)) + 1;

    const Spectrum S = forward(u, freqs);
    std::vector<double> xi(freqs.count);
    for (int i = 0; i < freqs.count; ++i) xi[i] = freqs.node(i);

    // evaluation subset of the line grid (max of a smooth function)
    const int stride = 8;
    std::vector<double> t;
    t.reserve(u.grid.count / stride + 1);
    for (int j = 0; j < u.grid.count; j += stride) t.push_back(u.grid.node(j));

    constexpr int y_points = 64;
    const double y_lo = 1e-3, y_hi = 10.0;
    double sup = 0.0;
    std::vector<complex> weighted(freqs.count);
    std::vector<complex> smoothed(t.size());
    for (int iy = 0; iy < y_points; ++iy) {
        const double y = y_lo * std::pow(y_hi / y_lo, iy / double(y_points - 1));
        for (int i = 0; i < freqs.count; ++i) {
            const double a = std::abs(xi[i]);
            double factor = std::exp(-a * y) / std::numbers::pi * freqs.weight(i);
            if (k % 2 == 1) factor = -factor;
            weighted[i] = S.values[i] * factor * std::pow(a, k);
        }
        kernels::oscillatory_sum(xi, weighted, t, -2.0, smoothed);
        double peak = 0.0;
        for (const complex& v : smoothed) peak = std::max(peak, std::abs(v));
        sup = std::max(sup, std::pow(y, k - alpha) * peak);
    }
    return sup;
}

NormResult zygmund_norm(const SampledFunction& u, double alpha, double p, const FreqGrid& freqs) {
    NormResult r = lp_norm(u, p);
    r.value += zygmund_seminorm(u, alpha, freqs);
    return r;
}

} // namespace gharm
