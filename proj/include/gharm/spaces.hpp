#pragma once

#include "gharm/grid.hpp"
#include "gharm/transform.hpp"

namespace gharm {

struct NormResult {
    double value = 0.0;
    bool divergent = false;
};

/// Weighted Lebesgue norm on (G, dG): in the line chart the weight is
/// absorbed, so this is the plain L_p norm of the pullback.  p = inf gives
/// the sup of |values|.  Divergence is detected by comparing the quadrature
/// over [-T,T] against [-T/2,T/2]: growth beyond 1% flags the result.
NormResult lp_norm(const SampledFunction& u, double p);

/// ( sum_{k<=m} ||D^k u||_p^p )^{1/p}; for p = inf the sum of sups.
NormResult sobolev_norm(const SampledFunction& u, int m, double p,
                        const FreqGrid& freqs = default_freq_grid());

/// lp norm of the Bessel potential of order s.
NormResult bessel_norm(const SampledFunction& u, double s, double p,
                       const FreqGrid& freqs = default_freq_grid());

/// Zygmund-style smoothness seminorm of order alpha > 0:
///   sup over y of  y^{k-alpha} * max_t |d^k/dy^k (P_y * u)(t)|,  k = [alpha]+1,
/// with the Poisson smoothing applied spectrally (symbol e^{-|xi| y}, each
/// d/dy bringing down a factor -|xi|).  y runs over 64 logarithmic points in
/// [1e-3, 10]; the max over t is taken on a stride-8 subset of the grid.
double zygmund_seminorm(const SampledFunction& u, double alpha,
                        const FreqGrid& freqs = default_freq_grid());

/// Full Zygmund norm: lp_norm + seminorm.
NormResult zygmund_norm(const SampledFunction& u, double alpha, double p,
                        const FreqGrid& freqs = default_freq_grid());

} // namespace gharm
