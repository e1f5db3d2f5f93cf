#pragma once

#include "gharm/grid.hpp"
#include "gharm/symbol.hpp"
#include "gharm/transform.hpp"

namespace gharm {

/// Frequency-domain convolution operator: apply = inverse o (a .) o forward.
struct ConvolutionOperator {
    Symbol symbol;
    LineGrid grid = default_line_grid();
    FreqGrid freqs = default_freq_grid();

    SampledFunction apply(const SampledFunction& u, WarningLog* warnings = nullptr) const;
};

/// k-th power of the invariant derivative (1-x^2) d/dx, via the symbol
/// (-2 i xi)^k.
SampledFunction d_g(const SampledFunction& u, int order,
                    const FreqGrid& freqs = default_freq_grid(),
                    WarningLog* warnings = nullptr);

/// Bessel potential: symbol (1+xi^2)^{s/2}.
SampledFunction bessel_potential(double s, const SampledFunction& u,
                                 const FreqGrid& freqs = default_freq_grid(),
                                 WarningLog* warnings = nullptr);

/// Group convolution via the convolution theorem: F^{-1}[(F k0)(F u)].
SampledFunction convolve(const SampledFunction& k0, const SampledFunction& u,
                         const FreqGrid& freqs = default_freq_grid(),
                         WarningLog* warnings = nullptr);

/// Direct double-quadrature convolution (the oracle semantics): the kernel
/// pullback is evaluated at grid differences t_i - t_j, zero beyond the grid.
SampledFunction convolve_direct(const SampledFunction& k0, const SampledFunction& u);

/// Cauchy singular integral operator
///   S u(x) = (1/(pi i)) pv-integral of u(y)/(y-x) dy over (-1,1),
/// decomposed as a convolution with symbol -coth(pi xi) minus the rank-one
/// functional mean_functional(u).  The coth pole at xi = 0 is removed by
/// splitting off spectrum(0)/sinh(pi xi), whose inverse transform is known in
/// closed form; the remaining smooth factor is applied on the staggered
/// frequency grid (no node at 0).
SampledFunction cauchy_singular(const SampledFunction& u,
                                const FreqGrid& freqs = default_freq_grid(),
                                WarningLog* warnings = nullptr);

/// F(u) = (1/(pi i)) integral of y u(y) dG(y).
complex mean_functional(const SampledFunction& u);

/// Group translation u(x o y0), realized as the plain shift t -> t + atanh(y0)
/// in the line chart with cubic resampling (zero beyond the grid).
SampledFunction shift_in_chart(const SampledFunction& u, double dt);

/// L1(G, dG) norm of kernel samples (quadrature sum of |k| in the chart).
double l1_norm_g(const SampledFunction& k0);
/// L2(G, dG) norm.
double l2_norm_g(const SampledFunction& u);

} // namespace gharm
