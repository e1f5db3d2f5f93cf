#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "gharm/grid.hpp"
#include "gharm/kernels.hpp"

namespace gharm {

using WarningLog = std::vector<std::string>;

/// Group Fourier transform, computed through the line chart:
///
///   (F_G v)(xi) = integral over (-1,1) of ((1+y)/(1-y))^{i xi} v(y) dy/(1-y^2)
///               = integral over R of e^{2 i xi t} phi(t) dt,   phi(t) = v(tanh t),
///
/// by trapezoid (midpoint on staggered grids) quadrature on the t-grid.
///
/// Samples whose end values do not vanish are corrected in closed form:
///   - settled (flat) ends are split into odd and even plateaus; the odd part
///     c*tanh(t) is subtracted and its transform pi*i*c/sinh(pi*xi) added
///     back, while a surviving even plateau has no pointwise transform (point
///     mass at xi = 0) and is reported as a warning;
///   - decaying ends are fitted with exponentials from the outermost two
///     samples per side and the analytic tail integrals are added, removing
///     the first-order truncation error.
Spectrum forward(const SampledFunction& f, const FreqGrid& freqs, WarningLog* warnings = nullptr);

/// forward() at a single frequency.
complex forward_at(const SampledFunction& f, double xi);

/// Plain line transform integral f(t) e^{i zeta t} dt of the pullback; the
/// group transform is this evaluated at zeta = 2 xi (identically, by
/// construction).
complex line_transform_at(const SampledFunction& f, double zeta);

/// Precomputed form of the same transform for repeated evaluation against
/// fixed samples (tail corrections included once).
class LineTransformEvaluator {
public:
    explicit LineTransformEvaluator(const SampledFunction& f);
    complex at(double zeta) const;
    complex group_at(double xi) const { return at(2.0 * xi); }

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// Inverse transform (F_G^{-1} psi)(x(t)) = (1/pi) integral e^{-2 i xi t} psi(xi) d xi,
/// sampled on `grid`.
SampledFunction inverse(const Spectrum& spectrum, const LineGrid& grid,
                        WarningLog* warnings = nullptr);

/// Principal-value transform of f(y) = p(y)/y with p smooth, p given as a
/// function of the line coordinate t (i.e. p_line(t) = p(tanh t)).
/// Quadrature runs on the staggered twin of `grid`: nodes are symmetric about
/// t = 0 with none at the pole, so the pole cancels between paired nodes.
Spectrum forward_pv(const std::function<complex(double)>& p_line, const LineGrid& grid,
                    const FreqGrid& freqs, WarningLog* warnings = nullptr);

/// Same, with the numerator given as samples on a regular grid (resampled to
/// the staggered nodes by cubic interpolation).
Spectrum forward_pv(const SampledFunction& p, const FreqGrid& freqs,
                    WarningLog* warnings = nullptr);

/// Weighted inner product (f,g)_G = integral f conj(g) dG = integral of the
/// pullbacks over the line.
complex inner_product_g(const SampledFunction& f, const SampledFunction& g);

/// Cubic (Catmull-Rom) interpolation of grid samples at an arbitrary line
/// coordinate; zero outside the grid.
complex interpolate_cubic(const SampledFunction& f, double t);

/// (F_G f, F_G g)_R / (f, g)_G.  Contract: the ratio is pi.
/// Throws DegeneratePairing when |(f,g)_G| < 1e-12.
double parseval_ratio(const SampledFunction& f, const SampledFunction& g,
                      const FreqGrid& freqs = default_freq_grid());

namespace detail {
/// v * r with the convention 0 * inf = 0, so that closed-form pole
/// corrections produce clean infinities instead of NaNs.
complex scale_possibly_infinite(complex v, double r);
} // namespace detail

} // namespace gharm
