#pragma once

#include <complex>
#include <span>

namespace gharm::kernels {

using complex = std::complex<double>;

/// Which implementation of the oscillatory sums to run.
///   reference: serial, one std::polar call per (node, point) pair; the
///              accuracy baseline the fast path is tested against.
///   fast:      phase recurrence along the node axis, OpenMP-parallel over
///              evaluation points.  Each output is still accumulated by a
///              single thread in node order, so results are deterministic.
enum class Engine { reference, fast };

/// out[m] = sum_j weighted_values[j] * exp(i * phase_scale * points[m] * nodes[j])
///
/// `weighted_values` carries the quadrature weights already multiplied in.
void oscillatory_sum(std::span<const double> nodes,
                     std::span<const complex> weighted_values,
                     std::span<const double> points,
                     double phase_scale,
                     std::span<complex> out,
                     Engine engine = Engine::fast);

/// Single-point variant of oscillatory_sum.
complex oscillatory_sum_at(std::span<const double> nodes,
                           std::span<const complex> weighted_values,
                           double point,
                           double phase_scale);

} // namespace gharm::kernels
