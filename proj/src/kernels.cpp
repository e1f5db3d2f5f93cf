#include "gharm/kernels.hpp"

#include <cassert>
#include <cmath>

namespace gharm::kernels {

namespace {

complex reference_sum(std::span<const double> nodes,
                      std::span<const complex> wv,
                      double point,
                      double phase_scale) {
    complex acc(0.0, 0.0);
    for (std::size_t j = 0; j < nodes.size(); ++j)
        acc += wv[j] * std::polar(1.0, phase_scale * point * nodes[j]);
    return acc;
}

// Uniform node spacing lets the phase factor advance by one complex multiply
// per node.  Unit-modulus drift over N steps is ~N*eps, far below the
// quadrature tolerances used here.
complex recurrence_sum(std::span<const double> nodes,
                       std::span<const complex> wv,
                       double point,
                       double phase_scale) {
    const std::size_t n = nodes.size();
    if (n == 0) return complex(0.0, 0.0);
    const double h = n > 1 ? nodes[1] - nodes[0] : 0.0;
    const complex step = std::polar(1.0, phase_scale * point * h);
    complex phase = std::polar(1.0, phase_scale * point * nodes[0]);
    complex acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        acc += wv[j] * phase;
        phase *= step;
    }
    return acc;
}

bool uniformly_spaced(std::span<const double> nodes) {
    if (nodes.size() < 3) return true;
    const double h = nodes[1] - nodes[0];
    const double tol = 1e-12 * (std::abs(nodes.front()) + std::abs(nodes.back()) + 1.0);
    for (std::size_t j = 1; j + 1 < nodes.size(); ++j)
        if (std::abs(nodes[j + 1] - nodes[j] - h) > tol) return false;
    return true;
}

} // namespace

void oscillatory_sum(std::span<const double> nodes,
                     std::span<const complex> weighted_values,
                     std::span<const double> points,
                     double phase_scale,
                     std::span<complex> out,
                     Engine engine) {
    assert(nodes.size() == weighted_values.size());
    assert(points.size() == out.size());
    const long m = static_cast<long>(points.size());

    if (engine == Engine::reference || !uniformly_spaced(nodes)) {
        for (long k = 0; k < m; ++k)
            out[k] = reference_sum(nodes, weighted_values, points[k], phase_scale);
        return;
    }

#pragma omp parallel for schedule(static)
    for (long k = 0; k < m; ++k)
        out[k] = recurrence_sum(nodes, weighted_values, points[k], phase_scale);
}

complex oscillatory_sum_at(std::span<const double> nodes,
                           std::span<const complex> weighted_values,
                           double point,
                           double phase_scale) {
    if (uniformly_spaced(nodes))
        return recurrence_sum(nodes, weighted_values, point, phase_scale);
    return reference_sum(nodes, weighted_values, point, phase_scale);
}

} // namespace gharm::kernels
