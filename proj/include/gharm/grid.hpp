#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "gharm/errors.hpp"

namespace gharm {

using complex = std::complex<double>;

/// Uniform grid in the line chart t = atanh(x), covering [-T, T].
///
/// Regular layout:   t_j = -T + j h,       j = 0..N-1,  h = 2T/N
/// Staggered layout: t_j = -T + (j+1/2) h  (symmetric about 0, no node at 0;
///                   used for principal-value sums)
struct LineGrid {
    double half_width = 20.0; // T
    int count = 4096;         // N, power of two
    bool staggered = false;

    LineGrid() = default;
    LineGrid(double T, int N, bool stag = false) : half_width(T), count(N), staggered(stag) {
        if (!(T >= 1.0))
            throw ValidationError("line grid half-width must be >= 1");
        if (N < 16 || (N & (N - 1)) != 0)
            throw ValidationError("line grid count must be a power of two >= 16");
    }

    double spacing() const { return 2.0 * half_width / count; }
    double node(int j) const {
        return -half_width + (static_cast<double>(j) + (staggered ? 0.5 : 0.0)) * spacing();
    }
    /// Quadrature weight of node j (trapezoid on the regular layout, midpoint
    /// on the staggered one).
    double weight(int j) const {
        const double h = spacing();
        if (staggered) return h;
        return (j == 0 || j == count - 1) ? 0.5 * h : h;
    }
    LineGrid staggered_twin() const { return LineGrid(half_width, count, true); }

    bool operator==(const LineGrid& o) const {
        return half_width == o.half_width && count == o.count && staggered == o.staggered;
    }
};

/// Uniform frequency grid covering [-Xi, Xi].
///
/// Regular layout includes both endpoints (M-1 panels); the staggered layout
/// places nodes at half steps, symmetric about 0 with no node at 0.
struct FreqGrid {
    double xi_max = 8.0; // Xi
    int count = 1025;    // M
    bool staggered = false;

    FreqGrid() = default;
    FreqGrid(double Xi, int M, bool stag = false) : xi_max(Xi), count(M), staggered(stag) {
        if (!(Xi > 0.0)) throw ValidationError("frequency grid extent must be positive");
        if (M < 16) throw ValidationError("frequency grid needs at least 16 points");
        if (stag && M % 2 != 0)
            throw ValidationError("staggered frequency grid needs an even count (no node at 0)");
    }

    double spacing() const {
        return staggered ? 2.0 * xi_max / count : 2.0 * xi_max / (count - 1);
    }
    double node(int k) const {
        return -xi_max + (static_cast<double>(k) + (staggered ? 0.5 : 0.0)) * spacing();
    }
    double weight(int k) const {
        const double h = spacing();
        if (staggered) return h;
        return (k == 0 || k == count - 1) ? 0.5 * h : h;
    }
    FreqGrid staggered_twin() const {
        return FreqGrid(xi_max, count % 2 == 0 ? count : count - 1, true);
    }

    bool operator==(const FreqGrid& o) const {
        return xi_max == o.xi_max && count == o.count && staggered == o.staggered;
    }
};

/// Which description the sample array carries.  Under the pullback
/// x = tanh t the two charts hold identical value arrays; the tag only
/// documents intent.
enum class Chart { g_chart, line_chart };

/// Complex samples on a LineGrid.  values[j] is phi(t_j) in the line chart,
/// equivalently phi0(tanh t_j) on the group.
struct SampledFunction {
    LineGrid grid;
    std::vector<complex> values;
    Chart chart = Chart::line_chart;

    SampledFunction() = default;
    SampledFunction(LineGrid g, std::vector<complex> v, Chart c = Chart::line_chart)
        : grid(g), values(std::move(v)), chart(c) {
        if (static_cast<int>(values.size()) != grid.count)
            throw ValidationError("sample count does not match grid");
    }
};

/// Values of a group Fourier transform on a FreqGrid.
struct Spectrum {
    FreqGrid freqs;
    std::vector<complex> values;

    Spectrum() = default;
    Spectrum(FreqGrid f, std::vector<complex> v) : freqs(f), values(std::move(v)) {
        if (static_cast<int>(values.size()) != freqs.count)
            throw ValidationError("spectrum value count does not match frequency grid");
    }
};

inline LineGrid default_line_grid() { return LineGrid(20.0, 4096); }
inline FreqGrid default_freq_grid() { return FreqGrid(8.0, 1025); }

/// Quadrature mass at the grid ends above which transforms flag truncation.
/// Process-wide; the CLI --tol flag overrides it.
inline double truncation_tolerance = 1e-10;

inline SampledFunction sample(const LineGrid& grid,
                              const std::function<complex(double)>& f,
                              Chart chart = Chart::line_chart) {
    std::vector<complex> v(grid.count);
    for (int j = 0; j < grid.count; ++j) v[j] = f(grid.node(j));
    return SampledFunction(grid, std::move(v), chart);
}

/// Built-in test functions, named after their line-chart pullbacks.
///   sech  : sqrt(1-x^2) on the group
///   sech2 : 1-x^2
///   gauss : exp(-t^2)
inline SampledFunction builtin_function(const std::string& name, const LineGrid& grid) {
    if (name == "sech")
        return sample(grid, [](double t) { return complex(1.0 / std::cosh(t), 0.0); });
    if (name == "sech2") {
        return sample(grid, [](double t) {
            const double s = 1.0 / std::cosh(t);
            return complex(s * s, 0.0);
        });
    }
    if (name == "gauss")
        return sample(grid, [](double t) { return complex(std::exp(-t * t), 0.0); });
    throw ValidationError("unknown builtin function: " + name);
}

} // namespace gharm
