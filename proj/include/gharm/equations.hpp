#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gharm/grid.hpp"
#include "gharm/symbol.hpp"
#include "gharm/transform.hpp"

namespace gharm {

/// Prandtl-type equation on (-1,1):
///   c0 u(x)/(1-x^2) + (c1/pi) pv-integral u'(y)/(x-y) dy = f(x),
/// symbol  c0 + 2 c1 xi coth(pi xi), weight order 1.
struct PrandtlSpec {
    complex c0, c1;
    SampledFunction f; // right-hand side as stated (unweighted)
};

/// Tricomi-type equation:
///   c0 v(x) + (c1/pi) pv-integral v(y)/(y-x) dy
///           + (c2/pi) integral v(y)/(1-xy) dy = g(x),
/// symbol  c0 - i c1 tanh(pi xi) + c2 / cosh(pi xi), weight order 0.
struct TricomiSpec {
    complex c0, c1, c2;
    SampledFunction g;
};

/// Lavrentjev-Bitsadze-type equation on (0,1):
///   c0 phi(s) + (c1/pi) integral [1/(tau-s) + (1-2 tau)/(s+tau-2 s tau)] phi(tau) d tau = h(s),
/// symbol  c0 - i c1 tanh(pi xi / 2).  Input samples h[j] live at
/// s_j = (1 + tanh t_j)/2, the image of the line grid.
struct LBSpec {
    complex c0, c1;
    std::vector<complex> h;
};

/// General convolution integro-differential equation of order m; see
/// ide_symbol for the symbol layout.  Kernel entries for zero d_k may be
/// left default-constructed.
struct IDESpec {
    std::vector<complex> c, d;
    std::vector<int> mk, nk;
    std::vector<SampledFunction> kernels;
    SampledFunction w; // right-hand side
};

struct SolveReport {
    SampledFunction solution;        // user-facing unknown (u, v, phi, u)
    SampledFunction g_side_solution; // weighted unknown living on (G, dG)
    double symbol_margin = 0.0;
    double freq_residual = 0.0;
    std::optional<double> space_residual;
    std::vector<std::string> warnings;
    std::optional<InverseDecomposition> decomposition; // Tricomi / LB only
};

Symbol prandtl_symbol(complex c0, complex c1);
Symbol tricomi_symbol(complex c0, complex c1, complex c2);
Symbol lb_symbol(complex c0, complex c1);

SolveReport solve_prandtl(const PrandtlSpec& spec, const FreqGrid& freqs = default_freq_grid());
SolveReport solve_tricomi(const TricomiSpec& spec, const FreqGrid& freqs = default_freq_grid());
SolveReport solve_lb(const LBSpec& spec, const LineGrid& grid = default_line_grid(),
                     const FreqGrid& freqs = default_freq_grid());
SolveReport solve_ide(const IDESpec& spec, const FreqGrid& freqs = default_freq_grid());

/// max over the frequency grid of |a(xi) F(u)(xi) - F(rhs0)(xi)|, divided by
/// max |F(rhs0)|.
double frequency_residual(const Symbol& a, const SampledFunction& solution_g_side,
                          const SampledFunction& rhs0, const FreqGrid& freqs);

/// Relative l2 mismatch of the equation evaluated by principal-value
/// quadrature at `points` interior collocation points (off-grid, between
/// nodes).  Available for the Prandtl and Tricomi families.
double prandtl_space_residual(const PrandtlSpec& spec, const SampledFunction& u,
                              int points = 33, const FreqGrid& freqs = default_freq_grid());
double tricomi_space_residual(const TricomiSpec& spec, const SampledFunction& v0, int points = 33);

/// pv-integral of q(y)/(x - y) dy over (-1,1) with the pole subtracted
/// analytically; q given by its line-chart samples, x = tanh(tau0) with tau0
/// off the sample nodes.
complex pv_integral_line(const SampledFunction& q, double tau0);

} // namespace gharm
