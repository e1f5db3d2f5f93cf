#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gharm/grid.hpp"

namespace gharm {

/// Closed-form frequency multipliers a(xi) with a declared growth class
/// <xi>^r.  Built from a small set of primitives and closed under sum,
/// product and pointwise inverse.
///
/// Primitives:
///   constant(c)
///   polynomial(c0..cm)        sum of c_k (-2 i xi)^k   (derivative calculus)
///   tanh_family(c0,c1,c2,h)   c0 - i c1 tanh(h xi) + c2 / cosh(h xi)
///   prandtl(c0,c1)            c0 + 2 c1 xi coth(pi xi)   (removable at 0)
///   coth()                    coth(pi xi), genuine pole at 0
///   bessel_weight(s)          (1 + xi^2)^{s/2}
///   kernel_transform(k)       numerically transformed kernel samples
class Symbol {
public:
    complex eval(double xi) const;
    double weight_order() const;
    bool has_pole_at_zero() const;

    /// Limit of a(xi)/<xi>^{weight_order} as xi -> +inf / -inf.
    /// Unset when the limit is not finite (inverse of a symbol vanishing at
    /// infinity).
    std::optional<complex> weighted_limit(bool positive_end) const;

    Symbol operator+(const Symbol& rhs) const;
    Symbol operator*(const Symbol& rhs) const;
    Symbol inverse() const;

    static Symbol constant(complex c);
    static Symbol polynomial(std::vector<complex> coeffs_in_minus_2i_xi);
    static Symbol tanh_family(complex c0, complex c1, complex c2, double h);
    static Symbol prandtl(complex c0, complex c1);
    static Symbol coth();
    static Symbol bessel_weight(double s);
    static Symbol kernel_transform(const SampledFunction& kernel);

    struct Node;

private:
    explicit Symbol(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// xi coth(pi xi) with the even Taylor series through xi^4 below |xi| < 1e-4.
double xi_coth_pi(double xi);
/// 2 pi xi / sinh(pi xi), series below |xi| < 1e-4.
double two_pi_xi_over_sinh_pi(double xi);

struct EllipticityScan {
    double margin = 0.0;    // estimated inf over xi of |<xi>^{-r} a(xi)|
    double xi_at_min = 0.0; // where the scan attained it
};

inline constexpr double ellipticity_threshold = 1e-10;

/// Dense scan of |<xi>^{-r} a(xi)| over [-8, 8] (20001 points, staggered when
/// the symbol has a pole at 0) combined with the analytic limits at +-inf.
/// A heuristic for tabulated symbols; exact for the monotone-tailed closed
/// forms used here.
EllipticityScan ellipticity_scan(const Symbol& a, double r);
double ellipticity_margin(const Symbol& a, double r);

/// Inverse of an elliptic tanh-family symbol, split as
///   a^{-1}(xi) = d0 - d1 tanh(h xi) + tail(xi),
/// with the tail tabulated on `grid` and decaying like e^{-|h xi|}.
struct InverseDecomposition {
    complex d0{0.0, 0.0};
    complex d1{0.0, 0.0};
    double h = 0.0;
    FreqGrid grid;
    std::vector<complex> tail;

    complex reassemble(int k) const; // a^{-1}(grid.node(k))
};

InverseDecomposition invert_tanh_family(complex c0, complex c1, complex c2, double h,
                                        const FreqGrid& grid = default_freq_grid());

/// Least-squares slope of log|tail| against |xi| over 2 <= |xi| <= 6.
double tail_decay_slope(const InverseDecomposition& dec);

/// Numerical boundedness certificates for the weighted symbol <xi>^{-r} a:
/// grid total variation, Mikhlin-type sup bounds, and a divergence verdict
/// from refinement doubling.
struct MultiplierReport {
    double margin = 0.0;
    double total_variation = 0.0;
    double mikhlin_m0 = 0.0; // sup |<xi>^{-r} a|
    double mikhlin_m1 = 0.0; // sup |xi a'(xi)| <xi>^{-r}
    bool diverging = false;
    std::string verdict; // "multiplier" | "not a multiplier"
};

MultiplierReport multiplier_diagnostics(const Symbol& a, double r);

/// Symbol of the general convolution integro-differential operator of order
/// m: sum of c_k (-2 i xi)^k plus d_k (-2 i xi)^{mk+nk} times the transform
/// of the k-th kernel.  Requires mk + nk <= m throughout.
Symbol ide_symbol(const std::vector<complex>& c, const std::vector<complex>& d,
                  const std::vector<int>& mk, const std::vector<int>& nk,
                  const std::vector<SampledFunction>& kernels);

} // namespace gharm
