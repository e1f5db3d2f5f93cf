#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "gharm/errors.hpp"

namespace gharm {

using complex = std::complex<double>;

/// Points closer to +-1 than this cannot be told apart from the boundary in
/// double precision (atanh blows up), so construction rejects them.
inline constexpr double boundary_margin = 1e-15;

/// A point of the multiplicative interval group G = (-1,1),
/// x o y = (x+y)/(1+xy).  Identity is 0, the inverse of x is -x.
class GroupPoint {
public:
    explicit GroupPoint(double x) : x_(x) {
        if (!std::isfinite(x) || std::abs(x) > 1.0 - boundary_margin)
            throw BoundaryOverflow("group point outside (-1,1) representable band: x=" +
                                   std::to_string(x));
    }
    double x() const { return x_; }

private:
    double x_;
};

/// Coordinate in the line chart t = atanh(x).
class LinePoint {
public:
    explicit LinePoint(double t) : t_(t) {
        if (!std::isfinite(t))
            throw ValidationError("line point must be finite");
    }
    double t() const { return t_; }

private:
    double t_;
};

inline GroupPoint compose(GroupPoint a, GroupPoint b) {
    const double r = (a.x() + b.x()) / (1.0 + a.x() * b.x());
    if (std::abs(r) > 1.0 - boundary_margin)
        throw BoundaryOverflow("group composition left the representable band (arguments too close to +-1)");
    return GroupPoint(r);
}

inline GroupPoint group_inverse(GroupPoint a) { return GroupPoint(-a.x()); }

inline LinePoint to_line(GroupPoint p) { return LinePoint(std::atanh(p.x())); }

inline GroupPoint from_line(LinePoint q) { return GroupPoint(std::tanh(q.t())); }

/// Density of the invariant measure dG(x) = dx/(1-x^2) w.r.t. Lebesgue dx.
inline double haar_weight(GroupPoint p) { return 1.0 / ((1.0 - p.x()) * (1.0 + p.x())); }

/// Unitary character ((1+x)/(1-x))^{i xi} = exp(2 i xi atanh x).  Evaluated
/// through the line chart; the power form cancels catastrophically near +-1.
inline complex character(GroupPoint p, double xi) {
    return std::polar(1.0, 2.0 * xi * std::atanh(p.x()));
}

} // namespace gharm
