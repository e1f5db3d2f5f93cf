#pragma once

#include <stdexcept>
#include <string>

namespace gharm {

/// Thrown when a point or a group operation result leaves the representable
/// band |x| <= 1 - boundary_margin.
class BoundaryOverflow : public std::domain_error {
public:
    explicit BoundaryOverflow(const std::string& what) : std::domain_error(what) {}
};

/// Thrown by solvers and the symbol inverter when the symbol has a zero
/// (its weighted modulus dips below the ellipticity threshold).
class NotElliptic : public std::runtime_error {
public:
    NotElliptic(double xi_at_min, double margin, const std::string& what)
        : std::runtime_error(what), xi_at_min_(xi_at_min), margin_(margin) {}
    double xi_at_min() const { return xi_at_min_; }
    double margin() const { return margin_; }

private:
    double xi_at_min_;
    double margin_;
};

/// Thrown when an operand is required to decay at the grid ends but does not.
class NonDecaying : public std::runtime_error {
public:
    explicit NonDecaying(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by parseval_ratio when the reference inner product is too small.
class DegeneratePairing : public std::domain_error {
public:
    explicit DegeneratePairing(const std::string& what) : std::domain_error(what) {}
};

/// Input/spec validation failure (bad JSON contents, grid mismatch, ...).
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace gharm
