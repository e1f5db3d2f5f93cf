#include "gharm/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <variant>

#include "gharm/errors.hpp"
#include "gharm/transform.hpp"

namespace gharm {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double series_switch = 1e-4;
} // namespace

double xi_coth_pi(double xi) {
    const double z = pi * xi;
    if (std::abs(xi) < series_switch) {
        const double z2 = z * z;
        return (1.0 + z2 / 3.0 - z2 * z2 / 45.0) / pi;
    }
    if (std::abs(z) > 350.0) return std::abs(xi); // coth saturated; avoids inf/inf
    return xi * std::cosh(z) / std::sinh(z);
}

double two_pi_xi_over_sinh_pi(double xi) {
    const double z = pi * xi;
    if (std::abs(xi) < series_switch) {
        const double z2 = z * z;
        return 2.0 * (1.0 - z2 / 6.0 + 7.0 * z2 * z2 / 360.0);
    }
    return 2.0 * z / std::sinh(z);
}

struct ConstantNode {
    complex c;
};
struct PolynomialNode {
    std::vector<complex> coeffs; // in powers of (-2 i xi)
};
struct TanhFamilyNode {
    complex c0, c1, c2;
    double h;
};
struct PrandtlNode {
    complex c0, c1;
};
struct CothNode {};
struct BesselNode {
    double s;
};
struct KernelNode {
    LineTransformEvaluator transform;
};
struct SumNode {
    std::shared_ptr<const Symbol::Node> a, b;
};
struct ProductNode {
    std::shared_ptr<const Symbol::Node> a, b;
};
struct InverseNode {
    std::shared_ptr<const Symbol::Node> a;
};

struct Symbol::Node {
    std::variant<ConstantNode, PolynomialNode, TanhFamilyNode, PrandtlNode, CothNode,
                 BesselNode, KernelNode, SumNode, ProductNode, InverseNode>
        v;
};

namespace {

using Node = Symbol::Node;
using NodePtr = std::shared_ptr<const Node>;

complex eval_node(const Node& n, double xi);

complex eval_poly(const PolynomialNode& p, double xi) {
    const complex z(0.0, -2.0 * xi);
    complex acc(0.0, 0.0);
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

complex eval_node(const Node& n, double xi) {
    return std::visit(
        [xi](const auto& k) -> complex {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, ConstantNode>) {
                return k.c;
            } else if constexpr (std::is_same_v<T, PolynomialNode>) {
                return eval_poly(k, xi);
            } else if constexpr (std::is_same_v<T, TanhFamilyNode>) {
                const double th = std::tanh(k.h * xi);
                const double sch = 1.0 / std::cosh(k.h * xi);
                return k.c0 - complex(0.0, 1.0) * k.c1 * th + k.c2 * sch;
            } else if constexpr (std::is_same_v<T, PrandtlNode>) {
                return k.c0 + 2.0 * k.c1 * xi_coth_pi(xi);
            } else if constexpr (std::is_same_v<T, CothNode>) {
                if (xi == 0.0)
                    throw std::domain_error("coth symbol has a pole at xi = 0");
                if (std::abs(pi * xi) > 350.0) return complex(xi > 0.0 ? 1.0 : -1.0, 0.0);
                return complex(std::cosh(pi * xi) / std::sinh(pi * xi), 0.0);
            } else if constexpr (std::is_same_v<T, BesselNode>) {
                return complex(std::pow(1.0 + xi * xi, 0.5 * k.s), 0.0);
            } else if constexpr (std::is_same_v<T, KernelNode>) {
                return k.transform.group_at(xi);
            } else if constexpr (std::is_same_v<T, SumNode>) {
                return eval_node(*k.a, xi) + eval_node(*k.b, xi);
            } else if constexpr (std::is_same_v<T, ProductNode>) {
                return eval_node(*k.a, xi) * eval_node(*k.b, xi);
            } else {
                static_assert(std::is_same_v<T, InverseNode>);
                return 1.0 / eval_node(*k.a, xi);
            }
        },
        n.v);
}

double order_node(const Node& n) {
    return std::visit(
        [](const auto& k) -> double {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, ConstantNode>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, PolynomialNode>) {
                int deg = 0;
                for (std::size_t i = 0; i < k.coeffs.size(); ++i)
                    if (k.coeffs[i] != complex(0.0, 0.0)) deg = static_cast<int>(i);
                return static_cast<double>(deg);
            } else if constexpr (std::is_same_v<T, TanhFamilyNode>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, PrandtlNode>) {
                return k.c1 == complex(0.0, 0.0) ? 0.0 : 1.0;
            } else if constexpr (std::is_same_v<T, CothNode>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, BesselNode>) {
                return k.s;
            } else if constexpr (std::is_same_v<T, KernelNode>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, SumNode>) {
                return std::max(order_node(*k.a), order_node(*k.b));
            } else if constexpr (std::is_same_v<T, ProductNode>) {
                return order_node(*k.a) + order_node(*k.b);
            } else {
                static_assert(std::is_same_v<T, InverseNode>);
                return -order_node(*k.a);
            }
        },
        n.v);
}

bool pole_node(const Node& n) {
    return std::visit(
        [](const auto& k) -> bool {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, CothNode>) return true;
            else if constexpr (std::is_same_v<T, SumNode>) return pole_node(*k.a) || pole_node(*k.b);
            else if constexpr (std::is_same_v<T, ProductNode>) return pole_node(*k.a) || pole_node(*k.b);
            else if constexpr (std::is_same_v<T, InverseNode>) return pole_node(*k.a);
            else return false;
        },
        n.v);
}

// Limit of a(xi)/<xi>^order at the given end, when finite.
std::optional<complex> limit_node(const Node& n, bool pos) {
    return std::visit(
        [pos, &n](const auto& k) -> std::optional<complex> {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, ConstantNode>) {
                return k.c;
            } else if constexpr (std::is_same_v<T, PolynomialNode>) {
                const int deg = static_cast<int>(order_node(n));
                if (deg == 0)
                    return k.coeffs.empty() ? complex(0.0, 0.0) : k.coeffs[0];
                // (-2 i xi)^deg / |xi|^deg -> (-2 i sgn)^deg
                complex dir = pos ? complex(0.0, -2.0) : complex(0.0, 2.0);
                complex lead = k.coeffs[deg];
                complex p(1.0, 0.0);
                for (int i = 0; i < deg; ++i) p *= dir;
                return lead * p;
            } else if constexpr (std::is_same_v<T, TanhFamilyNode>) {
                if (k.h == 0.0) return k.c0 + k.c2;
                const double sgn = (k.h > 0.0) == pos ? 1.0 : -1.0;
                return k.c0 - complex(0.0, 1.0) * k.c1 * sgn;
            } else if constexpr (std::is_same_v<T, PrandtlNode>) {
                // xi coth(pi xi) ~ |xi| at both ends
                if (k.c1 == complex(0.0, 0.0)) return k.c0;
                return 2.0 * k.c1;
            } else if constexpr (std::is_same_v<T, CothNode>) {
                return complex(pos ? 1.0 : -1.0, 0.0);
            } else if constexpr (std::is_same_v<T, BesselNode>) {
                return complex(1.0, 0.0);
            } else if constexpr (std::is_same_v<T, KernelNode>) {
                return complex(0.0, 0.0); // L1 kernel: transform vanishes at infinity
            } else if constexpr (std::is_same_v<T, SumNode>) {
                const double oa = order_node(*k.a), ob = order_node(*k.b);
                const double o = std::max(oa, ob);
                auto la = limit_node(*k.a, pos), lb = limit_node(*k.b, pos);
                if (!la || !lb) return std::nullopt;
                complex acc(0.0, 0.0);
                if (oa == o) acc += *la;
                if (ob == o) acc += *lb;
                return acc;
            } else if constexpr (std::is_same_v<T, ProductNode>) {
                auto la = limit_node(*k.a, pos), lb = limit_node(*k.b, pos);
                if (!la || !lb) return std::nullopt;
                return *la * *lb;
            } else {
                static_assert(std::is_same_v<T, InverseNode>);
                auto la = limit_node(*k.a, pos);
                if (!la || *la == complex(0.0, 0.0)) return std::nullopt;
                return 1.0 / *la;
            }
        },
        n.v);
}

NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

} // namespace

complex Symbol::eval(double xi) const { return eval_node(*node_, xi); }
double Symbol::weight_order() const { return order_node(*node_); }
bool Symbol::has_pole_at_zero() const { return pole_node(*node_); }
std::optional<complex> Symbol::weighted_limit(bool pos) const { return limit_node(*node_, pos); }

Symbol Symbol::operator+(const Symbol& rhs) const {
    return Symbol(make(Node{SumNode{node_, rhs.node_}}));
}
Symbol Symbol::operator*(const Symbol& rhs) const {
    return Symbol(make(Node{ProductNode{node_, rhs.node_}}));
}
Symbol Symbol::inverse() const { return Symbol(make(Node{InverseNode{node_}})); }

Symbol Symbol::constant(complex c) { return Symbol(make(Node{ConstantNode{c}})); }
Symbol Symbol::polynomial(std::vector<complex> coeffs) {
    if (coeffs.empty()) coeffs.push_back(complex(0.0, 0.0));
    return Symbol(make(Node{PolynomialNode{std::move(coeffs)}}));
}
Symbol Symbol::tanh_family(complex c0, complex c1, complex c2, double h) {
    return Symbol(make(Node{TanhFamilyNode{c0, c1, c2, h}}));
}
Symbol Symbol::prandtl(complex c0, complex c1) {
    return Symbol(make(Node{PrandtlNode{c0, c1}}));
}
Symbol Symbol::coth() { return Symbol(make(Node{CothNode{}})); }
Symbol Symbol::bessel_weight(double s) { return Symbol(make(Node{BesselNode{s}})); }

Symbol Symbol::kernel_transform(const SampledFunction& kernel) {
    return Symbol(make(Node{KernelNode{LineTransformEvaluator(kernel)}}));
}

namespace {

constexpr int scan_points = 20001;
constexpr double scan_extent = 8.0;

std::vector<double> scan_grid(bool avoid_zero, int points = scan_points) {
    if (avoid_zero && points % 2 != 0) --points; // even staggered count keeps
                                                 // 0 off nodes and stencils
    std::vector<double> xs(points);
    if (avoid_zero) {
        const double h = 2.0 * scan_extent / points;
        for (int i = 0; i < points; ++i) xs[i] = -scan_extent + (i + 0.5) * h;
    } else {
        const double h = 2.0 * scan_extent / (points - 1);
        for (int i = 0; i < points; ++i) xs[i] = -scan_extent + i * h;
    }
    return xs;
}

double weighted_modulus(const Symbol& a, double r, double xi) {
    return std::abs(a.eval(xi)) * std::pow(1.0 + xi * xi, -0.5 * r);
}

} // namespace

EllipticityScan ellipticity_scan(const Symbol& a, double r) {
    EllipticityScan out;
    out.margin = std::numeric_limits<double>::infinity();
    for (double xi : scan_grid(a.has_pole_at_zero())) {
        const double m = weighted_modulus(a, r, xi);
        if (m < out.margin) {
            out.margin = m;
            out.xi_at_min = xi;
        }
    }
    const double w = a.weight_order();
    for (bool pos : {false, true}) {
        double limit_mod;
        if (r > w) {
            limit_mod = 0.0; // over-weighted: modulus decays to zero
        } else if (r < w) {
            continue; // under-weighted: modulus grows, cannot lower the inf
        } else {
            auto lim = a.weighted_limit(pos);
            if (!lim) continue;
            limit_mod = std::abs(*lim);
        }
        if (limit_mod < out.margin) {
            out.margin = limit_mod;
            out.xi_at_min = pos ? std::numeric_limits<double>::infinity()
                                : -std::numeric_limits<double>::infinity();
        }
    }
    return out;
}

double ellipticity_margin(const Symbol& a, double r) { return ellipticity_scan(a, r).margin; }

complex InverseDecomposition::reassemble(int k) const {
    return d0 - d1 * std::tanh(h * grid.node(k)) + tail[k];
}

InverseDecomposition invert_tanh_family(complex c0, complex c1, complex c2, double h,
                                        const FreqGrid& grid) {
    const Symbol a = Symbol::tanh_family(c0, c1, c2, h);
    const EllipticityScan scan = ellipticity_scan(a, 0.0);
    if (scan.margin <= ellipticity_threshold)
        throw NotElliptic(scan.xi_at_min, scan.margin,
                          "tanh-family symbol is not elliptic: |a| attains " +
                              std::to_string(scan.margin) + " near xi = " +
                              std::to_string(scan.xi_at_min));

    InverseDecomposition dec;
    const complex ip = 1.0 / (c0 + complex(0.0, 1.0) * c1);
    const complex im = 1.0 / (c0 - complex(0.0, 1.0) * c1);
    dec.d0 = 0.5 * (ip + im);
    dec.d1 = 0.5 * (ip - im);
    dec.h = h;
    dec.grid = grid;
    dec.tail.resize(grid.count);
    for (int k = 0; k < grid.count; ++k) {
        const double xi = grid.node(k);
        dec.tail[k] = 1.0 / a.eval(xi) - dec.d0 + dec.d1 * std::tanh(h * xi);
    }
    return dec;
}

double tail_decay_slope(const InverseDecomposition& dec) {
    // least squares of log|tail| against |xi| over 2 <= |xi| <= 6
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (int k = 0; k < dec.grid.count; ++k) {
        const double xi = std::abs(dec.grid.node(k));
        if (xi < 2.0 || xi > 6.0) continue;
        const double m = std::abs(dec.tail[k]);
        if (m <= 0.0) continue;
        const double y = std::log(m);
        sx += xi;
        sy += y;
        sxx += xi * xi;
        sxy += xi * y;
        ++n;
    }
    if (n < 2) throw ValidationError("tail_decay_slope: not enough tabulated points in 2<=|xi|<=6");
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

namespace {

struct ScanStats {
    double tv = 0.0;
    double m0 = 0.0;
    double m1 = 0.0;
};

ScanStats diagnostics_pass(const Symbol& a, double r, int points) {
    const auto xs = scan_grid(a.has_pole_at_zero(), points);
    const double h = xs[1] - xs[0];
    ScanStats s;
    complex prev = a.eval(xs[0]) * std::pow(1.0 + xs[0] * xs[0], -0.5 * r);
    s.m0 = std::abs(prev);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double xi = xs[i];
        const complex w = a.eval(xi) * std::pow(1.0 + xi * xi, -0.5 * r);
        s.tv += std::abs(w - prev);
        s.m0 = std::max(s.m0, std::abs(w));
        prev = w;
        if (i + 1 < xs.size()) {
            const complex d = (a.eval(xi + h) - a.eval(xi - h)) / (2.0 * h);
            s.m1 = std::max(s.m1, std::abs(xi * d) * std::pow(1.0 + xi * xi, -0.5 * r));
        }
    }
    return s;
}

} // namespace

MultiplierReport multiplier_diagnostics(const Symbol& a, double r) {
    const ScanStats coarse = diagnostics_pass(a, r, scan_points);
    const ScanStats fine = diagnostics_pass(a, r, 2 * scan_points - 1);

    MultiplierReport rep;
    rep.margin = ellipticity_margin(a, r);
    rep.total_variation = fine.tv;
    rep.mikhlin_m0 = fine.m0;
    rep.mikhlin_m1 = fine.m1;

    auto grew = [](double c, double f) {
        return f > 10.0 * std::numeric_limits<double>::min() && f > c * 1.1 + 1e-12;
    };
    rep.diverging = grew(coarse.tv, fine.tv) || grew(coarse.m0, fine.m0) ||
                    grew(coarse.m1, fine.m1) || !std::isfinite(fine.tv) ||
                    !std::isfinite(fine.m0) || !std::isfinite(fine.m1);
    rep.verdict = rep.diverging ? "not a multiplier" : "multiplier";
    return rep;
}

Symbol ide_symbol(const std::vector<complex>& c, const std::vector<complex>& d,
                  const std::vector<int>& mk, const std::vector<int>& nk,
                  const std::vector<SampledFunction>& kernels) {
    const std::size_t terms = c.size();
    if (d.size() != terms || mk.size() != terms || nk.size() != terms)
        throw ValidationError("ide_symbol: coefficient arrays must share one length m+1");
    const int m = static_cast<int>(terms) - 1;
    for (std::size_t k = 0; k < terms; ++k) {
        if (mk[k] < 0 || nk[k] < 0)
            throw ValidationError("ide_symbol: derivative orders must be non-negative");
        if (d[k] != complex(0.0, 0.0) && mk[k] + nk[k] > m)
            throw ValidationError("order hypothesis violated: m_k + n_k > m");
        if (d[k] != complex(0.0, 0.0) && k >= kernels.size())
            throw ValidationError("ide_symbol: kernel term " + std::to_string(k) +
                                  " has no kernel samples");
    }

    Symbol sym = Symbol::polynomial(c);
    for (std::size_t k = 0; k < terms; ++k) {
        if (d[k] == complex(0.0, 0.0)) continue;
        std::vector<complex> mono(static_cast<std::size_t>(mk[k] + nk[k]) + 1, complex(0.0, 0.0));
        mono.back() = d[k];
        sym = sym + Symbol::polynomial(std::move(mono)) * Symbol::kernel_transform(kernels[k]);
    }
    return sym;
}

} // namespace gharm
