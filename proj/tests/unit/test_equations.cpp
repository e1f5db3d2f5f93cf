#include <doctest.h>

#include <numbers>
#include <random>

#include "gharm/equations.hpp"
#include "gharm/errors.hpp"
#include "gharm/operators.hpp"
#include "test_helpers.hpp"

using namespace gharm;
using gharm_test::rel_l2;

namespace {
constexpr double pi = std::numbers::pi;

SampledFunction times_cosh(const SampledFunction& f, int power) {
    SampledFunction out = f;
    for (int j = 0; j < f.grid.count; ++j)
        out.values[j] *= std::pow(std::cosh(f.grid.node(j)), power);
    return out;
}
} // namespace

TEST_SUITE("equations") {

TEST_CASE("Prandtl: constant-coefficient degenerate cases") {
    const LineGrid g = default_line_grid();
    SUBCASE("c1 = 0 returns the weighted right-hand side") {
        const SampledFunction f = builtin_function("gauss", g);
        const SolveReport rep = solve_prandtl({complex(1.0, 0.0), complex(0.0, 0.0), f});
        const SampledFunction want = sample(g, [](double t) {
            const double s = 1.0 / std::cosh(t);
            return complex(s * s * std::exp(-t * t), 0.0);
        });
        CHECK(rel_l2(rep.solution.values, want.values) < 1e-9);
    }
    SUBCASE("symbol zero at the origin is caught") {
        const SampledFunction f = builtin_function("sech2", g);
        try {
            solve_prandtl({complex(-1.0, 0.0), complex(0.5 * pi, 0.0), f});
            FAIL("expected NotElliptic");
        } catch (const NotElliptic& e) {
            CHECK(std::abs(e.xi_at_min()) <= 0.01);
        }
        // the analytic zero really is at xi = 0
        CHECK(std::abs(prandtl_symbol(complex(-1.0, 0.0), complex(0.5 * pi, 0.0)).eval(0.0)) < 1e-14);
    }
}

TEST_CASE("Tricomi: degenerate and manufactured") {
    const LineGrid g = default_line_grid();
    SUBCASE("c1 = c2 = 0 divides by c0") {
        const SampledFunction grhs = builtin_function("gauss", g);
        const SolveReport rep =
            solve_tricomi({complex(2.0, 0.0), complex(0.0, 0.0), complex(0.0, 0.0), grhs});
        // the weighted unknown carries the accuracy; the unweighted solution
        // divides by sqrt(1-x^2), which amplifies round-off near the ends
        SampledFunction want0 = grhs;
        for (int j = 0; j < g.count; ++j) want0.values[j] *= 0.5 / std::cosh(g.node(j));
        CHECK(rel_l2(rep.g_side_solution.values, want0.values) < 1e-9);
        for (int j = g.count / 4; j < 3 * g.count / 4; j += 256)
            CHECK(std::abs(rep.solution.values[j] - 0.5 * grhs.values[j]) < 1e-9);
    }
    SUBCASE("1 - sech has a zero at the origin") {
        const SampledFunction grhs = builtin_function("sech2", g);
        try {
            solve_tricomi({complex(1.0, 0.0), complex(0.0, 0.0), complex(-1.0, 0.0), grhs});
            FAIL("expected NotElliptic");
        } catch (const NotElliptic& e) {
            CHECK(std::abs(e.xi_at_min()) <= 0.01);
        }
    }
    SUBCASE("decomposition is exposed with the pi rate") {
        const SampledFunction grhs = builtin_function("gauss", g);
        const SolveReport rep =
            solve_tricomi({complex(2.0, 0.0), complex(1.0, 0.0), complex(0.5, 0.0), grhs});
        REQUIRE(rep.decomposition.has_value());
        CHECK(rep.decomposition->h == doctest::Approx(pi));
        CHECK(tail_decay_slope(*rep.decomposition) <= -0.9 * pi);
    }
}

TEST_CASE("Lavrentjev-Bitsadze") {
    const LineGrid g = default_line_grid();
    SUBCASE("c1 = 0 divides by c0") {
        LBSpec spec{complex(2.0, 0.0), complex(0.0, 0.0), {}};
        spec.h.assign(g.count, complex(0.0, 0.0));
        for (int j = 0; j < g.count; ++j) spec.h[j] = std::exp(-std::pow(g.node(j), 2));
        const SolveReport rep = solve_lb(spec, g);
        // compare where the back-substitution weight 1/(1-x^2) = cosh^2(t)
        // does not amplify the solver's absolute round-off
        double worst = 0.0;
        for (int j = 0; j < g.count; ++j) {
            if (std::abs(g.node(j)) > 4.0) continue;
            worst = std::max(worst, std::abs(rep.solution.values[j] - 0.5 * spec.h[j]));
        }
        CHECK(worst < 1e-8);
    }
    SUBCASE("c0 = 0 is degenerate at the origin") {
        LBSpec spec{complex(0.0, 0.0), complex(1.0, 0.0), std::vector<complex>(g.count)};
        for (int j = 0; j < g.count; ++j) spec.h[j] = std::exp(-std::pow(g.node(j), 2));
        try {
            solve_lb(spec, g);
            FAIL("expected NotElliptic");
        } catch (const NotElliptic& e) {
            CHECK(std::abs(e.xi_at_min()) <= 0.01);
        }
    }
    SUBCASE("decomposition carries the half rate") {
        LBSpec spec{complex(2.0, 0.0), complex(1.0, 0.0), std::vector<complex>(g.count)};
        for (int j = 0; j < g.count; ++j) spec.h[j] = std::exp(-std::pow(g.node(j), 2));
        const SolveReport rep = solve_lb(spec, g);
        REQUIRE(rep.decomposition.has_value());
        CHECK(rep.decomposition->h == doctest::Approx(0.5 * pi));
        CHECK(tail_decay_slope(*rep.decomposition) <= -0.45 * pi);
    }
    SUBCASE("sample count must match the grid") {
        LBSpec spec{complex(1.0, 0.0), complex(0.0, 0.0), std::vector<complex>(7)};
        CHECK_THROWS_AS(solve_lb(spec, g), ValidationError);
    }
}

TEST_CASE("general integro-differential equation") {
    const LineGrid g = default_line_grid();
    SUBCASE("order zero with a constant is plain division") {
        IDESpec spec;
        spec.c = {complex(5.0, 0.0)};
        spec.d = {complex(0.0, 0.0)};
        spec.mk = {0};
        spec.nk = {0};
        spec.w = builtin_function("gauss", g);
        const SolveReport rep = solve_ide(spec);
        SampledFunction want = spec.w;
        for (auto& v : want.values) v /= 5.0;
        CHECK(rel_l2(rep.solution.values, want.values) < 1e-9);
        CHECK(rep.symbol_margin == doctest::Approx(5.0).epsilon(1e-12));
    }
    SUBCASE("pure first derivative fails the weighted ellipticity test") {
        IDESpec spec;
        spec.c = {complex(0.0, 0.0), complex(1.0, 0.0)};
        spec.d = {complex(0.0, 0.0), complex(0.0, 0.0)};
        spec.mk = {0, 0};
        spec.nk = {0, 0};
        spec.w = builtin_function("gauss", g);
        try {
            solve_ide(spec);
            FAIL("expected NotElliptic");
        } catch (const NotElliptic& e) {
            CHECK(std::abs(e.xi_at_min()) <= 0.01);
        }
    }
}

TEST_CASE("manufactured solve with complex coefficients") {
    const LineGrid g = default_line_grid();
    const FreqGrid fg = default_freq_grid();
    const complex c0(1.0, 0.5), c1(0.75, -0.25);
    const SampledFunction ustar = builtin_function("sech2", g);
    const SampledFunction rhs0 = ConvolutionOperator{prandtl_symbol(c0, c1), g, fg}.apply(ustar);
    const SolveReport rep = solve_prandtl({c0, c1, times_cosh(rhs0, 2)}, fg);
    CHECK(rel_l2(rep.solution.values, ustar.values) < 1e-6);
    CHECK(rep.freq_residual < 1e-8);
}

TEST_CASE("frequency residual reacts to corruption") {
    const LineGrid g = default_line_grid();
    const FreqGrid fg = default_freq_grid();
    const complex c0(1.0, 0.0), c1(1.0, 0.0);
    const SampledFunction ustar = builtin_function("sech2", g);
    const Symbol p = prandtl_symbol(c0, c1);
    const SampledFunction rhs0 = ConvolutionOperator{p, g, fg}.apply(ustar);
    const SolveReport rep = solve_prandtl({c0, c1, times_cosh(rhs0, 2)}, fg);
    CHECK(rep.freq_residual < 1e-8);

    SampledFunction corrupted = rep.solution;
    for (int j = 0; j < g.count; ++j)
        corrupted.values[j] += 0.1 * std::exp(-std::pow(g.node(j) - 0.7, 2));
    CHECK(frequency_residual(p, corrupted, rhs0, fg) > 1e-3);
}

TEST_CASE("zero right-hand side gives zero residual and solution") {
    const LineGrid g = default_line_grid();
    const SampledFunction zero = sample(g, [](double) { return complex(0.0, 0.0); });
    const SolveReport rep = solve_prandtl({complex(1.0, 0.0), complex(1.0, 0.0), zero});
    for (const complex& v : rep.solution.values) CHECK(v == complex(0.0, 0.0));
    CHECK(rep.freq_residual == 0.0);
}

TEST_CASE("Prandtl equivalence of the multiplied form") {
    // the multiplied form c0 u + (1-x^2)(c1/pi) pv-int u'/(x-y) evaluated by
    // quadrature on the computed solution matches (1-x^2) f
    const LineGrid g = default_line_grid();
    const FreqGrid fg = default_freq_grid();
    const complex c0(1.0, 0.0), c1(1.0, 0.0);
    const SampledFunction ustar = builtin_function("sech2", g);
    const SampledFunction rhs0 = ConvolutionOperator{prandtl_symbol(c0, c1), g, fg}.apply(ustar);
    const PrandtlSpec spec{c0, c1, times_cosh(rhs0, 2)};
    const SolveReport rep = solve_prandtl(spec, fg);

    const SampledFunction uprime = times_cosh(d_g(rep.solution, 1, fg), 2);
    const double h = g.spacing();
    std::vector<complex> got, want;
    for (int i = 0; i < 33; ++i) {
        const double target = -2.0 + 4.0 * i / 32.0;
        const double tau = std::floor((target - g.node(0)) / h) * h + g.node(0) + 0.5 * h;
        const double x = std::tanh(tau);
        const complex ux = interpolate_cubic(rep.solution, tau);
        got.push_back(c0 * ux + (1.0 - x * x) * c1 / pi * pv_integral_line(uprime, tau));
        want.push_back(interpolate_cubic(rhs0, tau));
    }
    CHECK(rel_l2(got, want) < 1e-4);
}

TEST_CASE("space residuals on manufactured solves") {
    const LineGrid g = default_line_grid();
    const FreqGrid fg = default_freq_grid();
    SUBCASE("prandtl") {
        const complex c0(1.0, 0.0), c1(1.0, 0.0);
        const SampledFunction ustar = builtin_function("sech2", g);
        const SampledFunction rhs0 = ConvolutionOperator{prandtl_symbol(c0, c1), g, fg}.apply(ustar);
        const PrandtlSpec spec{c0, c1, times_cosh(rhs0, 2)};
        const SolveReport rep = solve_prandtl(spec, fg);
        CHECK(prandtl_space_residual(spec, rep.solution, 33, fg) < 1e-4);
    }
    SUBCASE("tricomi") {
        const complex c0(2.0, 0.0), c1(1.0, 0.0), c2(0.5, 0.0);
        const SampledFunction v0star = builtin_function("sech", g);
        const SampledFunction g0 = ConvolutionOperator{tricomi_symbol(c0, c1, c2), g, fg}.apply(v0star);
        const TricomiSpec spec{c0, c1, c2, times_cosh(g0, 1)};
        const SolveReport rep = solve_tricomi(spec, fg);
        CHECK(tricomi_space_residual(spec, rep.g_side_solution, 33) < 1e-4);
    }
}

} // TEST_SUITE
