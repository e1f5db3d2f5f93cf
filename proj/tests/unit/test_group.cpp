#include <doctest.h>

#include <random>

#include "gharm/group.hpp"

using namespace gharm;

TEST_SUITE("group") {

TEST_CASE("identity and inverse elements") {
    const GroupPoint y(0.37);
    CHECK(compose(GroupPoint(0.0), y).x() == doctest::Approx(0.37).epsilon(1e-15));
    CHECK(compose(y, group_inverse(y)).x() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(compose(GroupPoint(0.5), GroupPoint(0.5)).x() == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("construction rejects the boundary band") {
    CHECK_THROWS_AS(GroupPoint(1.0), BoundaryOverflow);
    CHECK_THROWS_AS(GroupPoint(-1.0), BoundaryOverflow);
    CHECK_THROWS_AS(GroupPoint(1.0 - 5e-16), BoundaryOverflow);
    CHECK_NOTHROW(GroupPoint(1.0 - 1e-14));
    CHECK_THROWS_AS(GroupPoint(std::nan("")), BoundaryOverflow);
}

TEST_CASE("composition overflow near the ends") {
    const GroupPoint a = from_line(LinePoint(17.0));
    CHECK_THROWS_AS(compose(a, a), BoundaryOverflow);
}

TEST_CASE("chart maps") {
    CHECK(to_line(GroupPoint(0.0)).t() == 0.0);
    CHECK(from_line(to_line(GroupPoint(0.9))).x() == doctest::Approx(0.9).epsilon(1e-15));
    // tanh(1), spot value
    CHECK(from_line(LinePoint(1.0)).x() == doctest::Approx(0.76159415595576489).epsilon(1e-15));
    CHECK_THROWS_AS(LinePoint(std::numeric_limits<double>::infinity()), ValidationError);
}

TEST_CASE("haar weight") {
    CHECK(haar_weight(GroupPoint(0.0)) == 1.0);
    CHECK(haar_weight(GroupPoint(0.5)) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    const double w = haar_weight(GroupPoint(1.0 - 1e-14));
    CHECK(std::isfinite(w));
    CHECK(w > 1e12);
}

TEST_CASE("characters") {
    CHECK(std::abs(character(GroupPoint(0.0), 2.7) - complex(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(character(GroupPoint(0.3), 0.0) - complex(1.0, 0.0)) < 1e-15);
    const complex lhs = character(compose(GroupPoint(0.3), GroupPoint(0.5)), 1.2);
    const complex rhs = character(GroupPoint(0.3), 1.2) * character(GroupPoint(0.5), 1.2);
    CHECK(std::abs(lhs - rhs) < 1e-14);
}

TEST_CASE("associativity, randomized") {
    std::mt19937 gen(12345);
    std::uniform_real_distribution<double> dist(-0.95, 0.95);
    for (int i = 0; i < 500; ++i) {
        const GroupPoint a(dist(gen)), b(dist(gen)), c(dist(gen));
        const double lhs = compose(compose(a, b), c).x();
        const double rhs = compose(a, compose(b, c)).x();
        CHECK(std::abs(lhs - rhs) < 1e-14);
    }
}

TEST_CASE("chart homomorphism turns composition into addition") {
    std::mt19937 gen(777);
    // |t| <= 2.5 per factor keeps atanh well conditioned; recovering t from
    // the composed x loses ~eps/(1-x^2), so large sums cannot be compared at
    // 1e-12 in double precision.
    std::uniform_real_distribution<double> dist(-2.5, 2.5);
    for (int i = 0; i < 500; ++i) {
        const double ta = dist(gen), tb = dist(gen);
        const GroupPoint a = from_line(LinePoint(ta)), b = from_line(LinePoint(tb));
        CHECK(std::abs(to_line(compose(a, b)).t() - (ta + tb)) < 1e-12);
    }
    // larger shifts, compared in the forward direction; the composition
    // formula cancels in 1 + ab when the operands sit near opposite ends,
    // so the bound tracks that conditioning
    std::uniform_real_distribution<double> wide(-7.5, 7.5);
    for (int i = 0; i < 200; ++i) {
        const double ta = wide(gen), tb = wide(gen);
        const double a = std::tanh(ta), b = std::tanh(tb);
        const double composed = compose(GroupPoint(a), GroupPoint(b)).x();
        const double tol = 1e-14 + 1e-15 / (1.0 + a * b);
        CHECK(std::abs(composed - std::tanh(ta + tb)) < tol);
    }
}

TEST_CASE("characters are unimodular, randomized") {
    std::mt19937 gen(99);
    std::uniform_real_distribution<double> xs(-0.999, 0.999), freqs(-50.0, 50.0);
    for (int i = 0; i < 500; ++i)
        CHECK(std::abs(std::abs(character(GroupPoint(xs(gen)), freqs(gen))) - 1.0) < 1e-14);
}

TEST_CASE("measure invariance under right translation") {
    // d/dx (x o y) * haar(x o y) == haar(x); Jacobian by complex-step
    std::mt19937 gen(2024);
    std::uniform_real_distribution<double> dist(-0.9, 0.9);
    const double step = 1e-10;
    for (int i = 0; i < 200; ++i) {
        const double x = dist(gen), y = dist(gen);
        const complex xs(x, step);
        const complex composed = (xs + y) / (1.0 + xs * y);
        const double jac = composed.imag() / step;
        const double lhs = jac * haar_weight(compose(GroupPoint(x), GroupPoint(y)));
        const double rhs = haar_weight(GroupPoint(x));
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
    }
}

} // TEST_SUITE
