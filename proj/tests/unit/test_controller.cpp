#include <doctest.h>

#include <cmath>

#include "../support/rng.hpp"
#include "bfsmc/controller.hpp"
#include "bfsmc/errors.hpp"
#include "bfsmc/regions.hpp"

using namespace bfsmc;

TEST_CASE("barrier law values") {
    CHECK(bfa(0.0, 0.01) == 0.0);
    CHECK(bfa(0.005, 0.01) == doctest::Approx(-1.0).epsilon(1e-14));
    for (double eps : {0.01, 0.5, 3.0, 100.0}) CHECK(bfa(-eps / 2.0, eps) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("barrier law is undefined on and outside the barrier") {
    CHECK_THROWS_AS(bfa(0.01, 0.01), DomainError);
    CHECK_THROWS_AS(bfa(-0.02, 0.01), DomainError);
    CHECK_THROWS_AS(bfa(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(evaluate(BfaController{0.01}, 0.011), DomainError);
}

TEST_CASE("barrier law is not clamped") {
    CHECK(std::abs(bfa(0.0099, 0.01)) > 5.0);
}

TEST_CASE("saturated barrier law values") {
    CHECK(bfsat(0.2, 0.01, 5.0) == -5.0);
    CHECK(bfsat(0.0, 0.37, 2.0) == 0.0);
    CHECK(bfsat(0.005, 0.01, 5.0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(bfsat(-0.009, 0.01, 5.0) == 5.0);
    CHECK(bfsat(0.01, 0.01, 5.0) == -5.0);
}

TEST_CASE("saturated linear law values") {
    CHECK(linear_sat(7.5 * 0.5 / 8.5, 17.0, 7.5) == doctest::Approx(-7.5).epsilon(1e-14));
    CHECK(linear_sat(0.441176, 17.0, 7.5) == doctest::Approx(-7.5).epsilon(1e-5));
    CHECK(linear_sat(0.0, 17.0, 7.5) == 0.0);
    CHECK(linear_sat(-1.0, 17.0, 7.5) == 7.5);
    CHECK(linear_sat(0.1, 17.0, 7.5) == doctest::Approx(-1.7));
}

TEST_CASE("barrier gain values") {
    CHECK(barrier_gain(0.0, 0.5) == 2.0);
    for (double eps : {0.01, 0.5, 2.0}) CHECK(barrier_gain(eps / 2.0, eps) == doctest::Approx(2.0 / eps));
    CHECK(barrier_gain(0.3, 0.5) == doctest::Approx(5.0));
    CHECK(barrier_gain(0.375, 0.5) == doctest::Approx(8.0));
}

TEST_CASE("property: control laws are odd") {
    testing::Gen gen(21);
    const double eps = 0.01, c1 = 5.0;
    for (int i = 0; i < 10000; ++i) {
        const double x = gen.uniform(-eps, eps) * 0.999999;
        REQUIRE(bfa(-x, eps) == -bfa(x, eps));
        const double y = gen.uniform(-10.0 * eps, 10.0 * eps);
        REQUIRE(bfsat(-y, eps, c1) == -bfsat(y, eps, c1));
        REQUIRE(linear_sat(-y, 17.0, 7.5) == -linear_sat(y, 17.0, 7.5));
    }
}

TEST_CASE("property: saturated law respects the actuator bound") {
    const double eps = 0.01, c1 = 5.0;
    const int n = 200000;
    for (int i = 0; i <= n; ++i) {
        const double x = -10.0 * eps + 20.0 * eps * i / n;
        REQUIRE(std::abs(bfsat(x, eps, c1)) <= c1);
    }
}

TEST_CASE("property: saturated law is continuous at the saturation boundary") {
    testing::Gen gen(22);
    for (int i = 0; i < 1000; ++i) {
        const double eps = gen.log_uniform(1e-3, 10.0);
        const double c1 = gen.log_uniform(0.1, 50.0);
        const double xs = c1 * eps / (c1 + 1.0);
        REQUIRE(std::abs(bfa(xs, eps)) == doctest::Approx(c1).epsilon(1e-12));
        const double inside = bfsat(xs, eps, c1);
        const double outside = bfsat(std::nextafter(xs, 1.0), eps, c1);
        REQUIRE(std::abs(inside - outside) <= 1e-12 * c1);
        REQUIRE(saturation_boundary(eps, c1) == doctest::Approx(xs).epsilon(1e-15));
    }
}

TEST_CASE("property: barrier law opposes the state") {
    testing::Gen gen(23);
    for (int i = 0; i < 10000; ++i) {
        const double eps = gen.log_uniform(1e-3, 10.0);
        const double x = gen.uniform(-eps, eps) * 0.9999;
        REQUIRE(bfa(x, eps) * x <= 0.0);
        REQUIRE(bfa(x, eps) == doctest::Approx(-barrier_gain(x, eps) * x).epsilon(1e-14));
    }
}

TEST_CASE("controller spec helpers") {
    CHECK(barrier_epsilon(BfaController{0.2}) == 0.2);
    CHECK_FALSE(actuator_bound(BfaController{0.2}).has_value());
    CHECK(actuator_bound(BfsatController{0.01, 5.0}) == 5.0);
    CHECK(barrier_epsilon(BfsatController{0.01, 5.0}) == 0.01);
    CHECK_FALSE(barrier_epsilon(LinearSatController{17.0, 7.5}).has_value());
    CHECK(evaluate(LinearSatController{17.0, 7.5}, 0.1) == doctest::Approx(-1.7));
    CHECK_THROWS_AS(validate(BfsatController{0.01, 0.0}), DomainError);
    CHECK_THROWS_AS(validate(LinearSatController{-1.0, 1.0}), DomainError);
    CHECK_NOTHROW(validate(BfaController{0.01}));
}
