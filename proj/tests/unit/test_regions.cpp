#include <doctest.h>

#include <cmath>

#include "../support/rng.hpp"
#include "bfsmc/errors.hpp"
#include "bfsmc/regions.hpp"

using namespace bfsmc;

TEST_CASE("bounds of the two benchmark setups") {
    const auto a = bounds(0.01, 5.0, 4.4);
    CHECK(a.x_final == doctest::Approx(4.4 * 0.01 / 5.4).epsilon(1e-15));
    CHECK(a.x_final == doctest::Approx(0.00814815).epsilon(1e-6));
    CHECK(a.x_saturation == doctest::Approx(0.00833333).epsilon(1e-6));

    const auto b = bounds(0.5, 7.5, 3.0);
    CHECK(b.x_final == doctest::Approx(0.375).epsilon(1e-15));
    CHECK(b.x_saturation == doctest::Approx(0.441176).epsilon(1e-6));
}

TEST_CASE("final set shrinks to the origin without disturbance") {
    CHECK(bounds(0.01, 5.0, 0.0).x_final == 0.0);
    CHECK(final_set_radius(0.01, 1e-9) < 1e-10);
}

TEST_CASE("bounds reject infeasible and invalid parameters") {
    CHECK_THROWS_AS(bounds(0.01, 5.0, 5.0), InfeasibleError);
    CHECK_THROWS_AS(bounds(0.01, 5.0, 6.0), InfeasibleError);
    CHECK_THROWS_AS(bounds(0.0, 5.0, 1.0), DomainError);
    CHECK_THROWS_AS(bounds(0.01, -1.0, 0.0), DomainError);
    CHECK_THROWS_AS(bounds(0.01, 5.0, -0.1), DomainError);
}

TEST_CASE("classification of sample points") {
    const auto b = bounds(0.01, 5.0, 4.4);
    CHECK(classify(0.0, b) == RegionLabel::Div4);
    CHECK(classify(0.0082, b) == RegionLabel::Div3);
    CHECK(classify(0.009, b) == RegionLabel::Div2);
    CHECK(classify(0.02, b) == RegionLabel::Div1);
    CHECK(classify(std::nan(""), b) == RegionLabel::Div1);
}

TEST_CASE("boundaries are closed on the inner side") {
    const auto b = bounds(0.01, 5.0, 4.4);
    CHECK(classify(b.x_final, b) == RegionLabel::Div4);
    CHECK(classify(std::nextafter(b.x_final, 1.0), b) == RegionLabel::Div3);
    CHECK(classify(b.x_saturation, b) == RegionLabel::Div3);
    CHECK(classify(std::nextafter(b.x_saturation, 1.0), b) == RegionLabel::Div2);
    CHECK(classify(b.epsilon, b) == RegionLabel::Div1);
    CHECK(classify(std::nextafter(b.epsilon, 0.0), b) == RegionLabel::Div2);
}

TEST_CASE("property: classification is even") {
    testing::Gen gen(31);
    const auto b = bounds(0.01, 5.0, 4.4);
    for (int i = 0; i < 10000; ++i) {
        const double x = gen.uniform(-0.03, 0.03);
        REQUIRE(classify(x, b) == classify(-x, b));
    }
}

TEST_CASE("property: region radii grow with their parameters") {
    const double eps = 0.01;
    double prev_f = -1.0, prev_s = -1.0;
    for (int i = 0; i < 100; ++i) {
        const double p = 0.05 + 0.1 * i;
        const double f = final_set_radius(eps, p);
        const double s = saturation_boundary(eps, p);
        REQUIRE(f > prev_f);
        REQUIRE(s > prev_s);
        REQUIRE(s < eps);
        prev_f = f;
        prev_s = s;
    }
}

TEST_CASE("region labels print") {
    CHECK(to_string(RegionLabel::Div4) == "Div4");
    CHECK(to_string(RegionLabel::Unclassified) == "unclassified");
}
