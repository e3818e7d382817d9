#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bfsmc/errors.hpp"
#include "bfsmc/sweep.hpp"
#include "bfsmc/tuning.hpp"

using namespace bfsmc;
using nlohmann::json;

namespace {

json benchmark_base(double t_end) {
    return json{
        {"plant",
         {{"g1", 1.0},
          {"g2", 1.5},
          {"gain", {{"type", "square_wave"}, {"g1", 1.0}, {"g2", 1.5}}},
          {"disturbance", {{"type", "mixed"}, {"delta_bar", 4.4}}}}},
        {"controller", {{"type", "bfa"}, {"epsilon", 0.01}}},
        {"sim", {{"x0", 0.005}, {"tau", 1.38e-4}, {"t_end", t_end}}},
        {"regions", {{"c1", 5.0}}},
    };
}

std::vector<double> phases(int n) {
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(2.0 * std::numbers::pi * i / n);
    return out;
}

}  // namespace

TEST_CASE("geometric grid") {
    const auto g = log_grid(0.1, 10.0, 5);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 0.1);
    CHECK(g[2] == doctest::Approx(1.0));
    CHECK(g.back() == 10.0);
    CHECK(log_grid(2.0, 3.0, 1) == std::vector<double>{2.0});
    CHECK_THROWS_AS(log_grid(0.0, 1.0, 3), DomainError);
}

TEST_CASE("empty axis values are a config error") {
    json doc{{"base", benchmark_base(0.1)}, {"axis", "sim.tau"}, {"values", json::array()}};
    CHECK_THROWS_AS(parse_sweep(doc), ConfigError);
    SweepSpec spec;
    spec.base = benchmark_base(0.1);
    spec.axis = "sim.tau";
    CHECK_THROWS_AS(run_sweep(spec), ConfigError);
}

TEST_CASE("unknown sweep keys are rejected") {
    json doc{{"base", benchmark_base(0.1)}, {"axis", "sim.tau"}, {"values", {1e-4}}, {"phase", {0.0}}};
    try {
        parse_sweep(doc);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("sweep.phase") != std::string::npos);
    }
}

TEST_CASE("sampling-period grid relative to the admissible bound") {
    json doc{{"base", benchmark_base(0.03)},
             {"axis", "sim.tau"},
             {"log_grid", {{"min", 0.1}, {"max", 10.0}, {"count", 20}, {"relative_to", "tau_max"}}},
             {"phases", phases(10)}};
    const auto spec = parse_sweep(doc);
    const double tm = tau_max(0.01, 5.0, 1.5);
    CHECK(spec.values.front() == doctest::Approx(0.1 * tm));
    CHECK(spec.values.back() == doctest::Approx(10.0 * tm));

    const auto result = run_sweep(spec);
    REQUIRE(result.rows.size() == 200);
    std::size_t below = 0;
    for (const auto& r : result.rows) {
        REQUIRE(r.tau_max.has_value());
        CHECK(*r.tau_max == doctest::Approx(tm));
        if (r.below_tau_max()) {
            ++below;
            CAPTURE(r.value);
            CHECK(r.status == "ok");
            CHECK(r.passed);
        }
    }
    CHECK(below == 100);
    CHECK(result.guarantee_violations() == 0);
}

TEST_CASE("sweep output does not depend on parallelism") {
    json doc{{"base", benchmark_base(0.02)},
             {"axis", "sim.tau"},
             {"values", {1e-4, 1.38e-4, 5e-4, 2e-3, 3.3e-5}},
             {"phases", phases(4)}};
    const auto spec = parse_sweep(doc);
    const auto serial = sweep_csv(spec, run_sweep(spec, 1));
    CHECK(serial == sweep_csv(spec, run_sweep(spec, 4)));
    CHECK(serial == sweep_csv(spec, run_sweep(spec, 0)));
    CHECK(serial.rfind(sweep_csv_header(), 0) == 0);
}

TEST_CASE("actuator axis recomputes the bound per row") {
    auto base = benchmark_base(0.02);
    base["controller"] = {{"type", "bfsat"}, {"epsilon", 0.01}, {"c1", 5.0}};
    base.erase("regions");
    json doc{{"base", base}, {"axis", "controller.c1"}, {"values", {4.5, 5.0, 6.0}}};
    const auto result = run_sweep(parse_sweep(doc));
    REQUIRE(result.rows.size() == 3);
    for (const auto& r : result.rows) {
        REQUIRE(r.tau_max.has_value());
        CHECK(*r.tau_max == doctest::Approx(tau_max(0.01, r.value, 1.5)));
        CHECK(r.status == "ok");
    }
    CHECK(*result.rows[0].tau_max > *result.rows[2].tau_max);
}

TEST_CASE("row failures are recorded without aborting") {
    auto base = benchmark_base(0.02);
    json doc{{"base", base}, {"axis", "regions.c1"}, {"values", {4.0, 5.0}}};
    const auto result = run_sweep(parse_sweep(doc));
    REQUIRE(result.rows.size() == 2);
    CHECK(result.rows[0].status == "config_error");
    CHECK(result.rows[0].message.find("requires delta_bar < c1") != std::string::npos);
    CHECK(result.rows[1].status == "ok");
}

TEST_CASE("far too slow sampling under a worst-case disturbance loses invariance") {
    auto base = benchmark_base(0.5);
    base["plant"]["disturbance"] = {{"type", "constant"}, {"value", -4.4}};
    const double tm = tau_max(0.01, 5.0, 1.5);
    json doc{{"base", base}, {"axis", "sim.tau"}, {"values", {100.0 * tm}}, {"phases", phases(3)}};
    const auto result = run_sweep(parse_sweep(doc));
    std::size_t lost = 0;
    for (const auto& r : result.rows) {
        CHECK_FALSE(r.below_tau_max());
        if (!r.invariant_after_entry) ++lost;
    }
    CHECK(lost >= 1);
    CHECK(result.guarantee_violations() == 0);
}
