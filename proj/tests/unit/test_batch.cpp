#include <doctest.h>

#include <numbers>
#include <vector>

#include "bfsmc/batch.hpp"

using namespace bfsmc;

namespace {

std::vector<RunRequest> phase_requests(int n) {
    PlantSpec p;
    p.g1 = 1.0;
    p.g2 = 1.5;
    p.gain = SquareWaveGain{1.0, 1.5};
    p.disturbance.kind = MixedDisturbance{4.4};
    std::vector<RunRequest> out;
    for (int i = 0; i < n; ++i) {
        RunRequest r{p, BfaController{0.01},
                     SimConfig{.x0 = 0.005, .tau = 1.38e-4, .h_inner = 1e-6, .t_end = 0.05, .record_stride = 0},
                     bounds(0.01, 5.0, 4.4)};
        r.plant.disturbance.phase = 2.0 * std::numbers::pi * i / n;
        out.push_back(r);
    }
    return out;
}

}  // namespace

TEST_CASE("parallel batch reproduces the serial reference") {
    const auto reqs = phase_requests(24);
    const auto serial = run_batch_serial(reqs);
    for (int jobs : {0, 1, 3, 8}) {
        const auto par = run_batch(reqs, jobs);
        REQUIRE(par.size() == serial.size());
        for (std::size_t i = 0; i < par.size(); ++i) {
            REQUIRE(par[i].final_x == serial[i].final_x);
            REQUIRE(par[i].sample_count == serial[i].sample_count);
            REQUIRE(par[i].passed() == serial[i].passed());
        }
    }
    for (const auto& s : serial) CHECK(s.passed());
}

TEST_CASE("failures are captured per run") {
    auto reqs = phase_requests(3);
    reqs[1].sim.h_inner = 3e-5;
    reqs[2].sim.x0 = 0.02;
    const auto out = run_batch(reqs, 2);
    CHECK(out[0].ok);
    CHECK_FALSE(out[1].ok);
    CHECK(out[1].error.find("tau/h not integral") != std::string::npos);
    CHECK_FALSE(out[2].ok);
    CHECK_FALSE(out[2].passed());
}

TEST_CASE("bounds fall back to the controller parameters") {
    RunRequest r;
    r.plant.disturbance.kind = ConstantDisturbance{1.0};
    r.controller = BfsatController{0.01, 5.0};
    r.sim = SimConfig{.x0 = 0.001, .tau = 1e-4, .h_inner = 1e-6, .t_end = 0.05};
    const auto s = summarize_run(r);
    REQUIRE(s.ok);
    REQUIRE(s.ultimate.has_value());
    CHECK(s.passed());

    r.controller = BfaController{0.01};
    const auto none = summarize_run(r);
    CHECK(none.ok);
    CHECK_FALSE(none.ultimate.has_value());
    CHECK_FALSE(none.passed());
}
