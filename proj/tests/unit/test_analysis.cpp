#include <doctest.h>

#include <cmath>
#include <vector>

#include "bfsmc/analysis.hpp"
#include "bfsmc/errors.hpp"

using namespace bfsmc;

namespace {

/// Sampled-only trajectory with x_k given, u_k from `law` and peaks equal to |x_k|.
template <class Law>
Trajectory synthetic(const std::vector<double>& xs, double tau, Law law) {
    Trajectory t;
    t.config.tau = tau;
    t.config.h_inner = tau;
    t.config.t_end = tau * static_cast<double>(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const double u = law(xs[k]);
        t.samples.push_back({k, k * tau, xs[k], u, std::abs(xs[k])});
        t.sample_idx.push_back(k);
        t.t.push_back(k * tau);
        t.x.push_back(xs[k]);
        t.u.push_back(u);
    }
    return t;
}

PlantSpec benchmark_plant() {
    PlantSpec p;
    p.g1 = 1.0;
    p.g2 = 1.5;
    p.gain = SquareWaveGain{1.0, 1.5};
    p.disturbance.kind = MixedDisturbance{4.4};
    return p;
}

const auto zero_law = [](double) { return 0.0; };

}  // namespace

TEST_CASE("resting trajectory is trivially invariant") {
    const auto tr = synthetic(std::vector<double>(50, 0.0), 1e-3, zero_law);
    const auto r = ultimate_report(tr, bounds(0.01, 5.0, 4.4));
    CHECK(r.entry_sample == 0u);
    CHECK(r.invariant_after_entry);
    CHECK(r.attractive);
    CHECK_FALSE(r.saturation_visited);
    CHECK(r.passed());
}

TEST_CASE("leaving the final set breaks invariance") {
    const auto b = bounds(0.01, 5.0, 4.4);
    const auto tr = synthetic({0.009, 0.0082, 0.005, 0.0083, 0.004}, 1e-3, zero_law);
    const auto r = ultimate_report(tr, b);
    CHECK(r.entry_sample == 2u);
    CHECK_FALSE(r.invariant_after_entry);
    CHECK(r.saturation_visited);
    CHECK(r.max_abs_x_overall == 0.009);
    CHECK(r.max_abs_x_after_entry == 0.0083);
    CHECK_FALSE(r.passed());
}

TEST_CASE("attractivity without entry needs strict decrease in the authority band") {
    const auto b = bounds(0.01, 5.0, 4.4);
    CHECK(ultimate_report(synthetic({0.0083, 0.0082, 0.00819}, 1e-3, zero_law), b).attractive);
    CHECK_FALSE(ultimate_report(synthetic({0.0082, 0.0083, 0.0083}, 1e-3, zero_law), b).attractive);
}

TEST_CASE("property: a post-entry suffix of a passing run also passes") {
    const auto b = bounds(0.01, 5.0, 4.4);
    const auto tr = run(benchmark_plant(), BfaController{0.01},
                        SimConfig{.x0 = 0.0082, .tau = 1.38e-4, .h_inner = 1e-6, .t_end = 0.3, .record_stride = 0}, b);
    const auto full = ultimate_report(tr, b);
    REQUIRE(full.passed());
    for (std::size_t cut : {*full.entry_sample, *full.entry_sample + 7, tr.samples.size() / 2}) {
        Trajectory suffix = tr;
        suffix.samples.erase(suffix.samples.begin(), suffix.samples.begin() + static_cast<long>(cut));
        const auto r = ultimate_report(suffix, b);
        CHECK(r.passed());
        CHECK(r.entry_sample == 0u);
    }
}

TEST_CASE("reaching from inside the final set") {
    const auto tr = run(benchmark_plant(), BfsatController{0.01, 5.0},
                        SimConfig{.x0 = 0.001, .tau = 1.38e-4, .h_inner = 1e-6, .t_end = 0.01});
    const auto r = reaching_report(tr, benchmark_plant(), BfsatController{0.01, 5.0});
    CHECK(r.d == 0.0);
    CHECK(r.l_bound == 1u);
    CHECK(r.l_empirical == 0u);
    CHECK(r.within_bound);
}

TEST_CASE("reaching bound uses the per-sample progress") {
    const auto tr = run(benchmark_plant(), BfsatController{0.01, 5.0},
                        SimConfig{.x0 = 0.201, .tau = 1.38e-4, .h_inner = 1e-6, .t_end = 1.0, .record_stride = 0});
    const auto r = reaching_report(tr, benchmark_plant(), BfsatController{0.01, 5.0});
    const double d = 0.201 - 5.0 * 0.01 / 6.0;
    const double step = 1.0 * 1.38e-4 * (5.0 - 4.4);
    CHECK(r.d == doctest::Approx(d).epsilon(1e-14));
    CHECK(r.sigma_step == doctest::Approx(step).epsilon(1e-12));
    CHECK(r.l_bound == static_cast<std::size_t>(std::floor(d / step)) + 1);
    CHECK(r.reached);
    CHECK(r.within_bound);
    CHECK(r.monotone_before_reaching);
    CHECK_THROWS_AS(reaching_report(tr, benchmark_plant(), BfaController{0.01}), DomainError);
}

TEST_CASE("property: empirical reaching time never exceeds the bound") {
    for (double x0 : {0.05, 0.1, 0.201, 1.0, 10.0, -3.0}) {
        const double horizon = std::ceil(std::abs(x0) / 4.0) + 1.0;
        const auto tr = run(benchmark_plant(), BfsatController{0.01, 5.0},
                            SimConfig{.x0 = x0, .tau = 1.38e-4, .h_inner = 1e-6, .t_end = horizon, .record_stride = 0});
        const auto r = reaching_report(tr, benchmark_plant(), BfsatController{0.01, 5.0});
        CAPTURE(x0);
        CHECK(r.reached);
        CHECK(*r.l_empirical <= r.l_bound);
        CHECK(r.monotone_before_reaching);
    }
}

TEST_CASE("chattering of constant control is zero") {
    const auto tr = synthetic(std::vector<double>(20, 0.3), 0.01, zero_law);
    const auto c = chattering_metric(tr);
    CHECK(c.sign_changes == 0u);
    CHECK(c.rate == 0.0);
}

TEST_CASE("sampled relay alternates once inside its step size") {
    // Explicit relay recurrence x_{k+1} = x_k - g1 tau c1 sign(x_k) on an undisturbed plant.
    const double tau = 0.01, c1 = 2.0, g1 = 1.0, step = g1 * tau * c1;
    std::vector<double> xs{0.1037};
    for (int k = 0; k < 200; ++k) xs.push_back(xs.back() - step * sign(xs.back()));
    const auto tr = synthetic(xs, tau, [&](double x) { return -c1 * sign(x); });

    std::size_t first_inside = 0;
    while (std::abs(xs[first_inside]) >= step) ++first_inside;
    const std::size_t tail = xs.size() - 1 - first_inside;
    const auto c = chattering_metric(tr);
    CHECK(c.sign_changes >= tail / 2);
    CHECK(c.rate >= 0.5 / tau * static_cast<double>(tail) / static_cast<double>(xs.size() - 1) - 1e-9);
}

TEST_CASE("barrier law only switches when the state changes sign") {
    const auto tr = run(benchmark_plant(), BfaController{0.01},
                        SimConfig{.x0 = 0.005, .tau = 1.38e-4, .h_inner = 1e-6, .t_end = 0.5, .record_stride = 0});
    std::size_t state_flips = 0;
    for (std::size_t k = 0; k + 1 < tr.samples.size(); ++k)
        if (tr.samples[k].x * tr.samples[k + 1].x < 0.0) ++state_flips;
    CHECK(chattering_metric(tr).sign_changes == state_flips);
}

TEST_CASE("gain report values") {
    const auto zero = synthetic(std::vector<double>(10, 0.0), 0.0062, zero_law);
    const auto g = gain_report(zero, 0.5, 17.0);
    CHECK(g.max_barrier_gain == doctest::Approx(2.0));
    CHECK(g.ratio == doctest::Approx(2.0 / 17.0));

    const auto edge = synthetic({0.1, -0.375, 0.2}, 0.0062, zero_law);
    CHECK(gain_report(edge, 0.5, 17.0).max_barrier_gain == doctest::Approx(8.0));
    CHECK_THROWS_AS(gain_report(edge, 0.5, 0.0), DomainError);
}

TEST_CASE("property: barrier gain scales inversely with the barrier") {
    const std::vector<double> xs{0.1, -0.2, 0.33, 0.05, -0.41};
    const auto base = gain_report(synthetic(xs, 0.0062, zero_law), 0.5, 17.0);
    for (double lambda : {0.01, 0.3, 2.0, 50.0}) {
        std::vector<double> scaled;
        for (double x : xs) scaled.push_back(lambda * x);
        const auto r = gain_report(synthetic(scaled, 0.0062, zero_law), lambda * 0.5, 17.0);
        CHECK(r.max_barrier_gain == doctest::Approx(base.max_barrier_gain / lambda).epsilon(1e-12));
    }
}

TEST_CASE("final set bound of the continuous law") {
    const auto th = final_set_theory(0.01, 4.4, 0.5);
    CHECK(th.phi == doctest::Approx(5.4));
    CHECK(th.final_radius == doctest::Approx(5.4 / 6.4 * 0.01).epsilon(1e-15));
    CHECK(th.final_radius == doctest::Approx(0.0084375).epsilon(1e-12));
    CHECK(th.bound == th.final_radius);
    CHECK(final_set_theory(0.01, 0.1, 0.9).bound == doctest::Approx(0.009));
    CHECK_THROWS_AS(final_set_theory(0.01, 4.4, 1.0), DomainError);
    CHECK_THROWS_AS(final_set_theory(0.01, 4.4, 0.5, 0.0), DomainError);
}

TEST_CASE("continuous bound without disturbance") {
    PlantSpec p;
    const auto tr = run_continuous_limit(p, BfaController{0.01},
                                         SimConfig{.x0 = 0.005, .tau = 1e-6, .h_inner = 1e-6, .t_end = 0.2, .record_stride = 0});
    const auto c = continuous_bound_check(tr, final_set_theory(0.01, 0.0, 0.5));
    CHECK(c.passed);
    CHECK(c.tail_sup < 1e-6);
}

TEST_CASE("continuous bound with a large initial condition") {
    PlantSpec p;
    p.disturbance.kind = SinusoidDisturbance{0.1, 5.0};
    const auto tr = run_continuous_limit(p, BfaController{0.01},
                                         SimConfig{.x0 = 0.009, .tau = 1e-6, .h_inner = 1e-6, .t_end = 0.2, .record_stride = 0});
    const auto th = final_set_theory(0.01, 0.1, 0.9);
    const auto c = continuous_bound_check(tr, th);
    CHECK(c.passed);
    CHECK(c.overall_sup == doctest::Approx(0.009));
    CHECK(c.overall_sup <= th.bound + c.tolerance);
    CHECK(c.tail_sup <= th.final_radius);
}
