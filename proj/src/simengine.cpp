#include "bfsmc/simengine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bfsmc/errors.hpp"

namespace bfsmc {

namespace {

constexpr double kRatioTolerance = 1e-9;

bool near_integer(double v) {
    return std::abs(v - std::round(v)) <= kRatioTolerance * std::max(1.0, std::abs(v));
}

}  // namespace

void SimConfig::validate() const {
    std::vector<std::string> issues;
    if (!std::isfinite(x0)) issues.emplace_back("sim.x0 must be finite");
    if (!(tau > 0.0)) issues.emplace_back("sim.tau must be positive");
    if (!(h_inner > 0.0)) issues.emplace_back("sim.h_inner must be positive");
    if (tau > 0.0 && h_inner > 0.0) {
        if (!near_integer(tau / h_inner)) issues.emplace_back("tau/h not integral (sim.tau / sim.h_inner)");
        if (!(t_end - t0 >= tau * (1.0 - kRatioTolerance)))
            issues.emplace_back("sim.t_end - sim.t0 must be at least one sampling period");
    }
    if (!issues.empty()) throw ConfigError(std::move(issues));
}

std::size_t SimConfig::steps_per_sample() const {
    return static_cast<std::size_t>(std::llround(tau / h_inner));
}

std::size_t SimConfig::total_steps() const {
    const double n = (t_end - t0) / h_inner;
    return static_cast<std::size_t>(std::floor(n + kRatioTolerance * std::max(1.0, n)));
}

std::optional<RegionBounds> default_bounds(const PlantSpec& plant, const ControllerSpec& ctrl) {
    const auto eps = barrier_epsilon(ctrl);
    const auto c1 = actuator_bound(ctrl);
    if (!eps || !c1) return std::nullopt;
    const double delta_bar = plant.disturbance.delta_bar();
    if (!(delta_bar < *c1)) return std::nullopt;
    return bounds(*eps, *c1, delta_bar);
}

Trajectory run(const PlantSpec& plant, const ControllerSpec& ctrl, const SimConfig& cfg,
               std::optional<RegionBounds> region_bounds) {
    cfg.validate();
    plant.validate();
    validate(ctrl);

    const auto eps = barrier_epsilon(ctrl);
    const bool barrier_law = std::holds_alternative<BfaController>(ctrl);
    if (barrier_law && !(std::abs(cfg.x0) < *eps))
        throw DomainError("BFA run requires |x0| < epsilon");

    const std::size_t per_sample = cfg.steps_per_sample();
    const std::size_t n_steps = cfg.total_steps();
    const double h = cfg.h_inner;
    const std::size_t stride = cfg.record_stride;

    Trajectory traj;
    traj.config = cfg;
    traj.bounds = region_bounds;

    const std::size_t expected_rows =
        (stride == 0 ? n_steps / per_sample : n_steps / stride) + n_steps / per_sample + 2;
    traj.t.reserve(expected_rows);
    traj.x.reserve(expected_rows);
    traj.u.reserve(expected_rows);
    traj.delta.reserve(expected_rows);
    traj.g.reserve(expected_rows);
    traj.region.reserve(expected_rows);
    traj.is_sample.reserve(expected_rows);
    traj.samples.reserve(n_steps / per_sample + 2);
    traj.sample_idx.reserve(n_steps / per_sample + 2);

    double x = cfg.x0;
    double x_sample = x;
    double u = 0.0;

    const auto rhs = [&](double t, double state) {
        return eval_gain(plant.gain, t) *
               (eval_disturbance(plant.disturbance, t, state, x_sample) + u);
    };

    const auto record = [&](double t, double state, double control, bool sample) {
        traj.t.push_back(t);
        traj.x.push_back(state);
        traj.u.push_back(control);
        traj.delta.push_back(eval_disturbance(plant.disturbance, t, state, x_sample));
        traj.g.push_back(eval_gain(plant.gain, t));
        traj.region.push_back(region_bounds ? classify(state, *region_bounds)
                                            : RegionLabel::Unclassified);
        traj.is_sample.push_back(sample ? 1 : 0);
    };

    for (std::size_t i = 0;; ++i) {
        const double t = cfg.t0 + static_cast<double>(i) * h;
        const bool sample = i % per_sample == 0;

        if (sample) {
            x_sample = x;
            const std::size_t k = i / per_sample;
            if (barrier_law && !(std::abs(x) < *eps)) {
                traj.sample_idx.push_back(traj.t.size());
                traj.samples.push_back({traj.t.size(), t, x, std::numeric_limits<double>::quiet_NaN(),
                                        std::abs(x)});
                record(t, x, std::numeric_limits<double>::quiet_NaN(), true);
                traj.termination = Termination::BarrierViolation;
                traj.violation = BarrierViolation{t, x, k};
                traj.inner_points = i + 1;
                break;
            }
            u = evaluate(ctrl, x);
            traj.sample_idx.push_back(traj.t.size());
            traj.samples.push_back({traj.t.size(), t, x, u, std::abs(x)});
        } else {
            auto& peak = traj.samples.back().peak_abs_x;
            peak = std::max(peak, std::isnan(x) ? std::numeric_limits<double>::infinity() : std::abs(x));
        }

        if (sample || i == n_steps || (stride != 0 && i % stride == 0)) record(t, x, u, sample);

        if (i == n_steps) {
            traj.inner_points = i + 1;
            break;
        }

        const double k1 = rhs(t, x);
        const double k2 = rhs(t + 0.5 * h, x + 0.5 * h * k1);
        const double k3 = rhs(t + 0.5 * h, x + 0.5 * h * k2);
        const double k4 = rhs(t + h, x + h * k3);
        x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return traj;
}

Trajectory run_continuous_limit(const PlantSpec& plant, const ControllerSpec& ctrl,
                                const SimConfig& cfg, std::optional<RegionBounds> region_bounds) {
    SimConfig fine = cfg;
    fine.tau = cfg.h_inner;
    return run(plant, ctrl, fine, region_bounds);
}

}  // namespace bfsmc
