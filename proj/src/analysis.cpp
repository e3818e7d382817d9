#include "bfsmc/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "bfsmc/errors.hpp"

namespace bfsmc {

UltimateReport ultimate_report(const Trajectory& traj, const RegionBounds& b) {
    if (traj.samples.empty()) throw DomainError("ultimate_report: empty trajectory");
    const auto& s = traj.samples;

    UltimateReport r;
    r.barrier_violation = traj.termination == Termination::BarrierViolation;

    for (std::size_t k = 0; k < s.size(); ++k) {
        r.max_abs_x_overall = std::max(r.max_abs_x_overall, s[k].peak_abs_x);
        if (std::isfinite(s[k].u)) r.max_abs_u = std::max(r.max_abs_u, std::abs(s[k].u));
        // classify is monotone in |x|, so the interval peak gives the outermost region visited.
        const auto outer = classify(s[k].peak_abs_x, b);
        if (outer == RegionLabel::Div2 || outer == RegionLabel::Div1) r.saturation_visited = true;
        if (!r.entry_sample && classify(s[k].x, b) == RegionLabel::Div4) r.entry_sample = k;
    }

    if (r.entry_sample) {
        const std::size_t e = *r.entry_sample;
        r.invariant_after_entry = !r.barrier_violation;
        for (std::size_t k = e; k < s.size(); ++k) {
            r.max_abs_x_after_entry = std::max(r.max_abs_x_after_entry, s[k].peak_abs_x);
            if (classify(s[k].x, b) != RegionLabel::Div4) r.invariant_after_entry = false;
            if (!(s[k].peak_abs_x < b.epsilon)) r.invariant_after_entry = false;
        }
        r.attractive = true;
    } else {
        bool any_div3 = false;
        bool decreasing = true;
        for (std::size_t k = 0; k + 1 < s.size(); ++k) {
            if (classify(s[k].x, b) != RegionLabel::Div3) continue;
            any_div3 = true;
            if (classify(s[k + 1].x, b) == RegionLabel::Div3 && !(std::abs(s[k + 1].x) < std::abs(s[k].x)))
                decreasing = false;
        }
        r.attractive = any_div3 && decreasing;
    }
    return r;
}

ReachingReport reaching_report(const Trajectory& traj, const PlantSpec& plant,
                               const ControllerSpec& ctrl) {
    const auto* sat = std::get_if<BfsatController>(&ctrl);
    if (!sat) throw DomainError("reaching_report: requires the saturated barrier controller");
    if (traj.samples.empty()) throw DomainError("reaching_report: empty trajectory");

    const double delta_bar = plant.disturbance.delta_bar();
    const RegionBounds b = bounds(sat->epsilon, sat->c1, delta_bar);
    const auto& s = traj.samples;

    ReachingReport r;
    r.d = std::max(0.0, std::abs(s.front().x) - b.x_saturation);
    r.raw_margin = sat->c1 - delta_bar;
    r.sigma_step = plant.g1 * traj.config.tau * r.raw_margin;
    r.l_bound = static_cast<std::size_t>(std::floor(r.d / r.sigma_step)) + 1;
    r.horizon = traj.config.t_end - traj.config.t0;

    for (std::size_t k = 0; k < s.size(); ++k) {
        const auto label = classify(s[k].x, b);
        if (label == RegionLabel::Div3 || label == RegionLabel::Div4) {
            r.l_empirical = k;
            break;
        }
    }
    r.reached = r.l_empirical.has_value();
    r.within_bound = r.reached && *r.l_empirical <= r.l_bound;

    const std::size_t stop = r.l_empirical.value_or(s.size() - 1);
    r.monotone_before_reaching = true;
    for (std::size_t k = 0; k < stop; ++k) {
        if (!(std::abs(s[k + 1].x) < std::abs(s[k].x))) {
            r.monotone_before_reaching = false;
            break;
        }
    }
    return r;
}

ChatteringReport chattering_metric(const Trajectory& traj) {
    ChatteringReport r;
    const auto& s = traj.samples;
    if (s.size() < 2) return r;
    for (std::size_t k = 0; k + 1 < s.size(); ++k) {
        if (s[k].u * s[k + 1].u < 0.0) ++r.sign_changes;
    }
    r.duration = s.back().t - s.front().t;
    r.rate = r.duration > 0.0 ? static_cast<double>(r.sign_changes) / r.duration : 0.0;
    return r;
}

GainReport gain_report(const Trajectory& traj, double epsilon, double reference_gain) {
    if (!(reference_gain > 0.0)) throw DomainError("gain_report: reference gain must be positive");
    GainReport r;
    r.reference_gain = reference_gain;
    for (const auto& s : traj.samples) r.max_barrier_gain = std::max(r.max_barrier_gain, barrier_gain(s.x, epsilon));
    r.ratio = r.max_barrier_gain / reference_gain;
    return r;
}

FinalSetTheory final_set_theory(double epsilon, double delta_bar, double beta, double theta) {
    if (!(epsilon > 0.0)) throw DomainError("final_set_theory: epsilon must be positive");
    if (!(beta > 0.0 && beta < 1.0)) throw DomainError("final_set_theory: beta must lie in (0, 1)");
    if (!(theta > 0.0 && theta <= 1.0)) throw DomainError("final_set_theory: theta must lie in (0, 1]");
    if (delta_bar < 0.0) throw DomainError("final_set_theory: delta_bar must be non-negative");
    FinalSetTheory th;
    th.beta = beta;
    th.theta = theta;
    th.phi = delta_bar + theta;
    th.epsilon = epsilon;
    th.final_radius = th.phi / (th.phi + 1.0) * epsilon;
    th.bound = std::max(beta, th.phi / (th.phi + 1.0)) * epsilon;
    return th;
}

ContinuousBoundCheck continuous_bound_check(const Trajectory& traj, const FinalSetTheory& theory) {
    ContinuousBoundCheck c;
    c.tolerance = kIntegrationTolerance * theory.epsilon;
    const auto& s = traj.samples;
    if (s.empty()) return c;

    const auto& cfg = traj.config;
    const double tail_start = cfg.t_end - kTailFraction * (cfg.t_end - cfg.t0);
    for (std::size_t k = 0; k < s.size(); ++k) {
        c.overall_sup = std::max(c.overall_sup, s[k].peak_abs_x);
        // An interval contributes to the tail if any of its inner points lies there.
        const double interval_end = k + 1 < s.size() ? s[k + 1].t : cfg.t_end;
        if (interval_end > tail_start) c.tail_sup = std::max(c.tail_sup, s[k].peak_abs_x);
    }
    c.margin = theory.final_radius + c.tolerance - c.tail_sup;
    c.passed = traj.termination == Termination::Completed && c.margin >= 0.0 &&
               c.overall_sup <= theory.bound + c.tolerance;
    return c;
}

}  // namespace bfsmc
