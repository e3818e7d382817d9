#pragma once

#include <cstddef>
#include <optional>

#include "bfsmc/controller.hpp"
#include "bfsmc/model.hpp"
#include "bfsmc/regions.hpp"
#include "bfsmc/simengine.hpp"

namespace bfsmc {

/// Final-set entry and invariance, evaluated on sampling instants plus the
/// inner-grid peaks between them.
struct UltimateReport {
    std::optional<std::size_t> entry_sample;  ///< first k with x_k in Div4
    bool invariant_after_entry = false;       ///< meaningful only with an entry
    /// Entered Div4, or |x_k| strictly decreasing while in Div3.
    bool attractive = false;
    double max_abs_x_after_entry = 0.0;
    double max_abs_x_overall = 0.0;
    double max_abs_u = 0.0;
    bool saturation_visited = false;  ///< some inner point in Div2 or Div1
    bool barrier_violation = false;

    /// Entered the final set and stayed there without a barrier violation.
    bool passed() const noexcept { return entry_sample && invariant_after_entry && !barrier_violation; }
};

UltimateReport ultimate_report(const Trajectory& traj, const RegionBounds& bounds);

/// Finite-sample reaching of Div3 u Div4 by the saturated law.
struct ReachingReport {
    double d = 0.0;            ///< max(0, |x0| - x_S)
    double raw_margin = 0.0;   ///< c1 - delta_bar
    double sigma_step = 0.0;   ///< g1 tau (c1 - delta_bar), guaranteed progress per sample
    std::size_t l_bound = 0;   ///< floor(d / sigma_step) + 1
    std::optional<std::size_t> l_empirical;
    bool reached = false;
    bool within_bound = false;
    /// |x_k| strictly decreasing on every sample before reaching.
    bool monotone_before_reaching = false;
    double horizon = 0.0;
};

/// Throws DomainError unless the controller is BFSAT.
ReachingReport reaching_report(const Trajectory& traj, const PlantSpec& plant,
                               const ControllerSpec& ctrl);

struct ChatteringReport {
    std::size_t sign_changes = 0;  ///< strict alternations u_k u_{k+1} < 0
    double duration = 0.0;
    double rate = 0.0;             ///< sign changes per second
};

ChatteringReport chattering_metric(const Trajectory& traj);

struct GainReport {
    double max_barrier_gain = 0.0;
    double reference_gain = 0.0;
    double ratio = 0.0;
};

/// Throws DomainError if some sampled |x_k| >= eps.
GainReport gain_report(const Trajectory& traj, double epsilon, double reference_gain);

struct FinalSetTheory {
    double beta = 0.5;   ///< |x0| <= beta eps
    double theta = 1.0;
    double phi = 0.0;    ///< delta_bar + theta
    double epsilon = 0.0;
    double final_radius = 0.0;  ///< phi / (phi + 1) eps
    double bound = 0.0;         ///< max(beta, phi / (phi + 1)) eps
};

FinalSetTheory final_set_theory(double epsilon, double delta_bar, double beta, double theta = 1.0);

struct ContinuousBoundCheck {
    bool passed = false;
    double tail_sup = 0.0;     ///< sup |x| over the last 20% of the horizon
    double overall_sup = 0.0;
    double tolerance = 0.0;    ///< 1e-6 eps
    double margin = 0.0;       ///< final_radius + tolerance - tail_sup
};

inline constexpr double kTailFraction = 0.2;
inline constexpr double kIntegrationTolerance = 1e-6;

ContinuousBoundCheck continuous_bound_check(const Trajectory& traj, const FinalSetTheory& theory);

}  // namespace bfsmc
