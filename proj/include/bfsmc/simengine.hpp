#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bfsmc/controller.hpp"
#include "bfsmc/model.hpp"
#include "bfsmc/regions.hpp"

namespace bfsmc {

struct SimConfig {
    double x0 = 0.0;
    double tau = 1e-3;      ///< controller sampling period
    double h_inner = 1e-6;  ///< plant integration step, must divide tau
    double t_end = 1.0;     ///< absolute end time
    double t0 = 0.0;
    /// Dense output decimation: every `record_stride`-th inner point is kept.
    /// Sampling instants and the final point are always kept; 0 keeps only those.
    std::size_t record_stride = 1;

    /// Throws ConfigError listing every violated constraint.
    void validate() const;
    std::size_t steps_per_sample() const;
    std::size_t total_steps() const;

    bool operator==(const SimConfig&) const = default;
};

/// One controller update and a summary of the inner grid until the next update.
struct SampleRecord {
    std::size_t row = 0;        ///< row of the sampling instant in the dense arrays
    double t = 0.0;
    double x = 0.0;
    double u = 0.0;             ///< NaN when the law could not be evaluated
    double peak_abs_x = 0.0;    ///< max |x| over inner points in [t_k, t_{k+1})
};

enum class Termination : std::uint8_t {
    Completed,
    BarrierViolation,  ///< BFA evaluated at |x| >= eps
};

struct BarrierViolation {
    double t = 0.0;
    double x = 0.0;
    std::size_t sample = 0;
};

/// Dense record on the inner grid plus per-sample summaries.
/// u is bit-constant on every [t_k, t_{k+1}).
struct Trajectory {
    std::vector<double> t;
    std::vector<double> x;
    std::vector<double> u;
    std::vector<double> delta;
    std::vector<double> g;
    std::vector<RegionLabel> region;
    std::vector<std::uint8_t> is_sample;
    std::vector<std::size_t> sample_idx;
    std::vector<SampleRecord> samples;

    std::optional<RegionBounds> bounds;
    SimConfig config;
    Termination termination = Termination::Completed;
    std::optional<BarrierViolation> violation;
    /// Inner grid points actually integrated (independent of decimation).
    std::size_t inner_points = 0;

    std::size_t size() const noexcept { return t.size(); }
    bool empty() const noexcept { return t.empty(); }
};

/// Region bounds implied by the plant and controller, when they are complete and feasible.
std::optional<RegionBounds> default_bounds(const PlantSpec& plant, const ControllerSpec& ctrl);

/// Sampled-data closed loop: the controller is evaluated at t_k = t0 + k tau and held;
/// the plant is integrated with classical RK4 at h_inner in between.
/// Throws ConfigError for invalid configs and DomainError when BFA starts outside its barrier.
Trajectory run(const PlantSpec& plant, const ControllerSpec& ctrl, const SimConfig& cfg,
               std::optional<RegionBounds> bounds = std::nullopt);

/// run() with tau := h_inner, i.e. the controller updated at every inner step.
Trajectory run_continuous_limit(const PlantSpec& plant, const ControllerSpec& ctrl,
                                const SimConfig& cfg,
                                std::optional<RegionBounds> bounds = std::nullopt);

}  // namespace bfsmc
