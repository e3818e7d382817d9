#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bfsmc/analysis.hpp"
#include "bfsmc/simengine.hpp"

namespace bfsmc {

/// One independent closed-loop run of a batch.
struct RunRequest {
    PlantSpec plant;
    ControllerSpec controller = BfaController{};
    SimConfig sim;
    std::optional<RegionBounds> bounds;  ///< falls back to default_bounds()
};

/// Compact result kept per run so large batches do not hold trajectories.
struct RunSummary {
    bool ok = false;
    std::string error;
    Termination termination = Termination::Completed;
    double final_x = 0.0;
    std::size_t sample_count = 0;
    std::optional<UltimateReport> ultimate;

    bool passed() const noexcept { return ok && ultimate && ultimate->passed(); }
};

/// Simulates and analyzes one request. Never throws; failures land in `error`.
RunSummary summarize_run(const RunRequest& request);

/// Reference implementation: one run after another.
std::vector<RunSummary> run_batch_serial(std::span<const RunRequest> requests);

/// OpenMP worker pool over independent runs. Results are in request order and
/// identical to run_batch_serial. jobs <= 0 uses the OpenMP default.
std::vector<RunSummary> run_batch(std::span<const RunRequest> requests, int jobs = 0);

}  // namespace bfsmc
