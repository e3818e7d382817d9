#include "bfsmc/batch.hpp"

#include <exception>

#include <omp.h>

namespace bfsmc {

RunSummary summarize_run(const RunRequest& request) {
    RunSummary s;
    try {
        const auto b = request.bounds ? request.bounds : default_bounds(request.plant, request.controller);
        const Trajectory traj = run(request.plant, request.controller, request.sim, b);
        s.termination = traj.termination;
        s.final_x = traj.x.back();
        s.sample_count = traj.samples.size();
        if (b) s.ultimate = ultimate_report(traj, *b);
        s.ok = true;
    } catch (const std::exception& e) {
        s.ok = false;
        s.error = e.what();
    }
    return s;
}

std::vector<RunSummary> run_batch_serial(std::span<const RunRequest> requests) {
    std::vector<RunSummary> out;
    out.reserve(requests.size());
    for (const auto& r : requests) out.push_back(summarize_run(r));
    return out;
}

std::vector<RunSummary> run_batch(std::span<const RunRequest> requests, int jobs) {
    std::vector<RunSummary> out(requests.size());
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
    const auto n = static_cast<long long>(requests.size());

    // Runs differ in horizon and termination time, so hand them out dynamically.
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long long i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = summarize_run(requests[static_cast<std::size_t>(i)]);
    }
    return out;
}

}  // namespace bfsmc
