#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <vector>

#include <omp.h>

#include "bfsmc/batch.hpp"
#include "bfsmc/config.hpp"
#include "bfsmc/reproduce.hpp"

using namespace bfsmc;

int main(int argc, char** argv) {
    const int runs = argc > 1 ? std::atoi(argv[1]) : 32;
    const double horizon = argc > 2 ? std::atof(argv[2]) : 0.1;

    const auto cfg = barrier_preset();
    const auto b = resolve_bounds(cfg);
    std::vector<RunRequest> requests;
    for (int i = 0; i < runs; ++i) {
        RunRequest r{cfg.plant, cfg.controller, cfg.sim, b};
        r.plant.disturbance.phase = 2.0 * std::numbers::pi * i / runs;
        r.sim.t_end = horizon;
        r.sim.record_stride = 0;
        requests.push_back(r);
    }

    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    const auto serial = run_batch_serial(requests);
    const double t_serial = std::chrono::duration<double>(clock::now() - t0).count();

    t0 = clock::now();
    const auto parallel = run_batch(requests);
    const double t_parallel = std::chrono::duration<double>(clock::now() - t0).count();

    int mismatches = 0;
    for (std::size_t i = 0; i < serial.size(); ++i)
        if (serial[i].final_x != parallel[i].final_x || serial[i].passed() != parallel[i].passed()) ++mismatches;

    std::printf("runs=%d horizon=%g threads=%d\n", runs, horizon, omp_get_max_threads());
    std::printf("serial   %.3f s\n", t_serial);
    std::printf("parallel %.3f s  (speedup %.2fx)\n", t_parallel, t_serial / t_parallel);
    std::printf("mismatches=%d\n", mismatches);
    return mismatches == 0 ? 0 : 1;
}
