#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bfsmc/adversary.hpp"
#include "bfsmc/config.hpp"

namespace bfsmc {

inline constexpr std::string_view kFigureIds[] = {"escape", "barrier", "linear_vs_bfa", "gains", "reaching"};

/// Barrier law on the benchmark plant: eps = 0.01, c1 = 5, delta_bar = 4.4,
/// g in [1, 1.5], tau = 1.38e-4, x0 = 0.005, 1 s at h = 1e-6.
ExperimentConfig barrier_preset();

/// Comparison setup eps = 0.5, g = 1, tau = 0.0062, c1 = 7.5, delta_bar = 3;
/// barrier law when `linear` is false, saturated u = -17 x otherwise.
ExperimentConfig comparison_preset(bool linear);

/// Saturated barrier law on the benchmark plant from x0, with a horizon long
/// enough to reach the final set.
ExperimentConfig reaching_preset(double x0);

/// One sampling period tau = 0.01 with g = 1, eps = 0.01, x0 = -0.005 and the
/// sufficient constant magnitude.
EscapeSetup escape_preset();

struct ReproduceResult {
    std::string figure;
    bool passed = false;
    std::string report;  ///< key=value text, also written to <figure>_report.txt
    std::vector<std::filesystem::path> files;
};

/// Runs a figure preset, writing CSVs, reports and a gnuplot script to `out_dir`.
/// Throws DomainError for an unknown figure id.
ReproduceResult reproduce(std::string_view figure_id, const std::filesystem::path& out_dir, int jobs = 0);

}  // namespace bfsmc
