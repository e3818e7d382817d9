#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bfsmc/analysis.hpp"
#include "bfsmc/config.hpp"
#include "bfsmc/simengine.hpp"

namespace bfsmc {

struct RunReports {
    std::optional<RegionBounds> bounds;
    std::optional<UltimateReport> ultimate;
    std::optional<ReachingReport> reaching;
    std::optional<ChatteringReport> chattering;
    std::optional<GainReport> gain;
    std::optional<std::pair<FinalSetTheory, ContinuousBoundCheck>> continuous;
    std::vector<std::string> errors;
};

struct ExperimentResult {
    Trajectory trajectory;
    RunReports reports;
    /// Every declared check held and the run was not stopped by a barrier violation.
    bool passed = false;
};

RunReports analyze(const ExperimentConfig& cfg, const Trajectory& traj);
bool checks_passed(const RunReports& reports, const Trajectory& traj);

/// Simulates the configured closed loop and computes the requested reports.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Full key=value report of one run.
void write_report(std::ostream& os, const ExperimentConfig& cfg, const ExperimentResult& result);

std::string summary_csv_header();
std::string summary_csv_row(const std::string& name, const ExperimentResult& result);

/// Writes <basename>.csv, <basename>_report.txt and <basename>_summary.csv to `dir`.
std::vector<std::filesystem::path> write_outputs(const std::filesystem::path& dir,
                                                 const ExperimentConfig& cfg,
                                                 const ExperimentResult& result);

}  // namespace bfsmc
