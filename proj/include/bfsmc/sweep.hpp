#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bfsmc/tuning.hpp"

namespace bfsmc {

/// One-axis parameter sweep over a base experiment, crossed with disturbance phases.
struct SweepSpec {
    nlohmann::json base;      ///< experiment config document
    std::string axis;         ///< dotted path into `base`, e.g. "sim.tau"
    std::vector<double> values;
    std::vector<double> phases;  ///< disturbance time offsets; empty keeps the base phase
    /// Round sim.tau values to the nearest multiple of sim.h_inner (at least one step).
    bool snap_tau = true;
    FormulaVariant variant = FormulaVariant::Statement;
};

/// Geometric grid of `count` points from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, std::size_t count);

/// Parses a sweep document:
///   {"base": {...} | "base_config": "path", "axis": "sim.tau",
///    "values": [...] | "log_grid": {"min", "max", "count", "relative_to": "tau_max"},
///    "phases": [...], "snap_tau": true, "variant": "statement"}
/// Relative paths in base_config resolve against `origin`.
SweepSpec parse_sweep(const nlohmann::json& doc, const std::filesystem::path& origin = {});
SweepSpec load_sweep(const std::filesystem::path& path);

struct SweepRow {
    std::size_t index = 0;
    double value = 0.0;          ///< axis value after snapping
    std::optional<double> phase;
    std::optional<double> tau;
    std::optional<double> tau_max;
    std::string status;          ///< ok | config_error | run_error
    std::string message;
    std::optional<std::size_t> entry_sample;
    bool invariant_after_entry = false;
    bool saturation_visited = false;
    bool barrier_violation = false;
    double max_abs_x = 0.0;
    double max_abs_u = 0.0;
    bool passed = false;

    bool below_tau_max() const noexcept { return tau && tau_max && *tau < *tau_max; }
};

struct SweepResult {
    std::vector<SweepRow> rows;

    /// Rows strictly below the admissible sampling bound that failed invariance.
    std::size_t guarantee_violations() const;
};

/// Runs every (value, phase) combination. Row order is value-major, phase-minor,
/// and does not depend on `jobs`. jobs == 1 uses the serial reference path.
SweepResult run_sweep(const SweepSpec& spec, int jobs = 0);

std::string sweep_csv_header();
std::string sweep_csv(const SweepSpec& spec, const SweepResult& result);

}  // namespace bfsmc
