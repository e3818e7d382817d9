#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bfsmc/controller.hpp"
#include "bfsmc/model.hpp"
#include "bfsmc/regions.hpp"
#include "bfsmc/simengine.hpp"

namespace bfsmc {

/// Overrides for the region classifier. Missing fields come from the
/// controller (epsilon, c1) and the disturbance (delta_bar).
struct RegionOverrides {
    std::optional<double> epsilon;
    std::optional<double> c1;
    std::optional<double> delta_bar;

    bool operator==(const RegionOverrides&) const = default;
};

inline constexpr const char* kReportNames[] = {"ultimate", "reaching", "chattering", "gain", "continuous"};

struct AnalysisRequest {
    std::vector<std::string> reports;
    std::optional<double> reference_gain;  ///< linear gain k for the gain report
    std::optional<double> beta;            ///< defaults to |x0| / epsilon
    double theta = 1.0;

    bool has(std::string_view name) const;
    bool operator==(const AnalysisRequest&) const = default;
};

struct OutputSpec {
    std::string dir = "out";
    std::string basename = "run";

    bool operator==(const OutputSpec&) const = default;
};

struct ExperimentConfig {
    PlantSpec plant;
    ControllerSpec controller = BfaController{};
    SimConfig sim;
    RegionOverrides regions;
    AnalysisRequest analysis;
    OutputSpec output;

    bool operator==(const ExperimentConfig&) const = default;
};

/// Region bounds from the overrides, controller and plant; nullopt when epsilon or c1
/// cannot be determined. Throws InfeasibleError when delta_bar >= c1.
std::optional<RegionBounds> resolve_bounds(const ExperimentConfig& cfg);

/// Validates a parsed document. Throws ConfigError with every violation found.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config(const std::filesystem::path& path);

nlohmann::json to_json(const ExperimentConfig& cfg);

/// Reads a JSON file; throws ConfigError on I/O or syntax errors.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace bfsmc
