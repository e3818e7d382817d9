#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "bfsmc/adversary.hpp"
#include "bfsmc/analysis.hpp"
#include "bfsmc/simengine.hpp"
#include "bfsmc/tuning.hpp"

namespace bfsmc {

/// Shortest text with 17 significant digits; "nan"/"inf" for non-finite values.
std::string format_double(double v);

inline constexpr std::string_view kTrajectoryHeader = "t,x,u,delta,g,region,is_sample";

void write_trajectory_csv(std::ostream& os, const Trajectory& traj);
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj);

/// Flat key=value lines, each key prefixed with `prefix` (e.g. "ultimate.").
void write_kv(std::ostream& os, std::string_view prefix, const UltimateReport& r);
void write_kv(std::ostream& os, std::string_view prefix, const ReachingReport& r);
void write_kv(std::ostream& os, std::string_view prefix, const ChatteringReport& r);
void write_kv(std::ostream& os, std::string_view prefix, const GainReport& r);
void write_kv(std::ostream& os, std::string_view prefix, const FinalSetTheory& th,
              const ContinuousBoundCheck& c);
void write_kv(std::ostream& os, std::string_view prefix, const EscapeCertificate& c);
void write_kv(std::ostream& os, std::string_view prefix, const TuningResult& r);

/// Writes `text` to `path`, creating parent directories.
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace bfsmc
