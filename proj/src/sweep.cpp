#include "bfsmc/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "bfsmc/batch.hpp"
#include "bfsmc/config.hpp"
#include "bfsmc/errors.hpp"
#include "bfsmc/io.hpp"

namespace bfsmc {

using nlohmann::json;

namespace {

json::json_pointer pointer_for(const std::string& dotted) {
    std::string p;
    std::stringstream ss(dotted);
    for (std::string part; std::getline(ss, part, '.');) p += "/" + part;
    return json::json_pointer(p);
}

std::optional<double> config_tau_max(const ExperimentConfig& cfg, FormulaVariant v) {
    const auto eps = cfg.regions.epsilon ? cfg.regions.epsilon : barrier_epsilon(cfg.controller);
    const auto c1 = cfg.regions.c1 ? cfg.regions.c1 : actuator_bound(cfg.controller);
    if (!eps || !c1) return std::nullopt;
    return tau_max(*eps, *c1, cfg.plant.g2, v);
}

std::string quote(std::string s) {
    std::replace(s.begin(), s.end(), '"', '\'');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return "\"" + s + "\"";
}

std::string opt_double(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

}  // namespace

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
    if (!(lo > 0.0) || !(hi >= lo)) throw DomainError("log_grid: requires 0 < lo <= hi");
    if (count == 0) return {};
    if (count == 1) return {lo};
    std::vector<double> out(count);
    const double step = std::log(hi / lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) out[i] = lo * std::exp(step * static_cast<double>(i));
    out.back() = hi;
    return out;
}

SweepSpec parse_sweep(const json& doc, const std::filesystem::path& origin) {
    std::vector<std::string> issues;
    SweepSpec spec;
    if (!doc.is_object()) throw ConfigError({"sweep: expected an object"});

    static const std::set<std::string> known{"base",   "base_config", "axis",     "values",
                                             "log_grid", "phases",    "snap_tau", "variant"};
    for (const auto& [key, _] : doc.items())
        if (!known.count(key)) issues.push_back("unknown key 'sweep." + key + "'");

    if (doc.contains("base")) {
        spec.base = doc["base"];
    } else if (doc.contains("base_config") && doc["base_config"].is_string()) {
        std::filesystem::path p = doc["base_config"].get<std::string>();
        if (p.is_relative() && !origin.empty()) p = origin / p;
        spec.base = read_json_file(p);
    } else {
        issues.emplace_back("sweep.base: required (inline object or base_config path)");
    }

    if (doc.contains("axis") && doc["axis"].is_string()) spec.axis = doc["axis"].get<std::string>();
    else issues.emplace_back("sweep.axis: required dotted parameter path");

    if (doc.contains("variant")) {
        try {
            spec.variant = parse_variant(doc["variant"].get<std::string>());
        } catch (const std::exception& e) {
            issues.emplace_back(std::string("sweep.variant: ") + e.what());
        }
    }
    if (doc.contains("snap_tau")) spec.snap_tau = doc["snap_tau"].get<bool>();

    if (doc.contains("values")) {
        if (!doc["values"].is_array()) issues.emplace_back("sweep.values: expected an array");
        else
            for (const auto& v : doc["values"]) {
                if (v.is_number()) spec.values.push_back(v.get<double>());
                else issues.emplace_back("sweep.values: non-numeric entry " + v.dump());
            }
    } else if (doc.contains("log_grid")) {
        const auto& g = doc["log_grid"];
        if (!g.is_object() || !g.contains("min") || !g.contains("max") || !g.contains("count")) {
            issues.emplace_back("sweep.log_grid: needs min, max and count");
        } else {
            double lo = g["min"].get<double>();
            double hi = g["max"].get<double>();
            if (g.contains("relative_to")) {
                if (g["relative_to"] != "tau_max") {
                    issues.emplace_back("sweep.log_grid.relative_to: only tau_max is supported");
                } else if (issues.empty()) {
                    try {
                        const auto tm = config_tau_max(parse_config(spec.base), spec.variant);
                        if (!tm) throw ConfigError({"base config has no epsilon/c1 to compute tau_max"});
                        lo *= *tm;
                        hi *= *tm;
                    } catch (const ConfigError& e) {
                        issues.emplace_back(std::string("sweep.log_grid.relative_to: ") + e.what());
                    }
                }
            }
            try {
                spec.values = log_grid(lo, hi, g["count"].get<std::size_t>());
            } catch (const std::exception& e) {
                issues.emplace_back(std::string("sweep.log_grid: ") + e.what());
            }
        }
    }
    if (spec.values.empty()) issues.emplace_back("sweep: axis values must be nonempty");

    if (doc.contains("phases")) {
        if (!doc["phases"].is_array()) issues.emplace_back("sweep.phases: expected an array");
        else
            for (const auto& v : doc["phases"]) {
                if (v.is_number()) spec.phases.push_back(v.get<double>());
                else issues.emplace_back("sweep.phases: non-numeric entry " + v.dump());
            }
    }

    if (!issues.empty()) throw ConfigError(std::move(issues));
    return spec;
}

SweepSpec load_sweep(const std::filesystem::path& path) {
    return parse_sweep(read_json_file(path), path.parent_path());
}

std::size_t SweepResult::guarantee_violations() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return r.below_tau_max() && !r.passed; }));
}

SweepResult run_sweep(const SweepSpec& spec, int jobs) {
    if (spec.values.empty()) throw ConfigError({"sweep: axis values must be nonempty"});

    std::vector<std::optional<double>> phases;
    if (spec.phases.empty()) phases.push_back(std::nullopt);
    else phases.assign(spec.phases.begin(), spec.phases.end());

    SweepResult result;
    std::vector<RunRequest> requests;
    std::vector<std::size_t> request_row;
    const auto axis_ptr = pointer_for(spec.axis);

    for (const double raw : spec.values) {
        for (const auto& phase : phases) {
            SweepRow row;
            row.index = result.rows.size();
            row.phase = phase;
            row.value = raw;
            try {
                json doc = spec.base;
                if (spec.snap_tau && spec.axis == "sim.tau") {
                    const double h = doc["sim"].value("h_inner", 1e-6);
                    row.value = std::max(1.0, std::round(raw / h)) * h;
                }
                doc[axis_ptr] = row.value;
                if (phase) doc["plant"]["disturbance"]["phase"] = *phase;
                doc["sim"]["record_stride"] = 0;

                const ExperimentConfig cfg = parse_config(doc);
                row.tau = cfg.sim.tau;
                row.tau_max = config_tau_max(cfg, spec.variant);
                const auto b = resolve_bounds(cfg);
                if (!b) throw ConfigError({"sweep rows need region bounds (epsilon and c1)"});
                requests.push_back(RunRequest{cfg.plant, cfg.controller, cfg.sim, b});
                request_row.push_back(row.index);
                row.status = "ok";
            } catch (const std::exception& e) {
                row.status = "config_error";
                row.message = e.what();
            }
            result.rows.push_back(std::move(row));
        }
    }

    const auto summaries = jobs == 1 ? run_batch_serial(requests) : run_batch(requests, jobs);
    for (std::size_t i = 0; i < summaries.size(); ++i) {
        auto& row = result.rows[request_row[i]];
        const auto& s = summaries[i];
        if (!s.ok) {
            row.status = "run_error";
            row.message = s.error;
            continue;
        }
        const auto& u = *s.ultimate;
        row.entry_sample = u.entry_sample;
        row.invariant_after_entry = u.invariant_after_entry;
        row.saturation_visited = u.saturation_visited;
        row.barrier_violation = u.barrier_violation;
        row.max_abs_x = u.max_abs_x_overall;
        row.max_abs_u = u.max_abs_u;
        row.passed = s.passed() && !u.saturation_visited;
    }
    return result;
}

std::string sweep_csv_header() {
    return "row,axis,value,phase,tau,tau_max,below_tau_max,status,entry_sample,invariant_after_entry,"
           "saturation_visited,barrier_violation,max_abs_x,max_abs_u,passed,message";
}

std::string sweep_csv(const SweepSpec& spec, const SweepResult& result) {
    std::ostringstream os;
    os << sweep_csv_header() << '\n';
    for (const auto& r : result.rows) {
        os << r.index << ',' << spec.axis << ',' << format_double(r.value) << ',' << opt_double(r.phase) << ','
           << opt_double(r.tau) << ',' << opt_double(r.tau_max) << ',' << r.below_tau_max() << ',' << r.status
           << ',' << (r.entry_sample ? std::to_string(*r.entry_sample) : std::string()) << ','
           << r.invariant_after_entry << ',' << r.saturation_visited << ',' << r.barrier_violation << ','
           << format_double(r.max_abs_x) << ',' << format_double(r.max_abs_u) << ',' << r.passed << ','
           << (r.message.empty() ? std::string() : quote(r.message)) << '\n';
    }
    return os.str();
}

}  // namespace bfsmc
