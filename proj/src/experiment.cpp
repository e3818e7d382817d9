#include "bfsmc/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "bfsmc/io.hpp"

namespace bfsmc {

RunReports analyze(const ExperimentConfig& cfg, const Trajectory& traj) {
    RunReports r;
    r.bounds = traj.bounds;
    const auto& a = cfg.analysis;
    const auto record_error = [&](const char* what, const std::exception& e) {
        r.errors.push_back(std::string(what) + ": " + e.what());
    };

    if (a.has("ultimate") && r.bounds) r.ultimate = ultimate_report(traj, *r.bounds);
    if (a.has("reaching")) {
        try {
            r.reaching = reaching_report(traj, cfg.plant, cfg.controller);
        } catch (const std::exception& e) {
            record_error("reaching", e);
        }
    }
    if (a.has("chattering")) r.chattering = chattering_metric(traj);

    const auto eps = cfg.regions.epsilon ? cfg.regions.epsilon : barrier_epsilon(cfg.controller);
    if (a.has("gain") && eps && a.reference_gain) {
        try {
            r.gain = gain_report(traj, *eps, *a.reference_gain);
        } catch (const std::exception& e) {
            record_error("gain", e);
        }
    }
    if (a.has("continuous") && eps) {
        try {
            const double delta_bar = cfg.regions.delta_bar.value_or(cfg.plant.disturbance.delta_bar());
            const double beta = a.beta.value_or(std::max(std::abs(cfg.sim.x0) / *eps, 1e-12));
            const auto theory = final_set_theory(*eps, delta_bar, beta, a.theta);
            r.continuous = {theory, continuous_bound_check(traj, theory)};
        } catch (const std::exception& e) {
            record_error("continuous", e);
        }
    }
    return r;
}

bool checks_passed(const RunReports& r, const Trajectory& traj) {
    if (traj.termination != Termination::Completed) return false;
    if (!r.errors.empty()) return false;
    if (r.ultimate && !r.ultimate->passed()) return false;
    if (r.reaching && !r.reaching->within_bound) return false;
    if (r.continuous && !r.continuous->second.passed) return false;
    return true;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    ExperimentResult res;
    res.trajectory = run(cfg.plant, cfg.controller, cfg.sim, resolve_bounds(cfg));
    res.reports = analyze(cfg, res.trajectory);
    res.passed = checks_passed(res.reports, res.trajectory);
    return res;
}

void write_report(std::ostream& os, const ExperimentConfig& cfg, const ExperimentResult& res) {
    const auto& traj = res.trajectory;
    os << "run.termination=" << (traj.termination == Termination::Completed ? "completed" : "barrier_violation") << '\n'
       << "run.samples=" << traj.samples.size() << '\n'
       << "run.inner_points=" << traj.inner_points << '\n'
       << "run.final_x=" << format_double(traj.x.back()) << '\n'
       << "run.tau=" << format_double(cfg.sim.tau) << '\n'
       << "run.h_inner=" << format_double(cfg.sim.h_inner) << '\n';
    if (traj.violation) {
        os << "run.violation_t=" << format_double(traj.violation->t) << '\n'
           << "run.violation_x=" << format_double(traj.violation->x) << '\n';
    }
    if (const auto& b = res.reports.bounds) {
        os << "regions.epsilon=" << format_double(b->epsilon) << '\n'
           << "regions.x_final=" << format_double(b->x_final) << '\n'
           << "regions.x_saturation=" << format_double(b->x_saturation) << '\n';
    }
    const auto& r = res.reports;
    if (r.ultimate) write_kv(os, "ultimate.", *r.ultimate);
    if (r.reaching) write_kv(os, "reaching.", *r.reaching);
    if (r.chattering) write_kv(os, "chattering.", *r.chattering);
    if (r.gain) write_kv(os, "gain.", *r.gain);
    if (r.continuous) write_kv(os, "continuous.", r.continuous->first, r.continuous->second);
    for (std::size_t i = 0; i < r.errors.size(); ++i) os << "error." << i << '=' << r.errors[i] << '\n';
    os << "passed=" << (res.passed ? "true" : "false") << '\n';
}

std::string summary_csv_header() {
    return "name,termination,samples,final_x,entry_sample,invariant_after_entry,saturation_visited,"
           "max_abs_x,max_abs_u,l_bound,l_empirical,chattering_rate,gain_ratio,continuous_margin,passed";
}

std::string summary_csv_row(const std::string& name, const ExperimentResult& res) {
    const auto& t = res.trajectory;
    const auto& r = res.reports;
    std::ostringstream os;
    os << name << ',' << (t.termination == Termination::Completed ? "completed" : "barrier_violation") << ','
       << t.samples.size() << ',' << format_double(t.x.back()) << ',';
    if (r.ultimate) {
        os << (r.ultimate->entry_sample ? std::to_string(*r.ultimate->entry_sample) : "") << ','
           << r.ultimate->invariant_after_entry << ',' << r.ultimate->saturation_visited << ','
           << format_double(r.ultimate->max_abs_x_overall) << ',' << format_double(r.ultimate->max_abs_u) << ',';
    } else {
        os << ",,,,,";
    }
    if (r.reaching) {
        os << r.reaching->l_bound << ','
           << (r.reaching->l_empirical ? std::to_string(*r.reaching->l_empirical) : "") << ',';
    } else {
        os << ",,";
    }
    os << (r.chattering ? format_double(r.chattering->rate) : "") << ','
       << (r.gain ? format_double(r.gain->ratio) : "") << ','
       << (r.continuous ? format_double(r.continuous->second.margin) : "") << ','
       << res.passed;
    return os.str();
}

std::vector<std::filesystem::path> write_outputs(const std::filesystem::path& dir,
                                                 const ExperimentConfig& cfg,
                                                 const ExperimentResult& result) {
    const auto& base = cfg.output.basename;
    const auto csv = dir / (base + ".csv");
    const auto report = dir / (base + "_report.txt");
    const auto summary = dir / (base + "_summary.csv");

    write_trajectory_csv(csv, result.trajectory);
    std::ostringstream rep;
    write_report(rep, cfg, result);
    write_text_file(report, rep.str());
    write_text_file(summary, summary_csv_header() + "\n" + summary_csv_row(base, result) + "\n");
    return {csv, report, summary};
}

}  // namespace bfsmc
