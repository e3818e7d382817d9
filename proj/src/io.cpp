#include "bfsmc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace bfsmc {

namespace {

std::string_view yes_no(bool v) { return v ? "true" : "false"; }

std::string opt_index(const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string("none");
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    return out;
}

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf, static_cast<std::size_t>(n));
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    os << kTrajectoryHeader << '\n';
    std::string line;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        line.clear();
        line += format_double(traj.t[i]);
        line += ',';
        line += format_double(traj.x[i]);
        line += ',';
        line += format_double(traj.u[i]);
        line += ',';
        line += format_double(traj.delta[i]);
        line += ',';
        line += format_double(traj.g[i]);
        line += ',';
        line += std::to_string(static_cast<int>(traj.region[i]));
        line += ',';
        line += traj.is_sample[i] ? '1' : '0';
        line += '\n';
        os << line;
    }
}

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj) {
    auto out = open_for_write(path);
    write_trajectory_csv(out, traj);
}

void write_kv(std::ostream& os, std::string_view p, const UltimateReport& r) {
    os << p << "entry_sample=" << opt_index(r.entry_sample) << '\n'
       << p << "invariant_after_entry=" << yes_no(r.invariant_after_entry) << '\n'
       << p << "attractive=" << yes_no(r.attractive) << '\n'
       << p << "max_abs_x_after_entry=" << format_double(r.max_abs_x_after_entry) << '\n'
       << p << "max_abs_x_overall=" << format_double(r.max_abs_x_overall) << '\n'
       << p << "max_abs_u=" << format_double(r.max_abs_u) << '\n'
       << p << "saturation_visited=" << yes_no(r.saturation_visited) << '\n'
       << p << "barrier_violation=" << yes_no(r.barrier_violation) << '\n'
       << p << "passed=" << yes_no(r.passed()) << '\n';
}

void write_kv(std::ostream& os, std::string_view p, const ReachingReport& r) {
    os << p << "d=" << format_double(r.d) << '\n'
       << p << "c1_minus_delta_bar=" << format_double(r.raw_margin) << '\n'
       << p << "sigma_step=" << format_double(r.sigma_step) << '\n'
       << p << "l_bound=" << r.l_bound << '\n'
       << p << "l_empirical=" << opt_index(r.l_empirical) << '\n'
       << p << "reached=" << yes_no(r.reached) << '\n'
       << p << "within_bound=" << yes_no(r.within_bound) << '\n'
       << p << "monotone_before_reaching=" << yes_no(r.monotone_before_reaching) << '\n'
       << p << "horizon=" << format_double(r.horizon) << '\n';
}

void write_kv(std::ostream& os, std::string_view p, const ChatteringReport& r) {
    os << p << "sign_changes=" << r.sign_changes << '\n'
       << p << "duration=" << format_double(r.duration) << '\n'
       << p << "rate=" << format_double(r.rate) << '\n';
}

void write_kv(std::ostream& os, std::string_view p, const GainReport& r) {
    os << p << "max_barrier_gain=" << format_double(r.max_barrier_gain) << '\n'
       << p << "reference_gain=" << format_double(r.reference_gain) << '\n'
       << p << "ratio=" << format_double(r.ratio) << '\n';
}

void write_kv(std::ostream& os, std::string_view p, const FinalSetTheory& th,
              const ContinuousBoundCheck& c) {
    os << p << "beta=" << format_double(th.beta) << '\n'
       << p << "theta=" << format_double(th.theta) << '\n'
       << p << "phi=" << format_double(th.phi) << '\n'
       << p << "final_radius=" << format_double(th.final_radius) << '\n'
       << p << "bound=" << format_double(th.bound) << '\n'
       << p << "tail_sup=" << format_double(c.tail_sup) << '\n'
       << p << "overall_sup=" << format_double(c.overall_sup) << '\n'
       << p << "tolerance=" << format_double(c.tolerance) << '\n'
       << p << "margin=" << format_double(c.margin) << '\n'
       << p << "passed=" << yes_no(c.passed) << '\n';
}

void write_kv(std::ostream& os, std::string_view p, const EscapeCertificate& c) {
    os << p << "status=" << (c.status == CertificateStatus::Certified ? "CERTIFIED" : "FALSIFIED") << '\n'
       << p << "varpi=" << format_double(c.varpi) << '\n'
       << p << "rho=" << format_double(c.rho) << '\n'
       << p << "u0=" << format_double(c.u0) << '\n'
       << p << "x0=" << format_double(c.x0) << '\n'
       << p << "epsilon=" << format_double(c.epsilon) << '\n'
       << p << "tau=" << format_double(c.tau) << '\n'
       << p << "predicted_exit=" << yes_no(c.predicted_exit) << '\n'
       << p << "verified_state=" << format_double(c.verified_state) << '\n'
       << p << "exit_time=" << (c.exit_time ? format_double(*c.exit_time) : std::string("none")) << '\n'
       << p << "exited_before_t1=" << yes_no(c.exited_before_t1) << '\n';
}

void write_kv(std::ostream& os, std::string_view p, const TuningResult& r) {
    os << p << "variant=" << to_string(r.formula_variant) << '\n'
       << p << "tau_max=" << format_double(r.tau_max) << '\n'
       << p << "epsilon_min=" << format_double(r.epsilon_min) << '\n'
       << p << "c1_min=" << format_double(r.c1_interval.lower) << '\n'
       << p << "c1_max=" << format_double(r.c1_interval.upper) << '\n'
       << p << "c1_feasible=" << yes_no(r.c1_interval.feasible()) << '\n';
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    auto out = open_for_write(path);
    out << text;
}

}  // namespace bfsmc
