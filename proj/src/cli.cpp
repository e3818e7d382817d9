#include "bfsmc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bfsmc/adversary.hpp"
#include "bfsmc/config.hpp"
#include "bfsmc/errors.hpp"
#include "bfsmc/experiment.hpp"
#include "bfsmc/io.hpp"
#include "bfsmc/reproduce.hpp"
#include "bfsmc/sweep.hpp"
#include "bfsmc/tuning.hpp"

namespace bfsmc {

namespace {

struct CommonOptions {
    std::string config;
    std::string out;
    std::string variant;
    int jobs = 0;
};

std::filesystem::path output_dir(const CommonOptions& o, const std::optional<std::string>& from_config) {
    if (!o.out.empty()) return o.out;
    if (const char* env = std::getenv("BFSMC_OUT"); env && *env) return env;
    return from_config.value_or("out");
}

struct TuneInputs {
    double epsilon = 0.0, tau = 0.0, c1 = 0.0, g2 = 0.0, delta_bar = 0.0;
};

int cmd_simulate(const CommonOptions& o, std::ostream& out) {
    if (o.config.empty()) throw ConfigError({"simulate: --config is required"});
    auto cfg = load_config(o.config);
    const auto dir = output_dir(o, cfg.output.dir);
    const auto result = run_experiment(cfg);
    const auto files = write_outputs(dir, cfg, result);
    write_report(out, cfg, result);
    for (const auto& f : files) out << "file=" << f.string() << '\n';
    return result.passed ? kExitOk : kExitCheckFailed;
}

int cmd_tune(const CommonOptions& o, TuneInputs in, const CLI::App& sub, std::ostream& out) {
    const auto given = [&](const char* name) { return sub.count(name) > 0; };
    if (!o.config.empty()) {
        const auto cfg = load_config(o.config);
        const auto eps = cfg.regions.epsilon ? cfg.regions.epsilon : barrier_epsilon(cfg.controller);
        const auto c1 = cfg.regions.c1 ? cfg.regions.c1 : actuator_bound(cfg.controller);
        if (!given("--epsilon") && eps) in.epsilon = *eps;
        if (!given("--c1") && c1) in.c1 = *c1;
        if (!given("--tau")) in.tau = cfg.sim.tau;
        if (!given("--g2")) in.g2 = cfg.plant.g2;
        if (!given("--delta-bar")) in.delta_bar = cfg.regions.delta_bar.value_or(cfg.plant.disturbance.delta_bar());
    }
    std::vector<std::string> missing;
    if (!(in.epsilon > 0.0)) missing.emplace_back("tune: epsilon must be given and positive");
    if (!(in.tau > 0.0)) missing.emplace_back("tune: tau must be given and positive");
    if (!(in.c1 > 0.0)) missing.emplace_back("tune: c1 must be given and positive");
    if (!(in.g2 > 0.0)) missing.emplace_back("tune: g2 must be given and positive");
    if (in.delta_bar < 0.0) missing.emplace_back("tune: delta_bar must be non-negative");
    if (!missing.empty()) throw ConfigError(std::move(missing));

    const auto variant = o.variant.empty() ? FormulaVariant::Statement : parse_variant(o.variant);
    const auto r = solve_tuning(in.epsilon, in.tau, in.c1, in.g2, in.delta_bar, variant);

    std::ostringstream kv;
    kv << "input.epsilon=" << format_double(in.epsilon) << '\n'
       << "input.tau=" << format_double(in.tau) << '\n'
       << "input.c1=" << format_double(in.c1) << '\n'
       << "input.g2=" << format_double(in.g2) << '\n'
       << "input.delta_bar=" << format_double(in.delta_bar) << '\n';
    write_kv(kv, "", r);
    const bool tau_ok = in.tau < r.tau_max;
    const bool c1_ok = r.c1_interval.contains(in.c1);
    kv << "check.tau_below_max=" << (tau_ok ? "true" : "false") << '\n'
       << "check.c1_in_range=" << (c1_ok ? "true" : "false") << '\n';
    out << kv.str();

    if (!o.out.empty() || std::getenv("BFSMC_OUT")) {
        const auto dir = output_dir(o, std::nullopt);
        std::ostringstream csv;
        csv << "variant,epsilon,tau,c1,g2,delta_bar,tau_max,epsilon_min,c1_min,c1_max,c1_feasible\n"
            << to_string(variant) << ',' << format_double(in.epsilon) << ',' << format_double(in.tau) << ','
            << format_double(in.c1) << ',' << format_double(in.g2) << ',' << format_double(in.delta_bar) << ','
            << format_double(r.tau_max) << ',' << format_double(r.epsilon_min) << ','
            << format_double(r.c1_interval.lower) << ',' << format_double(r.c1_interval.upper) << ','
            << (r.c1_interval.feasible() ? "true" : "false") << '\n';
        write_text_file(dir / "tune.csv", csv.str());
        out << "file=" << (dir / "tune.csv").string() << '\n';
    }
    return tau_ok && c1_ok ? kExitOk : kExitCheckFailed;
}

struct AdversaryInputs {
    double epsilon = 0.01, x0 = -0.005, tau = 0.01, g1 = 1.0, rho = 1.0, h_inner = 1e-6;
    std::string mode = "proof";
};

int cmd_adversary(const CommonOptions& o, const AdversaryInputs& in, std::ostream& out) {
    if (!(in.epsilon > 0.0) || !(std::abs(in.x0) < in.epsilon))
        throw ConfigError({"adversary: requires epsilon > 0 and |x0| < epsilon"});
    EscapeSetup s;
    s.controller = BfaController{in.epsilon};
    s.x0 = in.x0;
    s.tau = in.tau;
    s.g1 = in.g1;
    s.h_inner = in.h_inner;
    s.rho = in.rho;
    if (in.mode == "proof") {
        s.varpi = escape_magnitude(in.epsilon, in.g1, in.tau, bfa(in.x0, in.epsilon));
        s.direction = EscapeDirection::Negative;
    } else if (in.mode == "sim") {
        s.varpi = escape_magnitude_sim(in.epsilon, in.x0, in.tau);
        s.direction = EscapeDirection::FollowSign;
    } else {
        throw ConfigError({"adversary: --mode must be proof or sim"});
    }

    Trajectory traj;
    const auto cert = verify_escape(s, &traj);
    write_kv(out, "escape.", cert);
    const auto dir = output_dir(o, std::nullopt);
    write_trajectory_csv(dir / "escape.csv", traj);
    out << "file=" << (dir / "escape.csv").string() << '\n';
    return cert.status == CertificateStatus::Certified ? kExitOk : kExitCheckFailed;
}

int cmd_sweep(const CommonOptions& o, std::ostream& out) {
    if (o.config.empty()) throw ConfigError({"sweep: --config is required"});
    auto doc = read_json_file(o.config);
    if (!o.variant.empty() && doc.is_object()) doc["variant"] = o.variant;
    const auto spec = parse_sweep(doc, std::filesystem::path(o.config).parent_path());
    const auto result = run_sweep(spec, o.jobs);

    const auto dir = output_dir(o, std::nullopt);
    write_text_file(dir / "sweep.csv", sweep_csv(spec, result));

    std::size_t ok = 0, failed_rows = 0;
    for (const auto& r : result.rows) {
        if (r.status == "ok") ++ok;
        else ++failed_rows;
    }
    out << "sweep.rows=" << result.rows.size() << '\n'
        << "sweep.completed=" << ok << '\n'
        << "sweep.errors=" << failed_rows << '\n'
        << "sweep.passed=" << std::count_if(result.rows.begin(), result.rows.end(),
                                            [](const SweepRow& r) { return r.passed; })
        << '\n'
        << "sweep.guarantee_violations=" << result.guarantee_violations() << '\n'
        << "file=" << (dir / "sweep.csv").string() << '\n';
    return result.guarantee_violations() == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_reproduce(const CommonOptions& o, const std::vector<std::string>& figures, std::ostream& out) {
    std::vector<std::string> ids = figures;
    if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) ids.assign(std::begin(kFigureIds), std::end(kFigureIds));
    for (const auto& id : ids)
        if (std::find(std::begin(kFigureIds), std::end(kFigureIds), id) == std::end(kFigureIds))
            throw ConfigError({"reproduce: unknown figure id '" + id + "'"});

    const auto dir = output_dir(o, std::nullopt);
    bool all_ok = true;
    for (const auto& id : ids) {
        const auto r = reproduce(id, dir, o.jobs);
        std::istringstream lines(r.report);
        for (std::string line; std::getline(lines, line);) {
            if (line.rfind(id + '.', 0) == 0) out << line << '\n';
            else out << id << '.' << line << '\n';
        }
        all_ok = all_ok && r.passed;
    }
    return all_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sampled barrier-function sliding-mode control simulator", "bfsmc"};
    app.require_subcommand(1);

    CommonOptions common;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", common.config, "Experiment or sweep JSON file");
        sub->add_option("--out", common.out, "Output directory (overrides BFSMC_OUT and the config)");
        sub->add_option("--variant", common.variant, "Sampling-bound formula")
            ->check(CLI::IsMember({"statement", "proof"}));
        sub->add_option("--jobs", common.jobs, "Worker threads (0 = all cores, 1 = serial)")
            ->check(CLI::NonNegativeNumber);
    };

    auto* simulate = app.add_subcommand("simulate", "Run one configured experiment");
    add_common(simulate);

    TuneInputs tune_in;
    auto* tune = app.add_subcommand("tune", "Solve the sampling-period / barrier / actuator relation");
    add_common(tune);
    tune->add_option("--epsilon", tune_in.epsilon);
    tune->add_option("--tau", tune_in.tau);
    tune->add_option("--c1", tune_in.c1);
    tune->add_option("--g2", tune_in.g2);
    tune->add_option("--delta-bar", tune_in.delta_bar);

    AdversaryInputs adv_in;
    auto* adversary = app.add_subcommand("adversary", "Certify the one-period escape disturbance");
    add_common(adversary);
    adversary->add_option("--epsilon", adv_in.epsilon, "Barrier width")->capture_default_str();
    adversary->add_option("--x0", adv_in.x0, "Initial state")->capture_default_str();
    adversary->add_option("--tau", adv_in.tau, "Sampling period")->capture_default_str();
    adversary->add_option("--g1", adv_in.g1, "Gain lower bound")->capture_default_str();
    adversary->add_option("--rho", adv_in.rho, "Magnitude scale")->capture_default_str();
    adversary->add_option("--h-inner", adv_in.h_inner, "Inner step")->capture_default_str();
    adversary->add_option("--mode", adv_in.mode, "proof | sim")
        ->check(CLI::IsMember({"proof", "sim"}))
        ->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
    add_common(sweep);

    std::vector<std::string> figures;
    auto* repro = app.add_subcommand("reproduce", "Regenerate a figure preset");
    add_common(repro);
    repro->add_option("figures", figures, "escape | barrier | linear_vs_bfa | gains | reaching | all");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(common, out);
        if (tune->parsed()) return cmd_tune(common, tune_in, *tune, out);
        if (adversary->parsed()) return cmd_adversary(common, adv_in, out);
        if (sweep->parsed()) return cmd_sweep(common, out);
        if (repro->parsed()) return cmd_reproduce(common, figures, out);
    } catch (const ConfigError& e) {
        for (const auto& issue : e.issues()) err << "config error: " << issue << '\n';
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "config error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace bfsmc
