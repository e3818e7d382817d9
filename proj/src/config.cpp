#include "bfsmc/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <set>

#include "bfsmc/detail/overloaded.hpp"
#include "bfsmc/errors.hpp"

namespace bfsmc {

using nlohmann::json;
using detail::overloaded;

namespace {

/// Reads fields of one JSON object, remembering which keys were consumed so
/// that anything left over can be reported as unknown.
class ObjectReader {
public:
    ObjectReader(const json& obj, std::string path, std::vector<std::string>& issues)
        : obj_(obj), path_(std::move(path)), issues_(issues) {
        if (!obj_.is_object()) {
            issues_.push_back(path_ + ": expected an object");
            valid_ = false;
        }
    }

    ~ObjectReader() {
        if (!valid_) return;
        for (const auto& [key, _] : obj_.items()) {
            if (!seen_.count(key)) issues_.push_back("unknown key '" + qualify(key) + "'");
        }
    }

    ObjectReader(const ObjectReader&) = delete;
    ObjectReader& operator=(const ObjectReader&) = delete;

    bool valid() const { return valid_; }

    const json* child(const std::string& key) {
        if (!valid_) return nullptr;
        seen_.insert(key);
        auto it = obj_.find(key);
        return it == obj_.end() ? nullptr : &*it;
    }

    std::optional<double> number(const std::string& key) {
        const json* v = child(key);
        if (!v) return std::nullopt;
        if (!v->is_number()) {
            issues_.push_back(qualify(key) + ": expected a number");
            return std::nullopt;
        }
        const double d = v->get<double>();
        if (!std::isfinite(d)) {
            issues_.push_back(qualify(key) + ": must be finite");
            return std::nullopt;
        }
        return d;
    }

    double required_number(const std::string& key, double fallback = 0.0) {
        if (valid_ && !obj_.contains(key)) {
            seen_.insert(key);
            issues_.push_back(qualify(key) + ": required");
            return fallback;
        }
        return number(key).value_or(fallback);
    }

    std::optional<std::string> string(const std::string& key) {
        const json* v = child(key);
        if (!v) return std::nullopt;
        if (!v->is_string()) {
            issues_.push_back(qualify(key) + ": expected a string");
            return std::nullopt;
        }
        return v->get<std::string>();
    }

    std::string qualify(const std::string& key) const { return path_ + "." + key; }

private:
    const json& obj_;
    std::string path_;
    std::vector<std::string>& issues_;
    std::set<std::string> seen_;
    bool valid_ = true;
};

GainProfile parse_gain(const json& j, double g1, double g2, std::vector<std::string>& issues) {
    ObjectReader r(j, "plant.gain", issues);
    if (!r.valid()) return ConstantGain{g1};
    const auto type = r.string("type").value_or("");
    if (type == "constant") return ConstantGain{r.number("value").value_or(g1)};
    if (type == "square_wave")
        return SquareWaveGain{r.number("g1").value_or(g1), r.number("g2").value_or(g2)};
    issues.push_back("plant.gain.type: expected constant|square_wave");
    return ConstantGain{g1};
}

DisturbanceSpec parse_disturbance(const json& j, std::vector<std::string>& issues) {
    DisturbanceSpec d;
    ObjectReader r(j, "plant.disturbance", issues);
    if (!r.valid()) return d;
    d.phase = r.number("phase").value_or(0.0);
    d.declared_bound = r.number("declared_bound");
    const auto type = r.string("type").value_or("");
    if (type == "zero") {
        d.kind = ZeroDisturbance{};
    } else if (type == "constant") {
        d.kind = ConstantDisturbance{r.required_number("value")};
    } else if (type == "mixed") {
        const double bar = r.required_number("delta_bar");
        if (bar < 0.0) issues.push_back("plant.disturbance.delta_bar: must be non-negative");
        d.kind = MixedDisturbance{bar};
    } else if (type == "escape") {
        EscapeDisturbance e{r.required_number("magnitude"), EscapeDirection::Negative};
        const auto dir = r.string("direction").value_or("negative");
        if (dir == "follow_sign") e.direction = EscapeDirection::FollowSign;
        else if (dir != "negative") issues.push_back("plant.disturbance.direction: expected negative|follow_sign");
        d.kind = e;
    } else if (type == "sinusoid") {
        d.kind = SinusoidDisturbance{r.required_number("amplitude"), r.number("frequency").value_or(1.0)};
    } else {
        issues.push_back("plant.disturbance.type: expected zero|constant|mixed|escape|sinusoid");
    }
    return d;
}

PlantSpec parse_plant(const json& j, std::vector<std::string>& issues) {
    PlantSpec p;
    ObjectReader r(j, "plant", issues);
    if (!r.valid()) return p;
    p.g1 = r.required_number("g1", 1.0);
    p.g2 = r.required_number("g2", p.g1);
    if (const json* g = r.child("gain")) p.gain = parse_gain(*g, p.g1, p.g2, issues);
    else p.gain = ConstantGain{p.g1};
    if (const json* d = r.child("disturbance")) p.disturbance = parse_disturbance(*d, issues);
    return p;
}

ControllerSpec parse_controller(const json& j, std::vector<std::string>& issues) {
    ObjectReader r(j, "controller", issues);
    if (!r.valid()) return BfaController{};
    const auto type = r.string("type").value_or("");
    if (type == "bfa") return BfaController{r.required_number("epsilon", 1.0)};
    if (type == "bfsat") return BfsatController{r.required_number("epsilon", 1.0), r.required_number("c1", 1.0)};
    if (type == "linear_sat") return LinearSatController{r.required_number("k", 1.0), r.required_number("c1", 1.0)};
    issues.push_back("controller.type: expected bfa|bfsat|linear_sat");
    return BfaController{};
}

SimConfig parse_sim(const json& j, std::vector<std::string>& issues) {
    SimConfig s;
    ObjectReader r(j, "sim", issues);
    if (!r.valid()) return s;
    s.x0 = r.required_number("x0");
    s.tau = r.required_number("tau", 1.0);
    s.t_end = r.required_number("t_end", 1.0);
    s.h_inner = r.number("h_inner").value_or(1e-6);
    s.t0 = r.number("t0").value_or(0.0);
    if (const json* v = r.child("record_stride")) {
        if (v->is_number_integer() && v->get<std::int64_t>() >= 0) s.record_stride = v->get<std::size_t>();
        else issues.push_back("sim.record_stride: expected a non-negative integer");
    }
    return s;
}

RegionOverrides parse_regions(const json& j, std::vector<std::string>& issues) {
    RegionOverrides o;
    ObjectReader r(j, "regions", issues);
    if (!r.valid()) return o;
    o.epsilon = r.number("epsilon");
    o.c1 = r.number("c1");
    o.delta_bar = r.number("delta_bar");
    return o;
}

AnalysisRequest parse_analysis(const json& j, std::vector<std::string>& issues) {
    AnalysisRequest a;
    ObjectReader r(j, "analysis", issues);
    if (!r.valid()) return a;
    if (const json* reps = r.child("reports")) {
        if (!reps->is_array()) {
            issues.push_back("analysis.reports: expected an array of names");
        } else {
            for (const auto& item : *reps) {
                const std::string name = item.is_string() ? item.get<std::string>() : std::string();
                if (std::find(std::begin(kReportNames), std::end(kReportNames), name) == std::end(kReportNames))
                    issues.push_back("analysis.reports: unknown report '" + item.dump() + "'");
                else
                    a.reports.push_back(name);
            }
        }
    }
    a.reference_gain = r.number("reference_gain");
    a.beta = r.number("beta");
    a.theta = r.number("theta").value_or(1.0);
    return a;
}

OutputSpec parse_output(const json& j, std::vector<std::string>& issues) {
    OutputSpec o;
    ObjectReader r(j, "output", issues);
    if (!r.valid()) return o;
    o.dir = r.string("dir").value_or(o.dir);
    o.basename = r.string("basename").value_or(o.basename);
    return o;
}

void check_semantics(const ExperimentConfig& c, std::vector<std::string>& issues) {
    try {
        c.plant.validate();
    } catch (const std::exception& e) {
        issues.emplace_back(e.what());
    }
    try {
        validate(c.controller);
    } catch (const std::exception& e) {
        issues.emplace_back(e.what());
    }
    try {
        c.sim.validate();
    } catch (const ConfigError& e) {
        issues.insert(issues.end(), e.issues().begin(), e.issues().end());
    }

    const auto eps = c.regions.epsilon ? c.regions.epsilon : barrier_epsilon(c.controller);
    const auto c1 = c.regions.c1 ? c.regions.c1 : actuator_bound(c.controller);
    const double delta_bar = c.regions.delta_bar.value_or(c.plant.disturbance.delta_bar());
    if (c1 && !(delta_bar < *c1))
        issues.push_back("requires delta_bar < c1: disturbance bound " + std::to_string(delta_bar) +
                         " is not dominated by the actuator bound " + std::to_string(*c1));
    if (eps && !(*eps > 0.0)) issues.emplace_back("regions.epsilon: must be positive");

    if (std::holds_alternative<BfaController>(c.controller) && eps && !(std::abs(c.sim.x0) < *eps))
        issues.emplace_back("sim.x0: the barrier law requires |x0| < epsilon");

    const auto& a = c.analysis;
    if (a.has("ultimate") && !(eps && c1))
        issues.emplace_back("analysis.ultimate: needs epsilon and c1 (set regions.c1 for the pure barrier law)");
    if (a.has("reaching") && !std::holds_alternative<BfsatController>(c.controller))
        issues.emplace_back("analysis.reaching: requires the bfsat controller");
    if (a.has("gain")) {
        if (!a.reference_gain || !(*a.reference_gain > 0.0))
            issues.emplace_back("analysis.gain: needs a positive analysis.reference_gain");
        if (!eps) issues.emplace_back("analysis.gain: needs a barrier epsilon");
    }
    if (a.has("continuous") && !eps) issues.emplace_back("analysis.continuous: needs a barrier epsilon");
    if (a.beta && !(*a.beta > 0.0 && *a.beta < 1.0)) issues.emplace_back("analysis.beta: must lie in (0, 1)");
    if (!(a.theta > 0.0 && a.theta <= 1.0)) issues.emplace_back("analysis.theta: must lie in (0, 1]");
}

}  // namespace

bool AnalysisRequest::has(std::string_view name) const {
    return std::find(reports.begin(), reports.end(), name) != reports.end();
}

std::optional<RegionBounds> resolve_bounds(const ExperimentConfig& cfg) {
    const auto eps = cfg.regions.epsilon ? cfg.regions.epsilon : barrier_epsilon(cfg.controller);
    const auto c1 = cfg.regions.c1 ? cfg.regions.c1 : actuator_bound(cfg.controller);
    if (!eps || !c1) return std::nullopt;
    return bounds(*eps, *c1, cfg.regions.delta_bar.value_or(cfg.plant.disturbance.delta_bar()));
}

ExperimentConfig parse_config(const json& doc) {
    std::vector<std::string> issues;
    ExperimentConfig cfg;
    bool complete = false;
    {
        ObjectReader root(doc, "config", issues);
        if (!root.valid()) throw ConfigError(std::move(issues));
        const json* plant = root.child("plant");
        const json* controller = root.child("controller");
        const json* sim = root.child("sim");
        if (!plant) issues.emplace_back("config.plant: required");
        if (!controller) issues.emplace_back("config.controller: required");
        if (!sim) issues.emplace_back("config.sim: required");
        if (plant) cfg.plant = parse_plant(*plant, issues);
        if (controller) cfg.controller = parse_controller(*controller, issues);
        if (sim) cfg.sim = parse_sim(*sim, issues);
        if (const json* j = root.child("regions")) cfg.regions = parse_regions(*j, issues);
        if (const json* j = root.child("analysis")) cfg.analysis = parse_analysis(*j, issues);
        if (const json* j = root.child("output")) cfg.output = parse_output(*j, issues);
        complete = plant && controller && sim;
    }
    // Semantic checks also run when earlier fields had problems, so the caller sees everything.
    if (complete) check_semantics(cfg, issues);
    if (!issues.empty()) throw ConfigError(std::move(issues));
    return cfg;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError({"cannot read " + path.string()});
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError({path.string() + ": " + e.what()});
    }
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    return parse_config(read_json_file(path));
}

json to_json(const ExperimentConfig& cfg) {
    json plant;
    plant["g1"] = cfg.plant.g1;
    plant["g2"] = cfg.plant.g2;
    plant["gain"] = std::visit(overloaded{
                                   [](const ConstantGain& g) { return json{{"type", "constant"}, {"value", g.value}}; },
                                   [](const SquareWaveGain& g) {
                                       return json{{"type", "square_wave"}, {"g1", g.g1}, {"g2", g.g2}};
                                   },
                               },
                               cfg.plant.gain);
    const auto& d = cfg.plant.disturbance;
    json dist = std::visit(
        overloaded{
            [](const ZeroDisturbance&) { return json{{"type", "zero"}}; },
            [](const ConstantDisturbance& c) { return json{{"type", "constant"}, {"value", c.value}}; },
            [](const MixedDisturbance& p) { return json{{"type", "mixed"}, {"delta_bar", p.delta_bar}}; },
            [](const EscapeDisturbance& e) {
                return json{{"type", "escape"},
                            {"magnitude", e.magnitude},
                            {"direction", e.direction == EscapeDirection::Negative ? "negative" : "follow_sign"}};
            },
            [](const SinusoidDisturbance& s) {
                return json{{"type", "sinusoid"}, {"amplitude", s.amplitude}, {"frequency", s.frequency}};
            },
        },
        d.kind);
    dist["phase"] = d.phase;
    if (d.declared_bound) dist["declared_bound"] = *d.declared_bound;
    plant["disturbance"] = dist;

    json controller = std::visit(
        overloaded{
            [](const BfaController& c) { return json{{"type", "bfa"}, {"epsilon", c.epsilon}}; },
            [](const BfsatController& c) { return json{{"type", "bfsat"}, {"epsilon", c.epsilon}, {"c1", c.c1}}; },
            [](const LinearSatController& c) { return json{{"type", "linear_sat"}, {"k", c.k}, {"c1", c.c1}}; },
        },
        cfg.controller);

    json sim{{"x0", cfg.sim.x0},           {"tau", cfg.sim.tau}, {"h_inner", cfg.sim.h_inner},
             {"t_end", cfg.sim.t_end},     {"t0", cfg.sim.t0},   {"record_stride", cfg.sim.record_stride}};

    json regions = json::object();
    if (cfg.regions.epsilon) regions["epsilon"] = *cfg.regions.epsilon;
    if (cfg.regions.c1) regions["c1"] = *cfg.regions.c1;
    if (cfg.regions.delta_bar) regions["delta_bar"] = *cfg.regions.delta_bar;

    json analysis{{"reports", cfg.analysis.reports}, {"theta", cfg.analysis.theta}};
    if (cfg.analysis.reference_gain) analysis["reference_gain"] = *cfg.analysis.reference_gain;
    if (cfg.analysis.beta) analysis["beta"] = *cfg.analysis.beta;

    return json{{"plant", plant},       {"controller", controller}, {"sim", sim},
                {"regions", regions},   {"analysis", analysis},
                {"output", json{{"dir", cfg.output.dir}, {"basename", cfg.output.basename}}}};
}

}  // namespace bfsmc
