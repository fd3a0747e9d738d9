#include "rcdb/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace rcdb {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw ConfigError("unknown key \"" + it.key() + "\" in " + where);
}

LinkSpec parse_link(const json& j) {
    reject_unknown(j, {"kind", "scale", "inner"}, "link");
    const std::string kind = j.value("kind", "sigmoid");
    if (kind == "sigmoid") return LinkSpec::sigmoid();
    if (kind == "piecewise_linear") return LinkSpec::piecewise_linear();
    if (kind == "scaled") {
        if (!j.contains("scale")) throw ConfigError("scaled link requires \"scale\"");
        const std::string inner = j.value("inner", "sigmoid");
        LinkKind ik;
        if (inner == "sigmoid") ik = LinkKind::Sigmoid;
        else if (inner == "piecewise_linear") ik = LinkKind::PiecewiseLinear;
        else throw ConfigError("unknown inner link: " + inner);
        return LinkSpec::scaled(ik, j.at("scale").get<double>());
    }
    throw ConfigError("unknown link kind: " + kind);
}

ActionSetSpec parse_action_set(const json& j, int d) {
    reject_unknown(j, {"kind", "actions"}, "action_set");
    ActionSetSpec spec;
    const std::string kind = j.value("kind", "hypercube");
    if (kind == "hypercube") spec.kind = ActionSetKind::Hypercube;
    else if (kind == "basis") spec.kind = ActionSetKind::Basis;
    else if (kind == "explicit") {
        spec.kind = ActionSetKind::Explicit;
        if (!j.contains("actions"))
            throw ConfigError("explicit action set requires \"actions\"");
        for (const auto& row : j.at("actions")) {
            Vec a = row.get<Vec>();
            if (a.size() != static_cast<std::size_t>(d))
                throw ConfigError("explicit action has wrong dimension");
            spec.explicit_actions.push_back(std::move(a));
        }
    } else {
        throw ConfigError("unknown action_set kind: " + kind);
    }
    return spec;
}

PolicyConfig parse_policy(const json& j, int default_c_bar, std::size_t index) {
    const std::string where = "policies[" + std::to_string(index) + "]";
    reject_unknown(j, {"kind", "name", "c_bar", "bonus_scale", "overrides"}, where);
    PolicyConfig pc;
    if (!j.contains("kind")) throw ConfigError(where + " requires \"kind\"");
    pc.kind = policy_kind_from_string(j.at("kind").get<std::string>());
    pc.name = j.value("name", policy_kind_name(pc.kind));
    pc.c_bar = j.value("c_bar", default_c_bar);
    if (pc.c_bar < 0) throw ConfigError(where + ": c_bar must be >= 0");
    pc.bonus_scale = j.value("bonus_scale", kDefaultBonusScale);
    if (!(pc.bonus_scale >= 0.0)) throw ConfigError(where + ": bonus_scale must be >= 0");
    if (j.contains("overrides")) {
        const auto& ov = j.at("overrides");
        reject_unknown(ov, {"lambda", "alpha", "beta"}, where + ".overrides");
        if (ov.contains("lambda")) pc.lambda_override = ov.at("lambda").get<double>();
        if (ov.contains("alpha")) pc.alpha_override = ov.at("alpha").get<double>();
        if (ov.contains("beta")) pc.beta_override = ov.at("beta").get<double>();
    }
    return pc;
}

}  // namespace

AttackKind attack_kind_from_string(const std::string& s) {
    if (s == "none") return AttackKind::None;
    if (s == "greedy") return AttackKind::Greedy;
    if (s == "random") return AttackKind::Random;
    if (s == "adversarial") return AttackKind::Adversarial;
    if (s == "misleading") return AttackKind::Misleading;
    throw ConfigError("unknown attack kind: " + s);
}

std::string attack_kind_name(AttackKind k) {
    switch (k) {
        case AttackKind::None: return "none";
        case AttackKind::Greedy: return "greedy";
        case AttackKind::Random: return "random";
        case AttackKind::Adversarial: return "adversarial";
        case AttackKind::Misleading: return "misleading";
    }
    return "unknown";
}

RunConfig parse_config_text(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("JSON parse error: ") + e.what());
    }
    reject_unknown(j,
                   {"d", "t", "b", "link", "action_set", "theta", "runs", "base_seed",
                    "delta", "policies", "attack"},
                   "top level");

    RunConfig cfg;
    cfg.d = j.value("d", 5);
    cfg.T = j.value("t", 2000);
    cfg.B = j.value("b", 2.0);
    if (cfg.d < 1) throw ConfigError("d must be >= 1");
    if (cfg.T < 1) throw ConfigError("t must be >= 1");
    if (!(cfg.B > 0.0)) throw ConfigError("b must be > 0");
    cfg.runs = j.value("runs", 10);
    if (cfg.runs < 1) throw ConfigError("runs must be >= 1");
    cfg.base_seed = j.value("base_seed", std::uint64_t{1});
    cfg.delta = j.value("delta", 0.05);
    if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) throw ConfigError("delta must be in (0,1)");

    cfg.link = j.contains("link") ? parse_link(j.at("link")) : LinkSpec::sigmoid();
    cfg.action_set = j.contains("action_set") ? parse_action_set(j.at("action_set"), cfg.d)
                                              : ActionSetSpec{};

    if (j.contains("theta")) {
        const auto& t = j.at("theta");
        reject_unknown(t, {"mode", "values", "redraw_per_run"}, "theta");
        const std::string mode = t.value("mode", "random_norm2");
        if (mode == "random_norm2") {
            cfg.theta.random_norm2 = true;
        } else if (mode == "explicit") {
            cfg.theta.random_norm2 = false;
            if (!t.contains("values"))
                throw ConfigError("explicit theta requires \"values\"");
            cfg.theta.explicit_values = t.at("values").get<Vec>();
        } else {
            throw ConfigError("unknown theta mode: " + mode);
        }
        cfg.redraw_theta_per_run = t.value("redraw_per_run", true);
    }

    if (j.contains("attack")) {
        const auto& a = j.at("attack");
        reject_unknown(a, {"kind", "budget", "p", "target"}, "attack");
        cfg.attack.kind = attack_kind_from_string(a.value("kind", "none"));
        cfg.attack.budget =
            a.value("budget", static_cast<int>(std::ceil(std::sqrt(double(cfg.T)))));
        cfg.attack.p = a.value("p", 0.5);
        cfg.attack.target = a.value("target", -1LL);
        if (cfg.attack.budget < 0 || cfg.attack.budget > cfg.T)
            throw ConfigError("attack.budget must be in [0, t]");
        if (cfg.attack.kind == AttackKind::Random &&
            !(cfg.attack.p > 0.0 && cfg.attack.p < 1.0))
            throw ConfigError("attack.p must be in (0,1)");
    } else {
        cfg.attack.budget = static_cast<int>(std::ceil(std::sqrt(double(cfg.T))));
    }

    if (j.contains("policies")) {
        const auto& arr = j.at("policies");
        if (!arr.is_array() || arr.empty())
            throw ConfigError("policies must be a nonempty array");
        for (std::size_t i = 0; i < arr.size(); ++i)
            cfg.policies.push_back(parse_policy(arr[i], cfg.attack.budget, i));
    } else {
        PolicyConfig pc;
        pc.c_bar = cfg.attack.budget;
        cfg.policies.push_back(pc);
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string resolved_config_json(const RunConfig& cfg) {
    json j;
    j["d"] = cfg.d;
    j["t"] = cfg.T;
    j["b"] = cfg.B;
    json link;
    switch (cfg.link.kind) {
        case LinkKind::Sigmoid: link["kind"] = "sigmoid"; break;
        case LinkKind::PiecewiseLinear: link["kind"] = "piecewise_linear"; break;
        case LinkKind::Scaled:
            link["kind"] = "scaled";
            link["scale"] = cfg.link.scale;
            link["inner"] = cfg.link.inner == LinkKind::Sigmoid ? "sigmoid"
                                                                : "piecewise_linear";
            break;
    }
    j["link"] = link;
    json aset;
    switch (cfg.action_set.kind) {
        case ActionSetKind::Hypercube: aset["kind"] = "hypercube"; break;
        case ActionSetKind::Basis: aset["kind"] = "basis"; break;
        case ActionSetKind::Explicit:
            aset["kind"] = "explicit";
            aset["actions"] = cfg.action_set.explicit_actions;
            break;
    }
    j["action_set"] = aset;
    json theta;
    theta["mode"] = cfg.theta.random_norm2 ? "random_norm2" : "explicit";
    if (!cfg.theta.random_norm2) theta["values"] = cfg.theta.explicit_values;
    theta["redraw_per_run"] = cfg.redraw_theta_per_run;
    j["theta"] = theta;
    j["runs"] = cfg.runs;
    j["base_seed"] = cfg.base_seed;
    j["delta"] = cfg.delta;
    json pols = json::array();
    for (const auto& pc : cfg.policies) {
        json p;
        p["kind"] = policy_kind_name(pc.kind);
        p["name"] = pc.name;
        p["c_bar"] = pc.c_bar;
        p["bonus_scale"] = pc.bonus_scale;
        json ov;
        if (!std::isnan(pc.lambda_override)) ov["lambda"] = pc.lambda_override;
        if (!std::isnan(pc.alpha_override)) ov["alpha"] = pc.alpha_override;
        if (!std::isnan(pc.beta_override)) ov["beta"] = pc.beta_override;
        if (!ov.empty()) p["overrides"] = ov;
        pols.push_back(p);
    }
    j["policies"] = pols;
    json attack;
    attack["kind"] = attack_kind_name(cfg.attack.kind);
    attack["budget"] = cfg.attack.budget;
    attack["p"] = cfg.attack.p;
    if (cfg.attack.target >= 0) attack["target"] = cfg.attack.target;
    j["attack"] = attack;
    return j.dump(2);
}

}  // namespace rcdb
