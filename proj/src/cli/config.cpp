#include "hhiv/cli/config.hpp"

#include <cmath>
#include <istream>
#include <set>

namespace hhiv::cli {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

void reject_unknown(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.contains(key)) {
            fail((where.empty() ? "" : where + ": ") + "unknown field '" + key + "'");
        }
    }
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) fail("missing field '" + path + "'");
    return *it;
}

const json& require_object(const json& obj, const std::string& key, const std::string& path) {
    const json& v = require(obj, key, path);
    if (!v.is_object()) fail("field '" + path + "' must be an object");
    return v;
}

double as_number(const json& v, const std::string& path) {
    if (!v.is_number()) fail("field '" + path + "' must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail("field '" + path + "' must be finite");
    return d;
}

int as_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail("field '" + path + "' must be an integer");
    return v.get<int>();
}

std::string as_string(const json& v, const std::string& path) {
    if (!v.is_string()) fail("field '" + path + "' must be a string");
    return v.get<std::string>();
}

FunctionText parse_function(const json& obj, const std::string& path) {
    reject_unknown(obj, path, {"lower", "upper"});
    return {as_string(require(obj, "lower", path + ".lower"), path + ".lower"),
            as_string(require(obj, "upper", path + ".upper"), path + ".upper")};
}

WeightSpec parse_weight(const json& obj, const std::string& path) {
    reject_unknown(obj, path, {"kind", "s", "text"});
    WeightSpec w;
    w.kind = as_string(require(obj, "kind", path + ".kind"), path + ".kind");
    if (w.kind == "power") {
        w.s = as_number(require(obj, "s", path + ".s"), path + ".s");
    } else if (w.kind == "expr") {
        w.text = as_string(require(obj, "text", path + ".text"), path + ".text");
    } else if (w.kind != "linear" && w.kind != "constant") {
        fail("field '" + path + ".kind' must be one of linear, constant, power, expr (got '" + w.kind + "')");
    }
    if (w.kind != "power" && obj.contains("s")) fail("field '" + path + ".s' only applies to power weights");
    if (w.kind != "expr" && obj.contains("text")) fail("field '" + path + ".text' only applies to expr weights");
    return w;
}

QuadratureSpec parse_quadrature(const json& obj) {
    reject_unknown(obj, "quadrature", {"rule", "panels", "tol", "max_refinements"});
    QuadratureSpec q;
    try {
        if (obj.contains("rule")) quad::set_rule(q, as_string(obj["rule"], "quadrature.rule"));
    } catch (const std::invalid_argument& e) {
        fail(std::string("field 'quadrature.rule': ") + e.what());
    }
    if (obj.contains("panels")) q.panels = as_int(obj["panels"], "quadrature.panels");
    if (obj.contains("tol")) q.tol = as_number(obj["tol"], "quadrature.tol");
    if (obj.contains("max_refinements")) q.max_refinements = as_int(obj["max_refinements"], "quadrature.max_refinements");
    return q;
}

SweepPlan parse_sweep(const json& obj) {
    reject_unknown(obj, "sweep", {"parameter", "from", "to", "steps"});
    SweepPlan p;
    p.parameter = as_string(require(obj, "parameter", "sweep.parameter"), "sweep.parameter");
    p.from = as_number(require(obj, "from", "sweep.from"), "sweep.from");
    p.to = as_number(require(obj, "to", "sweep.to"), "sweep.to");
    p.steps = as_int(require(obj, "steps", "sweep.steps"), "sweep.steps");
    return p;
}

json weight_json(const WeightSpec& w) {
    json j{{"kind", w.kind}};
    if (w.s) j["s"] = *w.s;
    if (w.text) j["text"] = *w.text;
    return j;
}

WeightFunction build_weight(const WeightSpec& w, const std::string& path) {
    try {
        if (w.kind == "linear") return WeightFunction::linear();
        if (w.kind == "constant") return WeightFunction::constant();
        if (w.kind == "power") return WeightFunction::power(*w.s);
        return WeightFunction::custom(*w.text);
    } catch (const ParseError& e) {
        fail("field '" + path + ".text': " + e.what());
    } catch (const std::exception& e) {
        fail("field '" + path + "': " + e.what());
    }
}

expr::Expr build_expr(const std::string& text, const std::string& path) {
    try {
        return expr::Expr::parse(text, "x");
    } catch (const ParseError& e) {
        fail("field '" + path + "': " + e.what());
    }
}

IVFunction build_function(const FunctionText& ft, const HarmonicDomain& d, const std::string& path) {
    expr::Expr lower = build_expr(ft.lower, path + ".lower");
    expr::Expr upper = build_expr(ft.upper, path + ".upper");
    try {
        return IVFunction(std::move(lower), std::move(upper), d);
    } catch (const Error& e) {
        fail("field '" + path + "': " + e.what());
    }
}

}  // namespace

double SweepPlan::value(int step) const {
    if (step == steps - 1) return to;
    return from + (to - from) * step / (steps - 1);
}

RunConfig parse_config(const json& doc) {
    if (!doc.is_object()) fail("config must be a JSON object");
    reject_unknown(doc, "", {"domain", "function", "g", "weight", "weight2", "theorem", "direction", "tol", "grid",
                             "quadrature", "sweep"});
    RunConfig cfg;

    const json& domain = require_object(doc, "domain", "domain");
    reject_unknown(domain, "domain", {"a", "b"});
    cfg.a = as_number(require(domain, "a", "domain.a"), "domain.a");
    cfg.b = as_number(require(domain, "b", "domain.b"), "domain.b");

    cfg.f = parse_function(require_object(doc, "function", "function"), "function");
    if (doc.contains("g")) cfg.g = parse_function(require_object(doc, "g", "g"), "g");
    cfg.weight = parse_weight(require_object(doc, "weight", "weight"), "weight");
    if (doc.contains("weight2")) cfg.weight2 = parse_weight(require_object(doc, "weight2", "weight2"), "weight2");

    if (doc.contains("theorem")) {
        const std::string name = as_string(doc["theorem"], "theorem");
        const auto t = parse_theorem(name);
        if (!t) fail("field 'theorem' must be one of basic, refined, product-right, product-left (got '" + name + "')");
        cfg.theorem = *t;
    }
    if (doc.contains("direction")) {
        const std::string d = as_string(doc["direction"], "direction");
        if (d != "sx" && d != "sv") fail("field 'direction' must be sx or sv (got '" + d + "')");
        cfg.direction = d == "sx" ? Direction::sx : Direction::sv;
    }
    if (doc.contains("tol")) cfg.tol = as_number(doc["tol"], "tol");
    if (doc.contains("grid")) cfg.grid = as_int(doc["grid"], "grid");
    if (doc.contains("quadrature")) cfg.quadrature = parse_quadrature(require_object(doc, "quadrature", "quadrature"));
    if (doc.contains("sweep")) cfg.sweep = parse_sweep(require_object(doc, "sweep", "sweep"));

    validate(cfg);
    return cfg;
}

RunConfig read_config(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        fail(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config(doc);
}

void validate(const RunConfig& cfg) {
    if (!(0.0 < cfg.a && cfg.a < cfg.b)) fail("field 'domain' requires 0 < a < b");
    if (!(cfg.tol >= 0.0)) fail("field 'tol' must be >= 0");
    if (cfg.grid < 2) fail("field 'grid' must be >= 2");
    try {
        cfg.quadrature.validate();
    } catch (const std::invalid_argument& e) {
        fail(std::string("field 'quadrature': ") + e.what());
    }
    if (is_product(cfg.theorem)) {
        if (!cfg.g) fail("missing field 'g' (required by theorem " + std::string(to_string(cfg.theorem)) + ")");
        if (!cfg.weight2) {
            fail("missing field 'weight2' (required by theorem " + std::string(to_string(cfg.theorem)) + ")");
        }
    }
}

void validate_sweep(const RunConfig& cfg) {
    if (!cfg.sweep) fail("missing field 'sweep' (required by the sweep command)");
    const SweepPlan& p = *cfg.sweep;
    if (p.steps < 2) fail("field 'sweep.steps' must be >= 2");
    if (p.from > p.to) fail("field 'sweep.from' must not exceed 'sweep.to'");
    if (p.parameter == "s") {
        const bool any_power = cfg.weight.kind == "power" || (cfg.weight2 && cfg.weight2->kind == "power");
        if (!any_power) fail("field 'sweep.parameter' = s requires a power weight");
        if (!(p.from > 0.0)) fail("field 'sweep.from' must be > 0 for parameter s");
    } else if (p.parameter == "a") {
        if (!(p.from > 0.0 && p.to < cfg.b)) fail("field 'sweep' must keep 0 < a < b");
    } else if (p.parameter == "b") {
        if (!(p.from > cfg.a)) fail("field 'sweep' must keep 0 < a < b");
    } else {
        fail("field 'sweep.parameter' must be one of s, a, b (got '" + p.parameter + "')");
    }
}

RunConfig with_parameter(const RunConfig& cfg, const std::string& parameter, double value) {
    RunConfig out = cfg;
    if (parameter == "a") {
        out.a = value;
    } else if (parameter == "b") {
        out.b = value;
    } else if (parameter == "s") {
        if (out.weight.kind == "power") out.weight.s = value;
        if (out.weight2 && out.weight2->kind == "power") out.weight2->s = value;
    }
    return out;
}

json to_json(const RunConfig& cfg) {
    json j;
    j["domain"] = {{"a", cfg.a}, {"b", cfg.b}};
    j["function"] = {{"lower", cfg.f.lower}, {"upper", cfg.f.upper}};
    if (cfg.g) j["g"] = {{"lower", cfg.g->lower}, {"upper", cfg.g->upper}};
    j["weight"] = weight_json(cfg.weight);
    if (cfg.weight2) j["weight2"] = weight_json(*cfg.weight2);
    j["theorem"] = std::string(to_string(cfg.theorem));
    j["direction"] = std::string(to_string(cfg.direction));
    j["tol"] = cfg.tol;
    j["grid"] = cfg.grid;
    j["quadrature"] = {{"rule", cfg.quadrature.rule_name()},
                       {"panels", cfg.quadrature.panels},
                       {"tol", cfg.quadrature.tol},
                       {"max_refinements", cfg.quadrature.max_refinements}};
    if (cfg.sweep) {
        j["sweep"] = {{"parameter", cfg.sweep->parameter},
                      {"from", cfg.sweep->from},
                      {"to", cfg.sweep->to},
                      {"steps", cfg.sweep->steps}};
    }
    return j;
}

Model build_model(const RunConfig& cfg) {
    std::optional<HarmonicDomain> domain;
    try {
        domain.emplace(cfg.a, cfg.b);
    } catch (const std::invalid_argument& e) {
        fail(std::string("field 'domain': ") + e.what());
    }
    Model m{build_function(cfg.f, *domain, "function"), std::nullopt, build_weight(cfg.weight, "weight"),
            std::nullopt};
    if (cfg.g) m.g.emplace(build_function(*cfg.g, *domain, "g"));
    if (cfg.weight2) m.h2.emplace(build_weight(*cfg.weight2, "weight2"));
    return m;
}

}  // namespace hhiv::cli
