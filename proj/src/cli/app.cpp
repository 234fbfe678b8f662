#include "hhiv/cli/app.hpp"

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hhiv/cli/config.hpp"
#include "hhiv/cli/report.hpp"

namespace hhiv::cli {

using json = nlohmann::ordered_json;

namespace {

struct Flags {
    std::string config;
    std::optional<double> tol;
    std::optional<int> grid;
    std::string out;
    bool pretty = false;
};

// Computation failure after the config was accepted; maps to exit code 3.
class ComputeFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

RunConfig load(const Flags& flags, std::istream& in) {
    RunConfig cfg;
    if (flags.config == "-") {
        cfg = read_config(in);
    } else {
        std::ifstream file(flags.config);
        if (!file) throw ConfigError("cannot open config file '" + flags.config + "'");
        cfg = read_config(file);
    }
    if (flags.tol) cfg.tol = *flags.tol;
    if (flags.grid) cfg.grid = *flags.grid;
    validate(cfg);
    return cfg;
}

json document(const RunConfig& cfg, const ChainReport& report) {
    const json r = to_json(report);
    json doc;
    doc["version"] = std::string(kVersion);
    doc["theorem"] = r["theorem"];
    doc["direction"] = r["direction"];
    doc["inputs"] = to_json(cfg);
    doc["terms"] = r["terms"];
    doc["inclusions"] = r["inclusions"];
    doc["coefficients"] = r["coefficients"];
    return doc;
}

ChainOptions chain_options(const RunConfig& cfg, quad::Execution exec = quad::Execution::parallel) {
    return {cfg.direction, cfg.quadrature, cfg.tol, exec};
}

ChainReport chain(const RunConfig& cfg, const Model& m, quad::Execution exec = quad::Execution::parallel) {
    return compute_chain(cfg.theorem, m.f, m.g ? &*m.g : nullptr, m.h, m.h2 ? &*m.h2 : nullptr,
                         chain_options(cfg, exec));
}

struct Certificates {
    Certificate f;
    std::optional<Certificate> g;

    bool passed() const { return f.passed() && (!g || g->passed()); }
};

Certificates certify_all(const RunConfig& cfg, const Model& m) {
    Certificates c{certify(m.f, m.h, cfg.direction, cfg.grid), std::nullopt};
    if (m.g && m.h2) c.g = certify(*m.g, *m.h2, cfg.direction, cfg.grid);
    return c;
}

void add_certificates(json& doc, const Certificates& c) {
    doc["certificate"] = to_json(c.f);
    if (c.g) doc["certificate_g"] = to_json(*c.g);
}

void emit(const json& doc, const Flags& flags, std::ostream& out) {
    const std::string text = doc.dump(flags.pretty ? 2 : -1) + "\n";
    if (flags.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(flags.out, std::ios::binary);
    if (!file) throw ComputeFailure("cannot write '" + flags.out + "'");
    file << text;
}

int cmd_enclose(const RunConfig& cfg, const Model& m, const Flags& flags, std::ostream& out) {
    emit(document(cfg, chain(cfg, m)), flags, out);
    return kSuccess;
}

int cmd_verify(const RunConfig& cfg, const Model& m, const Flags& flags, std::ostream& out) {
    const Certificates certs = certify_all(cfg, m);
    const ChainReport report = chain(cfg, m);
    std::string status = "verified";
    if (!certs.passed()) {
        status = "hypothesis-unmet";
    } else if (!report.all_hold_tol()) {
        status = "inclusion-failed";
    }
    json doc = document(cfg, report);
    doc["status"] = status;
    add_certificates(doc, certs);
    emit(doc, flags, out);
    return status == "verified" ? kSuccess : kNegative;
}

int cmd_certify(const RunConfig& cfg, const Model& m, const Flags& flags, std::ostream& out) {
    const Certificates certs = certify_all(cfg, m);
    json doc;
    doc["version"] = std::string(kVersion);
    doc["inputs"] = to_json(cfg);
    add_certificates(doc, certs);
    emit(doc, flags, out);
    return certs.passed() ? kSuccess : kNegative;
}

int cmd_sweep(const RunConfig& cfg, const Flags& flags, std::ostream& out) {
    validate_sweep(cfg);
    const SweepPlan& plan = *cfg.sweep;
    std::vector<std::optional<ChainReport>> reports(plan.steps);
    std::vector<std::string> errors(plan.steps);

#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < plan.steps; ++i) {
        try {
            const RunConfig step = with_parameter(cfg, plan.parameter, plan.value(i));
            validate(step);
            const Model m = build_model(step);
            reports[i] = chain(step, m, quad::Execution::serial);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (int i = 0; i < plan.steps; ++i) {
        if (!errors[i].empty()) {
            throw ComputeFailure("sweep failed at " + plan.parameter + " = " + format_number(plan.value(i)) + ": " +
                                 errors[i]);
        }
    }

    std::string csv = csv_line(csv_header(*reports.front()));
    for (int i = 0; i < plan.steps; ++i) csv += csv_line(csv_row(plan.value(i), *reports[i]));
    if (flags.out.empty()) {
        out << csv;
    } else {
        std::ofstream file(flags.out, std::ios::binary);
        if (!file) throw ComputeFailure("cannot write '" + flags.out + "'");
        file << csv;
    }
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hermite-Hadamard inclusion chains for harmonically h-convex interval-valued functions", "hhiv"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    Flags flags;
    auto add_common = [&flags](CLI::App* sub) {
        sub->add_option("config,--config", flags.config, "Config JSON path, or - for standard input")->required();
        sub->add_option("--tol", flags.tol, "Inclusion tolerance (overrides config)");
        sub->add_option("--grid", flags.grid, "Certifier grid size (overrides config)");
        sub->add_option("--out", flags.out, "Write output to this path instead of standard output");
        sub->add_flag("--pretty", flags.pretty, "Indent JSON output");
    };
    CLI::App* enclose = app.add_subcommand("enclose", "Compute a chain report");
    CLI::App* verify = app.add_subcommand("verify", "Certify membership, then check the chain");
    CLI::App* certify_cmd = app.add_subcommand("certify", "Grid-search the membership inclusion");
    CLI::App* sweep = app.add_subcommand("sweep", "Sweep s, a or b and write CSV rows");
    for (CLI::App* sub : {enclose, verify, certify_cmd, sweep}) add_common(sub);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kConfigError;
    }

    RunConfig cfg;
    std::optional<Model> model;
    try {
        cfg = load(flags, in);
        if (!sweep->parsed()) model.emplace(build_model(cfg));
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    }

    try {
        if (enclose->parsed()) return cmd_enclose(cfg, *model, flags, out);
        if (verify->parsed()) return cmd_verify(cfg, *model, flags, out);
        if (certify_cmd->parsed()) return cmd_certify(cfg, *model, flags, out);
        return cmd_sweep(cfg, flags, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        err << "computation error: " << e.what() << "\n";
        return kComputeError;
    }
}

}  // namespace hhiv::cli
