#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "hhiv/harmonic.hpp"
#include "hhiv/hh_bounds.hpp"

namespace hhiv::cli {

/// Invalid or incomplete run configuration; maps to exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

struct FunctionText {
    std::string lower;
    std::string upper;
};

struct WeightSpec {
    std::string kind;  // linear | constant | power | expr
    std::optional<double> s;
    std::optional<std::string> text;
};

struct SweepPlan {
    std::string parameter;  // s | a | b
    double from = 0.0;
    double to = 0.0;
    int steps = 0;

    /// Evenly spaced values, the last one exactly `to`.
    double value(int step) const;
};

struct RunConfig {
    double a = 0.0;
    double b = 0.0;
    FunctionText f;
    std::optional<FunctionText> g;
    WeightSpec weight;
    std::optional<WeightSpec> weight2;
    Theorem theorem = Theorem::basic;
    Direction direction = Direction::sx;
    double tol = 1e-9;
    int grid = 64;
    QuadratureSpec quadrature;
    std::optional<SweepPlan> sweep;
};

/// Validates and converts a config document. Unknown keys are rejected.
/// Throws ConfigError naming the offending field.
RunConfig parse_config(const nlohmann::ordered_json& doc);

/// Reads JSON text; syntax errors carry the parser's byte position.
RunConfig read_config(std::istream& in);

/// Checks cross-field requirements after flag overrides are applied.
void validate(const RunConfig& cfg);

/// Checks the sweep plan against the base config (requires cfg.sweep).
void validate_sweep(const RunConfig& cfg);

/// Returns a copy of cfg with the sweep parameter set to `value`.
RunConfig with_parameter(const RunConfig& cfg, const std::string& parameter, double value);

nlohmann::ordered_json to_json(const RunConfig& cfg);

/// Parsed, validated objects for one run.
struct Model {
    IVFunction f;
    std::optional<IVFunction> g;
    WeightFunction h;
    std::optional<WeightFunction> h2;
};

/// Parses every expression and validates functions on the domain. Throws
/// ConfigError with the field name and, for expressions, the parse position.
Model build_model(const RunConfig& cfg);

}  // namespace hhiv::cli
