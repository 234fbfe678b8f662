#pragma once

#include <optional>
#include <string>
#include <variant>

#include "hhiv/adaptive.hpp"
#include "hhiv/expr.hpp"
#include "hhiv/interval.hpp"

namespace hhiv {

/// Domain [a, b] with 0 < a < b; closed under the weighted harmonic mean.
class HarmonicDomain {
public:
    /// Throws std::invalid_argument unless 0 < a < b, both finite.
    HarmonicDomain(double a, double b);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    bool contains(double x) const noexcept { return a_ <= x && x <= b_; }

    /// Harmonic midpoint 2ab/(a+b).
    double harmonic_midpoint() const noexcept;

    friend bool operator==(const HarmonicDomain&, const HarmonicDomain&) = default;

private:
    double a_;
    double b_;
};

/// xy / (t y + (1 - t) x), clamped to [min(x, y), max(x, y)].
/// Requires x, y > 0 and t in [0, 1]; throws std::invalid_argument otherwise.
double harmonic_mean(double x, double y, double t);

/// Interval-valued function x -> [lower(x), upper(x)] with positive values.
class IVFunction {
public:
    static constexpr int kValidationSamples = 1024;

    /// Parses both endpoint expressions in the variable "x" and validates
    /// lower <= upper and lower > 0 on kValidationSamples uniform points.
    /// Throws ParseError, DomainError or InvariantError.
    IVFunction(std::string lower, std::string upper, HarmonicDomain domain);
    IVFunction(expr::Expr lower, expr::Expr upper, HarmonicDomain domain);

    /// Throws DomainError when x is outside [a, b] and InvariantError when
    /// the value is not a positive interval.
    Interval operator()(double x) const;

    const expr::Expr& lower() const noexcept { return lower_; }
    const expr::Expr& upper() const noexcept { return upper_; }
    const HarmonicDomain& domain() const noexcept { return domain_; }
    bool is_degenerate() const;

private:
    void validate_samples() const;

    expr::Expr lower_;
    expr::Expr upper_;
    HarmonicDomain domain_;
};

inline Interval eval_iv(const IVFunction& f, double x) { return f(x); }

/// Weight h: [0, 1] -> [0, inf).
class WeightFunction {
public:
    struct Linear {};
    struct Constant {};
    struct Power {
        double s;
    };
    struct Custom {
        expr::Expr h;
    };
    using Kind = std::variant<Linear, Constant, Power, Custom>;

    static constexpr double kSampleMargin = 1e-9;

    static WeightFunction linear() { return WeightFunction(Linear{}); }
    static WeightFunction constant() { return WeightFunction(Constant{}); }
    /// Throws std::invalid_argument unless s > 0 and finite.
    static WeightFunction power(double s);
    /// Parses text in the variable "t" and checks it is finite and
    /// non-negative on [1e-9, 1 - 1e-9], and not identically zero there.
    static WeightFunction custom(std::string text);

    double operator()(double t) const;

    const Kind& kind() const noexcept { return kind_; }
    bool is_named() const noexcept { return !std::holds_alternative<Custom>(kind_); }
    /// "linear", "constant", "power(s=0.5)" or "expr(<text>)".
    std::string describe() const;

    /// Exponent p when h(t) = t^p (linear: 1, constant: 0, power: s).
    std::optional<double> exponent() const noexcept;

private:
    explicit WeightFunction(Kind kind) : kind_(std::move(kind)) {}

    Kind kind_;
};

/// Spec used for weight moments that have no closed form: 1e-10 absolute.
quad::QuadratureSpec moment_quadrature();

/// ∫₀¹ h(t) dt, closed form for named weights.
double h_moment(const WeightFunction& h);
/// ∫₀¹ h₁(t) h₂(t) dt.
double h_moment_product(const WeightFunction& h1, const WeightFunction& h2);
/// ∫₀¹ h₁(t) h₂(1 - t) dt.
double h_moment_mirror(const WeightFunction& h1, const WeightFunction& h2);

// Quadrature-only versions of the three moments, used to cross-check the
// closed forms. Throw ConvergenceError for non-integrable weights.
double h_moment_numeric(const WeightFunction& h);
double h_moment_product_numeric(const WeightFunction& h1, const WeightFunction& h2);
double h_moment_mirror_numeric(const WeightFunction& h1, const WeightFunction& h2);

// Scalar harmonic h-convexity at one point: f(HM) <= h(t) f(x) + h(1-t) f(y)
// with HM = harmonic_mean(x, y, t) (concave: >=), up to relative rounding slack.
bool scalar_h_convex_at(const expr::Expr& f, const WeightFunction& h, double x, double y, double t,
                        double slack = 1e-12);
bool scalar_h_concave_at(const expr::Expr& f, const WeightFunction& h, double x, double y, double t,
                         double slack = 1e-12);

enum class Direction { sx, sv };

std::string_view to_string(Direction d) noexcept;

struct Witness {
    int i;
    int j;
    int k;
    double x;
    double y;
    double t;
    Interval lhs;  // h(t) f(x) + h(1 - t) f(y)
    Interval rhs;  // f(harmonic_mean(x, y, t))
    double gap;    // largest endpoint overshoot, > 0 on violation
};

struct Certificate {
    enum class Verdict { no_violation, violation };

    Verdict verdict;
    Direction direction;
    int resolution;
    std::optional<Witness> witness;

    bool passed() const noexcept { return verdict == Verdict::no_violation; }
};

std::string_view to_string(Certificate::Verdict v) noexcept;

struct CertifyOptions {
    /// Relative slack absorbing rounding in the weighted combination. Zero
    /// demands exact floating-point inclusion.
    double rounding_slack = 1e-12;
    quad::Execution exec = quad::Execution::parallel;
};

/// Outcome of the membership inclusion at a single (x, y, t).
struct PointCheck {
    Interval lhs;
    Interval rhs;
    double gap;
    bool holds;
};

/// Evaluates h(t) f(x) + h(1-t) f(y) ⊆ f(HM) (sx) or the reverse (sv).
PointCheck check_point(const IVFunction& f, const WeightFunction& h, Direction dir, double x, double y,
                       double t, double rounding_slack = 0.0);

/// Grid search for a violation of the membership inclusion at
/// x_i, y_j = a + (b - a) i / (N - 1) and t_k = k / N, k = 0..N. Reports the
/// violation with the lexicographically smallest (i, j, k). Requires N >= 2.
Certificate certify(const IVFunction& f, const WeightFunction& h, Direction dir, int grid,
                    const CertifyOptions& opts = {});

inline Certificate certify_sx(const IVFunction& f, const WeightFunction& h, int grid,
                              const CertifyOptions& opts = {}) {
    return certify(f, h, Direction::sx, grid, opts);
}

inline Certificate certify_sv(const IVFunction& f, const WeightFunction& h, int grid,
                              const CertifyOptions& opts = {}) {
    return certify(f, h, Direction::sv, grid, opts);
}

}  // namespace hhiv
