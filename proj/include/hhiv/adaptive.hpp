#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>

namespace hhiv::quad {

enum class Rule { gauss_legendre, simpson };

/// Where a data-parallel kernel runs. `serial` is the reference path kept for
/// testing and benchmarking; both produce bit-identical results.
enum class Execution { serial, parallel };

struct QuadratureSpec {
    Rule rule = Rule::gauss_legendre;
    int nodes = 32;  // Gauss–Legendre nodes per panel: 8, 16, 32 or 64
    int panels = 8;
    double tol = 1e-10;
    int max_refinements = 20;  // maximum bisection depth of any panel

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;

    /// "gauss-legendre-32" or "simpson".
    std::string rule_name() const;
};

/// Parses "gauss-legendre-K" (K in 8, 16, 32, 64) or "simpson" into `spec`.
/// Throws std::invalid_argument.
void set_rule(QuadratureSpec& spec, std::string_view name);

/// Lower and upper endpoint values integrated side by side.
struct EndpointPair {
    double lo;
    double hi;
};

using PairIntegrand = std::function<EndpointPair(double)>;

struct PairResult {
    double lo;
    double hi;
    double error_lo;  // summed per-panel estimates
    double error_hi;
    int panels;
};

/// Adaptive composite quadrature of both endpoint functions over one shared
/// panel subdivision. Each step bisects the panel with the largest estimated
/// error (difference between the K- and 2K-node results, or between Simpson
/// on the panel and on its halves) until both summed estimates are <= tol.
/// Panel sums are combined pairwise in panel order, so the result does not
/// depend on `exec`. Throws ConvergenceError when the worst panel is already
/// at max_refinements depth.
PairResult integrate_pair(const PairIntegrand& f, double lo, double hi, const QuadratureSpec& spec,
                          Execution exec = Execution::parallel);

double integrate_scalar(const std::function<double(double)>& f, double lo, double hi,
                        const QuadratureSpec& spec, Execution exec = Execution::parallel);

/// Gauss–Legendre nodes and weights on [-1, 1] for n in {8, 16, 32, 64, 128}.
std::span<const double> gauss_legendre_nodes(int n);
std::span<const double> gauss_legendre_weights(int n);

/// Sum in a fixed pairwise tree over index order.
double pairwise_sum(std::span<const double> values);

}  // namespace hhiv::quad
