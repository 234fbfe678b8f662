#pragma once

#include <functional>

#include "hhiv/adaptive.hpp"
#include "hhiv/harmonic.hpp"
#include "hhiv/interval.hpp"

namespace hhiv {

using quad::QuadratureSpec;

/// Interval-valued integrand evaluated at a point.
using IntervalIntegrand = std::function<Interval(double)>;

/// [∫lo(x) dx, ∫hi(x) dx] over [lo, hi] on a shared adaptive subdivision.
Interval integrate(const IntervalIntegrand& f, double lo, double hi, const QuadratureSpec& spec = {},
                   quad::Execution exec = quad::Execution::parallel);

/// Interval Riemann integral of f over [lo, hi] ⊆ [a, b].
/// Throws std::invalid_argument when the bounds leave the domain or lo >= hi.
Interval integrate_iv(const IVFunction& f, double lo, double hi, const QuadratureSpec& spec = {},
                      quad::Execution exec = quad::Execution::parallel);

/// ab/(b-a) ∫ₐᵇ f(x)/x² dx over the domain of f.
Interval harmonic_weighted_integral(const IVFunction& f, const QuadratureSpec& spec = {},
                                    quad::Execution exec = quad::Execution::parallel);

/// ab/(b-a) ∫ₐᵇ f(x)g(x)/x² dx, the product formed by interval
/// multiplication at every node. Throws std::invalid_argument when the
/// domains differ.
Interval harmonic_weighted_integral(const IVFunction& f, const IVFunction& g, const QuadratureSpec& spec = {},
                                    quad::Execution exec = quad::Execution::parallel);

enum class RiemannTag { left, midpoint };

/// Uniform n-panel Riemann sum of each endpoint, no refinement. Test oracle.
Interval riemann_sum_oracle(const IntervalIntegrand& f, double lo, double hi, long n, RiemannTag tag);
Interval riemann_sum_oracle(const IVFunction& f, double lo, double hi, long n, RiemannTag tag);

}  // namespace hhiv
