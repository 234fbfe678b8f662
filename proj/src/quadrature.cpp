#include "hhiv/quadrature.hpp"

#include <stdexcept>

namespace hhiv {

Interval integrate(const IntervalIntegrand& f, double lo, double hi, const QuadratureSpec& spec,
                   quad::Execution exec) {
    const quad::PairIntegrand pair = [&f](double x) {
        const Interval v = f(x);
        return quad::EndpointPair{v.lo(), v.hi()};
    };
    const quad::PairResult r = quad::integrate_pair(pair, lo, hi, spec, exec);
    // lo <= hi pointwise; quadrature of nearly equal endpoints may cross by
    // rounding only.
    return r.lo <= r.hi ? Interval(r.lo, r.hi) : Interval(r.hi, r.lo);
}

Interval integrate_iv(const IVFunction& f, double lo, double hi, const QuadratureSpec& spec, quad::Execution exec) {
    const HarmonicDomain& d = f.domain();
    if (!(d.a() <= lo && lo < hi && hi <= d.b())) {
        throw std::invalid_argument("integration bounds must satisfy a <= lo < hi <= b");
    }
    return integrate([&f](double x) { return f(x); }, lo, hi, spec, exec);
}

Interval harmonic_weighted_integral(const IVFunction& f, const QuadratureSpec& spec, quad::Execution exec) {
    const double a = f.domain().a();
    const double b = f.domain().b();
    const Interval raw = integrate([&f](double x) { return scalar_mul(1.0 / (x * x), f(x)); }, a, b, spec, exec);
    return scalar_mul(a * b / (b - a), raw);
}

Interval harmonic_weighted_integral(const IVFunction& f, const IVFunction& g, const QuadratureSpec& spec,
                                    quad::Execution exec) {
    if (!(f.domain() == g.domain())) {
        throw std::invalid_argument("product integrand requires f and g on the same domain");
    }
    const double a = f.domain().a();
    const double b = f.domain().b();
    const Interval raw =
        integrate([&](double x) { return scalar_mul(1.0 / (x * x), f(x) * g(x)); }, a, b, spec, exec);
    return scalar_mul(a * b / (b - a), raw);
}

Interval riemann_sum_oracle(const IntervalIntegrand& f, double lo, double hi, long n, RiemannTag tag) {
    if (n < 1) throw std::invalid_argument("riemann_sum_oracle requires n >= 1");
    const double width = hi - lo;
    const double offset = tag == RiemannTag::midpoint ? 0.5 : 0.0;
    long double sum_lo = 0.0L;
    long double sum_hi = 0.0L;
    for (long i = 0; i < n; ++i) {
        const Interval v = f(lo + width * ((static_cast<double>(i) + offset) / static_cast<double>(n)));
        sum_lo += v.lo();
        sum_hi += v.hi();
    }
    const double mean_lo = static_cast<double>(sum_lo / n);
    const double mean_hi = static_cast<double>(sum_hi / n);
    return Interval(width * mean_lo, width * mean_hi);
}

Interval riemann_sum_oracle(const IVFunction& f, double lo, double hi, long n, RiemannTag tag) {
    return riemann_sum_oracle([&f](double x) { return f(x); }, lo, hi, n, tag);
}

}  // namespace hhiv
