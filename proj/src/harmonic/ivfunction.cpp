#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hhiv/harmonic.hpp"

namespace hhiv {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

HarmonicDomain::HarmonicDomain(double a, double b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(0.0 < a) || !(a < b)) {
        throw std::invalid_argument("harmonic domain requires 0 < a < b, got a = " + fmt(a) + ", b = " + fmt(b));
    }
}

double HarmonicDomain::harmonic_midpoint() const noexcept {
    return std::clamp(2.0 * a_ * b_ / (a_ + b_), a_, b_);
}

double harmonic_mean(double x, double y, double t) {
    if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
        throw std::invalid_argument("harmonic_mean requires positive finite x, y");
    }
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::invalid_argument("harmonic_mean requires t in [0, 1]");
    }
    const double hm = x * y / (t * y + (1.0 - t) * x);
    return std::clamp(hm, std::min(x, y), std::max(x, y));
}

IVFunction::IVFunction(std::string lower, std::string upper, HarmonicDomain domain)
    : IVFunction(expr::Expr::parse(std::move(lower), "x"), expr::Expr::parse(std::move(upper), "x"), domain) {}

IVFunction::IVFunction(expr::Expr lower, expr::Expr upper, HarmonicDomain domain)
    : lower_(std::move(lower)), upper_(std::move(upper)), domain_(domain) {
    validate_samples();
}

void IVFunction::validate_samples() const {
    const double a = domain_.a();
    const double b = domain_.b();
    for (int i = 0; i < kValidationSamples; ++i) {
        const double x = i == kValidationSamples - 1 ? b : a + (b - a) * i / (kValidationSamples - 1);
        (*this)(x);
    }
}

Interval IVFunction::operator()(double x) const {
    if (!domain_.contains(x)) {
        throw DomainError("x = " + fmt(x) + " lies outside the domain [" + fmt(domain_.a()) + ", " +
                          fmt(domain_.b()) + "]");
    }
    const double lo = lower_(x);
    const double hi = upper_(x);
    if (lo > hi) {
        throw InvariantError("lower endpoint " + fmt(lo) + " exceeds upper endpoint " + fmt(hi) +
                                 " at x = " + fmt(x),
                             x);
    }
    if (!(lo > 0.0)) {
        throw InvariantError("value [" + fmt(lo) + ", " + fmt(hi) + "] at x = " + fmt(x) +
                                 " is not a positive interval",
                             x);
    }
    return Interval(lo, hi);
}

bool IVFunction::is_degenerate() const {
    return lower_.canonical() == upper_.canonical();
}

}  // namespace hhiv
