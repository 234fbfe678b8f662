#include "hhiv/interval.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hhiv {

namespace {

std::string show(double lo, double hi) {
    std::ostringstream os;
    os.precision(17);
    os << "[" << lo << ", " << hi << "]";
    return os.str();
}

Interval checked(double lo, double hi, const char* op) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw RangeError(std::string("interval ") + op + " overflowed: " + show(lo, hi));
    }
    return Interval(lo, hi);
}

}  // namespace

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (std::isnan(lo) || std::isnan(hi)) {
        throw InvalidInterval("interval endpoint is NaN");
    }
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw InvalidInterval("interval endpoint is infinite: " + show(lo, hi));
    }
    if (lo > hi) {
        throw InvalidInterval("interval endpoints reversed: " + show(lo, hi));
    }
}

Interval add(const Interval& u, const Interval& v) {
    return checked(u.lo() + v.lo(), u.hi() + v.hi(), "addition");
}

Interval sub(const Interval& u, const Interval& v) {
    return checked(u.lo() - v.hi(), u.hi() - v.lo(), "subtraction");
}

Interval mul(const Interval& u, const Interval& v) {
    const double p[4] = {u.lo() * v.lo(), u.lo() * v.hi(), u.hi() * v.lo(), u.hi() * v.hi()};
    const auto [lo, hi] = std::minmax_element(std::begin(p), std::end(p));
    return checked(*lo, *hi, "multiplication");
}

Interval div(const Interval& u, const Interval& v) {
    if (v.lo() <= 0.0 && 0.0 <= v.hi()) {
        throw DivisionByZero("divisor " + show(v.lo(), v.hi()) + " contains zero");
    }
    const double q[4] = {u.lo() / v.lo(), u.lo() / v.hi(), u.hi() / v.lo(), u.hi() / v.hi()};
    const auto [lo, hi] = std::minmax_element(std::begin(q), std::end(q));
    return checked(*lo, *hi, "division");
}

Interval scalar_mul(double lambda, const Interval& u) {
    if (!std::isfinite(lambda)) {
        throw RangeError("scalar multiple is not finite");
    }
    if (lambda > 0.0) return checked(lambda * u.lo(), lambda * u.hi(), "scaling");
    if (lambda < 0.0) return checked(lambda * u.hi(), lambda * u.lo(), "scaling");
    return Interval(0.0, 0.0);
}

bool subset_of(const Interval& u, const Interval& v, double tol) {
    if (!(tol >= 0.0)) {
        throw std::invalid_argument("inclusion tolerance must be non-negative");
    }
    return v.lo() <= u.lo() + tol && u.hi() <= v.hi() + tol;
}

double hausdorff(const Interval& u, const Interval& v) noexcept {
    return std::max(std::abs(u.lo() - v.lo()), std::abs(u.hi() - v.hi()));
}

std::ostream& operator<<(std::ostream& os, const Interval& u) {
    return os << "[" << u.lo() << ", " << u.hi() << "]";
}

}  // namespace hhiv
