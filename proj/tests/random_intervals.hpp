#pragma once

#include <random>
#include <utility>

#include "hhiv/interval.hpp"

namespace hhiv::testing {

inline Interval random_interval(std::mt19937_64& rng, double span = 100.0) {
    std::uniform_real_distribution<double> d(-span, span);
    double p = d(rng);
    double q = d(rng);
    if (p > q) std::swap(p, q);
    return Interval(p, q);
}

// Returns (inner, outer) with inner ⊆ outer.
inline std::pair<Interval, Interval> nested_pair(std::mt19937_64& rng) {
    const Interval outer = random_interval(rng);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double p = outer.lo() + u(rng) * outer.width();
    double q = outer.lo() + u(rng) * outer.width();
    if (p > q) std::swap(p, q);
    return {Interval(p, q), outer};
}

}  // namespace hhiv::testing
