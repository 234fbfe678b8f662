#pragma once

#include <iosfwd>

#include "hhiv/error.hpp"

namespace hhiv {

/// Closed bounded real interval [lo, hi] with finite endpoints.
///
/// Endpoints are plain doubles: operations round to nearest, they are not
/// outward rounded. Inclusion checks take an explicit slack instead.
class Interval {
public:
    /// Throws InvalidInterval on NaN, infinities or lo > hi.
    Interval(double lo, double hi);

    /// Degenerate interval [v, v].
    explicit Interval(double v) : Interval(v, v) {}

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double width() const noexcept { return hi_ - lo_; }
    double midpoint() const noexcept { return lo_ + 0.5 * (hi_ - lo_); }

    bool is_degenerate() const noexcept { return lo_ == hi_; }
    bool is_positive() const noexcept { return lo_ > 0.0; }
    bool is_negative() const noexcept { return hi_ < 0.0; }
    bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double lo_;
    double hi_;
};

Interval add(const Interval& u, const Interval& v);
Interval sub(const Interval& u, const Interval& v);

// Four candidate products (quotients) with min/max, no sign case split.
Interval mul(const Interval& u, const Interval& v);
Interval div(const Interval& u, const Interval& v);

Interval scalar_mul(double lambda, const Interval& u);

/// u ⊆ v up to slack tol: v.lo <= u.lo + tol and u.hi <= v.hi + tol.
/// tol = 0 is exact inclusion. Throws std::invalid_argument for tol < 0.
bool subset_of(const Interval& u, const Interval& v, double tol = 0.0);

/// Hausdorff–Pompeiu distance max(|u.lo - v.lo|, |u.hi - v.hi|).
double hausdorff(const Interval& u, const Interval& v) noexcept;

inline Interval operator+(const Interval& u, const Interval& v) { return add(u, v); }
inline Interval operator-(const Interval& u, const Interval& v) { return sub(u, v); }
inline Interval operator*(const Interval& u, const Interval& v) { return mul(u, v); }
inline Interval operator/(const Interval& u, const Interval& v) { return div(u, v); }
inline Interval operator*(double lambda, const Interval& u) { return scalar_mul(lambda, u); }
inline Interval operator*(const Interval& u, double lambda) { return scalar_mul(lambda, u); }

std::ostream& operator<<(std::ostream& os, const Interval& u);

}  // namespace hhiv
