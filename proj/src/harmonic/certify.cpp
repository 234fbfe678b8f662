#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <vector>

#include "hhiv/harmonic.hpp"

namespace hhiv {

std::string_view to_string(Direction d) noexcept {
    return d == Direction::sx ? "sx" : "sv";
}

std::string_view to_string(Certificate::Verdict v) noexcept {
    return v == Certificate::Verdict::violation ? "violation" : "no-violation-at-resolution";
}

namespace {

PointCheck compare(const Interval& lhs, const Interval& rhs, Direction dir, double rounding_slack) {
    // sx: lhs ⊆ rhs; sv: rhs ⊆ lhs.
    const Interval& inner = dir == Direction::sx ? lhs : rhs;
    const Interval& outer = dir == Direction::sx ? rhs : lhs;
    const double gap = std::max(outer.lo() - inner.lo(), inner.hi() - outer.hi());
    const double scale = std::max({std::abs(lhs.lo()), std::abs(lhs.hi()), std::abs(rhs.lo()), std::abs(rhs.hi())});
    return {lhs, rhs, gap, subset_of(inner, outer, rounding_slack * scale)};
}

// Precomputed grid shared by both execution paths.
struct Grid {
    int n;
    std::vector<double> x;
    std::vector<Interval> fx;
    std::vector<double> t;
    std::vector<double> h_t;
    std::vector<double> h_mirror;
};

Grid build_grid(const IVFunction& f, const WeightFunction& h, int n) {
    Grid g{n, {}, {}, {}, {}, {}};
    const double a = f.domain().a();
    const double b = f.domain().b();
    g.x.resize(n);
    g.fx.reserve(n);
    for (int i = 0; i < n; ++i) {
        g.x[i] = i == n - 1 ? b : a + (b - a) * i / (n - 1);
        g.fx.push_back(f(g.x[i]));
    }
    g.t.resize(n + 1);
    g.h_t.resize(n + 1);
    g.h_mirror.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        g.t[k] = static_cast<double>(k) / n;
        g.h_t[k] = h(g.t[k]);
        g.h_mirror[k] = h(1.0 - g.t[k]);
    }
    return g;
}

PointCheck check_cell(const IVFunction& f, const Grid& g, Direction dir, int i, int j, int k, double slack) {
    const Interval lhs = scalar_mul(g.h_t[k], g.fx[i]) + scalar_mul(g.h_mirror[k], g.fx[j]);
    const Interval rhs = f(harmonic_mean(g.x[i], g.x[j], g.t[k]));
    return compare(lhs, rhs, dir, slack);
}

Witness make_witness(const Grid& g, int i, int j, int k, const PointCheck& c) {
    return {i, j, k, g.x[i], g.x[j], g.t[k], c.lhs, c.rhs, c.gap};
}

// First violation in row i in (j, k) order, if any.
std::optional<Witness> scan_row(const IVFunction& f, const Grid& g, Direction dir, int i, double slack) {
    for (int j = 0; j < g.n; ++j) {
        for (int k = 0; k <= g.n; ++k) {
            const PointCheck c = check_cell(f, g, dir, i, j, k, slack);
            if (!c.holds) return make_witness(g, i, j, k, c);
        }
    }
    return std::nullopt;
}

std::optional<Witness> certify_serial(const IVFunction& f, const Grid& g, Direction dir, double slack) {
    for (int i = 0; i < g.n; ++i) {
        if (auto w = scan_row(f, g, dir, i, slack)) return w;
    }
    return std::nullopt;
}

// Rows run in parallel; a row is skipped once a lower row has already
// produced a violation or an error, so the reported event is the same one
// the serial scan would hit first.
std::optional<Witness> certify_parallel(const IVFunction& f, const Grid& g, Direction dir, double slack) {
    const int n = g.n;
    std::vector<std::optional<Witness>> found(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<int> first_event{n};

#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < n; ++i) {
        if (i > first_event.load(std::memory_order_relaxed)) continue;
        try {
            found[i] = scan_row(f, g, dir, i, slack);
        } catch (...) {
            errors[i] = std::current_exception();
        }
        if (found[i] || errors[i]) {
            int cur = first_event.load(std::memory_order_relaxed);
            while (i < cur && !first_event.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
            }
        }
    }

    for (int i = 0; i < n; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        if (found[i]) return found[i];
    }
    return std::nullopt;
}

}  // namespace

PointCheck check_point(const IVFunction& f, const WeightFunction& h, Direction dir, double x, double y, double t,
                       double rounding_slack) {
    const Interval lhs = scalar_mul(h(t), f(x)) + scalar_mul(h(1.0 - t), f(y));
    const Interval rhs = f(harmonic_mean(x, y, t));
    return compare(lhs, rhs, dir, rounding_slack);
}

Certificate certify(const IVFunction& f, const WeightFunction& h, Direction dir, int grid,
                    const CertifyOptions& opts) {
    if (grid < 2) throw std::invalid_argument("certifier grid size must be >= 2");
    if (!(opts.rounding_slack >= 0.0)) throw std::invalid_argument("rounding slack must be >= 0");

    const Grid g = build_grid(f, h, grid);
    std::optional<Witness> w = opts.exec == quad::Execution::serial
                                   ? certify_serial(f, g, dir, opts.rounding_slack)
                                   : certify_parallel(f, g, dir, opts.rounding_slack);
    const auto verdict = w ? Certificate::Verdict::violation : Certificate::Verdict::no_violation;
    return {verdict, dir, grid, std::move(w)};
}

}  // namespace hhiv
