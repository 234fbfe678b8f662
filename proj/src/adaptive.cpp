#include "hhiv/adaptive.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <exception>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <vector>

#include "hhiv/error.hpp"

namespace hhiv::quad {

namespace {

constexpr std::array<int, 5> kTableSizes{8, 16, 32, 64, 128};
constexpr int kMaxPanels = 1 << 16;

struct GaussTable {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Newton iteration on P_n from the Chebyshev-like initial guess.
GaussTable compute_gauss(int n) {
    GaussTable g;
    g.nodes.resize(n);
    g.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        g.nodes[i] = -x;
        g.nodes[n - 1 - i] = x;
        g.weights[i] = w;
        g.weights[n - 1 - i] = w;
    }
    return g;
}

const GaussTable& gauss_table(int n) {
    static const std::array<GaussTable, kTableSizes.size()> tables = [] {
        std::array<GaussTable, kTableSizes.size()> t;
        for (std::size_t i = 0; i < kTableSizes.size(); ++i) t[i] = compute_gauss(kTableSizes[i]);
        return t;
    }();
    for (std::size_t i = 0; i < kTableSizes.size(); ++i) {
        if (kTableSizes[i] == n) return tables[i];
    }
    throw std::invalid_argument("no Gauss-Legendre table for n = " + std::to_string(n));
}

struct Panel {
    double a;
    double b;
    int depth;
    double lo;
    double hi;
    double err_lo;
    double err_hi;

    double worst() const { return std::max(err_lo, err_hi); }
};

EndpointPair gauss_apply(const PairIntegrand& f, double a, double b, const GaussTable& g) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double lo = 0.0;
    double hi = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const EndpointPair v = f(mid + half * g.nodes[i]);
        lo += g.weights[i] * v.lo;
        hi += g.weights[i] * v.hi;
    }
    return {half * lo, half * hi};
}

Panel evaluate_panel(const PairIntegrand& f, double a, double b, int depth, const QuadratureSpec& spec) {
    if (spec.rule == Rule::gauss_legendre) {
        const EndpointPair coarse = gauss_apply(f, a, b, gauss_table(spec.nodes));
        const EndpointPair fine = gauss_apply(f, a, b, gauss_table(2 * spec.nodes));
        return {a, b, depth, fine.lo, fine.hi, std::abs(fine.lo - coarse.lo), std::abs(fine.hi - coarse.hi)};
    }
    const double m = 0.5 * (a + b);
    const EndpointPair fa = f(a);
    const EndpointPair fq1 = f(0.5 * (a + m));
    const EndpointPair fm = f(m);
    const EndpointPair fq3 = f(0.5 * (m + b));
    const EndpointPair fb = f(b);
    const double h = b - a;
    const double s_lo = h / 6.0 * (fa.lo + 4.0 * fm.lo + fb.lo);
    const double s_hi = h / 6.0 * (fa.hi + 4.0 * fm.hi + fb.hi);
    const double c_lo = h / 12.0 * (fa.lo + 4.0 * fq1.lo + 2.0 * fm.lo + 4.0 * fq3.lo + fb.lo);
    const double c_hi = h / 12.0 * (fa.hi + 4.0 * fq1.hi + 2.0 * fm.hi + 4.0 * fq3.hi + fb.hi);
    return {a, b, depth, c_lo, c_hi, std::abs(c_lo - s_lo), std::abs(c_hi - s_hi)};
}

std::vector<Panel> initial_panels(const PairIntegrand& f, double lo, double hi, const QuadratureSpec& spec,
                                  Execution exec) {
    const int n = spec.panels;
    std::vector<Panel> panels(n);
    const double width = hi - lo;
    auto edge = [&](int i) { return i == n ? hi : lo + width * i / n; };

    if (exec == Execution::serial) {
        for (int i = 0; i < n; ++i) panels[i] = evaluate_panel(f, edge(i), edge(i + 1), 0, spec);
        return panels;
    }

    std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        try {
            panels[i] = evaluate_panel(f, edge(i), edge(i + 1), 0, spec);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    // Rethrow the lowest-index failure so errors match the serial path.
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return panels;
}

}  // namespace

void QuadratureSpec::validate() const {
    if (rule == Rule::gauss_legendre && nodes != 8 && nodes != 16 && nodes != 32 && nodes != 64) {
        throw std::invalid_argument("gauss-legendre node count must be 8, 16, 32 or 64");
    }
    if (panels < 1) throw std::invalid_argument("quadrature panels must be >= 1");
    if (!(tol > 0.0) || !std::isfinite(tol)) throw std::invalid_argument("quadrature tol must be > 0");
    if (max_refinements < 1) throw std::invalid_argument("quadrature max_refinements must be >= 1");
}

std::string QuadratureSpec::rule_name() const {
    return rule == Rule::simpson ? "simpson" : "gauss-legendre-" + std::to_string(nodes);
}

void set_rule(QuadratureSpec& spec, std::string_view name) {
    if (name == "simpson") {
        spec.rule = Rule::simpson;
        return;
    }
    constexpr std::string_view prefix = "gauss-legendre-";
    if (name.starts_with(prefix)) {
        const std::string_view digits = name.substr(prefix.size());
        int k = 0;
        const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (res.ec == std::errc() && res.ptr == digits.data() + digits.size() &&
            (k == 8 || k == 16 || k == 32 || k == 64)) {
            spec.rule = Rule::gauss_legendre;
            spec.nodes = k;
            return;
        }
    }
    throw std::invalid_argument("unknown quadrature rule '" + std::string(name) +
                                "' (expected gauss-legendre-{8,16,32,64} or simpson)");
}

std::span<const double> gauss_legendre_nodes(int n) { return gauss_table(n).nodes; }
std::span<const double> gauss_legendre_weights(int n) { return gauss_table(n).weights; }

double pairwise_sum(std::span<const double> values) {
    if (values.empty()) return 0.0;
    if (values.size() == 1) return values[0];
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

PairResult integrate_pair(const PairIntegrand& f, double lo, double hi, const QuadratureSpec& spec,
                          Execution exec) {
    spec.validate();
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw std::invalid_argument("integration bounds must be finite with lo < hi");
    }

    std::vector<Panel> panels = initial_panels(f, lo, hi, spec, exec);

    auto worse = [&](std::size_t x, std::size_t y) {
        const double wx = panels[x].worst();
        const double wy = panels[y].worst();
        return wx != wy ? wx < wy : x > y;
    };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(worse)> queue(worse);
    for (std::size_t i = 0; i < panels.size(); ++i) queue.push(i);

    // `live` marks panels not yet split.
    std::vector<bool> live(panels.size(), true);
    auto totals = [&] {
        double e_lo = 0.0;
        double e_hi = 0.0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            if (!live[i]) continue;
            e_lo += panels[i].err_lo;
            e_hi += panels[i].err_hi;
        }
        return std::pair{e_lo, e_hi};
    };

    auto [err_lo, err_hi] = totals();
    while (err_lo > spec.tol || err_hi > spec.tol) {
        const std::size_t worst = queue.top();
        const Panel p = panels[worst];
        if (p.depth >= spec.max_refinements) {
            throw ConvergenceError("quadrature did not reach tol " + std::to_string(spec.tol) +
                                   " within " + std::to_string(spec.max_refinements) +
                                   " refinements (panel [" + std::to_string(p.a) + ", " +
                                   std::to_string(p.b) + "])");
        }
        if (panels.size() + 2 > static_cast<std::size_t>(kMaxPanels)) {
            throw ConvergenceError("quadrature exceeded the panel budget before reaching tol");
        }
        queue.pop();
        live[worst] = false;
        const double m = 0.5 * (p.a + p.b);
        panels.push_back(evaluate_panel(f, p.a, m, p.depth + 1, spec));
        panels.push_back(evaluate_panel(f, m, p.b, p.depth + 1, spec));
        live.push_back(true);
        live.push_back(true);
        queue.push(panels.size() - 2);
        queue.push(panels.size() - 1);

        err_lo += panels[panels.size() - 2].err_lo + panels.back().err_lo - p.err_lo;
        err_hi += panels[panels.size() - 2].err_hi + panels.back().err_hi - p.err_hi;
        if (err_lo <= spec.tol && err_hi <= spec.tol) std::tie(err_lo, err_hi) = totals();
    }

    std::vector<const Panel*> leaves;
    for (std::size_t i = 0; i < panels.size(); ++i) {
        if (live[i]) leaves.push_back(&panels[i]);
    }
    std::sort(leaves.begin(), leaves.end(), [](const Panel* x, const Panel* y) { return x->a < y->a; });
    std::vector<double> v_lo;
    std::vector<double> v_hi;
    v_lo.reserve(leaves.size());
    v_hi.reserve(leaves.size());
    for (const Panel* p : leaves) {
        v_lo.push_back(p->lo);
        v_hi.push_back(p->hi);
    }
    return {pairwise_sum(v_lo), pairwise_sum(v_hi), err_lo, err_hi, static_cast<int>(leaves.size())};
}

double integrate_scalar(const std::function<double(double)>& f, double lo, double hi,
                        const QuadratureSpec& spec, Execution exec) {
    const PairIntegrand pair = [&f](double x) {
        const double v = f(x);
        return EndpointPair{v, v};
    };
    return integrate_pair(pair, lo, hi, spec, exec).lo;
}

}  // namespace hhiv::quad
