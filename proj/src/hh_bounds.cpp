#include "hhiv/hh_bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace hhiv {

std::string_view to_string(Theorem t) noexcept {
    switch (t) {
        case Theorem::basic: return "basic";
        case Theorem::refined: return "refined";
        case Theorem::product_right: return "product-right";
        case Theorem::product_left: return "product-left";
    }
    return "?";
}

std::optional<Theorem> parse_theorem(std::string_view name) noexcept {
    for (Theorem t : {Theorem::basic, Theorem::refined, Theorem::product_right, Theorem::product_left}) {
        if (to_string(t) == name) return t;
    }
    return std::nullopt;
}

bool is_product(Theorem t) noexcept {
    return t == Theorem::product_right || t == Theorem::product_left;
}

const Interval& ChainReport::term(std::string_view name) const {
    for (const Term& t : terms) {
        if (t.name == name) return t.value;
    }
    throw std::out_of_range("chain report has no term '" + std::string(name) + "'");
}

double ChainReport::coefficient(std::string_view name) const {
    for (const auto& [n, v] : coefficients) {
        if (n == name) return v;
    }
    throw std::out_of_range("chain report has no coefficient '" + std::string(name) + "'");
}

bool ChainReport::all_hold_strict() const noexcept {
    return std::all_of(inclusions.begin(), inclusions.end(), [](const InclusionCheck& c) { return c.holds_strict; });
}

bool ChainReport::all_hold_tol() const noexcept {
    return std::all_of(inclusions.begin(), inclusions.end(), [](const InclusionCheck& c) { return c.holds_tol; });
}

namespace {

double half_weight(const WeightFunction& h, const char* which) {
    const double v = h(0.5);
    if (!(v > 0.0)) {
        throw DomainError(std::string("left coefficient undefined: ") + which + "(1/2) = 0 for weight " +
                          h.describe());
    }
    return v;
}

ChainInputs echo(const IVFunction& f, const IVFunction* g, const WeightFunction& h, const WeightFunction* h2) {
    ChainInputs in{f.domain(), f.lower().text(), f.upper().text(), std::nullopt, h.describe(), std::nullopt};
    if (g) in.g = std::pair{g->lower().text(), g->upper().text()};
    if (h2) in.weight2 = h2->describe();
    return in;
}

// Records the chain-order inclusion `outer ⊇ inner`; for sv the roles swap.
void link(ChainReport& r, const std::string& outer, const std::string& inner, double tol) {
    const bool sx = r.direction == Direction::sx;
    const std::string& o = sx ? outer : inner;
    const std::string& i = sx ? inner : outer;
    const Interval& ov = r.term(o);
    const Interval& iv = r.term(i);
    r.inclusions.push_back({o, i, subset_of(iv, ov, 0.0), subset_of(iv, ov, tol), hausdorff(ov, iv)});
}

void check_options(const ChainOptions& opts) {
    if (!(opts.tol >= 0.0)) throw std::invalid_argument("chain tolerance must be >= 0");
    opts.quadrature.validate();
}

}  // namespace

ChainReport chain_basic(const IVFunction& f, const WeightFunction& h, const ChainOptions& opts) {
    check_options(opts);
    const HarmonicDomain& d = f.domain();
    const double left = 1.0 / (2.0 * half_weight(h, "h"));
    const double right = h_moment(h);

    ChainReport r{Theorem::basic, opts.direction, {}, {}, {{"left", left}, {"right", right}}, echo(f, nullptr, h, nullptr)};
    r.terms.push_back({"L", scalar_mul(left, f(d.harmonic_midpoint()))});
    r.terms.push_back({"I", harmonic_weighted_integral(f, opts.quadrature, opts.exec)});
    r.terms.push_back({"R", scalar_mul(right, f(d.a()) + f(d.b()))});
    link(r, "L", "I", opts.tol);
    link(r, "I", "R", opts.tol);
    return r;
}

ChainReport chain_refined(const IVFunction& f, const WeightFunction& h, const ChainOptions& opts) {
    check_options(opts);
    const HarmonicDomain& d = f.domain();
    const double a = d.a();
    const double b = d.b();
    const double hh = half_weight(h, "h");
    const double moment = h_moment(h);
    const double left = 1.0 / (4.0 * hh * hh);
    const double delta1 = 1.0 / (4.0 * hh);
    const double right = (0.5 + hh) * moment;

    // Harmonic midpoints of [a, ξ] and [ξ, b].
    const double near_a = std::clamp(4.0 * a * b / (a + 3.0 * b), a, b);
    const double near_b = std::clamp(4.0 * a * b / (3.0 * a + b), a, b);
    const Interval f_mid = f(d.harmonic_midpoint());
    const Interval ends = f(a) + f(b);

    ChainReport r{Theorem::refined,
                  opts.direction,
                  {},
                  {},
                  {{"left", left}, {"delta1", delta1}, {"delta2", moment}, {"right", right}},
                  echo(f, nullptr, h, nullptr)};
    r.terms.push_back({"L", scalar_mul(left, f_mid)});
    r.terms.push_back({"Delta1", scalar_mul(delta1, f(near_a) + f(near_b))});
    r.terms.push_back({"I", harmonic_weighted_integral(f, opts.quadrature, opts.exec)});
    r.terms.push_back({"Delta2", scalar_mul(moment, scalar_mul(0.5, ends) + f_mid)});
    r.terms.push_back({"R", scalar_mul(right, ends)});
    link(r, "L", "Delta1", opts.tol);
    link(r, "Delta1", "I", opts.tol);
    link(r, "I", "Delta2", opts.tol);
    link(r, "Delta2", "R", opts.tol);
    return r;
}

namespace {

struct EndpointProducts {
    Interval m;
    Interval n;
};

EndpointProducts endpoint_products(const IVFunction& f, const IVFunction& g) {
    if (!(f.domain() == g.domain())) {
        throw std::invalid_argument("product chains require f and g on the same domain");
    }
    const double a = f.domain().a();
    const double b = f.domain().b();
    const Interval fa = f(a);
    const Interval fb = f(b);
    const Interval ga = g(a);
    const Interval gb = g(b);
    return {fa * ga + fb * gb, fa * gb + fb * ga};
}

}  // namespace

ChainReport chain_product_right(const IVFunction& f, const IVFunction& g, const WeightFunction& h1,
                                const WeightFunction& h2, const ChainOptions& opts) {
    check_options(opts);
    const auto [m, n] = endpoint_products(f, g);
    const double product = h_moment_product(h1, h2);
    const double mirror = h_moment_mirror(h1, h2);

    ChainReport r{Theorem::product_right,
                  opts.direction,
                  {},
                  {},
                  {{"moment_product", product}, {"moment_mirror", mirror}},
                  echo(f, &g, h1, &h2)};
    r.terms.push_back({"I", harmonic_weighted_integral(f, g, opts.quadrature, opts.exec)});
    r.terms.push_back({"RHS", scalar_mul(product, m) + scalar_mul(mirror, n)});
    r.terms.push_back({"M", m});
    r.terms.push_back({"N", n});
    link(r, "I", "RHS", opts.tol);
    return r;
}

ChainReport chain_product_left(const IVFunction& f, const IVFunction& g, const WeightFunction& h1,
                               const WeightFunction& h2, const ChainOptions& opts) {
    check_options(opts);
    const double left = 1.0 / (2.0 * half_weight(h1, "h1") * half_weight(h2, "h2"));
    const auto [m, n] = endpoint_products(f, g);
    const double product = h_moment_product(h1, h2);
    const double mirror = h_moment_mirror(h1, h2);
    const double xi = f.domain().harmonic_midpoint();

    const Interval integral = harmonic_weighted_integral(f, g, opts.quadrature, opts.exec);
    ChainReport r{Theorem::product_left,
                  opts.direction,
                  {},
                  {},
                  {{"left", left}, {"moment_mirror", mirror}, {"moment_product", product}},
                  echo(f, &g, h1, &h2)};
    r.terms.push_back({"LHS", scalar_mul(left, f(xi) * g(xi))});
    r.terms.push_back({"RHS", integral + scalar_mul(mirror, m) + scalar_mul(product, n)});
    r.terms.push_back({"I", integral});
    r.terms.push_back({"M", m});
    r.terms.push_back({"N", n});
    link(r, "LHS", "RHS", opts.tol);
    return r;
}

ChainReport compute_chain(Theorem theorem, const IVFunction& f, const IVFunction* g, const WeightFunction& h,
                          const WeightFunction* h2, const ChainOptions& opts) {
    if (is_product(theorem) && (g == nullptr || h2 == nullptr)) {
        throw std::invalid_argument("product chains require a second function g and a second weight h2");
    }
    switch (theorem) {
        case Theorem::basic: return chain_basic(f, h, opts);
        case Theorem::refined: return chain_refined(f, h, opts);
        case Theorem::product_right: return chain_product_right(f, *g, h, *h2, opts);
        case Theorem::product_left: return chain_product_left(f, *g, h, *h2, opts);
    }
    throw std::invalid_argument("unknown theorem");
}

}  // namespace hhiv
