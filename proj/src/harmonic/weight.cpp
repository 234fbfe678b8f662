#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hhiv/harmonic.hpp"

namespace hhiv {

namespace {

constexpr int kWeightSamples = 1025;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double integrate_unit(const std::function<double(double)>& g) {
    return quad::integrate_scalar(g, 0.0, 1.0, moment_quadrature(), quad::Execution::serial);
}

}  // namespace

WeightFunction WeightFunction::power(double s) {
    if (!std::isfinite(s) || !(s > 0.0)) {
        throw std::invalid_argument("power weight requires finite s > 0");
    }
    return WeightFunction(Power{s});
}

WeightFunction WeightFunction::custom(std::string text) {
    WeightFunction h(Custom{expr::Expr::parse(std::move(text), "t")});
    const auto& e = std::get<Custom>(h.kind_).h;
    bool nonzero = false;
    for (int i = 0; i < kWeightSamples; ++i) {
        const double t = kSampleMargin + (1.0 - 2.0 * kSampleMargin) * i / (kWeightSamples - 1);
        const double v = e(t);
        if (v < 0.0) {
            std::ostringstream os;
            os.precision(17);
            os << "weight '" << e.text() << "' is negative at t = " << t;
            throw std::invalid_argument(os.str());
        }
        nonzero = nonzero || v > 0.0;
    }
    if (!nonzero) {
        throw std::invalid_argument("weight '" + e.text() + "' vanishes identically");
    }
    return h;
}

double WeightFunction::operator()(double t) const {
    return std::visit(overloaded{
                          [&](const Linear&) { return t; },
                          [](const Constant&) { return 1.0; },
                          [&](const Power& p) { return std::pow(t, p.s); },
                          [&](const Custom& c) { return c.h(t); },
                      },
                      kind_);
}

std::string WeightFunction::describe() const {
    return std::visit(overloaded{
                          [](const Linear&) { return std::string("linear"); },
                          [](const Constant&) { return std::string("constant"); },
                          [](const Power& p) {
                              std::ostringstream os;
                              os.precision(17);
                              os << "power(s=" << p.s << ")";
                              return os.str();
                          },
                          [](const Custom& c) { return "expr(" + c.h.text() + ")"; },
                      },
                      kind_);
}

std::optional<double> WeightFunction::exponent() const noexcept {
    return std::visit(overloaded{
                          [](const Linear&) -> std::optional<double> { return 1.0; },
                          [](const Constant&) -> std::optional<double> { return 0.0; },
                          [](const Power& p) -> std::optional<double> { return p.s; },
                          [](const Custom&) -> std::optional<double> { return std::nullopt; },
                      },
                      kind_);
}

quad::QuadratureSpec moment_quadrature() {
    quad::QuadratureSpec spec;
    spec.tol = 1e-10;
    return spec;
}

double h_moment(const WeightFunction& h) {
    if (const auto p = h.exponent()) return 1.0 / (*p + 1.0);
    return h_moment_numeric(h);
}

double h_moment_product(const WeightFunction& h1, const WeightFunction& h2) {
    const auto p1 = h1.exponent();
    const auto p2 = h2.exponent();
    if (p1 && p2) return 1.0 / (*p1 + *p2 + 1.0);
    if (p1 && *p1 == 0.0) return h_moment(h2);
    if (p2 && *p2 == 0.0) return h_moment(h1);
    return h_moment_product_numeric(h1, h2);
}

double h_moment_mirror(const WeightFunction& h1, const WeightFunction& h2) {
    const auto p1 = h1.exponent();
    const auto p2 = h2.exponent();
    // ∫ t^p (1-t)^q dt = B(p+1, q+1)
    if (p1 && p2) return std::beta(*p1 + 1.0, *p2 + 1.0);
    if (p1 && *p1 == 0.0) return h_moment(h2);
    if (p2 && *p2 == 0.0) return h_moment(h1);
    return h_moment_mirror_numeric(h1, h2);
}

double h_moment_numeric(const WeightFunction& h) {
    return integrate_unit([&](double t) { return h(t); });
}

double h_moment_product_numeric(const WeightFunction& h1, const WeightFunction& h2) {
    return integrate_unit([&](double t) { return h1(t) * h2(t); });
}

double h_moment_mirror_numeric(const WeightFunction& h1, const WeightFunction& h2) {
    return integrate_unit([&](double t) { return h1(t) * h2(1.0 - t); });
}

namespace {

double scalar_combo(const expr::Expr& f, const WeightFunction& h, double x, double y, double t, double& image) {
    image = f(harmonic_mean(x, y, t));
    return h(t) * f(x) + h(1.0 - t) * f(y);
}

}  // namespace

bool scalar_h_convex_at(const expr::Expr& f, const WeightFunction& h, double x, double y, double t, double slack) {
    double image = 0.0;
    const double combo = scalar_combo(f, h, x, y, t, image);
    return image <= combo + slack * std::max(std::abs(image), std::abs(combo));
}

bool scalar_h_concave_at(const expr::Expr& f, const WeightFunction& h, double x, double y, double t,
                         double slack) {
    double image = 0.0;
    const double combo = scalar_combo(f, h, x, y, t, image);
    return combo <= image + slack * std::max(std::abs(image), std::abs(combo));
}

}  // namespace hhiv
