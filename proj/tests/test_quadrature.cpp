#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "hhiv/quadrature.hpp"

using namespace hhiv;

namespace {

const HarmonicDomain unit_two{1.0, 2.0};
const double ln2 = std::log(2.0);

IVFunction iv(const std::string& lo, const std::string& hi) { return IVFunction(lo, hi, unit_two); }

bool near(const Interval& u, double lo, double hi, double tol) {
    return std::abs(u.lo() - lo) <= tol && std::abs(u.hi() - hi) <= tol;
}

struct CatalogEntry {
    const char* lower;
    const char* upper;
};

const CatalogEntry catalog[] = {{"x", "5 - x"},   {"1/x", "2/x"},         {"3", "3"},
                                {"x^2", "x^2 + 3"}, {"sqrt(x)", "exp(x)"}, {"ln(x) + 1", "x^3 + 1"}};

}  // namespace

TEST_CASE("integrate_iv examples") {
    CHECK(near(integrate_iv(iv("x", "5 - x"), 1.0, 2.0), 1.5, 3.5, 1e-12));
    CHECK(near(integrate_iv(iv("1/x", "2/x"), 1.0, 2.0), ln2, 2 * ln2, 1e-12));
    const Interval c = integrate_iv(iv("2.5", "2.5"), 1.0, 2.0);
    CHECK(c.lo() == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(c.lo() == c.hi());
    CHECK(near(integrate_iv(iv("x", "5 - x"), 1.25, 1.75), 0.75, 1.75, 1e-12));
}

TEST_CASE("integrate_iv rejects bounds outside the domain") {
    const IVFunction f = iv("x", "5 - x");
    CHECK_THROWS_AS(integrate_iv(f, 0.5, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(integrate_iv(f, 1.0, 2.5), std::invalid_argument);
    CHECK_THROWS_AS(integrate_iv(f, 1.5, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(integrate_iv(f, 1.8, 1.2), std::invalid_argument);
}

TEST_CASE("harmonic weighted integral examples") {
    CHECK(near(harmonic_weighted_integral(iv("x", "5 - x")), 2 * ln2, 5 - 2 * ln2, 1e-12));
    CHECK(near(harmonic_weighted_integral(iv("1/x", "2/x")), 0.75, 1.5, 1e-12));
    const IVFunction f = iv("x", "5 - x");
    CHECK(near(harmonic_weighted_integral(f, f), 2.0, 27 - 20 * ln2, 1e-11));
}

TEST_CASE("weighted product requires a shared domain") {
    const IVFunction f = iv("x", "5 - x");
    const IVFunction g("x", "7 - x", HarmonicDomain(1.0, 3.0));
    CHECK_THROWS_AS(harmonic_weighted_integral(f, g), std::invalid_argument);
}

TEST_CASE("every rule reproduces the analytic values") {
    const IVFunction f = iv("x", "5 - x");
    for (const char* rule : {"gauss-legendre-8", "gauss-legendre-16", "gauss-legendre-32", "gauss-legendre-64",
                             "simpson"}) {
        QuadratureSpec spec;
        quad::set_rule(spec, rule);
        CHECK_MESSAGE(near(harmonic_weighted_integral(f, spec), 2 * ln2, 5 - 2 * ln2, 1e-10), rule);
    }
}

TEST_CASE("quadrature spec validation") {
    QuadratureSpec spec;
    CHECK_THROWS_AS(quad::set_rule(spec, "gauss-legendre-12"), std::invalid_argument);
    CHECK_THROWS_AS(quad::set_rule(spec, "trapezoid"), std::invalid_argument);
    spec.tol = 0.0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = QuadratureSpec{};
    spec.max_refinements = 0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = QuadratureSpec{};
    spec.panels = 0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("Gauss-Legendre nodes integrate polynomials exactly") {
    for (int n : {8, 16, 32, 64}) {
        const auto nodes = quad::gauss_legendre_nodes(n);
        const auto weights = quad::gauss_legendre_weights(n);
        REQUIRE(nodes.size() == static_cast<std::size_t>(n));
        double w = 0.0;
        double m2 = 0.0;
        double m14 = 0.0;
        for (int i = 0; i < n; ++i) {
            w += weights[i];
            m2 += weights[i] * nodes[i] * nodes[i];
            m14 += weights[i] * std::pow(nodes[i], 14);
        }
        CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(m2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
        CHECK(m14 == doctest::Approx(2.0 / 15.0).epsilon(1e-13));
    }
}

TEST_CASE("non-integrable integrands raise ConvergenceError") {
    QuadratureSpec spec;
    spec.max_refinements = 6;
    CHECK_THROWS_AS(quad::integrate_scalar([](double t) { return 1.0 / t; }, 0.0, 1.0, spec), ConvergenceError);
    const IntervalIntegrand jump = [](double x) { return x < 1.3 ? Interval(1, 2) : Interval(3, 4); };
    CHECK_THROWS_AS(integrate(jump, 1.0, 2.0, spec), ConvergenceError);
}

TEST_CASE("evaluation failures inside the integrand propagate") {
    const IntervalIntegrand bad = [](double x) -> Interval {
        if (x > 1.5) throw DomainError("boom");
        return Interval(1, 2);
    };
    CHECK_THROWS_AS(integrate(bad, 1.0, 2.0), DomainError);
    CHECK_THROWS_AS(integrate(bad, 1.0, 2.0, {}, quad::Execution::serial), DomainError);
}

TEST_CASE("Riemann oracle examples") {
    const Interval id = riemann_sum_oracle(iv("x", "x"), 1.0, 2.0, 100000, RiemannTag::midpoint);
    CHECK(near(id, 1.5, 1.5, 1e-6));
    const Interval c = riemann_sum_oracle(iv("3", "3"), 1.0, 2.0, 7, RiemannTag::left);
    CHECK(c == Interval(3.0, 3.0));
    const Interval r = riemann_sum_oracle(iv("1/x", "2/x"), 1.0, 2.0, 1000000, RiemannTag::midpoint);
    CHECK(near(r, ln2, 2 * ln2, 1e-6));
    const Interval left = riemann_sum_oracle(iv("x", "x"), 1.0, 2.0, 4, RiemannTag::left);
    CHECK(left.lo() == doctest::Approx(1.375).epsilon(1e-15));
}

TEST_CASE("property: adaptive result matches the Riemann oracle on the catalog") {
    for (const auto& e : catalog) {
        const IVFunction f = iv(e.lower, e.upper);
        const Interval got = integrate_iv(f, 1.0, 2.0);
        const Interval oracle = riemann_sum_oracle(f, 1.0, 2.0, 1000000, RiemannTag::midpoint);
        CHECK_MESSAGE(hausdorff(got, oracle) <= 1e-6, e.lower << ", " << e.upper);
    }
}

TEST_CASE("property: linearity over catalog pairs") {
    const QuadratureSpec spec;
    for (const auto& p : catalog) {
        for (const auto& q : catalog) {
            const IVFunction f = iv(p.lower, p.upper);
            const IVFunction g = iv(q.lower, q.upper);
            const IVFunction sum(std::string("(") + p.lower + ") + (" + q.lower + ")",
                                 std::string("(") + p.upper + ") + (" + q.upper + ")", unit_two);
            const Interval lhs = integrate_iv(sum, 1.0, 2.0, spec);
            const Interval rhs = integrate_iv(f, 1.0, 2.0, spec) + integrate_iv(g, 1.0, 2.0, spec);
            CHECK(hausdorff(lhs, rhs) <= 2 * spec.tol);
        }
    }
}

TEST_CASE("property: monotonicity under pointwise inclusion") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> d(0.0, 1.0);
    const QuadratureSpec spec;
    for (int n = 0; n < 50; ++n) {
        const double widen_lo = d(rng);
        const double widen_hi = d(rng);
        const double slope = 1 + d(rng);
        const std::string lo = std::to_string(slope) + "*x + 1";
        const std::string hi = lo + " + sqrt(x)";
        const IVFunction f = iv(lo, hi);
        const IVFunction g = iv(lo + " - " + std::to_string(widen_lo) + "*x/2",
                                hi + " + " + std::to_string(widen_hi) + "*x^2");
        for (int k = 0; k < 256; ++k) {
            const double x = 1.0 + k / 255.0;
            REQUIRE(subset_of(f(x), g(x)));
        }
        CHECK(subset_of(integrate_iv(f, 1.0, 2.0, spec), integrate_iv(g, 1.0, 2.0, spec), 2 * spec.tol));
    }
}

TEST_CASE("property: degenerate functions give degenerate integrals") {
    const QuadratureSpec spec;
    for (const char* body : {"x", "1/x", "x^2 + 3", "exp(x)", "sqrt(x)"}) {
        const Interval r = integrate_iv(iv(body, body), 1.0, 2.0, spec);
        CHECK(r.width() <= 2 * spec.tol);
        const Interval w = harmonic_weighted_integral(iv(body, body), spec);
        CHECK(w.width() <= 2 * spec.tol);
    }
}

TEST_CASE("property: parallel and serial integration are bitwise identical") {
    QuadratureSpec spec;
    spec.panels = 16;
    for (const auto& e : catalog) {
        const IVFunction f = iv(e.lower, e.upper);
        CHECK(integrate_iv(f, 1.0, 2.0, spec, quad::Execution::serial) ==
              integrate_iv(f, 1.0, 2.0, spec, quad::Execution::parallel));
        CHECK(harmonic_weighted_integral(f, f, spec, quad::Execution::serial) ==
              harmonic_weighted_integral(f, f, spec, quad::Execution::parallel));
    }
    const auto peaky = [](double x) { return 1.0 / (1e-3 + (x - 1.3) * (x - 1.3)); };
    CHECK(quad::integrate_scalar(peaky, 1.0, 2.0, spec, quad::Execution::serial) ==
          quad::integrate_scalar(peaky, 1.0, 2.0, spec, quad::Execution::parallel));
}

TEST_CASE("refinement resolves a sharp peak") {
    const auto peaky = [](double x) { return 1.0 / (1e-4 + (x - 1.3) * (x - 1.3)); };
    const double exact = 100.0 * (std::atan(0.7 / 1e-2) + std::atan(0.3 / 1e-2));
    CHECK(std::abs(quad::integrate_scalar(peaky, 1.0, 2.0, QuadratureSpec{}) - exact) <= 1e-8);
}

TEST_CASE("pairwise summation") {
    const std::vector<double> v{1.0, 2.0, 3.0, 4.0, 5.0};
    CHECK(quad::pairwise_sum(v) == 15.0);
    CHECK(quad::pairwise_sum({}) == 0.0);
}
