#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hhiv/harmonic.hpp"
#include "hhiv/interval.hpp"
#include "hhiv/quadrature.hpp"

namespace hhiv {

enum class Theorem { basic, refined, product_right, product_left };

std::string_view to_string(Theorem t) noexcept;

/// Parses "basic", "refined", "product-right" or "product-left".
std::optional<Theorem> parse_theorem(std::string_view name) noexcept;

bool is_product(Theorem t) noexcept;

struct Term {
    std::string name;
    Interval value;
};

struct InclusionCheck {
    std::string outer;
    std::string inner;
    bool holds_strict;  // tolerance 0
    bool holds_tol;     // caller tolerance
    double gap;         // hausdorff(outer, inner)
};

struct ChainInputs {
    HarmonicDomain domain;
    std::string f_lower;
    std::string f_upper;
    std::optional<std::pair<std::string, std::string>> g;
    std::string weight;
    std::optional<std::string> weight2;
};

/// Every evaluated term of a Hermite–Hadamard chain together with the
/// inclusion verdicts between consecutive terms.
///
/// Terms are listed in chain order, outermost first in the convex (sx)
/// reading. Product chains append the auxiliary terms (I, M, N) after the
/// two chain terms. For sv every inclusion is reversed.
struct ChainReport {
    Theorem theorem;
    Direction direction;
    std::vector<Term> terms;
    std::vector<InclusionCheck> inclusions;
    std::vector<std::pair<std::string, double>> coefficients;
    ChainInputs inputs;

    /// Throws std::out_of_range for an unknown name.
    const Interval& term(std::string_view name) const;
    double coefficient(std::string_view name) const;
    bool all_hold_strict() const noexcept;
    bool all_hold_tol() const noexcept;
};

struct ChainOptions {
    Direction direction = Direction::sx;
    QuadratureSpec quadrature{};
    double tol = 1e-9;
    quad::Execution exec = quad::Execution::parallel;
};

/// L = f(2ab/(a+b)) / (2h(1/2))  ⊇  I = ab/(b-a) ∫ f/x²  ⊇  R = [f(a)+f(b)] ∫h.
/// Throws DomainError if h(1/2) = 0.
ChainReport chain_basic(const IVFunction& f, const WeightFunction& h, const ChainOptions& opts = {});

/// L ⊇ Delta1 ⊇ I ⊇ Delta2 ⊇ R with the midpoint refinements
///   L      = f(ξ) / (4h(1/2)²)
///   Delta1 = [f(4ab/(a+3b)) + f(4ab/(3a+b))] / (4h(1/2))
///   Delta2 = [(f(a)+f(b))/2 + f(ξ)] ∫h
///   R      = [f(a)+f(b)] (1/2 + h(1/2)) ∫h
ChainReport chain_refined(const IVFunction& f, const WeightFunction& h, const ChainOptions& opts = {});

/// I = ab/(b-a) ∫ fg/x²  ⊇  RHS = M ∫h₁h₂ + N ∫h₁(t)h₂(1-t), with
/// M = f(a)g(a) + f(b)g(b) and N = f(a)g(b) + f(b)g(a).
ChainReport chain_product_right(const IVFunction& f, const IVFunction& g, const WeightFunction& h1,
                                const WeightFunction& h2, const ChainOptions& opts = {});

/// LHS = f(ξ)g(ξ) / (2h₁(1/2)h₂(1/2))  ⊇  RHS = I + M ∫h₁(t)h₂(1-t) + N ∫h₁h₂.
/// The direction is an explicit option; sv checks the reversed inclusion.
ChainReport chain_product_left(const IVFunction& f, const IVFunction& g, const WeightFunction& h1,
                               const WeightFunction& h2, const ChainOptions& opts = {});

/// Dispatches on `theorem`; g and h2 are required for the product chains.
ChainReport compute_chain(Theorem theorem, const IVFunction& f, const IVFunction* g, const WeightFunction& h,
                          const WeightFunction* h2, const ChainOptions& opts = {});

}  // namespace hhiv
