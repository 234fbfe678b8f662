#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>
#include <string>

#include "hhiv/expr.hpp"

using namespace hhiv::expr;

namespace {

double at(const std::string& text, double x) { return Expr::parse(text, "x")(x); }

hhiv::ParseError parse_error(const std::string& text) {
    try {
        parse(text, "x");
    } catch (const hhiv::ParseError& e) {
        return e;
    }
    FAIL("expected a parse error for '" << text << "'");
    throw;
}

// Random expression built twice: as source text and as a reference closure.
struct Sample {
    std::string text;
    std::function<double(double)> value;
};

Sample random_sample(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 7 : 1);
    std::uniform_int_distribution<int> small(1, 9);
    switch (pick(rng)) {
        case 0: {
            const double c = small(rng) / 4.0;
            return {std::to_string(c), [c](double) { return c; }};
        }
        case 1:
            return {"x", [](double x) { return x; }};
        case 2: {
            auto a = random_sample(rng, depth - 1);
            auto b = random_sample(rng, depth - 1);
            return {"(" + a.text + " + " + b.text + ")", [a, b](double x) { return a.value(x) + b.value(x); }};
        }
        case 3: {
            auto a = random_sample(rng, depth - 1);
            auto b = random_sample(rng, depth - 1);
            return {"(" + a.text + " - " + b.text + ")", [a, b](double x) { return a.value(x) - b.value(x); }};
        }
        case 4: {
            auto a = random_sample(rng, depth - 1);
            auto b = random_sample(rng, depth - 1);
            return {"(" + a.text + " * " + b.text + ")", [a, b](double x) { return a.value(x) * b.value(x); }};
        }
        case 5: {
            auto a = random_sample(rng, depth - 1);
            auto b = random_sample(rng, depth - 1);
            return {"(" + a.text + " / (1 + abs(" + b.text + ")))",
                    [a, b](double x) { return a.value(x) / (1.0 + std::abs(b.value(x))); }};
        }
        case 6: {
            auto a = random_sample(rng, depth - 1);
            return {"exp(-abs(" + a.text + "))", [a](double x) { return std::exp(-std::abs(a.value(x))); }};
        }
        default: {
            auto a = random_sample(rng, depth - 1);
            return {"(-" + a.text + ")", [a](double x) { return -a.value(x); }};
        }
    }
}

}  // namespace

TEST_CASE("evaluates the documented examples") {
    CHECK(at("5 - x", 1.5) == 3.5);
    CHECK(at("x^2 + 1", 2.0) == 5.0);
    CHECK(at("1/x", 4.0) == 0.25);
    CHECK(at("ln(x)", 1.0) == 0.0);
    CHECK(at("exp(0)", 7.0) == 1.0);
    CHECK(at("sqrt(x)", 9.0) == 3.0);
    CHECK(at("abs(x)", -2.5) == 2.5);
    CHECK(at("2.5e1 - x", 5.0) == 20.0);
}

TEST_CASE("precedence and associativity") {
    CHECK(at("-x^2", 3.0) == -9.0);
    CHECK(at("2^3^2", 0.0) == 512.0);
    CHECK(at("1 - 2 - 3", 0.0) == -4.0);
    CHECK(at("8 / 4 / 2", 0.0) == 1.0);
    CHECK(at("2 + 3 * x", 2.0) == 8.0);
    CHECK(at("(2 + 3) * x", 2.0) == 10.0);
    CHECK(at("2^-1", 0.0) == 0.5);
    CHECK(at("--x", 4.0) == 4.0);
}

TEST_CASE("variable name is configurable") {
    CHECK(Expr::parse("t*(1-t)", "t")(0.5) == 0.25);
    CHECK(parse_error("t").kind() == hhiv::ParseError::Kind::unknown_identifier);
}

TEST_CASE("parse errors carry kind and position") {
    const auto dangling = parse_error("2*");
    CHECK(dangling.kind() == hhiv::ParseError::Kind::syntax);
    CHECK(dangling.position() == 2);
    CHECK(parse_error("5 -").position() == 3);
    CHECK(parse_error("sin(x)").kind() == hhiv::ParseError::Kind::unknown_identifier);
    CHECK(parse_error("sin(x)").position() == 0);
    CHECK(parse_error("x)").kind() == hhiv::ParseError::Kind::trailing_input);
    CHECK(parse_error("x)").position() == 1);
    CHECK(parse_error("(x").position() == 2);
    CHECK(parse_error("x $ 1").position() == 2);
    CHECK(parse_error("").position() == 0);
}

TEST_CASE("deep nesting is rejected rather than overflowing the stack") {
    const std::string deep = std::string(100000, '(') + "x" + std::string(100000, ')');
    CHECK_THROWS_AS(parse(deep, "x"), hhiv::ParseError);
}

TEST_CASE("domain errors name the offending subexpression") {
    try {
        at("1 + ln(x - 2)", 1.0);
        FAIL("expected DomainError");
    } catch (const hhiv::DomainError& e) {
        CHECK(e.subexpression().find("ln") != std::string::npos);
    }
    CHECK_THROWS_AS(at("1/x", 0.0), hhiv::DomainError);
    CHECK_THROWS_AS(at("sqrt(x)", -1.0), hhiv::DomainError);
    CHECK_THROWS_AS(at("ln(x)", 0.0), hhiv::DomainError);
    CHECK_THROWS_AS(at("x^-1", 0.0), hhiv::DomainError);
    CHECK_THROWS_AS(at("x^0.5", -4.0), hhiv::DomainError);
    CHECK_THROWS_AS(at("exp(x)", 1000.0), hhiv::DomainError);
    CHECK(at("x^3", -2.0) == -8.0);
}

TEST_CASE("tokenizer positions") {
    const auto tokens = tokenize("x^2 + 10", "x");
    REQUIRE(tokens.size() == 6);
    CHECK(tokens[0].kind == Token::Kind::variable);
    CHECK(tokens[2].value == 2.0);
    CHECK(tokens[4].position == 6);
    CHECK(tokens[4].value == 10.0);
    CHECK(tokens.back().kind == Token::Kind::end);
    CHECK(tokens.back().position == 8);
}

TEST_CASE("property: printing round-trips") {
    const char* sources[] = {"5 - x", "x^2 + 1", "-x^2", "2^3^2", "1/(x+1)", "sqrt(x)*ln(x+1)",
                             "-(-x)", "exp(-x)/2", "abs(x - 1.25)", "3 - -x"};
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> d(0.1, 4.0);
    for (const char* src : sources) {
        const Expr e = Expr::parse(src, "x");
        const Expr back = Expr::parse(e.canonical(), "x");
        CHECK(back.canonical() == e.canonical());
        for (int n = 0; n < 100; ++n) {
            const double x = d(rng);
            CHECK(back(x) == e(x));
        }
    }
}

TEST_CASE("property: random trees agree with a reference evaluator") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    for (int n = 0; n < 50; ++n) {
        const Sample s = random_sample(rng, 4);
        const Expr e = Expr::parse(s.text, "x");
        for (int m = 0; m < 20; ++m) {
            const double x = d(rng);
            const double want = s.value(x);
            CHECK_MESSAGE(e(x) == doctest::Approx(want).epsilon(1e-12), s.text);
        }
    }
}

TEST_CASE("property: parsing arbitrary bytes either succeeds or raises ParseError") {
    std::mt19937_64 rng(1234);
    const std::string alphabet = "x0123456789.+-*/^() elnxpsqrtab$e";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(0, 24);
    std::uniform_int_distribution<int> byte(0, 255);
    for (int n = 0; n < 1000; ++n) {
        std::string text;
        const int l = len(rng);
        for (int i = 0; i < l; ++i) {
            text += n % 4 == 0 ? static_cast<char>(byte(rng)) : alphabet[pick(rng)];
        }
        try {
            const NodePtr root = parse(text, "x");
            try {
                eval(*root, 1.5);
            } catch (const hhiv::DomainError&) {
            }
        } catch (const hhiv::ParseError& e) {
            CHECK(e.position() <= text.size());
        }
    }
}
