#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hhiv/error.hpp"

namespace hhiv::expr {

// Univariate real expressions, e.g. "5 - x", "x^2 + 1", "sqrt(t)".
//
// Grammar, loosest to tightest:
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' unary)?          right associative
//   primary := number | variable | function '(' sum ')' | '(' sum ')'
// so "-x^2" is -(x^2) and "2^3^2" is 2^(3^2).

struct Token {
    enum class Kind { number, variable, op, lparen, rparen, identifier, end };

    Kind kind;
    std::string lexeme;
    std::size_t position;
    double value = 0.0;  // number tokens only
};

/// Splits text into tokens; `variable` names the one free variable. The
/// stream always ends with an `end` token positioned at text.size().
std::vector<Token> tokenize(std::string_view text, std::string_view variable);

enum class BinaryOp { add, sub, mul, div, pow };
enum class Function { ln, exp, sqrt, abs };

struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;

struct Constant {
    double value;
};
struct Variable {};
struct Negate {
    NodePtr child;
};
struct Binary {
    BinaryOp op;
    NodePtr lhs;
    NodePtr rhs;
};
struct Call {
    Function fn;
    NodePtr arg;
};

struct ExprNode {
    std::variant<Constant, Variable, Negate, Binary, Call> node;
};

NodePtr make_constant(double value);
NodePtr make_variable();
NodePtr make_negate(NodePtr child);
NodePtr make_binary(BinaryOp op, NodePtr lhs, NodePtr rhs);
NodePtr make_call(Function fn, NodePtr arg);

/// Parses text with the given free variable name. Throws ParseError.
NodePtr parse(std::string_view text, std::string_view variable);

/// Evaluates the tree at `value`. Throws DomainError (carrying the printed
/// offending subexpression) on division by zero, ln/sqrt out of domain or a
/// non-finite result.
double eval(const ExprNode& node, double value, std::string_view variable = "x");

/// Fully parenthesized text that parses back to an equivalent tree.
std::string print(const ExprNode& node, std::string_view variable);

std::string_view function_name(Function fn) noexcept;

/// Parsed expression together with its source text and variable name.
class Expr {
public:
    static Expr parse(std::string text, std::string variable);

    double operator()(double value) const { return eval(*root_, value, variable_); }

    const ExprNode& root() const noexcept { return *root_; }
    const std::string& text() const noexcept { return text_; }
    const std::string& variable() const noexcept { return variable_; }
    std::string canonical() const { return print(*root_, variable_); }

private:
    Expr(NodePtr root, std::string text, std::string variable)
        : root_(std::move(root)), text_(std::move(text)), variable_(std::move(variable)) {}

    NodePtr root_;
    std::string text_;
    std::string variable_;
};

}  // namespace hhiv::expr
