#include <array>
#include <optional>
#include <utility>

#include "hhiv/expr.hpp"

namespace hhiv::expr {

namespace {

constexpr int kMaxDepth = 256;

constexpr std::array<std::pair<std::string_view, Function>, 4> kCatalog{{
    {"ln", Function::ln},
    {"exp", Function::exp},
    {"sqrt", Function::sqrt},
    {"abs", Function::abs},
}};

std::optional<Function> lookup(std::string_view name) {
    for (const auto& [n, fn] : kCatalog) {
        if (n == name) return fn;
    }
    return std::nullopt;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    NodePtr parse_all() {
        NodePtr root = sum();
        const Token& t = peek();
        if (t.kind != Token::Kind::end) {
            throw ParseError(ParseError::Kind::trailing_input, t.position,
                             "unexpected '" + t.lexeme + "' after complete expression");
        }
        return root;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    bool at_op(char c) const {
        const Token& t = peek();
        return t.kind == Token::Kind::op && t.lexeme[0] == c;
    }

    struct DepthGuard {
        DepthGuard(int& depth, std::size_t position) : depth_(depth) {
            if (++depth_ > kMaxDepth) {
                throw ParseError(ParseError::Kind::syntax, position, "expression nested too deeply");
            }
        }
        ~DepthGuard() { --depth_; }
        int& depth_;
    };

    NodePtr sum() {
        DepthGuard guard(depth_, peek().position);
        NodePtr lhs = product();
        while (at_op('+') || at_op('-')) {
            const BinaryOp op = advance().lexeme[0] == '+' ? BinaryOp::add : BinaryOp::sub;
            lhs = make_binary(op, std::move(lhs), product());
        }
        return lhs;
    }

    NodePtr product() {
        NodePtr lhs = unary();
        while (at_op('*') || at_op('/')) {
            const BinaryOp op = advance().lexeme[0] == '*' ? BinaryOp::mul : BinaryOp::div;
            lhs = make_binary(op, std::move(lhs), unary());
        }
        return lhs;
    }

    NodePtr unary() {
        DepthGuard guard(depth_, peek().position);
        if (at_op('-')) {
            advance();
            return make_negate(unary());
        }
        if (at_op('+')) {
            advance();
            return unary();
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (at_op('^')) {
            advance();
            return make_binary(BinaryOp::pow, std::move(base), unary());
        }
        return base;
    }

    NodePtr primary() {
        const Token& t = advance();
        switch (t.kind) {
            case Token::Kind::number:
                return make_constant(t.value);
            case Token::Kind::variable:
                return make_variable();
            case Token::Kind::identifier: {
                const auto fn = lookup(t.lexeme);
                if (!fn) {
                    throw ParseError(ParseError::Kind::unknown_identifier, t.position,
                                     "'" + t.lexeme + "' is neither the variable nor a known function");
                }
                expect_lparen(t.lexeme);
                NodePtr arg = sum();
                expect_rparen();
                return make_call(*fn, std::move(arg));
            }
            case Token::Kind::lparen: {
                NodePtr inner = sum();
                expect_rparen();
                return inner;
            }
            case Token::Kind::end:
                throw ParseError(ParseError::Kind::syntax, t.position, "unexpected end of input");
            default:
                throw ParseError(ParseError::Kind::syntax, t.position, "unexpected '" + t.lexeme + "'");
        }
    }

    void expect_lparen(const std::string& fn) {
        const Token& t = peek();
        if (t.kind != Token::Kind::lparen) {
            throw ParseError(ParseError::Kind::syntax, t.position, "expected '(' after '" + fn + "'");
        }
        advance();
    }

    void expect_rparen() {
        const Token& t = peek();
        if (t.kind != Token::Kind::rparen) {
            throw ParseError(ParseError::Kind::syntax, t.position,
                             t.kind == Token::Kind::end ? "missing ')'" : "expected ')' but found '" + t.lexeme + "'");
        }
        advance();
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

}  // namespace

NodePtr make_constant(double value) {
    return std::make_shared<const ExprNode>(ExprNode{Constant{value}});
}
NodePtr make_variable() {
    return std::make_shared<const ExprNode>(ExprNode{Variable{}});
}
NodePtr make_negate(NodePtr child) {
    return std::make_shared<const ExprNode>(ExprNode{Negate{std::move(child)}});
}
NodePtr make_binary(BinaryOp op, NodePtr lhs, NodePtr rhs) {
    return std::make_shared<const ExprNode>(ExprNode{Binary{op, std::move(lhs), std::move(rhs)}});
}
NodePtr make_call(Function fn, NodePtr arg) {
    return std::make_shared<const ExprNode>(ExprNode{Call{fn, std::move(arg)}});
}

std::string_view function_name(Function fn) noexcept {
    for (const auto& [n, f] : kCatalog) {
        if (f == fn) return n;
    }
    return "?";
}

NodePtr parse(std::string_view text, std::string_view variable) {
    return Parser(tokenize(text, variable)).parse_all();
}

Expr Expr::parse(std::string text, std::string variable) {
    NodePtr root = expr::parse(text, variable);
    return Expr(std::move(root), std::move(text), std::move(variable));
}

}  // namespace hhiv::expr
