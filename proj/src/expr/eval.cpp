#include <cmath>
#include <sstream>

#include "hhiv/expr.hpp"

namespace hhiv::expr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

char op_char(BinaryOp op) {
    switch (op) {
        case BinaryOp::add: return '+';
        case BinaryOp::sub: return '-';
        case BinaryOp::mul: return '*';
        case BinaryOp::div: return '/';
        case BinaryOp::pow: return '^';
    }
    return '?';
}

[[noreturn]] void domain_fail(const ExprNode& node, std::string_view variable, double value,
                              const std::string& why) {
    const std::string sub = print(node, variable);
    std::ostringstream os;
    os.precision(17);
    os << "domain error in '" << sub << "' at " << variable << " = " << value << ": " << why;
    throw DomainError(os.str(), sub);
}

double finite_or_fail(double r, const ExprNode& node, std::string_view variable, double value) {
    if (!std::isfinite(r)) domain_fail(node, variable, value, "result is not finite");
    return r;
}

}  // namespace

double eval(const ExprNode& node, double value, std::string_view variable) {
    return std::visit(
        overloaded{
            [](const Constant& c) { return c.value; },
            [&](const Variable&) { return value; },
            [&](const Negate& n) { return -eval(*n.child, value, variable); },
            [&](const Binary& b) {
                const double l = eval(*b.lhs, value, variable);
                const double r = eval(*b.rhs, value, variable);
                double out = 0.0;
                switch (b.op) {
                    case BinaryOp::add: out = l + r; break;
                    case BinaryOp::sub: out = l - r; break;
                    case BinaryOp::mul: out = l * r; break;
                    case BinaryOp::div:
                        if (r == 0.0) domain_fail(node, variable, value, "division by zero");
                        out = l / r;
                        break;
                    case BinaryOp::pow:
                        if (l == 0.0 && r < 0.0) domain_fail(node, variable, value, "zero to a negative power");
                        if (l < 0.0 && r != std::trunc(r)) {
                            domain_fail(node, variable, value, "negative base with non-integer exponent");
                        }
                        out = std::pow(l, r);
                        break;
                }
                return finite_or_fail(out, node, variable, value);
            },
            [&](const Call& c) {
                const double a = eval(*c.arg, value, variable);
                double out = 0.0;
                switch (c.fn) {
                    case Function::ln:
                        if (a <= 0.0) domain_fail(node, variable, value, "ln of a non-positive value");
                        out = std::log(a);
                        break;
                    case Function::exp: out = std::exp(a); break;
                    case Function::sqrt:
                        if (a < 0.0) domain_fail(node, variable, value, "sqrt of a negative value");
                        out = std::sqrt(a);
                        break;
                    case Function::abs: out = std::abs(a); break;
                }
                return finite_or_fail(out, node, variable, value);
            },
        },
        node.node);
}

std::string print(const ExprNode& node, std::string_view variable) {
    return std::visit(
        overloaded{
            [](const Constant& c) {
                std::ostringstream os;
                os.precision(17);
                os << c.value;
                return c.value < 0.0 ? "(" + os.str() + ")" : os.str();
            },
            [&](const Variable&) { return std::string(variable); },
            [&](const Negate& n) { return "(-" + print(*n.child, variable) + ")"; },
            [&](const Binary& b) {
                return "(" + print(*b.lhs, variable) + " " + op_char(b.op) + " " + print(*b.rhs, variable) + ")";
            },
            [&](const Call& c) {
                return std::string(function_name(c.fn)) + "(" + print(*c.arg, variable) + ")";
            },
        },
        node.node);
}

}  // namespace hhiv::expr
