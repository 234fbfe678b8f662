#include <cctype>
#include <charconv>
#include <cmath>

#include "hhiv/expr.hpp"

namespace hhiv::expr {

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_digit(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

// Scans digits[.digits][e[+-]digits] or .digits starting at pos; returns the
// end offset of the lexeme.
std::size_t scan_number(std::string_view text, std::size_t pos) {
    std::size_t i = pos;
    bool mantissa_digits = false;
    while (i < text.size() && is_digit(text[i])) {
        ++i;
        mantissa_digits = true;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && is_digit(text[i])) {
            ++i;
            mantissa_digits = true;
        }
    }
    if (!mantissa_digits) {
        throw ParseError(ParseError::Kind::syntax, pos, "malformed number");
    }
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
        if (j >= text.size() || !is_digit(text[j])) {
            throw ParseError(ParseError::Kind::syntax, j, "exponent has no digits");
        }
        while (j < text.size() && is_digit(text[j])) ++j;
        i = j;
    }
    return i;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text, std::string_view variable) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (is_digit(c) || c == '.') {
            const std::size_t end = scan_number(text, i);
            const std::string lexeme(text.substr(i, end - i));
            double value = 0.0;
            const auto res = std::from_chars(lexeme.data(), lexeme.data() + lexeme.size(), value);
            if (res.ec != std::errc() || res.ptr != lexeme.data() + lexeme.size() || !std::isfinite(value)) {
                throw ParseError(ParseError::Kind::syntax, i, "number '" + lexeme + "' is not a finite real");
            }
            tokens.push_back({Token::Kind::number, lexeme, i, value});
            i = end;
            continue;
        }
        if (is_ident_start(c)) {
            std::size_t end = i + 1;
            while (end < text.size() && is_ident_char(text[end])) ++end;
            const std::string lexeme(text.substr(i, end - i));
            const auto kind = lexeme == variable ? Token::Kind::variable : Token::Kind::identifier;
            tokens.push_back({kind, lexeme, i});
            i = end;
            continue;
        }
        switch (c) {
            case '+':
            case '-':
            case '*':
            case '/':
            case '^':
                tokens.push_back({Token::Kind::op, std::string(1, c), i});
                break;
            case '(':
                tokens.push_back({Token::Kind::lparen, "(", i});
                break;
            case ')':
                tokens.push_back({Token::Kind::rparen, ")", i});
                break;
            default:
                throw ParseError(ParseError::Kind::syntax, i,
                                 std::string("unexpected character '") + c + "'");
        }
        ++i;
    }
    tokens.push_back({Token::Kind::end, "", text.size()});
    return tokens;
}

}  // namespace hhiv::expr
