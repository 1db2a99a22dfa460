#pragma once

#include <cctype>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "singlab/polynomial.hpp"

namespace singlab {

/// Default names for variables z_0..z_n: x, y, z, w, then z4, z5, ...
inline std::vector<std::string> default_variable_names(std::size_t count) {
    static const char* first[] = {"x", "y", "z", "w"};
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        names.push_back(i < 4 ? first[i] : "z" + std::to_string(i));
    return names;
}

namespace detail {

struct Token {
    enum Kind { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::string text;
    std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            toks.push_back({Token::Number, std::string(text.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = i;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                ++i;
            toks.push_back({Token::Name, std::string(text.substr(start, i - start)), start});
            continue;
        }
        Token::Kind k;
        switch (ch) {
            case '+': k = Token::Plus; break;
            case '-': k = Token::Minus; break;
            case '*': k = Token::Star; break;
            case '/': k = Token::Slash; break;
            case '^': k = Token::Caret; break;
            case '(': k = Token::LParen; break;
            case ')': k = Token::RParen; break;
            default: throw ParseError(std::string("unexpected character '") + ch + "'", i);
        }
        toks.push_back({k, std::string(1, ch), i});
        ++i;
    }
    toks.push_back({Token::End, "", text.size()});
    return toks;
}

/// Recursive-descent parser with precedence ^ > unary- > * / > + -.
/// Division is only defined by a nonzero constant.
class PolyParser {
public:
    PolyParser(std::string_view text, std::span<const std::string> variables)
        : toks_(tokenize(text)), vars_(variables) {}

    Polynomial parse() {
        Polynomial p = parse_expr();
        if (cur().kind != Token::End)
            throw ParseError("trailing input after expression", cur().pos);
        return p;
    }

private:
    const Token& cur() const { return toks_[idx_]; }
    void advance() { ++idx_; }

    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        while (cur().kind == Token::Plus || cur().kind == Token::Minus) {
            bool minus = cur().kind == Token::Minus;
            advance();
            Polynomial rhs = parse_term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_unary();
        while (cur().kind == Token::Star || cur().kind == Token::Slash) {
            bool divide = cur().kind == Token::Slash;
            std::size_t pos = cur().pos;
            advance();
            Polynomial rhs = parse_unary();
            if (divide) {
                if (!rhs.is_constant() || rhs.is_zero())
                    throw ParseError("division is only defined by a nonzero constant", pos);
                acc = acc * (Rational(1) / rhs.constant_value());
            } else {
                acc = acc * rhs;
            }
        }
        return acc;
    }

    Polynomial parse_unary() {
        bool negate = false;
        while (cur().kind == Token::Plus || cur().kind == Token::Minus) {
            if (cur().kind == Token::Minus) negate = !negate;
            advance();
        }
        Polynomial p = parse_power();
        return negate ? -p : p;
    }

    Polynomial parse_power() {
        Polynomial base = parse_primary();
        if (cur().kind == Token::Caret) {
            std::size_t pos = cur().pos;
            advance();
            if (cur().kind != Token::Number)
                throw ParseError("exponent must be a non-negative integer literal", pos);
            unsigned long e = 0;
            try {
                e = std::stoul(cur().text);
            } catch (const std::exception&) {
                throw ParseError("exponent out of range", cur().pos);
            }
            advance();
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial parse_primary() {
        const Token& t = cur();
        switch (t.kind) {
            case Token::Number: {
                advance();
                return Polynomial::constant(vars_.size(), Rational(Integer(t.text)));
            }
            case Token::Name: {
                for (std::size_t i = 0; i < vars_.size(); ++i) {
                    if (vars_[i] == t.text) {
                        advance();
                        return Polynomial::variable(vars_.size(), i);
                    }
                }
                throw UnknownVariable(t.text, t.pos);
            }
            case Token::LParen: {
                advance();
                Polynomial inner = parse_expr();
                if (cur().kind != Token::RParen)
                    throw ParseError("expected ')'", cur().pos);
                advance();
                return inner;
            }
            default:
                throw ParseError("expected number, variable, or '('", t.pos);
        }
    }

    std::vector<Token> toks_;
    std::span<const std::string> vars_;
    std::size_t idx_ = 0;
};

}  // namespace detail

/// Parse a polynomial expression over the given ordered variable list.
inline Polynomial parse_polynomial(std::string_view text,
                                   std::span<const std::string> variables) {
    return detail::PolyParser(text, variables).parse();
}

/// Infer the variable list of an expression from the default name sequence:
/// every identifier must be one of x, y, z, w, z4, z5, ...; the result lists
/// the ones that occur, in canonical order. Other identifiers are rejected
/// (declare them explicitly in that case).
inline std::vector<std::string> infer_variables(std::string_view text,
                                                std::size_t max_vars = 16) {
    std::vector<std::string> pool = default_variable_names(max_vars);
    std::vector<bool> seen(pool.size(), false);
    for (const auto& tok : detail::tokenize(text)) {
        if (tok.kind != detail::Token::Name) continue;
        bool known = false;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (pool[i] == tok.text) {
                seen[i] = true;
                known = true;
                break;
            }
        }
        if (!known) throw UnknownVariable(tok.text, tok.pos);
    }
    std::vector<std::string> used;
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (seen[i]) used.push_back(pool[i]);
    return used;
}

}  // namespace singlab
