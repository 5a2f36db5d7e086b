// Text grammar for polynomials and the canonical pretty-printer.
//
// Source format: a header line "vars: x y z" followed by an expression.
// Grammar: integer/fraction coefficients, declared identifiers, + - * ^,
// parentheses. Implicit multiplication is rejected; '^' is right-associative
// with literal nonnegative integer exponents; unary minus binds looser
// than '^'.

#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "rforge/poly.hpp"

#include <json.hpp>

namespace rforge {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, unsigned line, unsigned col)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + msg),
          line_(line),
          col_(col) {}
    unsigned line() const { return line_; }
    unsigned col() const { return col_; }

private:
    unsigned line_, col_;
};

namespace detail {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    std::string text;
    unsigned line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
        unsigned line = line_, col = col_;
        if (pos_ >= src_.size()) return {Token::End, "", line, col};
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string text = read_digits();
            // A '/' directly after digits continues a fraction literal.
            if (pos_ < src_.size() && src_[pos_] == '/') {
                advance();
                if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    throw ParseError("expected digits after '/' in fraction", line_, col_);
                text += "/" + read_digits();
            }
            return {Token::Number, text, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string text;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                text += src_[pos_];
                advance();
            }
            return {Token::Ident, text, line, col};
        }
        advance();
        switch (c) {
            case '+': return {Token::Plus, "+", line, col};
            case '-': return {Token::Minus, "-", line, col};
            case '*': return {Token::Star, "*", line, col};
            case '^': return {Token::Caret, "^", line, col};
            case '(': return {Token::LParen, "(", line, col};
            case ')': return {Token::RParen, ")", line, col};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string read_digits() {
        std::string out;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            out += src_[pos_];
            advance();
        }
        return out;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    unsigned line_ = 1, col_ = 1;
};

class Parser {
public:
    Parser(const std::string& src, VarTableRef vars) : lexer_(src), vars_(std::move(vars)) {
        shift();
    }

    Poly parse_expression() {
        Poly p = parse_sum();
        expect(Token::End, "end of input");
        return p;
    }

private:
    void shift() { current_ = lexer_.next(); }

    void expect(Token::Kind kind, const std::string& what) {
        if (current_.kind != kind)
            throw ParseError("expected " + what, current_.line, current_.col);
    }

    Poly parse_sum() {
        Poly p = parse_term();
        while (current_.kind == Token::Plus || current_.kind == Token::Minus) {
            bool minus = current_.kind == Token::Minus;
            shift();
            Poly q = parse_term();
            p = minus ? p - q : p + q;
        }
        return p;
    }

    Poly parse_term() {
        Poly p = parse_factor();
        while (current_.kind == Token::Star) {
            shift();
            p = p * parse_factor();
        }
        return p;
    }

    // Unary minus binds looser than '^': -x^2 is -(x^2).
    Poly parse_factor() {
        if (current_.kind == Token::Minus) {
            shift();
            return -parse_factor();
        }
        Poly base = parse_primary();
        if (current_.kind == Token::Caret) {
            Token caret = current_;
            shift();
            if (current_.kind == Token::Minus)
                throw ParseError("exponent must be a nonnegative integer literal",
                                 current_.line, current_.col);
            expect(Token::Number, "integer exponent");
            if (current_.text.find('/') != std::string::npos)
                throw ParseError("exponent must be a nonnegative integer literal",
                                 current_.line, current_.col);
            unsigned long e = std::stoul(current_.text);
            shift();
            // '^' is right-associative; x^2^3 is x^(2^3) and only arises with
            // literal exponents, which the recursion below covers.
            if (current_.kind == Token::Caret)
                throw ParseError("chained '^' requires parentheses", caret.line, caret.col);
            return pow(base, static_cast<unsigned>(e));
        }
        return base;
    }

    Poly parse_primary() {
        switch (current_.kind) {
            case Token::Number: {
                Poly p = Poly::constant(vars_, parse_rational(current_.text));
                shift();
                check_no_adjacent();
                return p;
            }
            case Token::Ident: {
                if (!vars_->has(current_.text))
                    throw ParseError("undeclared identifier '" + current_.text + "'",
                                     current_.line, current_.col);
                Poly p = Poly::variable(vars_, current_.text);
                shift();
                check_no_adjacent();
                return p;
            }
            case Token::LParen: {
                shift();
                Poly p = parse_sum();
                expect(Token::RParen, "')'");
                shift();
                check_no_adjacent();
                return p;
            }
            default:
                throw ParseError("expected number, identifier or '('",
                                 current_.line, current_.col);
        }
    }

    void check_no_adjacent() {
        if (current_.kind == Token::Number || current_.kind == Token::Ident ||
            current_.kind == Token::LParen)
            throw ParseError("implicit multiplication is not allowed (write '*')",
                             current_.line, current_.col);
    }

    Lexer lexer_;
    VarTableRef vars_;
    Token current_;
};

}  // namespace detail

inline Poly parse_polynomial(const std::string& expr, const VarTableRef& vars) {
    return detail::Parser(expr, vars).parse_expression();
}

// Full source: "vars: ..." header line, then the expression body.
inline Poly parse_poly_source(const std::string& src) {
    std::size_t nl = src.find('\n');
    std::string header = (nl == std::string::npos) ? src : src.substr(0, nl);
    std::string body = (nl == std::string::npos) ? "" : src.substr(nl + 1);
    std::istringstream hs(header);
    std::string tag;
    hs >> tag;
    if (tag != "vars:") throw ParseError("expected 'vars:' header line", 1, 1);
    std::vector<std::string> names;
    std::string name;
    while (hs >> name) names.push_back(name);
    Poly p = detail::Parser(body, make_vars(std::move(names))).parse_expression();
    return p;
}

// Canonical text: graded-lex descending, reduced-fraction coefficients.
// parse(format(p)) == p.
inline std::string format(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [mono, coef] = *it;
        Rational mag = coef < 0 ? Rational(-coef) : coef;
        if (first) {
            if (coef < 0) out += "-";
        } else {
            out += coef < 0 ? " - " : " + ";
        }
        first = false;
        std::string vars_part;
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] == 0) continue;
            if (!vars_part.empty()) vars_part += "*";
            vars_part += p.vars()->name(i);
            if (mono[i] > 1) vars_part += "^" + std::to_string(mono[i]);
        }
        if (vars_part.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += vars_part;
        } else {
            out += to_string(mag) + "*" + vars_part;
        }
    }
    return out;
}

// JSON schema: {vars: [...], terms: [{exps: [...], num: "...", den: "..."}]}
// with decimal-string bignums, terms in graded-lex ascending order.
inline nlohmann::json poly_to_json(const Poly& p) {
    nlohmann::json j;
    j["vars"] = p.vars()->names();
    j["terms"] = nlohmann::json::array();
    for (const auto& [mono, coef] : p.terms()) {
        nlohmann::json t;
        t["exps"] = mono;
        t["num"] = numerator(coef).str();
        t["den"] = denominator(coef).str();
        j["terms"].push_back(std::move(t));
    }
    return j;
}

inline Poly poly_from_json(const nlohmann::json& j) {
    VarTableRef vars = make_vars(j.at("vars").get<std::vector<std::string>>());
    Poly p(vars);
    for (const auto& t : j.at("terms")) {
        Monomial mono = t.at("exps").get<Monomial>();
        if (mono.size() != vars->size()) throw UsageError("poly_from_json: exps length mismatch");
        Rational coef(BigInt(t.at("num").get<std::string>()),
                      BigInt(t.at("den").get<std::string>()));
        p.add_term(mono, coef);
    }
    return p;
}

}  // namespace rforge
