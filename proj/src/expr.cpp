#include "skewcliff/expr.hpp"

#include <cctype>
#include <cstdlib>

#include "skewcliff/errors.hpp"

namespace skewcliff {
namespace {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
    size_t pos;
};

[[noreturn]] void fail(const std::string& msg, size_t pos) {
    throw ExpressionParseError(msg + " at position " + std::to_string(pos + 1));
}

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Number, text.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            out.push_back({Token::Ident, text.substr(i, j - i), i});
            i = j;
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Plus; break;
            case '-': k = Token::Minus; break;
            case '*': k = Token::Star; break;
            case '/': k = Token::Slash; break;
            case '^': k = Token::Caret; break;
            case '(': k = Token::LParen; break;
            case ')': k = Token::RParen; break;
            default: fail(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, std::string(1, c), i});
        ++i;
    }
    out.push_back({Token::End, "", text.size()});
    return out;
}

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& names, bool function_field)
        : toks_(tokenize(text)), names_(names), function_field_(function_field) {}

    NCPoly run() {
        NCPoly p = parse_expr();
        if (peek().kind != Token::End) fail("unexpected '" + peek().text + "'", peek().pos);
        return p;
    }

private:
    std::vector<Token> toks_;
    size_t i_ = 0;
    const std::vector<std::string>& names_;
    bool function_field_;

    const Token& peek() const { return toks_[i_]; }
    const Token& take() { return toks_[i_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind != k) return false;
        ++i_;
        return true;
    }

    Scalar one() const {
        Scalar s = Scalar::integer(1);
        return function_field_ ? s.promote() : s;
    }

    NCPoly parse_expr() {
        bool neg = accept(Token::Minus);
        NCPoly acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            if (accept(Token::Plus))
                acc = acc + parse_term();
            else if (accept(Token::Minus))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    NCPoly parse_term() {
        NCPoly acc = parse_factor();
        for (;;) {
            if (accept(Token::Star)) {
                acc = acc * parse_factor();
            } else if (peek().kind == Token::Slash) {
                const Token& op = take();
                NCPoly d = parse_factor();
                if (d.degree() > 0) fail("division by a non-scalar", op.pos);
                Scalar c = d.coeff(Word{});
                if (c.is_zero()) fail("division by zero", op.pos);
                acc = acc.scaled(c.inv());
            } else {
                return acc;
            }
        }
    }

    NCPoly parse_factor() {
        NCPoly base = parse_atom();
        if (!accept(Token::Caret)) return base;
        const Token& e = peek();
        if (e.kind != Token::Number) fail("expected exponent", e.pos);
        take();
        long exp = std::strtol(e.text.c_str(), nullptr, 10);
        if (e.text.size() > 9) fail("exponent too large", e.pos);
        NCPoly acc = NCPoly::constant(one());
        for (long k = 0; k < exp; ++k) acc = acc * base;
        return acc;
    }

    NCPoly parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::LParen: {
                take();
                NCPoly inner = parse_expr();
                if (!accept(Token::RParen)) fail("expected ')'", peek().pos);
                return inner;
            }
            case Token::Number: {
                take();
                Scalar c(Rat(Int(t.text)));
                if (function_field_) c = c.promote();
                return NCPoly::constant(c);
            }
            case Token::Ident: {
                take();
                if (t.text == "q") {
                    if (!function_field_)
                        fail("'q' is only available over the function field", t.pos);
                    return NCPoly::constant(Scalar::q());
                }
                for (size_t g = 0; g < names_.size(); ++g)
                    if (names_[g] == t.text)
                        return NCPoly::generator(static_cast<int>(g), one());
                fail("unknown name '" + t.text + "'", t.pos);
            }
            default: fail("expected expression", t.pos);
        }
    }
};

} // namespace

NCPoly parse_ncpoly(const std::string& text, const std::vector<std::string>& names,
                    bool function_field) {
    return Parser(text, names, function_field).run();
}

BiPoly parse_bipoly(const std::string& text, bool function_field) {
    NCPoly p = parse_ncpoly(text, {"a", "b"}, function_field);
    BiPoly out;
    for (const auto& [w, c] : p.terms()) {
        int da = 0, db = 0;
        for (int g : w) (g == 0 ? da : db)++;
        out.add_term(da, db, c);
    }
    return out;
}

Scalar parse_scalar(const std::string& text, bool function_field) {
    NCPoly p = parse_ncpoly(text, {}, function_field);
    if (p.degree() > 0) throw ExpressionParseError("expected a scalar expression: " + text);
    Scalar c = p.coeff(Word{});
    if (p.is_zero()) {
        c = Scalar::integer(0);
        if (function_field) c = c.promote();
    }
    return c;
}

} // namespace skewcliff
