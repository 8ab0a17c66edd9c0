#include "graphmeasure/expr.hpp"

#include <cctype>

#include "graphmeasure/errors.hpp"

namespace graphmeasure {

namespace {

struct Parser {
    const Graph& g;
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& expected) const {
        std::string got = pos < text.size() ? "'" + std::string(1, text[pos]) + "'" : "end of input";
        throw ParseError("expected " + expected + ", got " + got, 1, static_cast<int>(pos) + 1);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }

    void expect(char c, const std::string& what) {
        if (!eat(c)) fail(what);
    }

    bool ident_char(char c) const {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string read_ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && ident_char(text[pos])) ++pos;
        if (pos == start) fail("an identifier");
        return std::string(text.substr(start, pos - start));
    }

    std::int64_t read_integer(const std::string& what) {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (text[start] == '-' && pos == start + 1)) fail(what);
        try {
            return Rational::parse(text.substr(start, pos - start)).num();
        } catch (const std::invalid_argument&) {
            throw ParseError("malformed integer", 1, static_cast<int>(start) + 1);
        }
    }

    // A word literal: ident with optional ^-1, repeated with '.' separators.
    Word read_word() {
        skip_ws();
        std::size_t start = pos;
        std::string literal;
        for (;;) {
            literal += read_ident();
            skip_ws();
            if (pos + 2 < text.size() && text[pos] == '^' && text[pos + 1] == '-' &&
                text[pos + 2] == '1') {
                literal += "^-1";
                pos += 3;
                skip_ws();
            }
            if (pos < text.size() && text[pos] == '.') {
                literal += '.';
                ++pos;
                continue;
            }
            break;
        }
        try {
            return parse_word(g, literal);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), 1, static_cast<int>(start) + 1);
        }
    }

    FunctionExpr make(FunctionExpr::Kind kind, std::size_t at) {
        FunctionExpr e;
        e.kind = kind;
        e.position = static_cast<int>(at);
        return e;
    }

    FunctionExpr parse_factor() {
        skip_ws();
        std::size_t at = pos;
        char c = peek();
        if (c == '(') {
            ++pos;
            FunctionExpr inner = parse_expr();
            expect(')', "')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            std::int64_t p = read_integer("a rational literal");
            std::int64_t q = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                q = read_integer("a positive denominator");
                if (q <= 0) throw ParseError("denominator must be positive", 1,
                                             static_cast<int>(at) + 1);
            }
            FunctionExpr e = make(FunctionExpr::Kind::constant, at);
            e.constant = Rational(p, q);
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t save = pos;
            std::string name = read_ident();
            if (name == "ind") {
                expect('{', "'{' after ind");
                FunctionExpr e = make(FunctionExpr::Kind::indicator, at);
                if (peek() != '}') {
                    e.words.push_back(read_word());
                    while (eat(',')) e.words.push_back(read_word());
                }
                expect('}', "'}' or ','");
                return e;
            }
            if (name == "g") {
                if (eat('[')) {
                    FunctionExpr e = make(FunctionExpr::Kind::neighborhood, at);
                    e.word = read_word();
                    expect(']', "']'");
                    return e;
                }
                if (eat('^')) {
                    std::int64_t n = read_integer("an integer exponent");
                    if (n == 0)
                        throw ParseError("zero exponent: g^0 is reserved for the constant 1", 1,
                                         static_cast<int>(at) + 1);
                    FunctionExpr e = make(FunctionExpr::Kind::monomial, at);
                    e.exponent = static_cast<int>(n);
                    return e;
                }
                fail("'[' or '^' after g");
            }
            pos = save;
            fail("'ind', 'g', a rational, or '('");
        }
        fail("'ind', 'g', a rational, or '('");
    }

    FunctionExpr parse_term() {
        FunctionExpr e = parse_factor();
        while (peek() == '*') {
            std::size_t at = pos;
            ++pos;
            FunctionExpr node = make(FunctionExpr::Kind::product, at);
            node.lhs = std::make_unique<FunctionExpr>(std::move(e));
            node.rhs = std::make_unique<FunctionExpr>(parse_factor());
            e = std::move(node);
        }
        return e;
    }

    FunctionExpr parse_expr() {
        FunctionExpr e = parse_term();
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-') break;
            std::size_t at = pos;
            ++pos;
            FunctionExpr node = make(
                c == '+' ? FunctionExpr::Kind::sum : FunctionExpr::Kind::difference, at);
            node.lhs = std::make_unique<FunctionExpr>(std::move(e));
            node.rhs = std::make_unique<FunctionExpr>(parse_term());
            e = std::move(node);
        }
        return e;
    }
};

}  // namespace

FunctionExpr parse_expression(const Graph& g, std::string_view text) {
    Parser p{g, text};
    FunctionExpr e = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("end of expression");
    return e;
}

SimpleFunction evaluate_expression(const MeasureContext& ctx, const FunctionExpr& e) {
    switch (e.kind) {
        case FunctionExpr::Kind::constant:
            return constant_function(ctx, e.constant);
        case FunctionExpr::Kind::indicator: {
            std::vector<Diagram> support;
            for (const Word& w : e.words)
                support.push_back(reduced_diagram_of(ctx.shadowed(), w));
            return SimpleFunction::indicator(std::move(support));
        }
        case FunctionExpr::Kind::neighborhood:
            return g_w(ctx, e.word);
        case FunctionExpr::Kind::monomial:
            return monomial(ctx, e.exponent);
        case FunctionExpr::Kind::sum:
            return evaluate_expression(ctx, *e.lhs) + evaluate_expression(ctx, *e.rhs);
        case FunctionExpr::Kind::difference:
            return evaluate_expression(ctx, *e.lhs) - evaluate_expression(ctx, *e.rhs);
        case FunctionExpr::Kind::product:
            // A rational literal is a scalar multiple, not an indicator
            // product; the latter would clip the other factor to the
            // active diagram window.
            if (e.lhs->kind == FunctionExpr::Kind::constant)
                return evaluate_expression(ctx, *e.rhs).scaled(e.lhs->constant);
            if (e.rhs->kind == FunctionExpr::Kind::constant)
                return evaluate_expression(ctx, *e.lhs).scaled(e.rhs->constant);
            return product(evaluate_expression(ctx, *e.lhs), evaluate_expression(ctx, *e.rhs));
    }
    throw DomainError("unreachable expression kind");
}

}  // namespace graphmeasure
