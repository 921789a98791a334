#include <cctype>

#include "symrees/errors.hpp"
#include "symrees/polyring.hpp"

namespace symrees {

namespace {

// Recursive-descent parser over the polynomial grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ['^' nat]
//   base   := ident | literal | '(' expr ')'
struct PolyParser {
    const RingPtr& ring;
    const std::string& s;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit PolyParser(const RingPtr& r, const std::string& text) : ring(r), s(text) {}

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, line, col); }

    void advance() {
        if (s[pos] == '\n') { ++line; col = 1; } else { ++col; }
        ++pos;
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) advance();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) { advance(); return true; }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    Polynomial parse() {
        Polynomial p = expr();
        if (peek() != '\0') fail("trailing input after polynomial");
        return p;
    }

    Polynomial expr() {
        bool neg = accept('-');
        Polynomial acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (accept('+')) acc = acc + term();
            else if (accept('-')) acc = acc - term();
            else return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (accept('^')) {
            long e = std::stol(digits());
            if (e > 100000) fail("exponent too large");
            return b.pow(static_cast<int>(e));
        }
        return b;
    }

    Polynomial base() {
        char c = peek();
        if (c == '(') {
            advance();
            Polynomial p = expr();
            expect(')');
            return p;
        }
        if (c == '-') { // unary minus on a factor
            advance();
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return literal();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail("expected polynomial factor");
    }

    Polynomial literal() {
        std::string num = digits();
        if (peek() == '/') {
            advance();
            std::string den = digits();
            return Polynomial::constant(ring, Rational::from_string(num + "/" + den));
        }
        return Polynomial::constant(ring, Rational::from_string(num));
    }

    std::string digits() {
        skip_ws();
        std::string d;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            d += s[pos];
            advance();
        }
        if (d.empty()) fail("expected number");
        return d;
    }

    Polynomial identifier() {
        skip_ws();
        std::string name;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '\'')) {
            name += s[pos];
            advance();
        }
        if (auto idx = ring->var_index(name)) return Polynomial::variable(ring, *idx);
        if (!ring->field()->is_rationals() && name == ring->field()->generator_name())
            return Polynomial::constant(ring, FieldElem::generator(ring->field()));
        fail("unknown variable: " + name);
    }
};

} // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    PolyParser p(ring, text);
    return p.parse();
}

} // namespace symrees
