#include <cctype>
#include <stdexcept>
#include <string>

#include "skhodge/poly.hpp"

namespace skhodge {

namespace {

struct Parser {
    const RingPtr& ring;
    const std::string& s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos + 1) +
                                    ": " + msg);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    int parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) fail("expected integer");
        return std::stoi(s.substr(start, pos - start));
    }

    Poly parse_number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        std::string num = s.substr(start, pos - start);
        if (eat('/')) {
            skip_ws();
            size_t dstart = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            if (pos == dstart) fail("expected denominator");
            num += "/" + s.substr(dstart, pos - dstart);
        }
        return Poly::constant(ring, rat_parse(num));
    }

    Poly parse_base() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Poly p = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == '-') {
            ++pos;
            return -parse_factor();
        }
        if (std::isdigit((unsigned char)c)) return parse_number();
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            int idx = ring->index_of(name);
            if (idx < 0) {
                pos = start;
                fail("unknown variable '" + name + "'");
            }
            return Poly::variable(ring, idx);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Poly parse_factor() {
        Poly base = parse_base();
        if (eat('^')) {
            int k = parse_int();
            return base.pow(k);
        }
        return base;
    }

    Poly parse_term() {
        Poly p = parse_factor();
        while (eat('*')) p = p * parse_factor();
        return p;
    }

    Poly parse_expr() {
        Poly p = parse_term();
        for (;;) {
            if (eat('+'))
                p += parse_term();
            else if (peek() == '-') {
                ++pos;
                p -= parse_term();
            } else
                break;
        }
        return p;
    }
};

}  // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) {
    Parser p{ring, text};
    Poly r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

}  // namespace skhodge
