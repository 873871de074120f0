#include "vac/parse.hpp"

#include <cctype>

namespace vac {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    const ApplyResolver& resolver;

    Parser(const std::string& text, const ApplyResolver& r) : s(text), resolver(r) {}

    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(static_cast<long>(pos), expected);
    }

    void ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    char peekAt(size_t off) const { return pos + off < s.size() ? s[pos + off] : '\0'; }
    bool eat(char c) {
        if (peek() == c) { ++pos; return true; }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) fail(what);
    }

    static bool nameStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool nameChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    // 'k' is the level variable unless it continues into a longer name.
    bool atScalarStart() const {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '(') return true;
        return c == 'k' && !nameChar(peekAt(1));
    }
    bool atAtomStart() const {
        char c = peek();
        if (c == ':') return true;
        if (!nameStart(c)) return false;
        if (c == 'k' && !nameChar(peekAt(1))) return false;
        return true;
    }

    std::string name() {
        if (!nameStart(peek())) fail("generator name");
        size_t start = pos;
        while (nameChar(peek())) ++pos;
        return s.substr(start, pos - start);
    }

    BigInt integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("integer");
        size_t start = pos;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        return BigInt(s.substr(start, pos - start));
    }

    int smallInt(const char* what) {
        BigInt v = integer();
        if (v > 1000000) fail(what);
        return static_cast<int>(v);
    }

    // scalar primary: integer, k, or a parenthesized scalar sum
    Scalar scalarFactor() {
        ws();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return Scalar::fromInt(integer());
        if (c == 'k' && !nameChar(peekAt(1))) { ++pos; return Scalar::k(); }
        if (c == '(') {
            ++pos;
            Scalar v = scalarSum();
            ws();
            expect(')', "')' closing scalar");
            return v;
        }
        fail("scalar");
    }

    Scalar scalarPow() {
        Scalar base = scalarFactor();
        ws();
        if (peek() == '^') {
            ++pos;
            ws();
            bool neg = eat('-');
            long e = smallInt("exponent");
            return base.pow(neg ? -e : e);
        }
        return base;
    }

    // fieldMode: a '*' followed by an atom ends the scalar (the caller then
    // parses the atom it scales); inside scalar parentheses '*' always
    // continues the product.
    Scalar scalarProduct(bool fieldMode) {
        Scalar acc = scalarPow();
        for (;;) {
            ws();
            char c = peek();
            if (c == '*') {
                size_t save = pos;
                ++pos;
                ws();
                if (fieldMode && atAtomStart()) { pos = save; return acc; }
                acc = acc * scalarPow();
            } else if (c == '/') {
                ++pos;
                acc = acc / scalarPow();
            } else {
                return acc;
            }
        }
    }

    Scalar scalarSum() {
        ws();
        bool neg = eat('-');
        Scalar acc = scalarProduct(false);
        if (neg) acc = -acc;
        for (;;) {
            ws();
            char c = peek();
            if (c == '+') { ++pos; acc = acc + scalarProduct(false); }
            else if (c == '-') { ++pos; acc = acc - scalarProduct(false); }
            else return acc;
        }
    }

    ExprPtr atom() {
        ws();
        if (peek() == ':') {
            if (peekAt(1) != '(') fail("':(' opening normal product");
            pos += 2;
            std::vector<ExprPtr> parts;
            for (;;) {
                ws();
                if (peek() == ')') break;
                if (!atAtomStart()) fail("normal product element");
                parts.push_back(atom());
            }
            expect(')', "')' closing normal product");
            expect(':', "':' closing normal product");
            if (parts.empty()) fail("normal product element");
            return eNProdN(parts);
        }
        std::string n = name();
        if (n == "d" && (peek() == '(' || peek() == '^')) {
            int order = 1;
            if (eat('^')) order = smallInt("derivative order");
            expect('(', "'(' after d");
            ExprPtr inner = expr();
            ws();
            expect(')', "')' closing derivative");
            return eDer(inner, order);
        }
        if (peek() == '(') {
            // map application name(arg)
            size_t at = pos;
            ++pos;
            ExprPtr inner = expr();
            ws();
            expect(')', "')' closing application");
            ExprPtr resolved = resolver ? resolver(n, inner) : nullptr;
            if (!resolved) {
                pos = at;
                fail("known map name before '('");
            }
            return resolved;
        }
        return eGen(std::move(n));
    }

    ExprPtr term() {
        ws();
        bool neg = eat('-');
        ws();
        ExprPtr out;
        if (atScalarStart()) {
            Scalar c = scalarProduct(true);
            ws();
            if (eat('*')) {
                ws();
                out = eScale(c, atom());
            } else {
                out = c.isOne() ? eUnit() : eScale(c, eUnit());
            }
        } else if (atAtomStart()) {
            out = atom();
        } else {
            fail("term");
        }
        return neg ? eNeg(out) : out;
    }

    ExprPtr expr() {
        std::vector<ExprPtr> parts;
        parts.push_back(term());
        for (;;) {
            ws();
            char c = peek();
            if (c == '+') {
                ++pos;
                parts.push_back(term());
            } else if (c == '-') {
                ++pos;
                parts.push_back(eNeg(term()));
            } else {
                break;
            }
        }
        return parts.size() == 1 ? parts[0] : eSum(std::move(parts));
    }
};

} // namespace

ExprPtr parse_expr(const std::string& text, const ApplyResolver& resolver) {
    Parser p(text, resolver);
    ExprPtr e = p.expr();
    p.ws();
    if (p.pos != text.size()) p.fail("end of expression");
    return e;
}

Scalar parse_scalar(const std::string& text) {
    ApplyResolver none;
    Parser p(text, none);
    Scalar v = p.scalarSum();
    p.ws();
    if (p.pos != text.size()) p.fail("end of scalar");
    return v;
}

} // namespace vac
