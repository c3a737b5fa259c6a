#include "wz/parser.hpp"

#include "wz/poly.hpp"

#include <cctype>
#include <cstring>
#include <optional>

namespace wz {

namespace {

constexpr long kMaxExponent = 512;

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eof() {
        skip();
        return pos >= s.size();
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool take(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool take_word(const char* w) {
        skip();
        size_t len = std::strlen(w);
        if (s.compare(pos, len, w) == 0) {
            pos += len;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!take(c))
            throw ParseError(std::string("expected '") + c + "'", pos);
    }
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

Integer parse_uint(Cursor& cur) {
    cur.skip();
    size_t start = cur.pos;
    while (cur.pos < cur.s.size() && is_digit(cur.s[cur.pos])) ++cur.pos;
    if (cur.pos == start) throw ParseError("expected a number", start);
    return Integer(cur.s.substr(start, cur.pos - start));
}

// sint ("/" uint)?, the "/" taken only when digits follow
Rational parse_rational(Cursor& cur) {
    cur.skip();
    bool neg = cur.take('-');
    Integer num = parse_uint(cur);
    Integer den = 1;
    size_t save = cur.pos;
    if (cur.take('/')) {
        if (is_digit(cur.peek()))
            den = parse_uint(cur);
        else
            cur.pos = save;
    }
    if (den == 0) throw ParseError("zero denominator", save);
    Rational r(neg ? Integer(-num) : num, den);
    r.canonicalize();
    return r;
}

long parse_sint(Cursor& cur) {
    cur.skip();
    size_t start = cur.pos;
    bool neg = cur.take('-');
    Integer v = parse_uint(cur);
    if (v > kMaxExponent) throw ParseError("exponent too large", start);
    long e = v.get_si();
    return neg ? -e : e;
}

Poly parse_poly_sum(Cursor& cur);

Poly parse_poly_primary(Cursor& cur) {
    char c = cur.peek();
    if (c == '(') {
        cur.expect('(');
        Poly p = parse_poly_sum(cur);
        cur.expect(')');
        return p;
    }
    if (c == 'n' || c == 'k') {
        ++cur.pos;
        return Poly::variable(c == 'n' ? Var::n : Var::k);
    }
    if (c == '-' || is_digit(c)) return Poly(parse_rational(cur));
    throw ParseError("expected a polynomial", cur.pos);
}

Poly parse_poly_factor(Cursor& cur) {
    Poly p = parse_poly_primary(cur);
    size_t save = cur.pos;
    if (cur.take('^')) {
        if (!is_digit(cur.peek())) {
            cur.pos = save;
            return p;
        }
        Integer e = parse_uint(cur);
        if (e > kMaxExponent) throw ParseError("exponent too large", save);
        return p.pow(static_cast<int>(e.get_si()));
    }
    return p;
}

Poly parse_poly_term(Cursor& cur) {
    Poly p = parse_poly_factor(cur);
    while (cur.take('*')) p *= parse_poly_factor(cur);
    return p;
}

Poly parse_poly_sum(Cursor& cur) {
    bool neg = false;
    if (cur.peek() == '-' && !is_digit(cur.pos + 1 < cur.s.size() ? cur.s[cur.pos + 1] : '\0')) {
        cur.take('-');
        neg = true;
    }
    Poly p = parse_poly_term(cur);
    if (neg) p = -p;
    for (;;) {
        if (cur.take('+'))
            p += parse_poly_term(cur);
        else if (cur.take('-'))
            p -= parse_poly_term(cur);
        else
            return p;
    }
}

long small_int(const Rational& c, size_t pos) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p())
        throw NonLinearIndex("expected an integer linear expression in n and k",
                             pos);
    return c.get_num().get_si();
}

LinearIndex parse_linear(Cursor& cur) {
    size_t start = cur.pos;
    Poly p = parse_poly_sum(cur);
    if (p.degree(Var::n) > 1 || p.degree(Var::k) > 1 || p.coeff(1, 1) != 0)
        throw NonLinearIndex("expected an integer linear expression in n and k",
                             start);
    return LinearIndex{small_int(p.coeff(1, 0), start),
                       small_int(p.coeff(0, 1), start),
                       small_int(p.coeff(0, 0), start)};
}

struct Atom {
    HyperTerm term;
    std::optional<Rational> constant;
};

HyperTerm parse_expr(Cursor& cur);

Atom parse_atom(Cursor& cur) {
    cur.skip();
    if (cur.take_word("poch")) {
        cur.expect('(');
        Rational arg = parse_rational(cur);
        cur.expect(',');
        LinearIndex idx = parse_linear(cur);
        cur.expect(')');
        return {HyperTerm::poch(arg, idx), std::nullopt};
    }
    char c = cur.peek();
    if (c == '-' || is_digit(c)) {
        Rational r = parse_rational(cur);
        return {HyperTerm::from_constant(r), r};
    }
    if (c == '(') {
        size_t save = cur.pos;
        try {
            cur.expect('(');
            Poly p = parse_poly_sum(cur);
            cur.expect(')');
            if (p.is_constant())
                return {HyperTerm::from_constant(p.constant_value()),
                        p.constant_value()};
            return {HyperTerm::from_prefactor(RationalFunction(p)),
                    std::nullopt};
        } catch (const ParseError&) {
            cur.pos = save;
        }
        cur.expect('(');
        HyperTerm t = parse_expr(cur);
        cur.expect(')');
        return {t, std::nullopt};
    }
    throw ParseError("expected a factor", cur.pos);
}

HyperTerm term_pow(const HyperTerm& t, long e) {
    HyperTerm r;
    long reps = e < 0 ? -e : e;
    for (long i = 0; i < reps; ++i) r = term_mul(r, t);
    return e < 0 ? term_div(HyperTerm(), r) : r;
}

HyperTerm parse_factor(Cursor& cur) {
    Atom a = parse_atom(cur);
    size_t save = cur.pos;
    if (cur.take('^')) {
        if (cur.peek() == '(') {
            size_t epos = cur.pos;
            cur.expect('(');
            LinearIndex L = parse_linear(cur);
            cur.expect(')');
            if (!a.constant)
                throw ParseError("linear exponent requires a rational base",
                                 epos);
            if (*a.constant == 0)
                throw ParseError("zero base with a linear exponent", epos);
            return HyperTerm::geometric(*a.constant, L);
        }
        if (cur.peek() != '-' && !is_digit(cur.peek())) {
            cur.pos = save;
            return a.term;
        }
        long e = parse_sint(cur);
        if (a.constant) return HyperTerm::from_constant(rpow(*a.constant, e));
        return term_pow(a.term, e);
    }
    return a.term;
}

HyperTerm parse_expr(Cursor& cur) {
    HyperTerm t = parse_factor(cur);
    for (;;) {
        if (cur.take('*'))
            t = term_mul(t, parse_factor(cur));
        else if (cur.take('/'))
            t = term_div(t, parse_factor(cur));
        else
            return t;
    }
}

}  // namespace

HyperTerm parse_term(const std::string& text) {
    Cursor cur{text};
    HyperTerm t = parse_expr(cur);
    if (!cur.eof()) throw ParseError("unexpected trailing input", cur.pos);
    return t;
}

}  // namespace wz
