#include "wz/poly.hpp"

#include <algorithm>

namespace wz {

Poly::Poly(const Rational& c) {
    if (c != 0) terms_[{0, 0}] = c;
}

Poly::Poly(long c) {
    if (c != 0) terms_[{0, 0}] = Rational(c);
}

Poly Poly::variable(Var v) {
    return monomial(v == Var::n ? 1 : 0, v == Var::k ? 1 : 0, Rational(1));
}

Poly Poly::monomial(int en, int ek, const Rational& c) {
    Poly p;
    if (c != 0) p.terms_[{en, ek}] = c;
    return p;
}

void Poly::add_term(int en, int ek, const Rational& c) {
    if (c == 0) return;
    auto key = Exponents{en, ek};
    auto it  = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("Poly::constant_value: not constant");
    return terms_.begin()->second;
}

int Poly::degree(Var v) const {
    if (terms_.empty()) return -1;
    int idx = static_cast<int>(v), d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

Rational Poly::coeff(int en, int ek) const {
    auto it = terms_.find({en, ek});
    return it == terms_.end() ? Rational(0) : it->second;
}

Poly::Exponents Poly::leading_exponents() const {
    if (terms_.empty()) throw Error("Poly::leading_exponents: zero polynomial");
    return terms_.rbegin()->first;
}

Rational Poly::leading_coeff() const {
    if (terms_.empty()) throw Error("Poly::leading_coeff: zero polynomial");
    return terms_.rbegin()->second;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e[0], e[1], c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e[0], e[1], -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.add_term(ea[0] + eb[0], ea[1] + eb[1], ca * cb);
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw Error("Poly::pow: negative exponent");
    Poly r(1);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

static Rational binom(unsigned long a, unsigned long b) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), a, b);
    return Rational(r);
}

Poly Poly::shifted(Var v, const Rational& delta) const {
    if (delta == 0) return *this;
    int idx = static_cast<int>(v);
    Poly r;
    for (const auto& [e, c] : terms_) {
        int d = e[idx];
        for (int i = 0; i <= d; ++i) {
            Rational coef = c * binom(d, i) * rpow(delta, d - i);
            int en = (v == Var::n) ? i : e[0];
            int ek = (v == Var::k) ? i : e[1];
            r.add_term(en, ek, coef);
        }
    }
    return r;
}

Rational Poly::eval(const Rational& n, const Rational& k) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) acc += c * rpow(n, e[0]) * rpow(k, e[1]);
    return acc;
}

Poly Poly::eval_partial(Var v, const Rational& value) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
        if (v == Var::n)
            r.add_term(0, e[1], c * rpow(value, e[0]));
        else
            r.add_term(e[0], 0, c * rpow(value, e[1]));
    }
    return r;
}

std::vector<Poly> Poly::coefficients_in(Var v) const {
    std::vector<Poly> cs;
    if (terms_.empty()) return cs;
    cs.resize(static_cast<size_t>(degree(v)) + 1);
    int idx = static_cast<int>(v);
    for (const auto& [e, c] : terms_) {
        int rest_n = (v == Var::n) ? 0 : e[0];
        int rest_k = (v == Var::k) ? 0 : e[1];
        cs[static_cast<size_t>(e[idx])].add_term(rest_n, rest_k, c);
    }
    return cs;
}

Poly Poly::from_coefficients(Var v, const std::vector<Poly>& cs) {
    Poly r;
    for (size_t i = 0; i < cs.size(); ++i) {
        int en = (v == Var::n) ? static_cast<int>(i) : 0;
        int ek = (v == Var::k) ? static_cast<int>(i) : 0;
        r += cs[i] * Poly::monomial(en, ek, Rational(1));
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono;
        if (e[0] > 0) mono += "n" + (e[0] > 1 ? "^" + std::to_string(e[0]) : "");
        if (e[1] > 0) {
            if (!mono.empty()) mono += "*";
            mono += "k" + (e[1] > 1 ? "^" + std::to_string(e[1]) : "");
        }
        if (mono.empty()) {
            out += to_string(a);
        } else {
            if (a != 1) out += to_string(a) + "*";
            out += mono;
        }
    }
    return out;
}

Poly shift(const Poly& p, Var v, long j) { return p.shifted(v, Rational(j)); }

Rational rational_content(const Poly& p) {
    if (p.is_zero()) throw Error("rational_content: zero polynomial");
    Integer g(0), l(1);
    for (const auto& [e, c] : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational r(g, l);
    r.canonicalize();
    return r;
}

Poly divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisorZeroPolynomial("divide_exact: zero divisor");
    Poly r = a, q;
    auto lb = b.leading_exponents();
    Rational cb = b.leading_coeff();
    while (!r.is_zero()) {
        auto lr = r.leading_exponents();
        if (lr[0] < lb[0] || lr[1] < lb[1])
            throw Error("divide_exact: division is not exact");
        Poly t = Poly::monomial(lr[0] - lb[0], lr[1] - lb[1], r.leading_coeff() / cb);
        q += t;
        r -= t * b;
    }
    return q;
}

// Primitive positive normalization: integer coprime coefficients, positive
// leading coefficient under lex(n > k).
static Poly prim_pos(const Poly& p) {
    if (p.is_zero()) return p;
    Rational c = rational_content(p);
    if (p.leading_coeff() < 0) c = -c;
    return p.scaled(1 / c);
}

// Pseudo-remainder of a by b with respect to main variable v.
static Poly prem(const Poly& a, const Poly& b, Var v) {
    int db = b.degree(v);
    Poly r  = a;
    auto bc = b.coefficients_in(v);
    Poly lb = bc.back();
    int guard = a.degree(v) - db + 1;
    while (!r.is_zero() && r.degree(v) >= db) {
        if (guard-- < 0) throw Error("prem: failed to reduce");
        auto rc = r.coefficients_in(v);
        Poly lr = rc.back();
        int  dr = r.degree(v);
        Poly mono = Poly::monomial(v == Var::n ? dr - db : 0, v == Var::k ? dr - db : 0, Rational(1));
        r = r * lb - b * lr * mono;
    }
    return r;
}

// Content of p as a polynomial in v (gcd of its coefficients, which live in
// the other variable).
static Poly content_in(const Poly& p, Var v) {
    Poly g;
    for (const Poly& c : p.coefficients_in(v)) {
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    return g.is_zero() ? Poly(1) : g;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero()) return prim_pos(b);
    if (b.is_zero()) return prim_pos(a);
    if (a.is_constant() || b.is_constant()) return Poly(1);

    Var v = (a.degree(Var::n) > 0 || b.degree(Var::n) > 0) ? Var::n : Var::k;
    if (a.degree(v) == 0 || b.degree(v) == 0) {
        // One argument is free of the main variable: it can only share the
        // other's content.
        const Poly& flat = (a.degree(v) == 0) ? a : b;
        const Poly& full = (a.degree(v) == 0) ? b : a;
        return prim_pos(poly_gcd(flat, content_in(full, v)));
    }

    Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly cg = poly_gcd(ca, cb);
    Poly x  = prim_pos(divide_exact(a, ca));
    Poly y  = prim_pos(divide_exact(b, cb));
    if (x.degree(v) < y.degree(v)) std::swap(x, y);
    while (true) {
        Poly r = prem(x, y, v);
        if (r.is_zero()) {
            Poly pp = prim_pos(divide_exact(y, content_in(y, v)));
            return prim_pos(cg * pp);
        }
        if (r.degree(v) == 0) return prim_pos(cg);
        r = prim_pos(divide_exact(r, content_in(r, v)));
        x = y;
        y = r;
    }
}

std::vector<Poly> content_normalize(const std::vector<Poly>& coeffs) {
    Integer g(0), l(1);
    for (const Poly& p : coeffs)
        for (const auto& [e, c] : p.terms()) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
        }
    if (g == 0) return coeffs;
    Rational content(g, l);
    content.canonicalize();
    for (const Poly& p : coeffs) {
        if (p.is_zero()) continue;
        if (p.leading_coeff() < 0) content = -content;
        break;
    }
    std::vector<Poly> out;
    out.reserve(coeffs.size());
    for (const Poly& p : coeffs) out.push_back(p.scaled(1 / content));
    return out;
}

static std::vector<Integer> positive_divisors(const Integer& n) {
    Integer a = abs(n);
    if (a == 0) throw Error("positive_divisors: zero");
    if (a > Integer("1000000000000"))
        throw Error("positive_divisors: coefficient too large to factor");
    std::vector<Integer> small, large;
    for (Integer d(1); d * d <= a; ++d) {
        if (a % d == 0) {
            small.push_back(d);
            if (d * d != a) large.push_back(a / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

LinearFactorization split_linear_factors(const Poly& a) {
    if (a.is_zero()) throw Error("split_linear_factors: zero polynomial");
    bool has_n = a.degree(Var::n) > 0, has_k = a.degree(Var::k) > 0;
    if (has_n && has_k) throw Error("split_linear_factors: polynomial is not univariate");

    LinearFactorization out;
    if (a.is_constant()) {
        out.constant = a.constant_value();
        return out;
    }
    Var v = has_n ? Var::n : Var::k;
    Poly var = Poly::variable(v);

    std::map<std::pair<long, long>, int> found;   // (m, b) -> multiplicity
    Poly rem = a.scaled(1 / rational_content(a));

    // Zero roots first so the trailing coefficient below is nonzero.
    while (!rem.is_zero() && rem.coeff(0, 0) == 0 && !rem.is_constant()) {
        rem = divide_exact(rem, var);
        found[{1, 0}] += 1;
    }

    if (!rem.is_constant()) {
        auto cs = rem.coefficients_in(v);
        Integer lead  = cs.back().constant_value().get_num();
        Integer trail = cs.front().constant_value().get_num();
        for (const Integer& bn : positive_divisors(trail)) {
            for (const Integer& bd : positive_divisors(lead)) {
                for (int s = 0; s < 2; ++s) {
                    Rational root(s == 0 ? bn : -bn, bd);
                    root.canonicalize();
                    Poly fac = var.scaled(Rational(root.get_den())) - Poly(Rational(root.get_num()));
                    while (!rem.is_constant() && rem.eval_partial(v, root).is_zero()) {
                        rem = divide_exact(rem, fac);
                        found[{root.get_den().get_si(), Integer(-root.get_num()).get_si()}] += 1;
                    }
                }
                if (rem.is_constant()) break;
            }
            if (rem.is_constant()) break;
        }
    }
    if (!rem.is_constant())
        throw NotSplitOverRationals("split_linear_factors: irreducible nonlinear factor " + rem.str());

    out.constant = rem.constant_value() * rational_content(a);
    for (const auto& [mb, mult] : found)
        out.factors.push_back({mb.first, mb.second, mult});
    return out;
}

RationalFunction::RationalFunction(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw DivisorZeroPolynomial("RationalFunction: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    Rational c = rational_content(den_);
    if (den_.leading_coeff() < 0) c = -c;
    if (c != 1) {
        num_ = num_.scaled(1 / c);
        den_ = den_.scaled(1 / c);
    }
}

Rational RationalFunction::constant_value() const {
    if (!is_constant()) throw Error("RationalFunction::constant_value: not constant");
    return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DivisorZeroPolynomial("RationalFunction: division by zero");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw DivisorZeroPolynomial("RationalFunction::reciprocal: zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::shifted(Var v, long j) const {
    return RationalFunction(shift(num_, v, j), shift(den_, v, j));
}

RationalFunction RationalFunction::eval_partial(Var v, const Rational& value) const {
    return RationalFunction(num_.eval_partial(v, value), den_.eval_partial(v, value));
}

std::optional<Rational> RationalFunction::eval(const Rational& n, const Rational& k) const {
    Rational d = den_.eval(n, k);
    if (d == 0) return std::nullopt;
    return num_.eval(n, k) / d;
}

std::string RationalFunction::str() const {
    if (den_ == Poly(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace wz
