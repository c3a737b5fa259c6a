#include "wz/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace wz {

struct RhsExpr::Node {
    enum class Kind { Const, Prime, Gamma, Neg, Mul, Div, Pow, Branch4 };

    Kind kind = Kind::Const;
    Rational value;      // Const payload, or the Gamma argument
    long exponent = 1;   // Pow only
    std::shared_ptr<const Node> a, b;

    PadicResidue eval(GammaPEvaluator& gp) const;
    std::string str() const;
    std::string wrapped() const;
};

PadicResidue RhsExpr::Node::eval(GammaPEvaluator& gp) const {
    const Integer& p = gp.prime();
    int N = gp.exponent();
    switch (kind) {
        case Kind::Const: return residue_mod(value, p, N);
        case Kind::Prime: return PadicResidue(p, N, p);
        case Kind::Gamma: return gp(value);
        case Kind::Neg: return -a->eval(gp);
        case Kind::Mul: return a->eval(gp) * b->eval(gp);
        case Kind::Div: return a->eval(gp) * b->eval(gp).inverse();
        case Kind::Pow: return a->eval(gp).pow(exponent);
        case Kind::Branch4: return (p % 4 == 1 ? a : b)->eval(gp);
    }
    throw Error("RhsExpr: unknown node kind");
}

std::string RhsExpr::Node::str() const {
    switch (kind) {
        case Kind::Const: return to_string(value);
        case Kind::Prime: return "p";
        case Kind::Gamma: return "gamma_p(" + to_string(value) + ")";
        case Kind::Neg: return "-" + a->wrapped();
        case Kind::Mul: return a->wrapped() + "*" + b->wrapped();
        case Kind::Div: return a->wrapped() + "/" + b->wrapped();
        case Kind::Pow: return a->wrapped() + "^" + std::to_string(exponent);
        case Kind::Branch4:
            return "{" + a->str() + " if p = 1 mod 4, " + b->str() +
                   " if p = 3 mod 4}";
    }
    return "?";
}

std::string RhsExpr::Node::wrapped() const {
    bool atom = kind == Kind::Prime || kind == Kind::Gamma ||
                kind == Kind::Pow || kind == Kind::Branch4 ||
                (kind == Kind::Const && value >= 0 && value.get_den() == 1);
    return atom ? str() : "(" + str() + ")";
}

RhsExpr::RhsExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

RhsExpr::RhsExpr() { *this = constant(Rational(0)); }

RhsExpr RhsExpr::constant(const Rational& c) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Const;
    n->value = c;
    return RhsExpr(std::move(n));
}

RhsExpr RhsExpr::prime() {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Prime;
    return RhsExpr(std::move(n));
}

RhsExpr RhsExpr::gamma(const Rational& arg) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Gamma;
    n->value = arg;
    return RhsExpr(std::move(n));
}

RhsExpr RhsExpr::pow(const RhsExpr& base, long e) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Pow;
    n->exponent = e;
    n->a = base.node_;
    return RhsExpr(std::move(n));
}

RhsExpr RhsExpr::branch_mod4(const RhsExpr& one, const RhsExpr& three) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Branch4;
    n->a = one.node_;
    n->b = three.node_;
    return RhsExpr(std::move(n));
}

RhsExpr RhsExpr::operator-() const {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Neg;
    n->a = node_;
    return RhsExpr(std::move(n));
}

RhsExpr operator*(const RhsExpr& a, const RhsExpr& b) {
    auto n = std::make_shared<RhsExpr::Node>();
    n->kind = RhsExpr::Node::Kind::Mul;
    n->a = a.node_;
    n->b = b.node_;
    return RhsExpr(std::move(n));
}

RhsExpr operator/(const RhsExpr& a, const RhsExpr& b) {
    auto n = std::make_shared<RhsExpr::Node>();
    n->kind = RhsExpr::Node::Kind::Div;
    n->a = a.node_;
    n->b = b.node_;
    return RhsExpr(std::move(n));
}

PadicResidue RhsExpr::eval(GammaPEvaluator& gp) const { return node_->eval(gp); }

std::string RhsExpr::str() const { return node_->str(); }

std::string PrimeCondition::str() const {
    std::ostringstream os;
    if (modulus > 1) os << "p = " << residue << " (mod " << modulus << "), ";
    os << "p >= " << min_p;
    return os.str();
}

int SupercongruenceSpec::strongest_exponent(long p) const {
    int best = exponent;
    for (const auto& e : extensions)
        if (e.primes.holds(p)) best = std::max(best, e.exponent);
    return best;
}

int SupercongruenceSpec::chain_exponent_for(long p) const {
    if (chain_alternative && chain_alternative->first.holds(p))
        return chain_alternative->second;
    return chain_exponent;
}

namespace {

const LinearIndex kN{1, 0, 0};
const LinearIndex kK{0, 1, 0};
const LinearIndex kNpK{1, 1, 0};
const LinearIndex kNmK{1, -1, 0};

HyperTerm prod(std::initializer_list<HyperTerm> factors) {
    HyperTerm t;
    for (const auto& f : factors) t = term_mul(t, f);
    return t;
}

// u(n) * sign^n * alpha_n^m / (1)_n^m with u(n) = ua n + uc
HyperTerm standard_summand(long ua, long uc, int sign, const Rational& alpha,
                           int m) {
    HyperTerm t =
        HyperTerm::from_prefactor(RationalFunction(LinearIndex{ua, 0, uc}.to_poly()));
    if (sign < 0) t = term_mul(t, HyperTerm::sign_power(kN));
    return prod({t, HyperTerm::poch(alpha, kN, m),
                 HyperTerm::poch(Rational(1), kN, -m)});
}

// One numerator symbol moved to n+k and a self nulling (1)_{n-k} denominator.
HyperTerm standard_lift(long ua, long uc, int sign, const Rational& alpha,
                        int m) {
    HyperTerm t =
        HyperTerm::from_prefactor(RationalFunction(LinearIndex{ua, 0, uc}.to_poly()));
    if (sign < 0) t = term_mul(t, HyperTerm::sign_power(kN));
    return prod({t, HyperTerm::poch(alpha, kN, m - 1),
                 HyperTerm::poch(alpha, kNpK),
                 HyperTerm::poch(Rational(1), kN, -(m - 1)),
                 HyperTerm::poch(Rational(1), kNmK, -1)});
}

// The n dependent part shared by the single lift devices.
HyperTerm device_frame(const Rational& alpha) {
    return prod({HyperTerm::poch(Rational(1), kN),
                 HyperTerm::poch(alpha, kNpK),
                 HyperTerm::poch(alpha, kN, -1),
                 HyperTerm::poch(Rational(1), kNmK, -1)});
}

RhsExpr cnst(long num, long den = 1) {
    return RhsExpr::constant(Rational(num, den));
}

SupercongruenceSpec row_b2() {
    SupercongruenceSpec r;
    r.id = "B.2";
    r.primes = {1, 0, 3};
    r.d = 2;
    r.summand = standard_summand(4, 1, -1, Rational(1, 2), 3);
    r.exponent = 3;
    r.rhs = -(RhsExpr::prime() / RhsExpr::pow(RhsExpr::gamma(Rational(1, 2)), 2));
    r.lift = standard_lift(4, 1, -1, Rational(1, 2), 3);
    r.device = prod({device_frame(Rational(1, 2)), HyperTerm::sign_power(kK),
                     HyperTerm::poch(Rational(1, 2), kK, -2)});
    r.collapse_a = 2;
    r.collapse_m = 3;
    r.chain_exponent = 3;
    return r;
}

SupercongruenceSpec row_c2() {
    SupercongruenceSpec r;
    r.id = "C.2";
    r.primes = {1, 0, 3};
    r.d = 2;
    r.summand = standard_summand(4, 1, 1, Rational(1, 2), 4);
    r.exponent = 3;
    r.rhs = RhsExpr::prime();
    r.lift = standard_lift(4, 1, 1, Rational(1, 2), 4);
    r.device = prod({device_frame(Rational(1, 2)), HyperTerm::sign_power(kK),
                     HyperTerm::poch(Rational(1), kK),
                     HyperTerm::poch(Rational(1, 2), kK, -3)});
    r.collapse_a = 2;
    r.collapse_m = 4;
    r.chain_exponent = 4;
    return r;
}

SupercongruenceSpec row_d2() {
    SupercongruenceSpec r;
    r.id = "D.2";
    r.primes = {6, 1, 7};
    r.d = 3;
    r.summand = standard_summand(6, 1, 1, Rational(1, 3), 6);
    r.exponent = 4;
    r.rhs = -(RhsExpr::prime() * RhsExpr::pow(RhsExpr::gamma(Rational(1, 3)), 9));
    r.lift = prod({HyperTerm::from_prefactor(
                       RationalFunction(LinearIndex{6, 0, 1}.to_poly())),
                   HyperTerm::poch(Rational(1, 3), kN, 4),
                   HyperTerm::poch(Rational(1, 3), kNpK),
                   HyperTerm::poch(Rational(1, 3), kNmK),
                   HyperTerm::poch(Rational(1), kN, -4),
                   HyperTerm::poch(Rational(1), kNmK, -1),
                   HyperTerm::poch(Rational(1), kNpK, -1)});
    r.device = prod({HyperTerm::poch(Rational(1), kN, 2),
                     HyperTerm::poch(Rational(1, 3), kNpK),
                     HyperTerm::poch(Rational(1, 3), kNmK),
                     HyperTerm::poch(Rational(1, 3), kN, -2),
                     HyperTerm::poch(Rational(1), kNmK, -1),
                     HyperTerm::poch(Rational(1), kNpK, -1),
                     HyperTerm::poch(Rational(2, 3), kK, 4),
                     HyperTerm::poch(Rational(1, 3), kK, -4)});
    r.chain_exponent = 5;
    return r;
}

SupercongruenceSpec row_e2() {
    SupercongruenceSpec r;
    r.id = "E.2";
    r.primes = {6, 1, 7};
    r.d = 3;
    r.summand = standard_summand(6, 1, -1, Rational(1, 3), 3);
    r.exponent = 3;
    r.rhs = RhsExpr::prime();
    r.lift = standard_lift(6, 1, -1, Rational(1, 3), 3);
    r.device = prod({device_frame(Rational(1, 3)), HyperTerm::sign_power(kK),
                     HyperTerm::poch(Rational(1, 3), kK, -2)});
    r.collapse_a = 3;
    r.collapse_m = 3;
    r.chain_exponent = 3;
    return r;
}

SupercongruenceSpec row_f2() {
    SupercongruenceSpec r;
    r.id = "F.2";
    r.primes = {4, 1, 5};
    r.d = 4;
    r.summand = standard_summand(8, 1, -1, Rational(1, 4), 3);
    r.exponent = 3;
    r.rhs = -(RhsExpr::prime() / (RhsExpr::gamma(Rational(1, 4)) *
                                  RhsExpr::gamma(Rational(3, 4))));
    r.lift = standard_lift(8, 1, -1, Rational(1, 4), 3);
    r.device = prod({device_frame(Rational(1, 4)), HyperTerm::sign_power(kK),
                     HyperTerm::poch(Rational(1, 4), kK, -2)});
    r.collapse_a = 4;
    r.collapse_m = 3;
    r.chain_exponent = 3;
    return r;
}

SupercongruenceSpec row_g2() {
    SupercongruenceSpec r;
    r.id = "G.2";
    r.primes = {4, 1, 5};
    r.d = 4;
    r.summand = standard_summand(8, 1, 1, Rational(1, 4), 4);
    r.exponent = 3;
    r.rhs = RhsExpr::prime() * RhsExpr::gamma(Rational(1, 2)) *
            RhsExpr::gamma(Rational(1, 4)) / RhsExpr::gamma(Rational(3, 4));
    r.extensions.push_back({PrimeCondition{4, 1, 5}, 4, r.rhs});
    r.lift = standard_lift(8, 1, 1, Rational(1, 4), 4);
    r.device = prod({device_frame(Rational(1, 4)), HyperTerm::sign_power(kK),
                     HyperTerm::poch(Rational(1, 2), kK),
                     HyperTerm::poch(Rational(1, 4), kK, -3)});
    r.collapse_a = 4;
    r.collapse_m = 4;
    r.chain_exponent = 4;
    return r;
}

SupercongruenceSpec row_h2() {
    SupercongruenceSpec r;
    r.id = "H.2";
    r.primes = {1, 0, 3};
    r.d = 2;
    r.summand = standard_summand(0, 1, 1, Rational(1, 2), 3);
    r.exponent = 2;
    RhsExpr g4 = RhsExpr::pow(RhsExpr::gamma(Rational(1, 4)), 4);
    r.rhs = RhsExpr::branch_mod4(-g4, cnst(0));
    r.extensions.push_back(
        {PrimeCondition{4, 3, 3}, 3,
         -(RhsExpr::pow(RhsExpr::prime(), 2) * g4 / cnst(16))});
    r.lift = standard_lift(0, 1, 1, Rational(1, 2), 3);
    r.device = prod({device_frame(Rational(1, 2)), HyperTerm::sign_power(kK),
                     HyperTerm::poch(Rational(3, 4), kK),
                     HyperTerm::poch(Rational(1, 4), kK, -1),
                     HyperTerm::poch(Rational(1, 2), kK, -2)});
    r.chain_exponent = 2;
    r.chain_alternative = {{PrimeCondition{4, 3, 3}, 3}};
    return r;
}

SupercongruenceSpec row_i2() {
    SupercongruenceSpec r;
    r.id = "I.2";
    r.primes = {1, 0, 3};
    r.d = 2;
    r.summand = prod({HyperTerm::from_prefactor(RationalFunction(
                          Poly(Rational(1)), LinearIndex{1, 0, 1}.to_poly())),
                      HyperTerm::poch(Rational(1, 2), kN, 2),
                      HyperTerm::poch(Rational(1), kN, -2)});
    r.exponent = 3;
    r.rhs = cnst(2) * RhsExpr::pow(RhsExpr::prime(), 2);
    return r;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

}  // namespace

const std::vector<SupercongruenceSpec>& catalog() {
    static const std::vector<SupercongruenceSpec> rows = [] {
        std::vector<SupercongruenceSpec> v;
        v.push_back(row_b2());
        v.push_back(row_c2());
        v.push_back(row_d2());
        v.push_back(row_e2());
        v.push_back(row_f2());
        v.push_back(row_g2());
        v.push_back(row_h2());
        v.push_back(row_i2());
        return v;
    }();
    return rows;
}

const SupercongruenceSpec& catalog_row(const std::string& id) {
    for (const auto& row : catalog())
        if (row.id == id) return row;
    throw Error("catalog: unknown id " + id);
}

bool qualifies(const SupercongruenceSpec& row, long p) {
    return is_prime(p) && row.primes.holds(p);
}

std::vector<long> primes_in(long lo, long hi) {
    std::vector<long> out;
    for (long p = std::max(lo, 2L); p < hi; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

std::vector<long> qualifying_primes(const SupercongruenceSpec& row, long lo,
                                    long hi) {
    std::vector<long> out;
    for (long p : primes_in(lo, hi))
        if (row.primes.holds(p)) out.push_back(p);
    return out;
}

Rational lhs_sum(const SupercongruenceSpec& row, long p) {
    if (!qualifies(row, p))
        throw Error(row.id + ": prime " + std::to_string(p) +
                    " does not qualify (" + row.primes.str() + ")");
    long s = (p - 1) / row.d;
    Rational total(0);
    for (long n = 0; n <= s; ++n) {
        ExtendedValue v = row.summand.eval(n, 0);
        if (v.is_pole)
            throw PoleInSum(row.id + ": summand pole at n = " + std::to_string(n));
        total += v.value;
    }
    if (total != 0 && padic_val(total, Integer(p)) < 0)
        throw Error(row.id + ": sum is not p integral at p = " + std::to_string(p));
    return total;
}

PadicResidue rhs_value(const SupercongruenceSpec& row, long p, int N) {
    const RhsExpr* expr = &row.rhs;
    int best = row.exponent;
    for (const auto& e : row.extensions)
        if (e.primes.holds(p) && e.exponent <= N && e.exponent >= best) {
            best = e.exponent;
            expr = &e.rhs;
        }
    GammaPEvaluator gp(Integer(p), N);
    return expr->eval(gp);
}

CongruenceReport check(const SupercongruenceSpec& row, long p) {
    CongruenceReport rep;
    rep.id = row.id;
    rep.p = p;
    rep.exponent = row.strongest_exponent(p);
    rep.lhs = lhs_sum(row, p);
    rep.rhs = rhs_value(row, p, rep.exponent);
    Rational diff = rep.lhs - Rational(rep.rhs.value);
    rep.difference_valuation =
        diff == 0 ? kExactValuation : padic_val(diff, Integer(p));
    rep.pass = rep.difference_valuation >= rep.exponent;
    if (row.id == "H.2" && p % 4 == 3) {
        long v = rep.lhs == 0 ? kExactValuation : padic_val(rep.lhs, Integer(p));
        if (v >= 2) {
            rep.notes.push_back("sum itself vanishes mod p^2");
        } else {
            rep.notes.push_back("sum fails to vanish mod p^2");
            rep.pass = false;
        }
    }
    return rep;
}

const WZPair& pipeline(const SupercongruenceSpec& row) {
    static std::map<std::string, WZPair> cache;
    auto it = cache.find(row.id);
    if (it == cache.end()) {
        if (!row.has_pipeline())
            throw Error(row.id + ": no telescoping pipeline");
        it = cache.emplace(row.id,
                           build_pair(*row.lift, row.collapse_a, row.collapse_m))
                 .first;
    }
    return it->second;
}

ChainReport chain_check(const SupercongruenceSpec& row, long p) {
    if (!row.has_pipeline()) throw Error(row.id + ": no telescoping pipeline");
    if (!qualifies(row, p))
        throw Error(row.id + ": prime " + std::to_string(p) +
                    " does not qualify (" + row.primes.str() + ")");
    const WZPair& pair = pipeline(row);

    ChainReport rep;
    rep.id = row.id;
    rep.p = p;
    long s = (p - 1) / row.d;
    rep.upper = s;
    rep.required_valuation = row.chain_exponent_for(p);
    Integer P(p);

    auto finite = [&](const ExtendedValue& v, const char* where) -> Rational {
        if (v.is_pole)
            throw Error(row.id + std::string(": unexpected pole in ") + where);
        return v.value;
    };

    rep.tail_ok = true;
    std::vector<Rational> tails;
    for (long k = 0; k < s; ++k) {
        Rational g = finite(pair.Gbar.eval(s + 1, k), "tail value");
        tails.push_back(g);
        long v = g == 0 ? kExactValuation : padic_val(g, P);
        rep.tail_valuations.push_back(v);
        if (v < rep.required_valuation) rep.tail_ok = false;
    }

    std::vector<Rational> colsum(static_cast<size_t>(s) + 1, Rational(0));
    for (long k = 0; k <= s; ++k)
        for (long n = 0; n <= s; ++n)
            colsum[static_cast<size_t>(k)] +=
                finite(pair.Fbar.eval(n, k), "column sum");

    rep.shift_identity_ok = true;
    for (long k = 0; k < s; ++k)
        if (colsum[static_cast<size_t>(k) + 1] - colsum[static_cast<size_t>(k)] !=
            tails[static_cast<size_t>(k)])
            rep.shift_identity_ok = false;

    rep.boundary_ok = true;
    for (long k = 0; k <= s; ++k)
        if (finite(pair.Gbar.eval(0, k), "boundary") != 0)
            rep.boundary_ok = false;

    Rational corner_value = finite(pair.Fbar.eval(s, s), "corner");
    rep.diagonal_ok = colsum[static_cast<size_t>(s)] == corner_value;

    int N = row.strongest_exponent(p);
    rep.corner = residue_mod(corner_value, P, N);
    rep.corner_ok = rep.corner == rhs_value(row, p, N);

    rep.pass = rep.tail_ok && rep.shift_identity_ok && rep.boundary_ok &&
               rep.diagonal_ok && rep.corner_ok;
    if (!rep.tail_ok) rep.notes.push_back("a tail value misses the required valuation");
    if (!rep.corner_ok) rep.notes.push_back("corner residue disagrees");
    return rep;
}

Rational i2_partial_sum_closed_form(long p) {
    long m = (p + 1) / 2;
    ExtendedValue a = pochhammer(Rational(1, 2), m);
    ExtendedValue b = pochhammer(Rational(1), m);
    if (a.is_pole || b.is_pole || b.value == 0)
        throw Error("closed form: unexpected pole");
    Rational q = a.value / b.value;
    return Rational(4) * Rational(m) * q * q;
}

}  // namespace wz
