#include "wz/term.hpp"

#include <algorithm>
#include <tuple>

namespace wz {

Poly LinearIndex::to_poly() const {
    Poly p(c);
    if (a != 0) p += Poly::variable(Var::n).scaled(Rational(a));
    if (b != 0) p += Poly::variable(Var::k).scaled(Rational(b));
    return p;
}

std::string LinearIndex::str() const {
    std::string out;
    auto coef = [&out](long v, const char* name) {
        if (v == 0) return;
        if (out.empty())
            out += v < 0 ? "-" : "";
        else
            out += v < 0 ? "-" : "+";
        long av = v < 0 ? -v : v;
        if (av != 1) out += std::to_string(av) + "*";
        out += name;
    };
    coef(a, "n");
    coef(b, "k");
    if (c != 0 || out.empty()) {
        if (out.empty())
            out += std::to_string(c);
        else
            out += (c < 0 ? "-" : "+") + std::to_string(c < 0 ? -c : c);
    }
    return out;
}

ExtendedValue pochhammer(const Rational& x, long m) {
    if (m >= 0) {
        Rational acc(1);
        for (long i = 0; i < m; ++i) acc *= x + i;
        return ExtendedValue::finite(acc);
    }
    long mm = -m;
    Rational acc(1);
    for (long i = 0; i < mm; ++i) acc *= x - mm + i;
    if (acc == 0) return ExtendedValue::pole();
    return ExtendedValue::finite(1 / acc);
}

// Prime factorization of a positive integer by trial division.
static std::vector<std::pair<Integer, int>> factor_positive(Integer v) {
    std::vector<std::pair<Integer, int>> out;
    if (v <= 0) throw Error("factor_positive: argument must be positive");
    for (Integer d(2); d * d <= v; ++d) {
        if (v % d == 0) {
            int e = 0;
            while (v % d == 0) {
                v /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
        if (d > Integer(1000000)) break;
    }
    if (v > 1) {
        // Whatever remains is prime (or too large for trial division, in
        // which case it is kept as a single base).
        out.emplace_back(v, 1);
    }
    return out;
}

HyperTerm HyperTerm::from_constant(const Rational& c) {
    HyperTerm t;
    t.constant_ = c;
    t.normalize();
    return t;
}

HyperTerm HyperTerm::from_prefactor(const RationalFunction& rf) {
    HyperTerm t;
    t.pre_ = rf;
    t.normalize();
    return t;
}

HyperTerm HyperTerm::sign_power(const LinearIndex& L) {
    HyperTerm t;
    t.sign_n_ = static_cast<int>(((L.a % 2) + 2) % 2);
    t.sign_k_ = static_cast<int>(((L.b % 2) + 2) % 2);
    if (((L.c % 2) + 2) % 2 == 1) t.constant_ = -t.constant_;
    t.normalize();
    return t;
}

HyperTerm HyperTerm::geometric(const Rational& base, const LinearIndex& L) {
    if (base == 0) throw Error("HyperTerm::geometric: zero base");
    HyperTerm t;
    if (L.is_zero()) return t;
    if (base < 0) t = sign_power(L);
    for (const auto& [p, e] : factor_positive(abs(base.get_num())))
        t.geom_[p] = t.geom_[p] + L.scaled(e);
    for (const auto& [p, e] : factor_positive(base.get_den()))
        t.geom_[p] = t.geom_[p] + L.scaled(-e);
    t.normalize();
    return t;
}

HyperTerm HyperTerm::poch(const Rational& arg, const LinearIndex& idx, int power) {
    HyperTerm t;
    t.poch_.push_back({arg, idx, power});
    t.normalize();
    return t;
}

void HyperTerm::normalize() {
    if (constant_ == 0) throw Error("HyperTerm: zero constant");
    sign_n_ = ((sign_n_ % 2) + 2) % 2;
    sign_k_ = ((sign_k_ % 2) + 2) % 2;

    for (auto it = geom_.begin(); it != geom_.end();) {
        if (it->second.is_zero()) {
            it = geom_.erase(it);
        } else if (it->second.is_constant()) {
            constant_ *= rpow(Rational(it->first), it->second.c);
            it = geom_.erase(it);
        } else {
            ++it;
        }
    }

    std::map<std::pair<Rational, LinearIndex>, long> merged;
    for (const auto& p : poch_) merged[{p.arg, p.idx}] += p.power;
    poch_.clear();
    for (const auto& [key, power] : merged) {
        if (power == 0) continue;
        const auto& [arg, idx] = key;
        if (idx.is_constant()) {
            ExtendedValue v = pochhammer(arg, idx.c);
            if (v.is_pole || v.value == 0)
                throw Error("HyperTerm: degenerate constant-index Pochhammer poch(" +
                            to_string(arg) + "," + std::to_string(idx.c) + ")");
            constant_ *= rpow(v.value, power);
        } else {
            poch_.push_back({arg, idx, static_cast<int>(power)});
        }
    }

    if (pre_.is_zero()) throw Error("HyperTerm: zero prefactor");
    Rational s = rational_content(pre_.num());
    if (pre_.num().leading_coeff() < 0) s = -s;
    if (s != 1) {
        constant_ *= s;
        pre_ = RationalFunction(pre_.num().scaled(1 / s), pre_.den());
    }
}

bool HyperTerm::operator==(const HyperTerm& o) const {
    auto key = [](const PochPart& p) { return std::tie(p.arg, p.idx, p.power); };
    if (poch_.size() != o.poch_.size()) return false;
    for (size_t i = 0; i < poch_.size(); ++i)
        if (key(poch_[i]) != key(o.poch_[i])) return false;
    return constant_ == o.constant_ && sign_n_ == o.sign_n_ && sign_k_ == o.sign_k_ &&
           geom_ == o.geom_ && pre_ == o.pre_;
}

bool HyperTerm::depends_on(Var v) const {
    if ((v == Var::n ? sign_n_ : sign_k_) != 0) return true;
    for (const auto& [p, L] : geom_)
        if (L.coefficient(v) != 0) return true;
    if (pre_.num().degree(v) > 0 || pre_.den().degree(v) > 0) return true;
    for (const auto& part : poch_)
        if (part.idx.coefficient(v) != 0) return true;
    return false;
}

ExtendedValue HyperTerm::eval(long n, long k) const {
    Rational num = constant_, den(1);
    if (((sign_n_ * n + sign_k_ * k) % 2 + 2) % 2 == 1) num = -num;
    for (const auto& [p, L] : geom_) {
        long e = L.eval(n, k);
        if (e >= 0)
            num *= Rational(ipow(p, static_cast<unsigned long>(e)));
        else
            den *= Rational(ipow(p, static_cast<unsigned long>(-e)));
    }
    num *= pre_.num().eval(Rational(n), Rational(k));
    den *= pre_.den().eval(Rational(n), Rational(k));
    for (const auto& part : poch_) {
        long ell = part.idx.eval(n, k);
        Rational v;
        long e;
        if (ell >= 0) {
            Rational acc(1);
            for (long i = 0; i < ell; ++i) acc *= part.arg + i;
            v = acc;
            e = part.power;
        } else {
            // (x)_{-m} = 1/(x-m)_m: the reciprocal product joins the other
            // side, so poles never enter the accumulation directly.
            Rational acc(1);
            for (long i = 0; i < -ell; ++i) acc *= part.arg + ell + i;
            v = acc;
            e = -static_cast<long>(part.power);
        }
        if (e > 0)
            num *= rpow(v, e);
        else
            den *= rpow(v, -e);
    }
    if (den == 0) return ExtendedValue::pole();
    return ExtendedValue::finite(num / den);
}

HyperTerm HyperTerm::subst_k(long value) const {
    HyperTerm t;
    t.constant_ = constant_;
    t.sign_n_   = sign_n_;
    if (sign_k_ != 0 && ((value % 2) + 2) % 2 == 1) t.constant_ = -t.constant_;
    for (const auto& [p, L] : geom_) t.geom_[p] = L.subst_k(value);
    t.pre_ = pre_.eval_partial(Var::k, Rational(value));
    for (const auto& part : poch_) t.poch_.push_back({part.arg, part.idx.subst_k(value), part.power});
    t.normalize();
    return t;
}

HyperTerm term_mul(const HyperTerm& a, const HyperTerm& b) {
    HyperTerm t;
    t.constant_ = a.constant_ * b.constant_;
    t.sign_n_   = a.sign_n_ + b.sign_n_;
    t.sign_k_   = a.sign_k_ + b.sign_k_;
    t.geom_     = a.geom_;
    for (const auto& [p, L] : b.geom_) t.geom_[p] = t.geom_[p] + L;
    t.pre_  = a.pre_ * b.pre_;
    t.poch_ = a.poch_;
    t.poch_.insert(t.poch_.end(), b.poch_.begin(), b.poch_.end());
    t.normalize();
    return t;
}

HyperTerm term_div(const HyperTerm& a, const HyperTerm& b) {
    HyperTerm inv;
    inv.constant_ = 1 / b.constant_;
    inv.sign_n_   = b.sign_n_;   // (-1)^{-L} = (-1)^L
    inv.sign_k_   = b.sign_k_;
    for (const auto& [p, L] : b.geom_) inv.geom_[p] = -L;
    inv.pre_ = b.pre_.reciprocal();
    for (const auto& part : b.poch_) inv.poch_.push_back({part.arg, part.idx, -part.power});
    inv.normalize();
    return term_mul(a, inv);
}

static RationalFunction rf_pow(const RationalFunction& rf, long e) {
    RationalFunction acc(Poly(1));
    RationalFunction base = e < 0 ? rf.reciprocal() : rf;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) acc = acc * base;
    return acc;
}

RationalFunction ratio(const HyperTerm& t, Var v) {
    RationalFunction r{Poly(1)};
    int s = (v == Var::n) ? t.sign_n() : t.sign_k();
    if (s % 2 != 0) r = r * RationalFunction(Rational(-1));
    for (const auto& [p, L] : t.geometric_parts()) {
        long step = L.coefficient(v);
        if (step != 0) r = r * RationalFunction(rpow(Rational(p), step));
    }
    r = r * (t.prefactor().shifted(v, 1) / t.prefactor());
    for (const auto& part : t.poch_parts()) {
        long a = part.idx.coefficient(v);
        if (a == 0) continue;
        Poly base = part.idx.to_poly() + Poly(part.arg);
        Poly prod(1);
        if (a > 0) {
            // (x)_{L+a} / (x)_L = prod_{i=0}^{a-1} (x + L + i)
            for (long i = 0; i < a; ++i) prod *= base + Poly(Rational(i));
            r = r * rf_pow(RationalFunction(prod), part.power);
        } else {
            // (x)_{L+a} / (x)_L = 1 / prod_{i=1}^{-a} (x + L - i)
            for (long i = 1; i <= -a; ++i) prod *= base - Poly(Rational(i));
            r = r * rf_pow(RationalFunction(prod), -static_cast<long>(part.power));
        }
    }
    return r;
}

std::string HyperTerm::str() const {
    std::vector<std::string> num, den;
    if (sign_n_ != 0 || sign_k_ != 0)
        num.push_back("(-1)^(" + LinearIndex{sign_n_, sign_k_, 0}.str() + ")");
    for (const auto& [p, L] : geom_) num.push_back(p.get_str() + "^(" + L.str() + ")");
    if (pre_.num() != Poly(1)) num.push_back("(" + pre_.num().str() + ")");
    if (pre_.den() != Poly(1)) den.push_back("(" + pre_.den().str() + ")");
    for (const auto& part : poch_) {
        std::string s = "poch(" + to_string(part.arg) + "," + part.idx.str() + ")";
        int e = part.power < 0 ? -part.power : part.power;
        if (e != 1) s += "^" + std::to_string(e);
        (part.power > 0 ? num : den).push_back(s);
    }
    std::string out;
    if (num.empty() || constant_ != 1) out = to_string(constant_);
    for (const auto& s : num) {
        if (!out.empty()) out += "*";
        out += s;
    }
    for (const auto& s : den) out += "/" + s;
    return out;
}

}  // namespace wz
