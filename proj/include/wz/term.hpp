#pragma once

#include "wz/poly.hpp"

#include <compare>
#include <map>
#include <vector>

namespace wz {

// Integer-linear form a*n + b*k + c used as Pochhammer index and exponent.
struct LinearIndex {
    long a = 0;   // coefficient of n
    long b = 0;   // coefficient of k
    long c = 0;

    auto operator<=>(const LinearIndex&) const = default;

    bool is_zero() const { return a == 0 && b == 0 && c == 0; }
    bool is_constant() const { return a == 0 && b == 0; }
    long eval(long n, long k) const { return a * n + b * k + c; }
    long coefficient(Var v) const { return v == Var::n ? a : b; }

    LinearIndex operator+(const LinearIndex& o) const { return {a + o.a, b + o.b, c + o.c}; }
    LinearIndex operator-() const { return {-a, -b, -c}; }
    LinearIndex scaled(long e) const { return {a * e, b * e, c * e}; }
    LinearIndex shifted(Var v, long j) const {
        return v == Var::n ? LinearIndex{a, b, c + a * j} : LinearIndex{a, b, c + b * j};
    }
    LinearIndex subst_k(long value) const { return {a, 0, c + b * value}; }

    Poly to_poly() const;
    std::string str() const;
};

// Exact value extended with a pole marker.
struct ExtendedValue {
    bool is_pole = false;
    Rational value;   // meaningful only when !is_pole

    static ExtendedValue finite(const Rational& v) { return {false, v}; }
    static ExtendedValue pole() { return {true, Rational(0)}; }
    bool operator==(const ExtendedValue& o) const {
        return is_pole == o.is_pole && (is_pole || value == o.value);
    }
};

// Rising factorial (x)_m for any integer m; negative m goes through
// (x)_{-m} = 1/(x-m)_m and yields a pole when that product vanishes.
ExtendedValue pochhammer(const Rational& x, long m);

struct PochPart {
    Rational    arg;
    LinearIndex idx;
    int         power = 1;
};

// Product-form hypergeometric term in (n, k):
//
//   constant * (-1)^(sn*n + sk*k) * prod p^(L_p) * prefactor(n,k)
//            * prod poch(arg, idx)^power
//
// kept in a canonical form: constant nonzero; sn, sk in {0,1}; geometric
// bases are primes with nonzero linear exponents; the prefactor is a reduced
// rational function whose numerator has integer coprime coefficients and
// positive leading coefficient (the scalar lives in `constant`); Pochhammer
// parts are merged by (arg, idx), constant-index parts folded into the
// constant, and the list is sorted. Two equal terms compare equal.
class HyperTerm {
public:
    HyperTerm() : constant_(1), pre_(Poly(1)) {}

    static HyperTerm from_constant(const Rational& c);
    static HyperTerm from_prefactor(const RationalFunction& rf);
    static HyperTerm sign_power(const LinearIndex& L);                     // (-1)^L
    static HyperTerm geometric(const Rational& base, const LinearIndex& L); // base^L, base != 0
    static HyperTerm poch(const Rational& arg, const LinearIndex& idx, int power = 1);

    const Rational& constant_factor() const { return constant_; }
    int sign_n() const { return sign_n_; }
    int sign_k() const { return sign_k_; }
    const std::map<Integer, LinearIndex>& geometric_parts() const { return geom_; }
    const RationalFunction& prefactor() const { return pre_; }
    const std::vector<PochPart>& poch_parts() const { return poch_; }

    bool operator==(const HyperTerm& o) const;
    bool operator!=(const HyperTerm& o) const { return !(*this == o); }

    bool depends_on(Var v) const;

    ExtendedValue eval(long n, long k) const;
    HyperTerm subst_k(long value) const;

    std::string str() const;

    friend HyperTerm term_mul(const HyperTerm& a, const HyperTerm& b);
    friend HyperTerm term_div(const HyperTerm& a, const HyperTerm& b);

private:
    Rational constant_;
    int      sign_n_ = 0, sign_k_ = 0;
    std::map<Integer, LinearIndex> geom_;
    RationalFunction pre_;
    std::vector<PochPart> poch_;

    void normalize();
};

HyperTerm term_mul(const HyperTerm& a, const HyperTerm& b);
HyperTerm term_div(const HyperTerm& a, const HyperTerm& b);

// t(.. v+1 ..) / t(.. v ..) as a reduced rational function of (n, k).
RationalFunction ratio(const HyperTerm& t, Var v);

}  // namespace wz
