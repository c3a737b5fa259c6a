#include "wz/exact.hpp"

namespace wz {

Rational make_rational(long num, long den) {
    if (den == 0) throw Error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer ipow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational rpow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0 && exp < 0) throw Error("rpow: zero base with negative exponent");
    unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    Rational r(ipow(base.get_num(), e), ipow(base.get_den(), e));
    r.canonicalize();
    if (exp < 0) r = 1 / r;
    return r;
}

std::string to_string(const Integer& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

long padic_val(const Rational& x, const Integer& p) {
    if (x == 0) throw Error("padic_val: zero argument");
    if (p < 2) throw Error("padic_val: p must be >= 2");
    auto count = [&p](Integer v) {
        long c = 0;
        Integer q, r;
        while (v != 0) {
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
            if (r != 0) break;
            ++c;
            v = q;
        }
        return c;
    };
    return count(x.get_num()) - count(x.get_den());
}

Integer inv_mod(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error("inv_mod: argument is not invertible");
    return r;
}

PadicResidue::PadicResidue(Integer p_, int exponent_, const Integer& value_)
    : p(std::move(p_)), exponent(exponent_) {
    if (p < 2) throw Error("PadicResidue: p must be >= 2");
    if (exponent < 1) throw Error("PadicResidue: exponent must be >= 1");
    modulus = ipow(p, static_cast<unsigned long>(exponent));
    mpz_mod(value.get_mpz_t(), value_.get_mpz_t(), modulus.get_mpz_t());
}

static void require_compatible(const PadicResidue& a, const PadicResidue& b) {
    if (a.p != b.p || a.exponent != b.exponent)
        throw Error("PadicResidue: mismatched moduli");
}

PadicResidue PadicResidue::operator+(const PadicResidue& o) const {
    require_compatible(*this, o);
    return PadicResidue(p, exponent, value + o.value);
}

PadicResidue PadicResidue::operator-(const PadicResidue& o) const {
    require_compatible(*this, o);
    return PadicResidue(p, exponent, value - o.value);
}

PadicResidue PadicResidue::operator*(const PadicResidue& o) const {
    require_compatible(*this, o);
    return PadicResidue(p, exponent, value * o.value);
}

PadicResidue PadicResidue::operator-() const {
    return PadicResidue(p, exponent, -value);
}

bool PadicResidue::is_unit() const {
    return mpz_divisible_p(value.get_mpz_t(), p.get_mpz_t()) == 0;
}

PadicResidue PadicResidue::inverse() const {
    if (!is_unit()) throw Error("PadicResidue::inverse: not a unit");
    return PadicResidue(p, exponent, inv_mod(value, modulus));
}

PadicResidue PadicResidue::pow(long e) const {
    PadicResidue base = e < 0 ? inverse() : *this;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Integer r;
    mpz_powm_ui(r.get_mpz_t(), base.value.get_mpz_t(), n, modulus.get_mpz_t());
    return PadicResidue(p, exponent, r);
}

bool PadicResidue::operator==(const PadicResidue& o) const {
    return p == o.p && exponent == o.exponent && value == o.value;
}

std::string PadicResidue::str() const {
    return value.get_str() + " mod " + p.get_str() + "^" + std::to_string(exponent);
}

PadicResidue residue_mod(const Rational& x, const Integer& p, int exponent) {
    if (p < 2) throw Error("residue_mod: p must be >= 2");
    if (exponent < 1) throw Error("residue_mod: exponent must be >= 1");
    if (x != 0 && padic_val(x, p) < 0)
        throw NotPadicInteger("residue_mod: denominator divisible by " + p.get_str());
    Integer modulus = ipow(p, static_cast<unsigned long>(exponent));
    Integer den;
    mpz_mod(den.get_mpz_t(), x.get_den().get_mpz_t(), modulus.get_mpz_t());
    return PadicResidue(p, exponent, x.get_num() * inv_mod(den, modulus));
}

}  // namespace wz
