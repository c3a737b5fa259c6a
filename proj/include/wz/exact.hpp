#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace wz {

using Integer  = mpz_class;
using Rational = mpq_class;

// Base class for every exception thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested residue of a rational whose denominator is divisible by p.
struct NotPadicInteger : Error {
    using Error::Error;
};

Rational make_rational(long num, long den);

Integer  ipow(const Integer& base, unsigned long exp);
Rational rpow(const Rational& base, long exp);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);   // "num/den", or "num" when den = 1

// Exponent of p in the factorization of x. Requires x != 0 and p >= 2.
long padic_val(const Rational& x, const Integer& p);

// Inverse of a modulo m. Requires gcd(a, m) = 1.
Integer inv_mod(const Integer& a, const Integer& m);

// Residue class modulo p^exponent with a canonical representative.
struct PadicResidue {
    Integer p;
    int     exponent = 1;
    Integer modulus;    // p^exponent
    Integer value;      // in [0, modulus)

    PadicResidue() : p(0), modulus(1), value(0) {}
    PadicResidue(Integer p_, int exponent_, const Integer& value_);

    PadicResidue operator+(const PadicResidue& o) const;
    PadicResidue operator-(const PadicResidue& o) const;
    PadicResidue operator*(const PadicResidue& o) const;
    PadicResidue operator-() const;

    // Requires the value to be a unit modulo p.
    PadicResidue inverse() const;
    PadicResidue pow(long e) const;

    bool operator==(const PadicResidue& o) const;
    bool operator!=(const PadicResidue& o) const { return !(*this == o); }

    bool is_unit() const;
    std::string str() const;
};

// x viewed in Z/p^exponent. Requires p >= 2, exponent >= 1 and
// padic_val(x, p) >= 0; throws NotPadicInteger otherwise.
PadicResidue residue_mod(const Rational& x, const Integer& p, int exponent);

}  // namespace wz
