#pragma once

#include "wz/exact.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace wz {

enum class Var { n = 0, k = 1 };

// A polynomial over k whose roots are all rational was expected but an
// irreducible nonlinear factor remained.
struct NotSplitOverRationals : Error {
    using Error::Error;
};

// Division by the zero polynomial / zero rational function.
struct DivisorZeroPolynomial : Error {
    using Error::Error;
};

// Sparse polynomial in Q[n, k]. Exponent pairs are (deg n, deg k); the
// monomial order used for leading terms and printing is lex with n > k.
class Poly {
public:
    using Exponents = std::array<int, 2>;
    using TermMap   = std::map<Exponents, Rational>;

    Poly() = default;
    Poly(const Rational& c);
    Poly(long c);

    static Poly variable(Var v);
    static Poly monomial(int en, int ek, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;   // requires is_constant()

    // -1 for the zero polynomial.
    int degree(Var v) const;

    Rational coeff(int en, int ek) const;
    const TermMap& terms() const { return terms_; }

    // Leading term under lex(n > k).
    Exponents leading_exponents() const;   // requires nonzero
    Rational  leading_coeff() const;       // requires nonzero

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly scaled(const Rational& c) const;
    Poly pow(int e) const;   // e >= 0

    // Substitute v -> v + delta.
    Poly shifted(Var v, const Rational& delta) const;

    Rational eval(const Rational& n, const Rational& k) const;
    Poly eval_partial(Var v, const Rational& value) const;

    // Coefficients of powers of v; entries are polynomials in the other
    // variable. Index = power of v. Empty for the zero polynomial.
    std::vector<Poly> coefficients_in(Var v) const;
    static Poly from_coefficients(Var v, const std::vector<Poly>& cs);

    std::string str() const;

private:
    TermMap terms_;   // nonzero coefficients only
    void add_term(int en, int ek, const Rational& c);
    friend Poly poly_mul_impl(const Poly&, const Poly&);
};

// Substitute v -> v + j (integer shift), the common case.
Poly shift(const Poly& p, Var v, long j);

// GCD in Q[n, k], normalized to have integer coprime coefficients and a
// positive leading coefficient under lex(n > k). poly_gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// Exact quotient a / b; throws Error when the division is not exact and
// DivisorZeroPolynomial when b = 0.
Poly divide_exact(const Poly& a, const Poly& b);

// Positive rational c such that p / c has integer coprime coefficients;
// sign of the leading coefficient is preserved in the quotient. p != 0.
Rational rational_content(const Poly& p);

// Joint normalization of an operator's coefficient list: divides through by
// the common rational content and fixes the sign so the lowest-index nonzero
// polynomial has a positive leading coefficient. All-zero input unchanged.
std::vector<Poly> content_normalize(const std::vector<Poly>& coeffs);

// c * prod (m_j v + b_j) with integer primitive factors (m_j > 0).
struct LinearFactor {
    long m = 1;
    long b = 0;
    int  multiplicity = 1;
};
struct LinearFactorization {
    Rational constant;
    std::vector<LinearFactor> factors;   // sorted by (m, b)
};

// Factor a univariate polynomial into rational-rooted linear pieces; throws
// NotSplitOverRationals when an irreducible nonlinear factor remains.
// Works on the variable actually present (constants give an empty list).
LinearFactorization split_linear_factors(const Poly& a);

// Reduced fraction of two polynomials; canonical form has gcd(num, den) = 1
// and a denominator with integer coprime coefficients and positive leading
// coefficient under lex(n > k).
class RationalFunction {
public:
    RationalFunction() : num_(0), den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(const Poly& p) : num_(p), den_(1) {}
    RationalFunction(const Poly& num, const Poly& den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction reciprocal() const;
    RationalFunction shifted(Var v, long j) const;
    RationalFunction eval_partial(Var v, const Rational& value) const;

    // nullopt when the denominator vanishes at the point.
    std::optional<Rational> eval(const Rational& n, const Rational& k) const;

    std::string str() const;

private:
    Poly num_, den_;
};

}  // namespace wz
