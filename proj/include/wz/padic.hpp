#pragma once

#include "wz/exact.hpp"

#include <map>
#include <vector>

namespace wz {

struct InfeasiblePrecision : Error {
    using Error::Error;
};

// Morita's p-adic gamma function at fixed precision p^exponent:
//   Gamma_p(0) = 1,  Gamma_p(r) = (-1)^r * prod(0 < j < r, p does not divide j) j.
// A rational argument is first replaced by its canonical residue
// representative in [0, p^exponent); continuity of Gamma_p makes the value
// mod p^exponent independent of that choice. Requested points are served
// from one ascending product sweep shared through a cache.
class GammaPEvaluator {
public:
    GammaPEvaluator(const Integer& p, int exponent);

    const Integer& prime() const { return p_; }
    int exponent() const { return exponent_; }
    const Integer& modulus() const { return modulus_; }

    PadicResidue operator()(const Rational& x);
    PadicResidue at_integer(const Integer& rep);
    void prefetch(const std::vector<Rational>& xs);

private:
    Integer p_;
    int     exponent_;
    Integer modulus_;
    std::map<Integer, Integer> cache_;

    Integer rep_of(const Rational& x) const;
    void sweep(std::vector<Integer> reps);
};

// The reflection exponent: residue of x modulo p taken in [1, p].
Integer a0(const Rational& x, const Integer& p);

// First two coefficients of the expansion
//   Gamma_p(x + b p^r) / Gamma_p(x) = 1 + g1 b p^r + g2_half b^2 p^{2r} + O(p^{3r})
// for odd p, extracted from evaluations at b = 1, 2 carried at precision
// p^{3r}.
struct LogDerivatives {
    PadicResidue g1;        // mod p^{2r}
    PadicResidue g2_half;   // mod p^r
};

LogDerivatives gk_extract(const Rational& x, const Integer& p, int r);

}  // namespace wz
