#pragma once

#include "wz/exact.hpp"
#include "wz/padic.hpp"
#include "wz/term.hpp"
#include "wz/wzengine.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wz {

struct PoleInSum : Error {
    using Error::Error;
};

// Valuation reported when a difference is exactly zero.
inline constexpr long kExactValuation = 1000000;

// Right hand side of a congruence: a small expression tree over rational
// constants, the prime itself, and Gamma_p evaluations. The tree is fixed
// per congruence; eval() instantiates it at the evaluator's prime and
// precision.
class RhsExpr {
public:
    RhsExpr();

    static RhsExpr constant(const Rational& c);
    static RhsExpr prime();
    static RhsExpr gamma(const Rational& arg);
    static RhsExpr pow(const RhsExpr& base, long e);
    // Selects the first branch when p = 1 mod 4, the second when p = 3 mod 4.
    static RhsExpr branch_mod4(const RhsExpr& one, const RhsExpr& three);

    RhsExpr operator-() const;
    friend RhsExpr operator*(const RhsExpr& a, const RhsExpr& b);
    friend RhsExpr operator/(const RhsExpr& a, const RhsExpr& b);

    PadicResidue eval(GammaPEvaluator& gp) const;
    std::string str() const;

private:
    struct Node;
    std::shared_ptr<const Node> node_;
    explicit RhsExpr(std::shared_ptr<const Node> node);
};

// Congruence classes of qualifying primes: p = residue (mod modulus) and
// p >= min_p. modulus = 1 keeps every prime above the floor.
struct PrimeCondition {
    long modulus = 1;
    long residue = 0;
    long min_p = 3;

    bool holds(long p) const {
        return p >= min_p && (modulus <= 1 || p % modulus == residue);
    }
    std::string str() const;
};

// One supercongruence: the summand of a truncated hypergeometric sum, the
// asserted residue of that sum, and the telescoping data used to certify it.
struct SupercongruenceSpec {
    std::string id;
    PrimeCondition primes;
    int d = 1;                      // sum runs over 0 <= n <= (p-1)/d
    HyperTerm summand;              // univariate in n
    int exponent = 0;               // congruence holds mod p^exponent
    RhsExpr rhs;

    struct Extension {
        PrimeCondition primes;
        int exponent = 0;
        RhsExpr rhs;
    };
    std::vector<Extension> extensions;   // sharper statements for subfamilies

    // Telescoping pipeline; disengaged when no device applies (I.2).
    std::optional<HyperTerm> lift;       // bivariate F(n,k) with F(n,0) = summand
    std::optional<HyperTerm> device;     // expected Fbar / F(n,0)
    long collapse_a = 0;                 // degree collapse parameters, 0 = none
    int collapse_m = 0;
    int chain_exponent = 0;              // required valuation of the tail values
    std::optional<std::pair<PrimeCondition, int>> chain_alternative;

    bool has_pipeline() const { return lift.has_value(); }
    int strongest_exponent(long p) const;
    int chain_exponent_for(long p) const;
};

const std::vector<SupercongruenceSpec>& catalog();
const SupercongruenceSpec& catalog_row(const std::string& id);

bool qualifies(const SupercongruenceSpec& row, long p);
std::vector<long> primes_in(long lo, long hi);
std::vector<long> qualifying_primes(const SupercongruenceSpec& row, long lo, long hi);

// The truncated sum itself, as an exact rational.
Rational lhs_sum(const SupercongruenceSpec& row, long p);

// The asserted residue at working precision p^N. When an extension's prime
// condition holds and its exponent fits below N, its expression is used;
// otherwise the base expression.
PadicResidue rhs_value(const SupercongruenceSpec& row, long p, int N);

struct CongruenceReport {
    std::string id;
    long p = 0;
    int exponent = 0;               // strongest exponent asserted for this prime
    Rational lhs;
    PadicResidue rhs;
    long difference_valuation = 0;  // kExactValuation when the difference is 0
    bool pass = false;
    std::vector<std::string> notes;
};

// Compares the exact sum against the asserted residue at the strongest
// exponent applicable to p.
CongruenceReport check(const SupercongruenceSpec& row, long p);

// The derived pair for a pipeline row, built once per row and cached: the
// telescoping derivation does not depend on the prime.
const WZPair& pipeline(const SupercongruenceSpec& row);

struct ChainReport {
    std::string id;
    long p = 0;
    long upper = 0;                   // s = (p-1)/d
    int required_valuation = 0;
    std::vector<long> tail_valuations;  // val_p(Gbar(s+1, k)) for 0 <= k < s
    bool tail_ok = false;
    bool shift_identity_ok = false;   // column sum steps equal the tail values
    bool boundary_ok = false;         // Gbar(0, k) = 0 for 0 <= k <= s
    bool diagonal_ok = false;         // column s collapses to the single term Fbar(s,s)
    PadicResidue corner;              // Fbar(s,s) at the strongest exponent
    bool corner_ok = false;
    bool pass = false;
    std::vector<std::string> notes;
};

// Replays the telescoping argument at a concrete prime: summing the pair
// identity over 0 <= n <= s shows that each column sum of Fbar moves by
// Gbar(s+1, k) as k steps, every such step is divisible by p^required, the
// last column collapses to Fbar(s,s) by self nulling, and that corner value
// carries the asserted residue.
ChainReport chain_check(const SupercongruenceSpec& row, long p);

// Closed form of the I.2 partial sum: with m = (p+1)/2,
//   sum_{n=0}^{(p-1)/2} (1/2)_n^2 / ((1)_n^2 (n+1)) = 4 m (1/2)_m^2 / (1)_m^2.
Rational i2_partial_sum_closed_form(long p);

}  // namespace wz
