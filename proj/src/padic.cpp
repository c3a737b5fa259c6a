#include "wz/padic.hpp"

#include <algorithm>

namespace wz {

namespace {
constexpr long kSweepCap = 250000000;   // longest tolerable product sweep
}

GammaPEvaluator::GammaPEvaluator(const Integer& p, int exponent)
    : p_(p), exponent_(exponent) {
    if (p_ < 2) throw Error("GammaPEvaluator: p must be at least 2");
    if (exponent_ < 1) throw Error("GammaPEvaluator: exponent must be positive");
    modulus_ = ipow(p_, static_cast<unsigned long>(exponent_));
}

Integer GammaPEvaluator::rep_of(const Rational& x) const {
    return residue_mod(x, p_, exponent_).value;
}

PadicResidue GammaPEvaluator::operator()(const Rational& x) {
    return at_integer(rep_of(x));
}

PadicResidue GammaPEvaluator::at_integer(const Integer& rep) {
    if (rep < 0 || rep >= modulus_) throw Error("GammaPEvaluator: representative out of range");
    auto it = cache_.find(rep);
    if (it == cache_.end()) {
        sweep({rep});
        it = cache_.find(rep);
    }
    return PadicResidue(p_, exponent_, it->second);
}

void GammaPEvaluator::prefetch(const std::vector<Rational>& xs) {
    std::vector<Integer> reps;
    for (const Rational& x : xs) reps.push_back(rep_of(x));
    sweep(std::move(reps));
}

void GammaPEvaluator::sweep(std::vector<Integer> reps) {
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    reps.erase(std::remove_if(reps.begin(), reps.end(),
                              [&](const Integer& r) { return cache_.count(r) > 0; }),
               reps.end());
    if (reps.empty()) return;
    if (reps.front() < 0 || reps.back() >= modulus_)
        throw Error("GammaPEvaluator: representative out of range");
    if (reps.back() > kSweepCap)
        throw InfeasiblePrecision("GammaPEvaluator: sweep of length " + reps.back().get_str() +
                                  " exceeds the supported bound");

    size_t idx = 0;
    if (reps[idx] == 0) {
        cache_[Integer(0)] = 1;
        ++idx;
    }
    if (idx == reps.size()) return;

    if (modulus_.fits_slong_p() && modulus_ < Integer(1) << 31) {
        // Every intermediate product fits in 64 bits.
        uint64_t M  = modulus_.get_ui();
        uint64_t pp = p_.get_ui();
        uint64_t acc = 1;
        uint64_t j   = 1;
        for (; idx < reps.size(); ++idx) {
            uint64_t r = reps[idx].get_ui();
            for (; j < r; ++j)
                if (j % pp != 0) acc = acc * j % M;
            cache_[reps[idx]] = (r % 2 == 0) ? Integer(acc) : Integer(M - acc);
        }
    } else {
        Integer acc(1);
        unsigned long j = 1;
        unsigned long pl = p_.fits_ulong_p() ? p_.get_ui() : 0;
        for (; idx < reps.size(); ++idx) {
            unsigned long r = reps[idx].get_ui();
            for (; j < r; ++j) {
                bool divisible = pl ? (j % pl == 0) : mpz_divisible_ui_p(p_.get_mpz_t(), j);
                if (!divisible) {
                    acc *= j;
                    acc %= modulus_;
                }
            }
            cache_[reps[idx]] = (r % 2 == 0) ? acc : Integer(modulus_ - acc);
        }
    }
}

Integer a0(const Rational& x, const Integer& p) {
    Integer r = residue_mod(x, p, 1).value;
    return r == 0 ? p : r;
}

LogDerivatives gk_extract(const Rational& x, const Integer& p, int r) {
    if (p < 3) throw Error("gk_extract: odd prime required");
    if (r < 1) throw Error("gk_extract: positive r required");

    Integer pr  = ipow(p, static_cast<unsigned long>(r));
    Integer p2r = pr * pr;
    Integer M3  = p2r * pr;

    GammaPEvaluator G(p, 3 * r);
    Rational x1 = x + Rational(pr);
    Rational x2 = x + Rational(2 * pr);
    G.prefetch({x, x1, x2});

    PadicResidue inv_gx = G(x).inverse();
    PadicResidue A1     = G(x1) * inv_gx;
    PadicResidue A2     = G(x2) * inv_gx;

    Integer a1 = A1.value - 1;
    Integer a2 = A2.value - 1;
    Integer diff = (2 * a1 - a2) % M3;
    if (diff < 0) diff += M3;
    if (diff % p2r != 0 || a1 % pr != 0)
        throw Error("gk_extract: ratio lacks the expected expansion");

    Integer neg = (M3 - diff) % M3;
    Integer g2  = (neg / p2r) % pr;
    PadicResidue g2_half(p, r, g2 * inv_mod(Integer(2), pr));

    Integer u = (a1 / pr - g2_half.value * pr) % p2r;
    if (u < 0) u += p2r;
    return {PadicResidue(p, 2 * r, u), g2_half};
}

}  // namespace wz
