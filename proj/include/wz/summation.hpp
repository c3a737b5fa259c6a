#pragma once

#include "wz/term.hpp"

#include <optional>

namespace wz {

// Antidifference certificate: with G = R * input,
//   G(n+1, k) - G(n, k) = input(n, k).
struct GosperCertificate {
    HyperTerm        input;
    RationalFunction R;
    HyperTerm        G;
};

// Decides whether t has a hypergeometric antidifference in n and returns the
// certificate when it does.
std::optional<GosperCertificate> gosper(const HyperTerm& t);

// Linear difference operator sum_j coeffs[j](k) * K^j, where K shifts k by 1.
// Coefficients are polynomials in k alone, jointly content-normalized.
struct DifferenceOperator {
    std::vector<Poly> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    std::string str() const;
};

struct OrderExceeded : Error {
    using Error::Error;
};

// Certified solution of
//   sum_j p_j(k) F(n, k+j) = G(n+1, k) - G(n, k),     G = R * F.
// R = 0 means the operator annihilates F with no telescoping part.
struct TelescopingResult {
    HyperTerm                input;
    DifferenceOperator       op;
    RationalFunction         R;
    std::optional<HyperTerm> G;   // R * input when R is nonzero
};

// Finds the lowest-order operator in k whose image telescopes in n, trying
// orders 0..max_order. Throws OrderExceeded past the cap.
TelescopingResult creative_telescoping(const HyperTerm& F, int max_order = 6);

struct VerificationReport {
    bool identity_ok    = false;
    bool grid_ok        = false;
    int  points_checked = 0;
    int  points_skipped = 0;

    bool ok() const { return identity_ok && grid_ok && points_checked > 0; }
};

// Rechecks a telescoping certificate: once symbolically (exact rational
// function identity) and once on the integer grid [0,grid)^2, skipping and
// counting points where either side hits a pole.
VerificationReport verify_ct(const HyperTerm& F, const TelescopingResult& res, int grid = 12);

}  // namespace wz
