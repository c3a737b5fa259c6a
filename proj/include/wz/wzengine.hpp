#pragma once

#include "wz/summation.hpp"

namespace wz {

struct CertificationFailed : Error {
    using Error::Error;
};
struct ZeroCoefficientInRange : Error {
    using Error::Error;
};

// For r(k) = c * prod_j (m_j k + b_j) splitting into linear factors,
//   phi(r)(k) = c^k * prod_j m_j^k (b_j/m_j)_k,
// the hypergeometric solution of t(k+1)/t(k) = r(k) with t(0) = 1.
HyperTerm phi(const Poly& r);

struct PhiTransform {
    HyperTerm q;
    Poly      p0, p1;
};

// q(k) = (-1)^k phi(p1)(k) / phi(p0)(k): q(0) = 1 and
// q(k+1)/q(k) = -p1(k)/p0(k). Requires k-only coefficients splitting into
// linear factors, none vanishing at a nonnegative integer.
PhiTransform build_q(const Poly& p0, const Poly& p1);

// Divides away the k-only factor (1/a)_k^(m-1), which lowers the order of
// the telescoped operator for summands built from m-th powers of (1/a)_n.
HyperTerm degree_collapse(const HyperTerm& F, long a, int m);

// Pair (Fbar, Gbar) with
//   Fbar(n, k+1) - Fbar(n, k) = Gbar(n+1, k) - Gbar(n, k),
//   Fbar(n, 0) = F(n, 0),
// together with the transform pieces that produced it.
struct WZPair {
    HyperTerm          F;        // input, bivariate, F(n,0) the summand of interest
    HyperTerm          Fbar;
    HyperTerm          Gbar;
    HyperTerm          q;
    HyperTerm          device;   // Fbar = device * (F at k = 0)
    DifferenceOperator op;       // order-1 operator found on the collapsed input
    RationalFunction   S;        // Gbar = S * Fbar
};

// Runs the full derivation: optional degree collapse, creative telescoping
// (the operator must come out at order exactly 1 with a nonzero certificate),
// q-transform, and assembly of the pair. collapse_a = 0 skips the collapse.
WZPair build_pair(const HyperTerm& F, long collapse_a = 0, int collapse_m = 0,
                  int max_order = 6);

struct PairReport {
    bool identity_ok    = false;   // exact rational-function identity
    bool grid_ok        = false;   // pointwise on the integer grid
    bool base_ok        = false;   // Fbar(n,0) = F(n,0), symbolically
    bool boundary_ok    = false;   // Gbar(0,k) = 0 on the grid
    int  points_checked = 0;
    int  points_skipped = 0;

    bool ok() const {
        return identity_ok && grid_ok && base_ok && boundary_ok && points_checked > 0;
    }
};

PairReport certify_pair(const WZPair& pair, int grid = 13);

struct DeviceReport {
    bool               base_ok   = false;   // w(n,0) = 1
    bool               pass      = false;   // base_ok and telescoped order <= 1
    bool               splitting = false;   // operator coefficients split linearly
    int                order     = -1;
    DifferenceOperator op;
};

// Tests whether w acts as a telescoping device for F: w(n,0) = 1 and
// creative telescoping applied to w*F needs only an order <= 1 operator.
DeviceReport is_wz_device(const HyperTerm& w, const HyperTerm& F, int max_order = 6);

}  // namespace wz
