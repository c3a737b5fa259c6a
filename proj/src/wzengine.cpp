#include "wz/wzengine.hpp"

namespace wz {

HyperTerm phi(const Poly& r) {
    if (r.degree(Var::n) > 0) throw Error("phi: argument must not involve n");
    LinearFactorization f = split_linear_factors(r);
    LinearIndex k{0, 1, 0};
    HyperTerm t = HyperTerm::geometric(f.constant, k);
    for (const LinearFactor& lf : f.factors) {
        t = term_mul(t, HyperTerm::geometric(Rational(lf.m), {0, lf.multiplicity, 0}));
        t = term_mul(t, HyperTerm::poch(make_rational(lf.b, lf.m), k, lf.multiplicity));
    }
    return t;
}

PhiTransform build_q(const Poly& p0, const Poly& p1) {
    for (const Poly* p : {&p0, &p1}) {
        if (p->is_zero()) throw Error("build_q: zero operator coefficient");
        if (p->degree(Var::n) > 0) throw Error("build_q: coefficient involves n");
        for (const LinearFactor& lf : split_linear_factors(*p).factors)
            if (lf.b <= 0 && (-lf.b) % lf.m == 0)
                throw ZeroCoefficientInRange("build_q: coefficient vanishes at k = " +
                                             std::to_string((-lf.b) / lf.m));
    }
    PhiTransform t;
    t.p0 = p0;
    t.p1 = p1;
    t.q  = term_div(term_mul(HyperTerm::sign_power({0, 1, 0}), phi(p1)), phi(p0));
    return t;
}

HyperTerm degree_collapse(const HyperTerm& F, long a, int m) {
    if (a < 1 || m < 2) throw Error("degree_collapse: need a >= 1 and m >= 2");
    return term_div(F, HyperTerm::poch(make_rational(1, a), {0, 1, 0}, m - 1));
}

WZPair build_pair(const HyperTerm& F, long collapse_a, int collapse_m, int max_order) {
    HyperTerm Fc = (collapse_a > 0) ? degree_collapse(F, collapse_a, collapse_m) : F;

    TelescopingResult ct = creative_telescoping(Fc, max_order);
    if (ct.op.order() != 1)
        throw CertificationFailed("build_pair: telescoped operator has order " +
                                  std::to_string(ct.op.order()) + ", expected 1");
    if (ct.R.is_zero())
        throw CertificationFailed("build_pair: operator annihilates the term, no certificate");

    PhiTransform qt = build_q(ct.op.coeffs[0], ct.op.coeffs[1]);

    WZPair pair;
    pair.F    = F;
    pair.q    = qt.q;
    pair.op   = ct.op;
    pair.Fbar = term_mul(qt.q, Fc);
    pair.S    = (RationalFunction(Rational(-1)) * ct.R) / RationalFunction(ct.op.coeffs[0]);
    pair.Gbar = term_mul(pair.Fbar, HyperTerm::from_prefactor(pair.S));
    pair.device = term_div(pair.Fbar, F.subst_k(0));

    PairReport rep = certify_pair(pair);
    if (!rep.ok())
        throw CertificationFailed("build_pair: certification failed (identity=" +
                                  std::to_string(rep.identity_ok) + ", grid=" +
                                  std::to_string(rep.grid_ok) + ", base=" +
                                  std::to_string(rep.base_ok) + ", boundary=" +
                                  std::to_string(rep.boundary_ok) + ")");
    return pair;
}

PairReport certify_pair(const WZPair& pair, int grid) {
    PairReport rep;

    RationalFunction one(Rational(1));
    RationalFunction lhs = ratio(pair.Fbar, Var::k) - one;
    RationalFunction rhs =
        pair.S.shifted(Var::n, 1) * ratio(pair.Fbar, Var::n) - pair.S;
    rep.identity_ok = (lhs == rhs);

    rep.base_ok = (pair.Fbar.subst_k(0) == pair.F.subst_k(0));

    rep.grid_ok = true;
    for (long n = 0; n < grid; ++n) {
        for (long k = 0; k < grid; ++k) {
            ExtendedValue f0 = pair.Fbar.eval(n, k), f1 = pair.Fbar.eval(n, k + 1);
            ExtendedValue g0 = pair.Gbar.eval(n, k), g1 = pair.Gbar.eval(n + 1, k);
            if (f0.is_pole || f1.is_pole || g0.is_pole || g1.is_pole) {
                ++rep.points_skipped;
                continue;
            }
            if (f1.value - f0.value != g1.value - g0.value) rep.grid_ok = false;
            ++rep.points_checked;
        }
    }

    rep.boundary_ok = true;
    for (long k = 0; k < grid; ++k) {
        ExtendedValue g = pair.Gbar.eval(0, k);
        if (g.is_pole) {
            ++rep.points_skipped;
            continue;
        }
        if (g.value != 0) rep.boundary_ok = false;
    }
    return rep;
}

DeviceReport is_wz_device(const HyperTerm& w, const HyperTerm& F, int max_order) {
    DeviceReport rep;
    rep.base_ok = (w.subst_k(0) == HyperTerm());
    try {
        TelescopingResult ct = creative_telescoping(term_mul(F, w), max_order);
        rep.order = ct.op.order();
        rep.op    = ct.op;
    } catch (const OrderExceeded&) {
        rep.order = -1;
    }
    rep.pass = rep.base_ok && rep.order >= 0 && rep.order <= 1;
    if (rep.order >= 0) {
        rep.splitting = true;
        for (const Poly& c : rep.op.coeffs) {
            if (c.is_zero()) continue;
            try {
                split_linear_factors(c);
            } catch (const NotSplitOverRationals&) {
                rep.splitting = false;
            }
        }
    }
    return rep;
}

}  // namespace wz
