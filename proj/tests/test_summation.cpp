#include "doctest.h"

#include "wz/summation.hpp"

using namespace wz;

namespace {
const Poly N = Poly::variable(Var::n);
const Poly K = Poly::variable(Var::k);
const LinearIndex idx_n{1, 0, 0};
const LinearIndex idx_npk{1, 1, 0};
const LinearIndex idx_nmk{1, -1, 0};

Rational half() { return make_rational(1, 2); }

HyperTerm i2_summand() {
    HyperTerm t = HyperTerm::from_prefactor(RationalFunction(Poly(1), N + Poly(1)));
    t = term_mul(t, HyperTerm::poch(half(), idx_n, 2));
    return term_div(t, HyperTerm::poch(Rational(1), idx_n, 2));
}

HyperTerm h2_lift() {
    // (1/2)_n^2 (1/2)_{n+k} / ((1)_n^2 (1)_{n-k})
    HyperTerm t = HyperTerm::poch(half(), idx_n, 2);
    t = term_mul(t, HyperTerm::poch(half(), idx_npk));
    t = term_div(t, HyperTerm::poch(Rational(1), idx_n, 2));
    return term_div(t, HyperTerm::poch(Rational(1), idx_nmk));
}

bool telescopes(const HyperTerm& F, const GosperCertificate& cert, long lo, long hi) {
    for (long n = lo; n < hi; ++n) {
        ExtendedValue t = F.eval(n, 0);
        ExtendedValue g0 = cert.G.eval(n, 0);
        ExtendedValue g1 = cert.G.eval(n + 1, 0);
        if (t.is_pole || g0.is_pole || g1.is_pole) return false;
        if (g1.value - g0.value != t.value) return false;
    }
    return true;
}
}  // namespace

TEST_CASE("antidifference of 1/(n(n+1))") {
    HyperTerm t = HyperTerm::from_prefactor(RationalFunction(Poly(1), N * N + N));
    auto cert = gosper(t);
    REQUIRE(cert.has_value());
    CHECK(cert->R == RationalFunction(-N - Poly(1)));
    CHECK(cert->G == HyperTerm::from_prefactor(RationalFunction(Poly(-1), N)));
    CHECK(telescopes(t, *cert, 1, 9));
}

TEST_CASE("antidifference of the central summand with harmonic weight") {
    HyperTerm t = i2_summand();
    auto cert = gosper(t);
    REQUIRE(cert.has_value());
    CHECK(cert->R == RationalFunction(N.scaled(4) * (N + Poly(1))));

    HyperTerm expected = HyperTerm::from_prefactor(RationalFunction(N.scaled(4)));
    expected = term_mul(expected, HyperTerm::poch(half(), idx_n, 2));
    expected = term_div(expected, HyperTerm::poch(Rational(1), idx_n, 2));
    CHECK(cert->G == expected);
    CHECK(cert->G.eval(3, 0) == ExtendedValue::finite(make_rational(75, 64)));
    CHECK(telescopes(t, *cert, 0, 11));
}

TEST_CASE("gosper rejects a summand with no hypergeometric antidifference") {
    HyperTerm t = term_div(HyperTerm::poch(half(), idx_n, 3),
                           HyperTerm::poch(Rational(1), idx_n, 3));
    CHECK(!gosper(t).has_value());
}

TEST_CASE("gosper on a geometric term") {
    HyperTerm t = HyperTerm::geometric(Rational(2), idx_n);
    auto cert = gosper(t);
    REQUIRE(cert.has_value());
    CHECK(cert->R == RationalFunction(1));
    CHECK(cert->G == t);
}

TEST_CASE("telescoped operator for the quadratic-summand lift") {
    HyperTerm F = h2_lift();
    TelescopingResult res = creative_telescoping(F);
    CHECK(res.op.order() == 1);

    Poly p0 = (K.scaled(4) + Poly(1)) * (K.scaled(2) + Poly(1)).pow(2);
    Poly p1 = (K.scaled(4) + Poly(3)).scaled(4);
    CHECK(res.op.coeffs == content_normalize({p0, p1}));
    CHECK(res.R == RationalFunction(N * N * (N - K).scaled(8)));
    REQUIRE(res.G.has_value());

    VerificationReport rep = verify_ct(F, res);
    CHECK(rep.identity_ok);
    CHECK(rep.grid_ok);
    CHECK(rep.points_checked > 0);
    CHECK(rep.ok());
}

TEST_CASE("collapsed inputs give order one with constant or linear coefficients") {
    // (4n+1) * (-1)^(n+k) * (1/2)_n^2 (1/2)_{n+k} / ((1)_n^2 (1)_{n-k} (1/2)_k^2)
    HyperTerm b2 = HyperTerm::from_prefactor(RationalFunction(N.scaled(4) + Poly(1)));
    b2 = term_mul(b2, HyperTerm::sign_power({1, 1, 0}));
    b2 = term_mul(b2, HyperTerm::poch(half(), idx_n, 2));
    b2 = term_mul(b2, HyperTerm::poch(half(), idx_npk));
    b2 = term_div(b2, HyperTerm::poch(Rational(1), idx_n, 2));
    b2 = term_div(b2, HyperTerm::poch(Rational(1), idx_nmk));
    b2 = term_div(b2, HyperTerm::poch(half(), {0, 1, 0}, 2));
    TelescopingResult rb = creative_telescoping(b2);
    CHECK(rb.op.coeffs == std::vector<Poly>{Poly(1), Poly(-1)});

    // (4n+1) * (1/2)_n^3 (1/2)_{n+k} / ((1)_n^3 (1)_{n-k} (1/2)_k^3)
    HyperTerm c2 = HyperTerm::from_prefactor(RationalFunction(N.scaled(4) + Poly(1)));
    c2 = term_mul(c2, HyperTerm::poch(half(), idx_n, 3));
    c2 = term_mul(c2, HyperTerm::poch(half(), idx_npk));
    c2 = term_div(c2, HyperTerm::poch(Rational(1), idx_n, 3));
    c2 = term_div(c2, HyperTerm::poch(Rational(1), idx_nmk));
    c2 = term_div(c2, HyperTerm::poch(half(), {0, 1, 0}, 3));
    TelescopingResult rc = creative_telescoping(c2);
    CHECK(rc.op.coeffs == std::vector<Poly>{Poly(1), K + Poly(1)});
}

TEST_CASE("order cap raises") {
    CHECK_THROWS_AS(creative_telescoping(h2_lift(), 0), OrderExceeded);
}

TEST_CASE("k-free input yields an annihilating operator with no certificate") {
    HyperTerm t = term_div(HyperTerm::poch(half(), idx_n, 3),
                           HyperTerm::poch(Rational(1), idx_n, 3));
    TelescopingResult res = creative_telescoping(t);
    CHECK(res.op.order() == 1);
    CHECK(res.R.is_zero());
    CHECK(!res.G.has_value());
    VerificationReport rep = verify_ct(t, res);
    CHECK(rep.ok());
}

TEST_CASE("operator printing") {
    DifferenceOperator op{{(K.scaled(2) + Poly(1)), Poly(4)}};
    CHECK(op.str() == "(4)*K + (2*k + 1)");
    DifferenceOperator single{{Poly(3)}};
    CHECK(single.str() == "(3)");
    CHECK(single.order() == 0);
}
