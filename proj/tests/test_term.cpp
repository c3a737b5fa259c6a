#include "doctest.h"

#include "wz/term.hpp"

using namespace wz;

namespace {
const LinearIndex idx_n{1, 0, 0};
const LinearIndex idx_k{0, 1, 0};
const LinearIndex idx_nmk{1, -1, 0};
const LinearIndex idx_npk{1, 1, 0};

Rational half() { return make_rational(1, 2); }
}  // namespace

TEST_CASE("linear index basics") {
    LinearIndex L{2, -1, 1};
    CHECK(L.eval(3, 4) == 3);
    CHECK(L.str() == "2*n-k+1");
    CHECK((L + LinearIndex{0, 1, 0}) == LinearIndex{2, 0, 1});
    CHECK((-L) == LinearIndex{-2, 1, -1});
    CHECK(L.scaled(3) == LinearIndex{6, -3, 3});
    CHECK(L.shifted(Var::n, 2) == LinearIndex{2, -1, 5});
    CHECK(L.shifted(Var::k, 2) == LinearIndex{2, -1, -1});
    CHECK(L.subst_k(5) == LinearIndex{2, 0, -4});
    CHECK(L.to_poly() ==
          Poly::variable(Var::n).scaled(2) - Poly::variable(Var::k) + Poly(1));
    CHECK(LinearIndex{0, 0, 3}.is_constant());
    CHECK(LinearIndex{}.is_zero());
}

TEST_CASE("rising factorial") {
    CHECK(pochhammer(half(), 3) == ExtendedValue::finite(make_rational(15, 8)));
    CHECK(pochhammer(Rational(4), 2) == ExtendedValue::finite(Rational(20)));
    CHECK(pochhammer(Rational(3), 0) == ExtendedValue::finite(Rational(1)));
    CHECK(pochhammer(Rational(0), 0) == ExtendedValue::finite(Rational(1)));
    CHECK(pochhammer(Rational(-3), 2) == ExtendedValue::finite(Rational(6)));
    CHECK(pochhammer(Rational(-3), 5) == ExtendedValue::finite(Rational(0)));

    CHECK(pochhammer(Rational(5), -2) == ExtendedValue::finite(make_rational(1, 12)));
    CHECK(pochhammer(half(), -1) == ExtendedValue::finite(Rational(-2)));
    CHECK(pochhammer(Rational(1), -3) == ExtendedValue::pole());
}

TEST_CASE("sign powers fold parity") {
    CHECK(HyperTerm::sign_power({2, 0, 0}) == HyperTerm());
    CHECK(HyperTerm::sign_power({0, 0, 3}) == HyperTerm::from_constant(-1));
    HyperTerm s = HyperTerm::sign_power({1, 1, 0});
    CHECK(s.sign_n() == 1);
    CHECK(s.sign_k() == 1);
    CHECK(term_mul(s, s) == HyperTerm());
    CHECK(s.eval(1, 0) == ExtendedValue::finite(Rational(-1)));
    CHECK(s.eval(1, 1) == ExtendedValue::finite(Rational(1)));
}

TEST_CASE("geometric factors split into primes") {
    HyperTerm g = HyperTerm::geometric(Rational(-4), idx_k);
    CHECK(g == term_mul(HyperTerm::sign_power(idx_k),
                        HyperTerm::geometric(Rational(2), idx_k.scaled(2))));
    CHECK(g.eval(0, 3) == ExtendedValue::finite(Rational(-64)));
    CHECK(g.str() == "(-1)^(k)*2^(2*k)");

    HyperTerm h = HyperTerm::geometric(make_rational(9, 2), idx_n);
    CHECK(h.eval(2, 0) == ExtendedValue::finite(make_rational(81, 4)));
    CHECK(h.geometric_parts().size() == 2);
    CHECK(h.geometric_parts().at(2) == -idx_n);
    CHECK(h.geometric_parts().at(3) == idx_n.scaled(2));

    CHECK(HyperTerm::geometric(Rational(1), idx_n) == HyperTerm());
    CHECK_THROWS_AS(HyperTerm::geometric(Rational(0), idx_n), Error);
}

TEST_CASE("pochhammer parts merge and fold") {
    HyperTerm a = HyperTerm::poch(half(), idx_n);
    CHECK(term_mul(a, a) == HyperTerm::poch(half(), idx_n, 2));
    CHECK(term_div(a, a) == HyperTerm());

    HyperTerm folded = HyperTerm::poch(half(), {0, 0, 2});
    CHECK(folded == HyperTerm::from_constant(make_rational(3, 4)));

    HyperTerm zero_idx = HyperTerm::poch(half(), {0, 0, 0});
    CHECK(zero_idx == HyperTerm());
}

TEST_CASE("evaluation collects factors before multiplying") {
    // (4n+1) * (-1)^n * (1/2)_n^3 / (1)_n^3 at n = 2
    HyperTerm t = HyperTerm::from_prefactor(RationalFunction(
        Poly::variable(Var::n).scaled(4) + Poly(1)));
    t = term_mul(t, HyperTerm::sign_power(idx_n));
    t = term_mul(t, HyperTerm::poch(half(), idx_n, 3));
    t = term_div(t, HyperTerm::poch(Rational(1), idx_n, 3));
    CHECK(t.eval(2, 0) == ExtendedValue::finite(make_rational(243, 512)));
    CHECK(t.eval(0, 0) == ExtendedValue::finite(Rational(1)));

    // the factor 1/(1)_{n-k} nulls everything above the diagonal
    HyperTerm u = term_div(HyperTerm::poch(half(), idx_npk),
                           HyperTerm::poch(Rational(1), idx_nmk));
    CHECK(u.eval(1, 3) == ExtendedValue::finite(Rational(0)));
    CHECK(u.eval(3, 1) == ExtendedValue::finite(make_rational(105, 32)));

    HyperTerm pole = term_div(HyperTerm(), HyperTerm::poch(Rational(-2), idx_k));
    CHECK(pole.eval(0, 3) == ExtendedValue::pole());
    CHECK(pole.eval(0, 1) == ExtendedValue::finite(make_rational(-1, 2)));
}

TEST_CASE("shift ratios") {
    CHECK(ratio(HyperTerm::poch(Rational(1), idx_n), Var::n) ==
          RationalFunction(Poly::variable(Var::n) + Poly(1)));
    CHECK(ratio(HyperTerm::poch(half(), idx_npk), Var::k) ==
          RationalFunction(Poly::variable(Var::n) + Poly::variable(Var::k) +
                           Poly(half())));

    // 1/(n+1) * (1/2)_n^2 / (1)_n^2 steps by (n^2+n+1/4)/(n^2+3n+2)
    HyperTerm t = HyperTerm::from_prefactor(
        RationalFunction(Poly(1), Poly::variable(Var::n) + Poly(1)));
    t = term_mul(t, HyperTerm::poch(half(), idx_n, 2));
    t = term_div(t, HyperTerm::poch(Rational(1), idx_n, 2));
    Poly n = Poly::variable(Var::n);
    CHECK(ratio(t, Var::n) ==
          RationalFunction(n * n + n + Poly(make_rational(1, 4)),
                           n * n + n.scaled(3) + Poly(2)));
    CHECK(ratio(t, Var::k) == RationalFunction(1));

    HyperTerm g = HyperTerm::geometric(Rational(2), idx_n);
    CHECK(ratio(g, Var::n) == RationalFunction(2));
}

TEST_CASE("substituting k") {
    HyperTerm s = HyperTerm::sign_power(idx_npk);
    HyperTerm at3 = s.subst_k(3);
    CHECK(at3.constant_factor() == -1);
    CHECK(at3.sign_n() == 1);
    CHECK(at3.sign_k() == 0);

    HyperTerm t = HyperTerm::poch(half(), idx_npk);
    CHECK(t.subst_k(2) == HyperTerm::poch(half(), {1, 0, 2}));
    CHECK(t.subst_k(2).eval(1, 99) == t.eval(1, 2));
}

TEST_CASE("variable dependence") {
    CHECK(HyperTerm::poch(half(), idx_n).depends_on(Var::n));
    CHECK(!HyperTerm::poch(half(), idx_n).depends_on(Var::k));
    CHECK(HyperTerm::sign_power(idx_k).depends_on(Var::k));
    CHECK(!HyperTerm().depends_on(Var::n));
    CHECK(HyperTerm::from_prefactor(RationalFunction(
              Poly(1), Poly::variable(Var::k) + Poly(1)))
              .depends_on(Var::k));
}

TEST_CASE("term printing") {
    HyperTerm t = HyperTerm::from_prefactor(RationalFunction(
        Poly::variable(Var::n).scaled(4) + Poly(1)));
    t = term_mul(t, HyperTerm::sign_power(idx_n));
    t = term_mul(t, HyperTerm::poch(half(), idx_n, 3));
    t = term_div(t, HyperTerm::poch(Rational(1), idx_n, 3));
    CHECK(t.str() == "(-1)^(n)*(4*n + 1)*poch(1/2,n)^3/poch(1,n)^3");
    CHECK(HyperTerm().str() == "1");
    CHECK(HyperTerm::from_constant(make_rational(-3, 2)).str() == "-3/2");
    CHECK(term_div(HyperTerm(), HyperTerm::poch(Rational(1), idx_nmk)).str() ==
          "1/poch(1,n-k)");
}
