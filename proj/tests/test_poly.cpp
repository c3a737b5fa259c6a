#include "doctest.h"

#include "wz/poly.hpp"

using namespace wz;

namespace {
const Poly N = Poly::variable(Var::n);
const Poly K = Poly::variable(Var::k);
}  // namespace

TEST_CASE("construction and queries") {
    Poly p = N * N + N.scaled(3) + Poly(2);
    CHECK(p.degree(Var::n) == 2);
    CHECK(p.degree(Var::k) == 0);
    CHECK(p.coeff(1, 0) == 3);
    CHECK(p.coeff(0, 0) == 2);
    CHECK(p.coeff(5, 0) == 0);
    CHECK(!p.is_constant());
    CHECK(Poly(7).is_constant());
    CHECK(Poly(7).constant_value() == 7);
    CHECK(Poly().is_zero());
    CHECK(Poly().degree(Var::n) == -1);
    CHECK(Poly::monomial(2, 1, make_rational(1, 2)) ==
          N * N * K.scaled(make_rational(1, 2)));
}

TEST_CASE("lex order with n before k") {
    Poly p = N * K * K + K.scaled(5) + N * N;
    CHECK(p.leading_exponents() == Poly::Exponents{2, 0});
    CHECK(p.leading_coeff() == 1);
    Poly q = N * K - K * K;
    CHECK(q.leading_exponents() == Poly::Exponents{1, 1});
}

TEST_CASE("arithmetic") {
    Poly a = N + Poly(1);
    Poly b = N - Poly(1);
    CHECK(a * b == N * N - Poly(1));
    CHECK(a + b == N.scaled(2));
    CHECK(a - a == Poly());
    CHECK((-a) + a == Poly());
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.pow(0) == Poly(1));
    CHECK_THROWS_AS(a.pow(-1), Error);
}

TEST_CASE("shift and eval") {
    Poly p = N * N + K;
    CHECK(shift(p, Var::n, 1) == N * N + N.scaled(2) + Poly(1) + K);
    CHECK(p.shifted(Var::k, make_rational(1, 2)) == N * N + K + Poly(make_rational(1, 2)));
    CHECK(p.eval(3, 4) == 13);
    CHECK(p.eval_partial(Var::n, 2) == K + Poly(4));
    CHECK(p.eval_partial(Var::k, 0) == N * N);
}

TEST_CASE("coefficient vectors round trip") {
    Poly p = N * N * K + N.scaled(3) + K * K + Poly(5);
    auto cs = p.coefficients_in(Var::n);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == K * K + Poly(5));
    CHECK(cs[1] == Poly(3));
    CHECK(cs[2] == K);
    CHECK(Poly::from_coefficients(Var::n, cs) == p);
    CHECK(Poly().coefficients_in(Var::k).empty());
}

TEST_CASE("printing") {
    CHECK((N * N + N.scaled(3) + Poly(2)).str() == "n^2 + 3*n + 2");
    CHECK((K.scaled(-1)).str() == "-k");
    CHECK(Poly().str() == "0");
    CHECK((N * K).str() == "n*k");
}

TEST_CASE("gcd is primitive with positive leading coefficient") {
    Poly a = (N + Poly(1)).pow(2) * (N - Poly(2));
    Poly b = (N + Poly(1)) * (N + Poly(3));
    Poly g = poly_gcd(a, b);
    CHECK(g == N + Poly(1));
    CHECK(poly_gcd(a.scaled(make_rational(-7, 3)), b) == N + Poly(1));

    Poly c = (N - K) * (N + K);
    Poly d = (N - K) * N;
    CHECK(poly_gcd(c, d) == N - K);
    CHECK(poly_gcd(Poly(), Poly()).is_zero());
    CHECK(poly_gcd(Poly(), b) == N * N + N.scaled(4) + Poly(3));
}

TEST_CASE("exact division") {
    Poly a = (N + K) * (N - K);
    CHECK(divide_exact(a, N + K) == N - K);
    CHECK_THROWS_AS(divide_exact(N * N + Poly(1), N + Poly(1)), Error);
    CHECK_THROWS_AS(divide_exact(a, Poly()), DivisorZeroPolynomial);
}

TEST_CASE("content normalization") {
    Poly p = N.scaled(make_rational(4, 3)) + Poly(make_rational(2, 9));
    CHECK(rational_content(p) == make_rational(2, 9));
    CHECK(rational_content(p.scaled(-1)) == make_rational(2, 9));

    auto normed = content_normalize({p.scaled(-3), K.scaled(-2)});
    REQUIRE(normed.size() == 2);
    CHECK(normed[0] == N.scaled(6) + Poly(1));
    CHECK(normed[1] == K.scaled(3));

    auto flipped = content_normalize({Poly(), N.scaled(-2), Poly(4)});
    CHECK(flipped[0].is_zero());
    CHECK(flipped[1] == N);
    CHECK(flipped[2] == Poly(-2));
}

TEST_CASE("linear factor splitting") {
    Poly p = (K.scaled(2) + Poly(1)).pow(2) * (K.scaled(4) + Poly(3));
    auto fac = split_linear_factors(p);
    CHECK(fac.constant == 1);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].m == 2);
    CHECK(fac.factors[0].b == 1);
    CHECK(fac.factors[0].multiplicity == 2);
    CHECK(fac.factors[1].m == 4);
    CHECK(fac.factors[1].b == 3);
    CHECK(fac.factors[1].multiplicity == 1);

    auto scaled = split_linear_factors(p.scaled(make_rational(-5, 7)));
    CHECK(scaled.constant == make_rational(-5, 7));

    auto constant = split_linear_factors(Poly(9));
    CHECK(constant.constant == 9);
    CHECK(constant.factors.empty());

    CHECK_THROWS_AS(split_linear_factors(K * K + Poly(1)), NotSplitOverRationals);
    CHECK_THROWS_AS(split_linear_factors(Poly()), Error);
    CHECK_THROWS_AS(split_linear_factors(N * K + Poly(1)), Error);
}

TEST_CASE("rational functions canonicalize") {
    RationalFunction r(N * N - K * K, N - K);
    CHECK(r.num() == N + K);
    CHECK(r.den() == Poly(1));

    RationalFunction s(N, K.scaled(-2));
    CHECK(s.den() == K);
    CHECK(s.num() == N.scaled(make_rational(-1, 2)));

    RationalFunction half(N, N.scaled(2));
    CHECK(half == RationalFunction(make_rational(1, 2)));
    CHECK(half.is_constant());
    CHECK(half.constant_value() == make_rational(1, 2));

    CHECK_THROWS_AS(RationalFunction(N, Poly()), DivisorZeroPolynomial);
}

TEST_CASE("rational function arithmetic") {
    RationalFunction a(Poly(1), N);
    RationalFunction b(Poly(1), N + Poly(1));
    CHECK(a - b == RationalFunction(Poly(1), N * N + N));
    CHECK(a * b == RationalFunction(Poly(1), N * N + N));
    CHECK(a / b == RationalFunction(N + Poly(1), N));
    CHECK(a.reciprocal() == RationalFunction(N));
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(a / RationalFunction(), DivisorZeroPolynomial);
    CHECK_THROWS_AS(RationalFunction().reciprocal(), DivisorZeroPolynomial);
}

TEST_CASE("rational function shift and eval") {
    RationalFunction a(Poly(1), N);
    CHECK(a.shifted(Var::n, 1) == RationalFunction(Poly(1), N + Poly(1)));
    CHECK(a.eval(2, 0) == make_rational(1, 2));
    CHECK(a.eval(0, 5) == std::nullopt);
    RationalFunction b(N + K, N - K);
    CHECK(b.eval_partial(Var::k, 1) == RationalFunction(N + Poly(1), N - Poly(1)));
    CHECK(b.eval(3, 1) == 2);
    CHECK(b.eval(1, 1) == std::nullopt);
}

TEST_CASE("rational function printing") {
    CHECK(RationalFunction(N + Poly(1)).str() == "n + 1");
    CHECK(RationalFunction(Poly(1), N).str() == "(1)/(n)");
}
