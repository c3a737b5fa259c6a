#include "doctest.h"

#include "wz/parser.hpp"
#include "wz/verify.hpp"

using namespace wz;

namespace {
void roundtrips(const std::string& text) {
    HyperTerm t = parse_term(text);
    CHECK(parse_term(t.str()) == t);
}
}  // namespace

TEST_CASE("printed forms parse back") {
    roundtrips("(4*n + 1)*(-1)^(n)*poch(1/2,n)^3/poch(1,n)^3");
    roundtrips("poch(1/2,n)^2*poch(1/2,n+k)/(poch(1,n)^2*poch(1,n-k))");
    roundtrips("(-1)^(k)*2^(2*k)");
    roundtrips("-3/2");
    roundtrips("1");
    roundtrips("1/poch(1,n-k)");
    roundtrips("(n^2 + 3*n + 2)/(2*k + 1)");
    roundtrips("poch(1/3,2*n-k+1)^2");
}

TEST_CASE("catalog terms survive a print and parse cycle") {
    for (const auto& row : catalog()) {
        CHECK(parse_term(row.summand.str()) == row.summand);
        if (!row.has_pipeline()) continue;
        CHECK(parse_term(row.lift->str()) == *row.lift);
        CHECK(parse_term(row.device->str()) == *row.device);
    }
}

TEST_CASE("whitespace is free") {
    CHECK(parse_term("  poch( 1/2 , n ) ^ 2 ") == HyperTerm::poch(make_rational(1, 2), {1, 0, 0}, 2));
    CHECK(parse_term("( - 1 ) ^ ( n )") == parse_term("(-1)^(n)"));
}

TEST_CASE("geometric bases factor") {
    CHECK(parse_term("(-1)^(n)") == HyperTerm::sign_power({1, 0, 0}));
    CHECK(parse_term("2^(2*k)") == HyperTerm::geometric(Rational(2), {0, 2, 0}));
    CHECK(parse_term("2^(2*k)") == HyperTerm::geometric(Rational(4), {0, 1, 0}));
    CHECK(parse_term("(-4)^(k)") ==
          term_mul(HyperTerm::sign_power({0, 1, 0}),
                   HyperTerm::geometric(Rational(2), {0, 2, 0})));
    CHECK(parse_term("(2/3)^(n+k)") ==
          HyperTerm::geometric(make_rational(2, 3), {1, 1, 0}));
}

TEST_CASE("plain numeric exponents stay rational") {
    CHECK(parse_term("2^3") == HyperTerm::from_constant(8));
    CHECK(parse_term("2^-2") == HyperTerm::from_constant(make_rational(1, 4)));
    CHECK(parse_term("poch(1/2,n)^-2") ==
          term_div(HyperTerm(), HyperTerm::poch(make_rational(1, 2), {1, 0, 0}, 2)));
}

TEST_CASE("division builds denominators") {
    HyperTerm t = parse_term("3/8");
    CHECK(t == HyperTerm::from_constant(make_rational(3, 8)));
    CHECK(parse_term("3/8*poch(1,n)") ==
          term_mul(HyperTerm::from_constant(make_rational(3, 8)),
                   HyperTerm::poch(Rational(1), {1, 0, 0})));
    CHECK(parse_term("3/poch(1,n)") ==
          term_div(HyperTerm::from_constant(3), HyperTerm::poch(Rational(1), {1, 0, 0})));
}

TEST_CASE("nonlinear indices are refused with a position") {
    try {
        parse_term("poch(1/2, n*k)");
        FAIL("expected NonLinearIndex");
    } catch (const NonLinearIndex& e) {
        CHECK(e.position == 9);
    }
    CHECK_THROWS_AS(parse_term("poch(1/2, n^2)"), NonLinearIndex);
    CHECK_THROWS_AS(parse_term("2^(n*k)"), NonLinearIndex);
}

TEST_CASE("malformed input is refused") {
    CHECK_THROWS_AS(parse_term("(n+"), ParseError);
    CHECK_THROWS_AS(parse_term("poch(1/2,n) trailing"), ParseError);
    CHECK_THROWS_AS(parse_term(""), ParseError);
    CHECK_THROWS_AS(parse_term("n"), ParseError);
    CHECK_THROWS_AS(parse_term("poch(1/2)"), ParseError);
    CHECK_THROWS_AS(parse_term("*3"), ParseError);
}
