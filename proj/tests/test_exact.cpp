#include "doctest.h"

#include "wz/exact.hpp"

using namespace wz;

TEST_CASE("integer and rational powers") {
    CHECK(ipow(2, 10) == 1024);
    CHECK(ipow(3, 0) == 1);
    CHECK(ipow(Integer(-2), 3) == -8);
    CHECK(rpow(make_rational(3, 2), 2) == make_rational(9, 4));
    CHECK(rpow(make_rational(3, 2), -2) == make_rational(4, 9));
    CHECK(rpow(Rational(5), 0) == 1);
    CHECK_THROWS_AS(rpow(Rational(0), -1), Error);
}

TEST_CASE("make_rational canonicalizes") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(1, -2) == make_rational(-1, 2));
    CHECK_THROWS_AS(make_rational(1, 0), Error);
}

TEST_CASE("string forms") {
    CHECK(to_string(Integer(-12)) == "-12");
    CHECK(to_string(Rational(7)) == "7");
    CHECK(to_string(make_rational(3, 4)) == "3/4");
    CHECK(to_string(make_rational(-3, 4)) == "-3/4");
}

TEST_CASE("p-adic valuation") {
    CHECK(padic_val(Rational(48), 2) == 4);
    CHECK(padic_val(make_rational(-135, 8), 3) == 3);
    CHECK(padic_val(make_rational(3, 8), 2) == -3);
    CHECK(padic_val(Rational(1), 5) == 0);
    CHECK_THROWS_AS(padic_val(Rational(0), 3), Error);
    CHECK_THROWS_AS(padic_val(Rational(4), 1), Error);
}

TEST_CASE("modular inverse") {
    CHECK(inv_mod(16, 27) == 22);
    CHECK((inv_mod(16, 27) * 16) % 27 == 1);
    CHECK_THROWS_AS(inv_mod(3, 27), Error);
}

TEST_CASE("residue arithmetic") {
    PadicResidue a(3, 3, 5);
    PadicResidue b(3, 3, 25);
    CHECK(a.modulus == 27);
    CHECK((a + b).value == 3);
    CHECK((a - b).value == 7);
    CHECK((a * b).value == 17);
    CHECK((-a).value == 22);
    CHECK(a.is_unit());
    CHECK((a.inverse() * a).value == 1);
    CHECK(a.pow(3).value == 125 % 27);
    CHECK(a.pow(-1) == a.inverse());
    CHECK(a.pow(0).value == 1);

    PadicResidue nonunit(3, 3, 6);
    CHECK(!nonunit.is_unit());
    CHECK_THROWS_AS(nonunit.inverse(), Error);

    PadicResidue other(3, 2, 5);
    CHECK_THROWS_AS(a + other, Error);
    CHECK(a != other);
    CHECK(a == PadicResidue(3, 3, 32));
}

TEST_CASE("residues of rationals") {
    CHECK(residue_mod(make_rational(21, 16), 3, 3).value == 3);
    CHECK(residue_mod(make_rational(-9, 16), 3, 3).value == 18);
    CHECK(residue_mod(Rational(0), 5, 2).value == 0);
    CHECK_THROWS_AS(residue_mod(make_rational(1, 3), 3, 2), NotPadicInteger);
    CHECK_THROWS_AS(residue_mod(make_rational(5, 12), 2, 4), NotPadicInteger);
}

TEST_CASE("residue printing") {
    CHECK(PadicResidue(5, 3, 17).str() == "17 mod 5^3");
    CHECK(residue_mod(make_rational(21, 16), 3, 3).str() == "3 mod 3^3");
}
