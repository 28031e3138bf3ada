#include "doctest.h"
#include "rj/checks.hpp"
#include "rj/jones.hpp"
#include "rj/oracle.hpp"
#include "rj/qint.hpp"

using namespace rj;

TEST_CASE("normalized Jones polynomials of the worked examples") {
    CHECK(jones_normalized(Fraction(12, 5)) == LaurentPoly::from_coeffs({1, 1, 3, 2, 2, 2, 1}));
    CHECK(jones_normalized(Fraction(16, 9)) == LaurentPoly::from_coeffs({1, 2, 2, 3, 3, 3, 1, 1}));
    CHECK(jones_normalized(Fraction(3, 2)) == LaurentPoly::from_coeffs({1, 1, 0, 1}));
    CHECK(jones_normalized(Fraction(5, 12)) == jones_normalized(Fraction(12, 5)));
    CHECK(jones_normalized(Fraction(1, 1)) == LaurentPoly(1));
    CHECK(jones_normalized(Fraction::infinity()) == LaurentPoly::monomial(1));
}

TEST_CASE("J of 21/13 ends in 2q^6 + q^7") {
    const LaurentPoly j = LaurentPoly::from_coeffs({1, 3, 3, 4, 4, 3, 2, 1});
    CHECK(jones_normalized(Fraction(21, 13)) == j);
    CHECK(jones_by_recursion(Fraction(21, 13)) == j);
    CHECK(jones_by_pairs(Fraction(21, 13)) == j);
    CHECK(j.at_one() == 21);
    // independent check from the diagram
    CHECK(oracle_jones(Fraction(13, 21), BracketMethod::StateSum).j == j);
    CHECK(jones_original(Fraction(21, 13)) == golden_v_21_13());
}

TEST_CASE("recursion from the initial data") {
    CHECK(jones_by_recursion(Fraction(1, 1)) == LaurentPoly(1));
    CHECK(jones_by_recursion(Fraction::infinity()) == LaurentPoly::monomial(1));
    CHECK(jones_by_recursion(Fraction(2, 1)) == LaurentPoly::from_coeffs({1, 0, 1}));
    CHECK(jones_by_recursion(Fraction(3, 2)) == LaurentPoly::from_coeffs({1, 1, 0, 1}));
}

TEST_CASE("pair formula") {
    CHECK(jones_by_pairs(Fraction(5, 3)) == LaurentPoly::from_coeffs({1, 1, 1, 1, 1}));
    CHECK(jones_by_pairs(Fraction(2, 1)) == LaurentPoly::from_coeffs({1, 0, 1}));
    CHECK(jones_by_pairs(Fraction(12, 5)) == jones_normalized(Fraction(12, 5)));
    CHECK_THROWS(jones_by_pairs(Fraction(1, 1)));
    CHECK(pair_jones_identity(Fraction(12, 5)));
}

TEST_CASE("original Jones polynomials of the worked examples") {
    CHECK(jones_original(Fraction(16, 9), 3) == golden_v_16_9());
    CHECK(jones_original(Fraction(21, 13), -1) == golden_v_21_13());
    GridPoly v = jones_original(Fraction(12, 5));
    CHECK(v == golden_v_12_5());
    CHECK(v.top() == 6);
    CHECK(v.coeff(6) == -1);
    CHECK(jones_pair(Fraction(5, 12)).original == v);
    CHECK_THROWS(jones_original(Fraction(1, 2), 0));
    CHECK_THROWS(jones_original(Fraction(1, 1), 0));
}

TEST_CASE("methods agree and J(1) is the numerator") {
    for (const auto& [a, x] : coprime_pairs(60)) {
        Fraction f(x, a);
        LaurentPoly j = jones_normalized(f);
        CHECK(jones_by_recursion(f) == j);
        if (x > a) {
            CHECK(jones_by_pairs(f) == j);
            CHECK(pair_jones_identity(f));
        }
        CHECK(j.at_one() == x);
        CHECK(j.coeff(0) == 1);
        CHECK(j.lowest() == 0);
    }
}

TEST_CASE("normalized polynomial matches the diagram") {
    for (const auto& f : unit_fractions(60)) CHECK(oracle_jones(f).j == jones_normalized(f));
}
