#include "doctest.h"
#include "rj/qint.hpp"
#include "rj/qrational.hpp"

using namespace rj;

TEST_CASE("q-rational of 17/5") {
    QRational r = q_rational(Fraction(17, 5));
    CHECK(r.numerator == qint_of(3) * qint_of(3) + (qint_of(2) * qint_of(4)).shifted(2));
    CHECK(r.numerator == LaurentPoly::from_coeffs({1, 2, 4, 4, 3, 2, 1}));
    CHECK(r.denominator == qint_of(3) + qint_of(2).shifted(2));
    CHECK(r.denominator == LaurentPoly::from_coeffs({1, 1, 2, 1}));
}

TEST_CASE("q-rational of 5/3 and of integers") {
    QRational r = q_rational(Fraction(5, 3));
    CHECK(r.numerator == LaurentPoly::from_coeffs({1, 1, 2, 1}));
    CHECK(r.denominator == LaurentPoly::from_coeffs({1, 1, 1}));
    for (i64 n = 1; n <= 8; ++n) {
        QRational k = q_rational(Fraction(n, 1));
        CHECK(k.numerator == qint_of(n));
        CHECK(k.denominator == LaurentPoly(1));
    }
    QRational inf = q_rational(Fraction::infinity());
    CHECK(inf.numerator == LaurentPoly(1));
    CHECK(inf.denominator.is_zero());
    CHECK_THROWS(q_rational(Fraction(1, 2)));
}

TEST_CASE("unreduced continued fraction evaluation") {
    auto [p, q] = q_cf_evaluate(NegativeCF{{2, 3}});
    // (1+q)(1+q+q^2) - q
    CHECK(p == LaurentPoly::from_coeffs({1, 1, 2, 1}));
    CHECK(q == LaurentPoly::from_coeffs({1, 1, 1}));
    auto [pn, qn] = q_cf_evaluate(NegativeCF{{6}});
    CHECK(pn == qint_of(6));
    CHECK(qn == LaurentPoly(1));
    QRational r = q_rational(Fraction(21, 13));
    auto [p2, q2] = q_cf_evaluate(NegativeCF{{2, 3, 3, 2}});
    CHECK(p2 * r.denominator == q2 * r.numerator);
    for (i64 a = 1; a <= 25; ++a)
        for (i64 x = a + 1; x <= 40; ++x) {
            if (gcd64(a, x) != 1) continue;
            Fraction f(x, a);
            QRational s = q_rational(f);
            auto [pp, qq] = q_cf_evaluate(negative_expand(f));
            CHECK(pp * s.denominator == qq * s.numerator);
            CHECK(s.numerator.at_one() == x);
            CHECK(s.denominator.at_one() == a);
        }
}

TEST_CASE("q-Farey sums") {
    QRational s = q_farey_sum(q_rational(Fraction(5, 3)), q_rational(Fraction(2, 1)));
    CHECK(q_farey_weight(Fraction(5, 3), Fraction(2, 1)) == 3);
    CHECK(s.source == Fraction(7, 4));
    CHECK(s.numerator == q_rational(Fraction(7, 4)).numerator);
    CHECK(s.denominator == q_rational(Fraction(7, 4)).denominator);

    QRational two = q_farey_sum(q_rational(Fraction(1, 1)), q_rational(Fraction::infinity()));
    CHECK(two.source == Fraction(2, 1));
    CHECK(two.numerator == qint_of(2));
    CHECK(two.denominator == LaurentPoly(1));

    // argument order does not matter
    QRational t = q_farey_sum(q_rational(Fraction(2, 1)), q_rational(Fraction(5, 3)));
    CHECK(t.numerator == s.numerator);

    CHECK_THROWS(q_farey_sum(q_rational(Fraction(3, 1)), q_rational(Fraction(5, 3))));

    // numerator (x,y)_q and denominator (a,b)_q
    for (i64 a = 1; a <= 10; ++a)
        for (i64 x = a; x <= 15; ++x)
            for (i64 b = 1; b <= 10; ++b)
                for (i64 y = b; y <= 15; ++y) {
                    if (gcd64(a, x) != 1 || gcd64(b, y) != 1 || a * y - b * x != 1) continue;
                    QRational m = q_farey_sum(q_rational(Fraction(x, a)), q_rational(Fraction(y, b)));
                    CHECK(m.numerator == q_pair(x, y));
                    CHECK(m.denominator == q_pair(a, b));
                }
}
