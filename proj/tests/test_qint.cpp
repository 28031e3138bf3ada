#include <vector>

#include "doctest.h"
#include "rj/qint.hpp"

using namespace rj;

namespace {

using Coeffs = std::vector<i64>;

Coeffs add_shifted(Coeffs p, const Coeffs& s, size_t k) {
    if (p.size() < s.size() + k) p.resize(s.size() + k, 0);
    for (size_t i = 0; i < s.size(); ++i) p[i + k] += s[i];
    return p;
}

// plain unmemoized recursion on coefficient vectors
Coeffs naive_pair(i64 a, i64 b) {
    if (a == 1) return Coeffs(b + 1, 1);
    if (b == 1) return Coeffs(a + 1, 1);
    if (a < b) {
        i64 r = b % a;
        return add_shifted(naive_pair(a - r, r), naive_pair(a, b - a), 1);
    }
    i64 r = a % b;
    return add_shifted(naive_pair(a - b, b), naive_pair(r, b - r), (a + b - 1) / b);
}

LaurentPoly poly(const Coeffs& c) {
    LaurentPoly p;
    for (size_t i = 0; i < c.size(); ++i) p.add_term(static_cast<int>(i), c[i]);
    return p;
}

}  // namespace

TEST_CASE("base cases") {
    CHECK(q_pair(1, 4) == LaurentPoly::from_coeffs({1, 1, 1, 1, 1}));
    CHECK(q_pair(4, 1) == q_pair(1, 4));
    CHECK(q_pair(1, 1) == LaurentPoly::from_coeffs({1, 1}));
    CHECK(q_pair(1, 0) == LaurentPoly(1));
    CHECK(q_pair(0, 1) == LaurentPoly(1));
}

TEST_CASE("small pairs") {
    // (3)_q + q^2 (2)_q
    CHECK(q_pair(3, 2) == qint_of(3) + qint_of(2).shifted(2));
    CHECK(q_pair(3, 2) == LaurentPoly::from_coeffs({1, 1, 2, 1}));
    // (3)_q + q (4)_q
    CHECK(q_pair(3, 4) == qint_of(3) + qint_of(4).shifted(1));
    CHECK(q_pair(3, 4) == LaurentPoly::from_coeffs({1, 2, 2, 1, 1}));
    CHECK(q_pair(3, 5) == LaurentPoly::from_coeffs({1, 2, 2, 2, 1}));
    CHECK(q_pair(3, 5) == q_pair(1, 2) + q_pair(3, 2).shifted(1));
    // (3)_q + q (3,4)_q
    CHECK(q_pair(3, 7) == qint_of(3) + q_pair(3, 4).shifted(1));
    CHECK(q_pair(2, 3) == LaurentPoly::from_coeffs({1, 2, 1, 1}));
}

TEST_CASE("invalid pairs are rejected") {
    CHECK_THROWS(q_pair(2, 4));
    CHECK_THROWS(q_pair(0, 0));
    CHECK_THROWS(q_pair(0, 2));
    CHECK_THROWS(q_pair(-1, 2));
}

TEST_CASE("memoized recursion matches the plain recursion") {
    for (i64 a = 1; a <= 25; ++a)
        for (i64 b = 1; b <= 25; ++b)
            if (gcd64(a, b) == 1) CHECK(q_pair(a, b) == poly(naive_pair(a, b)));
}

TEST_CASE("weighted sum of neighbors") {
    // (1,1) (+) (1,2) = (2,3), weight ceil(1/2) = 1
    CHECK(weighted_sum_exponent(1, 1, 1, 2) == 1);
    CHECK(q_pair_weighted_sum(1, 1, q_pair(1, 1), 1, 2, q_pair(1, 2)) == LaurentPoly::from_coeffs({1, 2, 1, 1}));
    CHECK_THROWS(weighted_sum_exponent(1, 3, 2, 3));
    CHECK_THROWS(weighted_sum_exponent(1, 2, 1, 1));  // 2/1 > 1/1
    CHECK_THROWS(q_pair_weighted_sum(1, 1, q_pair(1, 1), 0, 1, LaurentPoly()));
    // both branches, fractions above and below 1
    for (i64 a = 1; a <= 12; ++a)
        for (i64 x = 1; x <= 12; ++x)
            for (i64 b = 1; b <= 12; ++b)
                for (i64 y = 1; y <= 12; ++y) {
                    if (gcd64(a, x) != 1 || gcd64(b, y) != 1 || a * y - b * x != 1) continue;
                    // the two hypotheses never hold together for x/a < y/b
                    CHECK_FALSE((a <= x && y <= b));
                    if (a <= x || y <= b)
                        CHECK(q_pair_weighted_sum(a, x, q_pair(a, x), b, y, q_pair(b, y)) == q_pair(a + b, x + y));
                }
}

TEST_CASE("reversal") {
    CHECK(q_pair_reverse(q_pair(2, 3)) == q_pair(3, 2));
    CHECK(q_pair_reverse(q_pair(1, 6)) == q_pair(6, 1));
    CHECK(q_pair_reverse(q_pair(1, 1)) == q_pair(1, 1));
    for (i64 a = 1; a <= 20; ++a)
        for (i64 x = 1; x <= 20; ++x)
            if (gcd64(a, x) == 1) CHECK(q_pair_reverse(q_pair(a, x)) == q_pair(x, a));
}

TEST_CASE("degree and value at one") {
    for (i64 a = 1; a <= 20; ++a)
        for (i64 x = 1; x <= 20; ++x) {
            if (gcd64(a, x) != 1) continue;
            LaurentPoly p = q_pair(a, x);
            CHECK(p.at_one() == a + x);
            CHECK(p.coeff(0) == 1);
            CHECK(q_pair_degree(a, x) == p.degree());
        }
}
