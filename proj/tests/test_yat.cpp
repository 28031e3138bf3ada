#include <set>

#include "doctest.h"
#include "rj/checks.hpp"
#include "rj/jones.hpp"
#include "rj/yat.hpp"

using namespace rj;

TEST_CASE("triangle counts") {
    CHECK(build_yat(Fraction(7, 11)).triangles.size() == 6);
    CHECK(build_yat(Fraction(1, 2)).triangles.size() == 2);
    for (const auto& f : unit_fractions(100)) {
        YatTree t = build_yat(f);
        const auto& c = t.negcf.terms;
        i64 want = c[0];
        for (size_t j = 1; j < c.size(); ++j) want += c[j] - 1;
        CHECK(static_cast<i64>(t.triangles.size()) == want);
        CHECK(t.triangles.front().left == Fraction(0, 1));
        CHECK(t.triangles.front().right == Fraction::infinity());
        CHECK(t.triangles.back().apex == f);
        auto vs = t.vertices();
        CHECK(std::set<Fraction>(vs.begin(), vs.end()).size() == vs.size());
        CHECK(static_cast<int>(t.left_side.size()) == t.l());
        for (const auto& tri : t.triangles) CHECK(farey_sum(tri.left, tri.right) == tri.apex);
    }
}

TEST_CASE("ancestor triangle of 4/7 follows the chain of 7/4") {
    YatTree t = build_yat(Fraction(4, 7));
    std::vector<Fraction> apexes;
    for (const auto& tri : t.triangles) apexes.push_back(tri.apex);
    CHECK(apexes == std::vector<Fraction>{Fraction(1, 1), Fraction(1, 2), Fraction(2, 3), Fraction(3, 5), Fraction(4, 7)});
    CHECK_THROWS(build_yat(Fraction(7, 4)));
    CHECK_THROWS(build_yat(Fraction(1, 1)));
    CHECK_THROWS(build_yat(Fraction(0, 1)));
}

TEST_CASE("extreme terms of the path sum") {
    LaurentPoly g = bracket_path_sum(build_yat(Fraction(7, 11)));
    CHECK(g.lowest() == -4);
    CHECK(g.coeff(-4) == 1);
    CHECK(g.degree() == 2);
    CHECK(g.coeff(2) == 1);
    for (const auto& f : unit_fractions(100)) {
        YatTree t = build_yat(f);
        LaurentPoly p = bracket_path_sum(t);
        i64 l = t.l(), lp = t.lprime();
        CHECK(p.lowest() == -l);
        CHECK(p.coeff(static_cast<int>(-l)) == (l % 2 ? -1 : 1));
        CHECK(p.degree() == lp);
        CHECK(p.coeff(static_cast<int>(lp)) == (lp % 2 ? -1 : 1));
    }
}

TEST_CASE("dynamic programming matches path enumeration") {
    for (const auto& f : unit_fractions(40)) {
        YatTree t = build_yat(f);
        CHECK(bracket_path_sum(t) == bracket_path_sum_enumerated(t));
    }
}

TEST_CASE("bracket to Jones on the worked examples") {
    CHECK(bracket_to_jones(build_yat(Fraction(9, 16)), 3) == golden_v_16_9());
    CHECK(bracket_to_jones(build_yat(Fraction(13, 21)), -1) == golden_v_21_13());
    CHECK(bracket_to_jones(build_yat(Fraction(5, 12)), 2) == golden_v_12_5());
}

TEST_CASE("bracket path agrees with the normalized Jones path") {
    for (const auto& f : unit_fractions(100)) {
        i64 wr = writhe_recursive(f).wr;
        CHECK(bracket_to_jones(build_yat(f), wr) == jones_original(f.reciprocal(), wr));
    }
}
