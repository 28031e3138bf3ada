#include <functional>
#include <set>

#include "doctest.h"
#include "rj/checks.hpp"
#include "rj/writhe.hpp"

using namespace rj;

namespace {

bool allowed_pair(FractionType a, FractionType b, FractionType other) {
    auto in = [&](FractionType t) { return t == FractionType::OneZero || t == other; };
    return in(a) && in(b) && a != b;
}

// every downward path from 1/0 to alpha whose edges all join 1/0-type and `other`-type vertices
int count_paths(const YatTree& t, FractionType other) {
    std::set<std::pair<Fraction, Fraction>> edges;
    auto add = [&](const Fraction& u, const Fraction& v) {
        if (t.order(u) < t.order(v)) edges.insert({u, v});
        else edges.insert({v, u});
    };
    add(Fraction::infinity(), Fraction(0, 1));
    for (const auto& tri : t.triangles) {
        add(tri.apex, tri.left);
        add(tri.apex, tri.right);
        add(tri.left, tri.right);
    }
    std::function<int(const Fraction&)> go = [&](const Fraction& v) {
        if (v == t.target) return 1;
        int n = 0;
        for (const auto& [u, w] : edges)
            if (u == v && allowed_pair(fraction_type(u), fraction_type(w), other)) n += go(w);
        return n;
    };
    return go(Fraction::infinity());
}

}  // namespace

TEST_CASE("writhe of the worked examples") {
    CHECK(writhe_sign_walk(Fraction(3, 5)).wr == 0);
    CHECK(writhe_sign_walk(Fraction(13, 21)).wr == -1);
    WritheResult w = writhe_sign_walk(Fraction(9, 16));
    CHECK(w.wr == 3);
    CHECK(w.wr_pm.has_value());
    CHECK(writhe_quadrilateral(Fraction(9, 16)).wr == 3);
    CHECK(writhe_quadrilateral(Fraction(13, 21)).wr == -1);
    CHECK(writhe_recursive(Fraction(13, 21)).wr == -1);
    CHECK(writhe_recursive(Fraction(9, 16)).wr == 3);
    CHECK(writhe_recursive(Fraction(5, 12)).wr == 2);
}

TEST_CASE("single-term expansions") {
    WritheResult h = writhe_recursive(Fraction(1, 2));
    CHECK(h.wr == 2);
    CHECK(h.wr_pm == -2);
    CHECK(writhe_quadrilateral(Fraction(1, 2)).wr == 2);
    CHECK(writhe_recursive(Fraction(1, 3)).wr == -3);
    CHECK_FALSE(writhe_recursive(Fraction(1, 3)).wr_pm.has_value());
    for (i64 c = 2; c <= 30; ++c) {
        WritheResult r = writhe_sign_walk(Fraction(1, c));
        CHECK(r.wr == (c % 2 ? -c : c));
        if (c % 2 == 0) CHECK(r.wr_pm == -c);
    }
}

TEST_CASE("z values used by the recursion on the examples") {
    // z_1 in the ancestor triangle of 1/2, z_2 in that of 3/5
    YatTree a1 = build_yat(Fraction(1, 2));
    CHECK(z_values(a1, seifert_paths(a1)[0]).at(0) == 1);
    YatTree a2 = build_yat(Fraction(3, 5));
    CHECK(z_values(a2, seifert_paths(a2)[0]).at(1) == 1);
}

TEST_CASE("inputs above one are replaced by their reciprocal") {
    CHECK(writhe_recursive(Fraction(21, 13)) == writhe_recursive(Fraction(13, 21)));
    CHECK(writhe_sign_walk(Fraction(16, 9)) == writhe_sign_walk(Fraction(9, 16)));
    CHECK_THROWS(writhe_recursive(Fraction(1, 1)));
    CHECK_THROWS(writhe_sign_walk(Fraction(0, 1)));
    CHECK_THROWS(writhe_quadrilateral(Fraction::infinity()));
}

TEST_CASE("Seifert paths are unique within each type class") {
    for (const auto& f : unit_fractions(40)) {
        YatTree t = build_yat(f);
        auto paths = seifert_paths(t);
        FractionType ty = fraction_type(f);
        if (ty == FractionType::OneZero) {
            REQUIRE(paths.size() == 2);
            CHECK(count_paths(t, FractionType::ZeroOne) == 1);
            CHECK(count_paths(t, FractionType::OneOne) == 1);
        } else {
            REQUIRE(paths.size() == 1);
            CHECK(count_paths(t, ty) == 1);
        }
        for (const auto& p : paths) {
            FractionType other = p.variant == PathVariant::Principal && ty != FractionType::OneZero ? ty
                                 : p.variant == PathVariant::Principal ? FractionType::ZeroOne
                                                                      : FractionType::OneOne;
            CHECK(p.vertices.front() == Fraction::infinity());
            CHECK(p.vertices.back() == f);
            for (size_t i = 0; i + 1 < p.vertices.size(); ++i)
                CHECK(allowed_pair(fraction_type(p.vertices[i]), fraction_type(p.vertices[i + 1]), other));
        }
    }
}

TEST_CASE("three methods agree and the alternate writhe mirrors 1 - alpha") {
    for (const auto& f : unit_fractions(100)) {
        WritheResult s = writhe_sign_walk(f);
        CHECK(s == writhe_quadrilateral(f));
        CHECK(s == writhe_recursive(f));
        CHECK(s.wr_pm.has_value() == (fraction_type(f) == FractionType::OneZero));
        if (s.wr_pm) CHECK(*s.wr_pm == -writhe_sign_walk(Fraction(f.den() - f.num(), f.den())).wr);
        i64 sum = 0;
        for (int v : triangle_signs(build_yat(f), seifert_paths(build_yat(f))[0])) sum += v;
        CHECK(s.wr == -sum);
    }
}
