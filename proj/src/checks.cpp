#include "rj/checks.hpp"

#include "rj/jones.hpp"
#include "rj/oracle.hpp"
#include "rj/qint.hpp"
#include "rj/quiver.hpp"

namespace rj {

void CheckReport::expect(bool cond, const std::function<std::string()>& msg) {
    ++checked;
    if (cond) return;
    if (failures == 0) first_failure = msg();
    ++failures;
}

std::vector<std::pair<i64, i64>> coprime_pairs(i64 max_sum) {
    std::vector<std::pair<i64, i64>> out;
    for (i64 s = 2; s <= max_sum; ++s)
        for (i64 a = 1; 2 * a <= s; ++a)
            if (gcd64(a, s - a) == 1) out.push_back({a, s - a});
    return out;
}

std::vector<Fraction> unit_fractions(i64 max_den) {
    std::vector<Fraction> out;
    for (i64 d = 2; d <= max_den; ++d)
        for (i64 p = 1; p < d; ++p)
            if (gcd64(p, d) == 1) out.emplace_back(p, d);
    return out;
}

namespace {

GridPoly grid(std::initializer_list<std::pair<int, i64>> quarters) {
    GridPoly g;
    for (auto [k, c] : quarters) g.add_term(k, c);
    return g;
}

std::string show(const LaurentPoly& p) { return p.str(); }
std::string show(const GridPoly& p) { return p.str(); }

template <class P>
std::function<std::string()> differ(const std::string& what, const P& got, const P& want) {
    return [=] { return what + ": got " + show(got) + ", want " + show(want); };
}

std::function<std::string()> note(const std::string& s) {
    return [=] { return s; };
}

std::string cf_str(const std::vector<i64>& c) {
    std::string s = "[";
    for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + "]";
}

i64 odd_crossings(const Fraction& a) {
    auto cf = regular_expand(a, Parity::Even).terms;
    i64 s = 0;
    for (size_t i = 1; i < cf.size(); ++i) s += cf[i];
    return s;
}

}  // namespace

GridPoly golden_v_12_5() {
    return grid({{6, -1}, {2, 1}, {-2, -3}, {-6, 2}, {-10, -2}, {-14, 2}, {-18, -1}});
}

GridPoly golden_v_21_13() {
    return grid({{12, -1}, {8, 3}, {4, -3}, {0, 4}, {-4, -4}, {-8, 3}, {-12, -2}, {-16, 1}});
}

GridPoly golden_v_16_9() {
    return grid({{10, 1}, {6, -2}, {2, 2}, {-2, -3}, {-6, 3}, {-10, -3}, {-14, 1}, {-18, -1}});
}

CheckReport check_golden_values() {
    CheckReport r{"golden values"};
    const LaurentPoly j12 = LaurentPoly::from_coeffs({1, 1, 3, 2, 2, 2, 1});
    r.expect(jones_normalized(Fraction(12, 5)) == j12, differ("J(12/5)", jones_normalized(Fraction(12, 5)), j12));
    r.expect(jones_original(Fraction(12, 5)) == golden_v_12_5(),
             differ("V(12/5)", jones_original(Fraction(12, 5)), golden_v_12_5()));

    const std::pair<Fraction, std::vector<i64>> expansions[] = {
        {Fraction(21, 13), {2, 3, 3, 2}}, {Fraction(16, 9), {2, 5, 2}}, {Fraction(11, 7), {2, 3, 2, 2}}};
    for (const auto& [f, want] : expansions) {
        auto got = negative_expand(f).terms;
        r.expect(got == want, [=] { return "expansion of " + f.str() + ": got " + cf_str(got) + ", want " + cf_str(want); });
    }

    const std::pair<Fraction, i64> writhes[] = {{Fraction(3, 5), 0}, {Fraction(13, 21), -1}, {Fraction(9, 16), 3}};
    for (const auto& [f, want] : writhes) {
        i64 got = writhe_recursive(f).wr;
        r.expect(got == want, [=] { return "wr(" + f.str() + ") = " + std::to_string(got) + ", want " + std::to_string(want); });
    }

    r.expect(jones_original(Fraction(21, 13)) == golden_v_21_13(),
             differ("V(21/13)", jones_original(Fraction(21, 13)), golden_v_21_13()));
    r.expect(jones_original(Fraction(16, 9)) == golden_v_16_9(),
             differ("V(16/9)", jones_original(Fraction(16, 9)), golden_v_16_9()));

    // [17/5]_q = ((3)_q^2 + q^2 (2)_q (4)_q) / ((3)_q + q^2 (2)_q)
    QRational q = q_rational(Fraction(17, 5));
    LaurentPoly num = qint_of(3) * qint_of(3) + (qint_of(2) * qint_of(4)).shifted(2);
    LaurentPoly den = qint_of(3) + qint_of(2).shifted(2);
    r.expect(q.numerator == num, differ("N_q(17/5)", q.numerator, num));
    r.expect(q.denominator == den, differ("D_q(17/5)", q.denominator, den));
    return r;
}

CheckReport check_21_13_regression() {
    CheckReport r{"J(21/13) regression"};
    const Fraction f(21, 13);
    const LaurentPoly want = LaurentPoly::from_coeffs({1, 3, 3, 4, 4, 3, 2, 1});
    r.expect(jones_normalized(f) == want, differ("J(21/13) from N_q, D_q", jones_normalized(f), want));
    r.expect(jones_by_recursion(f) == want, differ("J(21/13) by recursion", jones_by_recursion(f), want));
    r.expect(jones_by_pairs(f) == want, differ("J(21/13) from pairs", jones_by_pairs(f), want));
    r.expect(want.at_one() == 21, note("J(21/13)(1) != 21"));
    i64 wr = writhe_recursive(f).wr;
    r.expect(jones_original(f, wr) == golden_v_21_13(), differ("V(21/13)", jones_original(f, wr), golden_v_21_13()));
    // the variant with 2q^2 in place of 2q^6 must not give V(21/13)
    LaurentPoly variant = LaurentPoly::from_coeffs({1, 3, 5, 4, 4, 3, 0, 1});
    GridPoly lv = substitute_neg_inverse(variant).shifted(static_cast<int>(-3 * wr - 3 * 4 + 7 * 3));
    if ((wr + 4) % 2 != 0) lv = -lv;
    r.expect(lv != golden_v_21_13(), note("2q^2 variant reproduces V(21/13)"));
    return r;
}

CheckReport check_pair_identities(i64 max_sum) {
    CheckReport r{"pair q-integer identities"};
    for (auto [a, x] : coprime_pairs(max_sum)) {
        auto tag = "(" + std::to_string(a) + "," + std::to_string(x) + ")";
        LaurentPoly pax = q_pair(a, x);
        i64 c = x / a, rr = x % a;
        r.expect(pax == q_pair(a - rr, rr) * qint_of(c) + q_pair(a, rr).shifted(static_cast<int>(c)),
                 note("division identity fails at " + tag));
        int deg = pax.degree();
        if (x > a) r.expect(q_pair_degree(x - a, a) == deg - 1, note("deg(x-a,a) != deg(a,x) - 1 at " + tag));
        r.expect(q_pair_degree(a - rr, rr) == deg - ceil_div(x, a), note("deg(a-r,r) fails at " + tag));
        r.expect(q_pair_degree(x, a) == deg, note("deg(a,x) != deg(x,a) at " + tag));
        r.expect(q_pair(x, a) == q_pair_reverse(pax), note("reversal identity fails at " + tag));
        r.expect(pax.at_one() == a + x, note("(a,x)_1 != a + x at " + tag));
        bool positive = pax.coeff(0) == 1;
        for (int e = 0; e <= deg; ++e) positive = positive && pax.coeff(e) > 0;
        r.expect(positive, note("coefficients not positive at " + tag));
        r.expect(pax == q_rational(Fraction(a + x, a)).numerator, note("(a,x)_q != N_q((a+x)/a) at " + tag));
        if (!(a == 1 && x == 1)) r.expect(pair_jones_identity(Fraction(x, a)), note("(a,x)_q != J + q(a-r,r)_q at " + tag));
    }
    // Farey neighbors x/a < y/b, i.e. ay - bx = 1
    for (auto [a, x] : coprime_pairs(max_sum))
        for (auto [b, y] : coprime_pairs(max_sum - a - x)) {
            if (a * y - b * x != 1) continue;
            auto tag = std::to_string(x) + "/" + std::to_string(a) + ", " + std::to_string(y) + "/" + std::to_string(b);
            int D = q_pair_degree(a + b, x + y);
            r.expect(D == q_pair_degree(b, y) + ceil_div(x, y), note("deg(a+b,x+y) vs (b,y) fails at " + tag));
            r.expect(D == q_pair_degree(a, x) + floor_div(b, a) + 1, note("deg(a+b,x+y) vs (a,x) fails at " + tag));
            r.expect(q_pair(a + b, x + y) == q_pair(a, x) + q_pair(b, y).shifted(static_cast<int>(ceil_div(x, y))),
                     note("sum identity for (a+b,x+y) fails at " + tag));
            r.expect(q_pair(y + x, b + a) == q_pair(y, b) + q_pair(x, a).shifted(static_cast<int>(floor_div(b, a) + 1)),
                     note("sum identity for (y+x,b+a) fails at " + tag));
            r.expect(q_pair_weighted_sum(a, x, q_pair(a, x), b, y, q_pair(b, y)) == q_pair(a + b, x + y),
                     note("weighted sum fails at " + tag));
            QRational s = q_farey_sum(q_rational(Fraction(x, a)), q_rational(Fraction(y, b)));
            r.expect(s.numerator == q_pair(x, y) && s.denominator == q_pair(a, b),
                     note("q-Farey sum != ((x,y)_q, (a,b)_q) at " + tag));
            QRational direct = q_rational(Fraction(x + y, a + b));
            r.expect(s.numerator == direct.numerator && s.denominator == direct.denominator,
                     note("q-Farey sum != q-rational of the mediant at " + tag));
        }
    // ceiling identity for Farey neighbors x/a < y/b, including fractions below 1
    for (i64 s = 2; s <= max_sum; ++s)
        for (i64 a = 1; a < s; ++a) {
            i64 x = s - a;
            if (gcd64(a, x) != 1) continue;
            for (i64 b = 1; a + x + b < max_sum; ++b)
                for (i64 y = 1; a + x + b + y <= max_sum; ++y) {
                    if (a * y - b * x != 1) continue;
                    i64 lhs = ceil_div(x + y, a + b);
                    i64 mid = ceil_div(x, a) + (a == 1 ? 1 : 0);
                    i64 rhs = floor_div(x, a) + 1;
                    r.expect(lhs == mid && mid == rhs, note("ceiling identity fails at " + std::to_string(x) + "/" +
                                                          std::to_string(a) + ", " + std::to_string(y) + "/" +
                                                          std::to_string(b)));
                }
        }
    // unreduced continued-fraction evaluation agrees by cross-multiplication
    for (auto [a, x] : coprime_pairs(max_sum)) {
        if (a == 1 && x == 1) continue;
        Fraction f(x, a);
        auto [p, q] = q_cf_evaluate(negative_expand(f));
        QRational qr = q_rational(f);
        r.expect(p * qr.denominator == q * qr.numerator, note("q-continued fraction cross-check fails at " + f.str()));
    }
    return r;
}

CheckReport check_jones_methods(i64 max_sum) {
    CheckReport r{"Jones method equivalence"};
    for (auto [a, x] : coprime_pairs(max_sum)) {
        Fraction f(x, a);
        LaurentPoly j = jones_normalized(f);
        r.expect(jones_by_recursion(f) == j, differ("recursion at " + f.str(), jones_by_recursion(f), j));
        if (x > a) r.expect(jones_by_pairs(f) == j, differ("pair formula at " + f.str(), jones_by_pairs(f), j));
        r.expect(j.at_one() == x, note("J(1) != numerator at " + f.str()));
        r.expect(j.coeff(0) == 1 && j.lowest() == 0, note("constant term or exponents wrong at " + f.str()));
    }
    return r;
}

CheckReport check_writhe_methods(i64 max_den) {
    CheckReport r{"writhe method equivalence"};
    auto show_w = [](const WritheResult& w) {
        return std::to_string(w.wr) + (w.wr_pm ? "/" + std::to_string(*w.wr_pm) : "");
    };
    for (const auto& f : unit_fractions(max_den)) {
        WritheResult s = writhe_sign_walk(f), q = writhe_quadrilateral(f), c = writhe_recursive(f);
        r.expect(s == q && q == c, [=] {
            return "at " + f.str() + ": sign walk " + show_w(s) + ", quadrilaterals " + show_w(q) + ", recursion " + show_w(c);
        });
        r.expect(s.wr_pm.has_value() == (fraction_type(f) == FractionType::OneZero),
                 note("alternate writhe presence wrong at " + f.str()));
        if (s.wr_pm) {
            i64 other = writhe_recursive(Fraction(f.den() - f.num(), f.den())).wr;
            r.expect(*s.wr_pm == -other, note("wr+-(a) != -wr(1-a) at " + f.str()));
        }
    }
    return r;
}

CheckReport check_oracle(i64 max_crossings, i64 max_den) {
    CheckReport r{"oracle end-to-end"};
    // every alpha with at most max_crossings crossings has denominator below Fib(max_crossings + 2)
    i64 fa = 1, fb = 1;
    for (i64 i = 0; i < max_crossings; ++i) {
        i64 t = add_checked(fa, fb);
        fa = fb;
        fb = t;
    }
    for (const auto& f : unit_fractions(fb)) {
        if (odd_crossings(f) > max_crossings) continue;
        LinkDiagram d = build_diagram(f);
        OracleJones o = oracle_jones(f, BracketMethod::StateSum);
        WritheResult w = writhe_recursive(f);
        WritheResult dw = diagram_writhe(d);
        r.expect(dw == w, note("writhe of the diagram differs at " + f.str()));
        r.expect(d.components == (f.den() % 2 ? 1 : 2), note("component count wrong at " + f.str()));
        GridPoly v13 = jones_original(f.reciprocal(), w.wr);
        r.expect(o.v == v13, differ("state-sum V vs V from J at " + f.str(), o.v, v13));
        GridPoly v24 = bracket_to_jones(build_yat(f), w.wr);
        r.expect(o.v == v24, differ("state-sum V vs V from the bracket at " + f.str(), o.v, v24));
        r.expect(o.j == jones_normalized(f), differ("state-sum J at " + f.str(), o.j, jones_normalized(f)));
    }
    for (const auto& f : unit_fractions(max_den)) {
        OracleJones o = oracle_jones(f, BracketMethod::Transfer);
        GridPoly v = jones_original(f.reciprocal());
        r.expect(o.v == v, differ("transfer V at " + f.str(), o.v, v));
    }
    return r;
}

CheckReport check_quiver(i64 max_sum, int brute_max) {
    CheckReport r{"quiver closure counts"};
    for (auto [a, x] : coprime_pairs(max_sum)) {
        if (a == 1 && x == 1) continue;
        Fraction f(x, a);
        FenceQuiver g = build_quiver(f);
        auto rho = closure_counts(g);
        LaurentPoly p = q_pair(a, x);
        LaurentPoly from_rho;
        for (int i = 0; i <= g.n; ++i) from_rho.add_term(i, rho[i]);
        r.expect(from_rho == p, differ("closure polynomial at " + f.str(), from_rho, p));
        if (g.n <= brute_max)
            r.expect(closure_counts_brute(g) == rho, note("DP and brute force differ at " + f.str()));
    }
    return r;
}

std::vector<CheckReport> run_all_checks(const CheckLimits& lim) {
    return {check_golden_values(),
            check_21_13_regression(),
            check_pair_identities(lim.identity_max_sum),
            check_jones_methods(lim.identity_max_sum),
            check_writhe_methods(lim.writhe_max_den),
            check_oracle(lim.oracle_max_crossings, lim.transfer_max_den),
            check_quiver(lim.quiver_max_sum, lim.quiver_brute_max)};
}

}  // namespace rj
