#include "rj/jones.hpp"

#include <map>

#include "rj/qint.hpp"

namespace rj {

namespace {

Fraction at_least_one(const Fraction& alpha) {
    if (alpha.is_zero()) throw std::invalid_argument("Jones polynomial of 0/1 is not defined here");
    return alpha < Fraction(1, 1) ? alpha.reciprocal() : alpha;
}

}  // namespace

LaurentPoly jones_normalized(const Fraction& alpha) {
    QRational r = q_rational(at_least_one(alpha));
    return r.numerator.shifted(1) + (LaurentPoly(1) - LaurentPoly::monomial(1)) * r.denominator;
}

LaurentPoly jones_by_recursion(const Fraction& alpha) {
    Fraction a = at_least_one(alpha);
    std::map<Fraction, LaurentPoly> memo{{Fraction(1, 1), LaurentPoly(1)},
                                         {Fraction::infinity(), LaurentPoly::monomial(1)}};
    // parents of a fraction >= 1 are >= 1 (or 1/0), so the chain stays in range
    std::vector<Fraction> todo{a};
    while (!todo.empty()) {
        Fraction v = todo.back();
        if (memo.count(v)) {
            todo.pop_back();
            continue;
        }
        Parents p = farey_parents(v);
        bool ready = true;
        for (const auto& w : {p.left, p.right})
            if (!memo.count(w)) {
                todo.push_back(w);
                ready = false;
            }
        if (!ready) continue;
        int w = static_cast<int>(q_farey_weight(p.left, p.right));
        memo[v] = memo.at(p.left) + memo.at(p.right).shifted(w);
        todo.pop_back();
    }
    return memo.at(a);
}

LaurentPoly jones_by_pairs(const Fraction& alpha) {
    Fraction f = at_least_one(alpha);
    if (f.is_infinite() || f == Fraction(1, 1))
        throw std::invalid_argument("pair formula needs x/a > 1, got " + f.str());
    i64 x = f.num(), a = f.den();
    return q_pair(a, x - a).shifted(2) - (LaurentPoly::monomial(1) - LaurentPoly(1)) * q_pair(a, x);
}

bool pair_jones_identity(const Fraction& alpha) {
    Fraction f = at_least_one(alpha);
    i64 x = f.num(), a = f.den(), r = x % a;
    return q_pair(a, x) == jones_normalized(f) + q_pair(a - r, r).shifted(1);
}

GridPoly jones_original(const Fraction& alpha, i64 wr) {
    if (alpha.is_infinite() || !(alpha > Fraction(1, 1)))
        throw std::invalid_argument("original Jones polynomial needs alpha > 1, got " + alpha.str());
    NegativeCF cf = negative_expand(alpha);
    i64 l = cf.l(), lp = cf.lprime();
    i64 e = -3 * wr - 3 * l + 7 * lp;
    GridPoly v = substitute_neg_inverse(jones_normalized(alpha)).shifted(static_cast<int>(e));
    if ((wr + l) % 2 != 0) v = -v;
    if (!v.on_half_grid()) throw std::logic_error("V off the half-integer grid for " + alpha.str());
    bool knot = alpha.num() % 2 != 0;
    if (knot != v.on_integer_grid())
        throw std::logic_error("V exponent parity does not match the link type of " + alpha.str());
    return v;
}

GridPoly jones_original(const Fraction& alpha) {
    return jones_original(alpha, writhe_recursive(alpha).wr);
}

JonesPair jones_pair(const Fraction& alpha) {
    Fraction f = at_least_one(alpha);
    return {f, jones_normalized(f), jones_original(f)};
}

}  // namespace rj
