#include "rj/yat.hpp"

#include <functional>
#include <map>

namespace rj {

int YatTree::order(const Fraction& v) const {
    if (v == Fraction::infinity()) return 0;
    if (v == Fraction(0, 1)) return 1;
    for (const auto& t : triangles)
        if (t.apex == v) return t.index + 2;
    return -1;
}

std::vector<Fraction> YatTree::vertices() const {
    std::vector<Fraction> out{Fraction::infinity(), Fraction(0, 1)};
    for (const auto& t : triangles) out.push_back(t.apex);
    return out;
}

YatTree build_yat(const Fraction& alpha) {
    if (alpha.is_infinite() || alpha.is_zero() || alpha >= Fraction(1, 1))
        throw std::invalid_argument("ancestor triangle needs 0 < alpha < 1, got " + alpha.str());
    YatTree t;
    t.target = alpha;
    t.negcf = negative_expand(alpha.reciprocal());
    int i = 0;
    for (const auto& s : stern_brocot_path(alpha)) t.triangles.push_back({s.child, s.left, s.right, i++});
    for (const auto& v : t.vertices()) {
        if (v == alpha) continue;
        (v < alpha ? t.left_side : t.right_side).push_back(v);
    }
    return t;
}

namespace {

const LaurentPoly kLeftWeight = LaurentPoly::monomial(-1, -1);
const LaurentPoly kRightWeight = LaurentPoly::monomial(1, -1);

}  // namespace

LaurentPoly bracket_path_sum(const YatTree& tree) {
    std::map<Fraction, LaurentPoly> w;
    w[Fraction::infinity()] = LaurentPoly();
    w[Fraction(0, 1)] = LaurentPoly(1);
    for (const auto& tri : tree.triangles) {
        if (tri.apex == Fraction(1, 1)) {
            w[tri.apex] = LaurentPoly(1);
            continue;
        }
        w[tri.apex] = kLeftWeight * w.at(tri.left) + kRightWeight * w.at(tri.right);
    }
    return w.at(tree.target);
}

LaurentPoly bracket_path_sum_enumerated(const YatTree& tree) {
    std::map<Fraction, const FundamentalTriangle*> by_apex;
    for (const auto& tri : tree.triangles) by_apex[tri.apex] = &tri;
    LaurentPoly total;
    std::function<void(const Fraction&, const LaurentPoly&)> walk = [&](const Fraction& v, const LaurentPoly& acc) {
        if (v == Fraction(0, 1) || v == Fraction(1, 1)) {
            total += acc;
            return;
        }
        if (v.is_infinite()) return;
        const auto* tri = by_apex.at(v);
        walk(tri->left, acc * kLeftWeight);
        walk(tri->right, acc * kRightWeight);
    };
    walk(tree.target, LaurentPoly(1));
    return total;
}

GridPoly bracket_to_jones(const YatTree& tree, i64 wr) {
    i64 wtt = -wr - tree.negcf.wt();
    GridPoly v = GridPoly::from_laurent(bracket_path_sum(tree), 4, static_cast<int>(3 * wtt));
    if (wtt % 2 != 0) v = -v;
    if (!v.on_half_grid()) throw std::logic_error("bracket-to-Jones result is off the half-integer grid");
    return v;
}

}  // namespace rj
