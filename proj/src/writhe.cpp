#include "rj/writhe.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rj {

namespace {

using Edge = std::pair<Fraction, Fraction>;

Edge edge(const Fraction& a, const Fraction& b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

int sign_pow(i64 k) { return (k % 2 == 0) ? 1 : -1; }

Fraction normalize(const Fraction& alpha) {
    if (alpha.is_infinite() || alpha.is_zero() || alpha == Fraction(1, 1))
        throw std::invalid_argument("writhe needs a fraction other than 0, 1 and 1/0, got " + alpha.str());
    return alpha > Fraction(1, 1) ? alpha.reciprocal() : alpha;
}

std::set<Edge> path_edges(const SeifertPath& p) {
    std::set<Edge> out;
    for (size_t i = 0; i + 1 < p.vertices.size(); ++i) out.insert(edge(p.vertices[i], p.vertices[i + 1]));
    return out;
}

// Downward path from 1/0 to the target through vertices of the two allowed types.
SeifertPath find_path(const YatTree& tree, FractionType other, PathVariant variant) {
    auto allowed = [&](const Fraction& v) {
        FractionType t = fraction_type(v);
        return t == FractionType::OneZero || t == other;
    };
    std::map<Fraction, std::vector<Fraction>> below;
    auto add = [&](const Fraction& a, const Fraction& b) {
        if (!allowed(a) || !allowed(b)) return;
        int oa = tree.order(a), ob = tree.order(b);
        if (oa < ob) below[a].push_back(b);
        else below[b].push_back(a);
    };
    add(Fraction::infinity(), Fraction(0, 1));
    for (const auto& t : tree.triangles) {
        add(t.apex, t.left);
        add(t.apex, t.right);
        add(t.left, t.right);
    }
    for (auto& [v, lst] : below) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
    // reachability of the target, bottom-up in creation order
    std::map<Fraction, bool> reach;
    auto verts = tree.vertices();
    for (auto it = verts.rbegin(); it != verts.rend(); ++it) {
        bool r = *it == tree.target;
        for (const auto& w : below[*it]) r = r || reach[w];
        reach[*it] = r;
    }
    SeifertPath p{{Fraction::infinity()}, variant};
    if (!reach[Fraction::infinity()]) throw std::logic_error("no Seifert path for " + tree.target.str());
    while (p.vertices.back() != tree.target) {
        std::vector<Fraction> next;
        for (const auto& w : below[p.vertices.back()])
            if (reach[w]) next.push_back(w);
        if (next.size() != 1) throw std::logic_error("Seifert path for " + tree.target.str() + " is not unique");
        p.vertices.push_back(next[0]);
    }
    return p;
}

}  // namespace

std::vector<SeifertPath> seifert_paths(const YatTree& tree) {
    FractionType ty = fraction_type(tree.target);
    if (ty != FractionType::OneZero) return {find_path(tree, ty, PathVariant::Principal)};
    return {find_path(tree, FractionType::ZeroOne, PathVariant::Principal),
            find_path(tree, FractionType::OneOne, PathVariant::Alternate)};
}

std::vector<int> triangle_signs(const YatTree& tree, const SeifertPath& path) {
    auto used = path_edges(path);
    int s;
    if (path.variant == PathVariant::Alternate) s = 1;
    else s = fraction_type(tree.target) == FractionType::OneOne ? 1 : -1;
    std::vector<int> out{s};
    for (size_t k = 1; k < tree.triangles.size(); ++k) {
        const auto& prev = tree.triangles[k - 1];
        const auto& cur = tree.triangles[k];
        const Fraction& other = cur.left == prev.apex ? cur.right : cur.left;
        if (used.count(edge(prev.apex, other))) s = -s;
        out.push_back(s);
    }
    return out;
}

WritheResult writhe_sign_walk(const Fraction& alpha) {
    YatTree tree = build_yat(normalize(alpha));
    auto paths = seifert_paths(tree);
    auto total = [&](const SeifertPath& p) {
        i64 s = 0;
        for (int t : triangle_signs(tree, p)) s += t;
        return -s;
    };
    WritheResult r{total(paths[0]), std::nullopt};
    if (paths.size() > 1) r.wr_pm = total(paths[1]);
    return r;
}

std::vector<std::pair<Fraction, Fraction>> e_edges(const YatTree& tree) {
    const auto& c = tree.negcf.terms;
    std::vector<std::pair<Fraction, Fraction>> out{{Fraction(0, 1), Fraction::infinity()}};
    for (size_t j = 1; j <= c.size(); ++j) {
        std::vector<i64> head(c.begin(), c.begin() + j);
        Fraction a = evaluate_negative(head).reciprocal();
        head.back() -= 1;
        Fraction b = evaluate_negative(head).reciprocal();
        out.push_back({a, b});
    }
    return out;
}

std::vector<i64> z_values(const YatTree& tree, const SeifertPath& path) {
    auto es = e_edges(tree);
    auto crosses = [&](const Fraction& u, const Fraction& v) {
        if (u == tree.target || v == tree.target) return false;
        return tree.on_left(u) != tree.on_left(v);
    };
    std::vector<i64> z;
    i64 count = 0;
    size_t i = 0;
    const auto& vs = path.vertices;
    for (size_t j = 1; j < es.size(); ++j) {
        while (vs[i] != es[j].first && vs[i] != es[j].second) {
            if (i + 1 >= vs.size()) throw std::logic_error("Seifert path misses E_" + std::to_string(j));
            if (crosses(vs[i], vs[i + 1])) ++count;
            ++i;
        }
        z.push_back(count);
    }
    return z;
}

QuadrilateralSplit quadrilaterals(const YatTree& tree) {
    auto paths = seifert_paths(tree);
    auto es = e_edges(tree);
    const auto& c = tree.negcf.terms;
    auto split = [&](const SeifertPath& p) {
        auto used = path_edges(p);
        auto z = z_values(tree, p);
        std::vector<Quadrilateral> out;
        for (size_t j = 1; j <= c.size(); ++j) {
            Quadrilateral q{static_cast<int>(j), z[j - 1], false, 0};
            if (j == 1) {
                if (p.variant == PathVariant::Alternate) {
                    q.t = -c[0];
                } else if (q.z == 0) {
                    q.t = -c[0];
                } else if (q.z == 1) {
                    q.t = c[0];
                } else if (q.z == 2) {
                    q.t = c[0] - 2;
                } else {
                    throw std::logic_error("z_1 outside {0,1,2}");
                }
            } else {
                q.through_f = used.count(edge(es[j - 1].first, es[j].second)) > 0;
                if (!q.through_f) q.t = sign_pow(q.z - 1) * (c[j - 1] - 1);
                else q.t = sign_pow(q.z) * (c[j - 1] - 3);
            }
            out.push_back(q);
        }
        return out;
    };
    QuadrilateralSplit s;
    s.principal = split(paths[0]);
    if (paths.size() > 1) s.alternate = split(paths[1]);
    return s;
}

WritheResult writhe_quadrilateral(const Fraction& alpha) {
    YatTree tree = build_yat(normalize(alpha));
    auto s = quadrilaterals(tree);
    auto sum = [](const std::vector<Quadrilateral>& qs) {
        i64 t = 0;
        for (const auto& q : qs) t += q.t;
        return t;
    };
    WritheResult r{sum(s.principal), std::nullopt};
    if (!s.alternate.empty()) r.wr_pm = sum(s.alternate);
    return r;
}

namespace {

Fraction alpha_of(const std::vector<i64>& c) {
    return evaluate_negative(c).reciprocal();
}

// z_j(alpha_j): z_j computed in the ancestor triangle of alpha_j = 1/[c_1..c_j]^-
i64 z_own(const std::vector<i64>& c, size_t j) {
    std::vector<i64> head(c.begin(), c.begin() + j);
    YatTree t = build_yat(alpha_of(head));
    return z_values(t, seifert_paths(t)[0]).back();
}

struct Recursion {
    std::map<std::vector<i64>, WritheResult> memo;

    i64 pm(const WritheResult& r) {
        if (!r.wr_pm) throw std::logic_error("alternate writhe requested for a knot");
        return *r.wr_pm;
    }

    // wr_{+eps(n)}: the principal writhe for even n, the alternate one for odd n
    i64 eps(const WritheResult& r, i64 n) { return n % 2 == 0 ? r.wr : pm(r); }

    WritheResult run(const std::vector<i64>& c) {
        auto it = memo.find(c);
        if (it != memo.end()) return it->second;
        WritheResult r = compute(c);
        memo.emplace(c, r);
        return r;
    }

    WritheResult compute(const std::vector<i64>& c) {
        size_t l = c.size();
        FractionType ty = fraction_type(alpha_of(c));
        if (l == 1) {
            i64 c1 = c[0];
            WritheResult r{sign_pow(c1) * c1, std::nullopt};
            if (c1 % 2 == 0) r.wr_pm = -c1;
            return r;
        }
        if (l == 2) {
            i64 c1 = c[0], c2 = c[1];
            WritheResult r{sign_pow((c1 - 1) * c2) * c1 + sign_pow(c1) * c2 - 1, std::nullopt};
            if (c1 % 2 != 0 && c2 % 2 != 0) r.wr_pm = -c1 + c2 - 1;
            return r;
        }
        std::vector<i64> h1(c.begin(), c.end() - 1), h2(c.begin(), c.end() - 2);
        FractionType t1 = fraction_type(alpha_of(h1));
        i64 cl = c[l - 1], cl1 = c[l - 2];
        i64 ev_cl = cl % 2 == 0 ? 1 : 0, ev_cl1 = cl1 % 2 == 0 ? 1 : 0, od_cl = 1 - ev_cl;
        using FT = FractionType;
        WritheResult r{0, std::nullopt};
        if (t1 == FT::OneZero && ty == FT::OneOne) {
            r.wr = pm(run(h1)) + sign_pow(z_own(c, l - 1) + ev_cl + 1) * (cl - 1);
        } else if (t1 == FT::ZeroOne && ty == FT::OneOne) {
            r.wr = eps(run(h2), cl) + sign_pow(z_own(c, l - 2) + ev_cl1 + od_cl) * (-cl1 + cl + 2);
        } else if (t1 == FT::OneZero && ty == FT::ZeroOne) {
            r.wr = run(h1).wr + sign_pow(z_own(c, l - 1) + ev_cl) * (cl - 1);
        } else if (t1 == FT::OneOne && ty == FT::ZeroOne) {
            r.wr = run(h2).wr + sign_pow(z_own(c, l - 2) + ev_cl1) * (-cl1 + cl + 2);
        } else if (t1 == FT::ZeroOne && ty == FT::OneZero) {
            r.wr = run(h1).wr + sign_pow(z_own(c, l - 1) + ev_cl) * (cl - 1);
            r.wr_pm = eps(run(h2), cl - 1) + sign_pow(z_own(c, l - 2) + ev_cl1 + ev_cl) * (-cl1 + cl + 2);
        } else if (t1 == FT::OneOne && ty == FT::OneZero) {
            i64 z2 = z_own(c, l - 2);
            r.wr = run(h2).wr + sign_pow(z2 + ev_cl1) * (-cl1 + cl + 2);
            r.wr_pm = run(h1).wr + sign_pow(z2 + ev_cl1 + 1) * (cl - 1);
        } else {
            throw std::logic_error("consecutive fractions of the same type");
        }
        return r;
    }
};

}  // namespace

WritheResult writhe_recursive(const Fraction& alpha) {
    Fraction a = normalize(alpha);
    Recursion rec;
    return rec.run(negative_expand(a.reciprocal()).terms);
}

}  // namespace rj
