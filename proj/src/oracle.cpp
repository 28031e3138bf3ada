#include "rj/oracle.hpp"

#include <numeric>

namespace rj {

namespace {

enum Slot { TL = 0, TR = 1, BL = 2, BR = 3 };
constexpr int kX[4] = {-1, 1, -1, 1};
constexpr int kY[4] = {1, 1, -1, -1};

int thru(int s) { return (s & ~3) | (3 - (s & 3)); }

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

const LaurentPoly kDelta = LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);

}  // namespace

LinkDiagram build_diagram(const Fraction& alpha) {
    if (alpha.is_infinite() || alpha.is_zero() || !(alpha < Fraction(1, 1)))
        throw std::invalid_argument("diagram needs 0 < alpha < 1, got " + alpha.str());
    LinkDiagram d;
    d.alpha = alpha;
    auto cf = regular_expand(alpha, Parity::Even).terms;
    d.twists.assign(cf.begin() + 1, cf.end());

    int c = 0;
    for (i64 a : d.twists) c += static_cast<int>(a);
    // nodes: slots 0..4c-1, top ends 4c..4c+3, bottom ends 4c+4..4c+7
    int top = 4 * c, bottom = 4 * c + 4, nodes = 4 * c + 8;
    std::vector<std::vector<int>> adj(nodes);
    auto link = [&](int u, int v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    };
    link(top + 0, top + 1);
    link(top + 2, top + 3);
    int cur[4] = {top, top + 1, top + 2, top + 3};
    int k = 0;
    for (size_t b = 0; b < d.twists.size(); ++b) {
        int p = b % 2 == 0 ? 1 : 0;
        for (i64 i = 0; i < d.twists[b]; ++i, ++k) {
            link(cur[p], 4 * k + TL);
            link(cur[p + 1], 4 * k + TR);
            cur[p] = 4 * k + BL;
            cur[p + 1] = 4 * k + BR;
            d.over.push_back(b % 2 == 0 ? '\\' : '/');
            d.position.push_back(p);
        }
    }
    for (int i = 0; i < 4; ++i) link(cur[i], bottom + i);
    link(bottom + 0, bottom + 1);
    link(bottom + 2, bottom + 3);

    auto is_slot = [&](int v) { return v < top; };
    auto walk = [&](int prev, int v) {
        while (!is_slot(v)) {
            int next = adj[v][0] == prev ? adj[v][1] : adj[v][0];
            prev = v;
            v = next;
        }
        return v;
    };
    d.wire.resize(4 * c);
    for (int s = 0; s < 4 * c; ++s) d.wire[s] = walk(s, adj[s][0]);

    // first crossing slot met going down from top end i
    auto below_top = [&](int i) {
        int t = top + i;
        int v = adj[t][0] == top + (i ^ 1) ? adj[t][1] : adj[t][0];
        return walk(t, v);
    };
    auto orient = [&](std::vector<std::pair<int, bool>> seeds) {
        std::vector<int> comp(4 * c, -1);
        std::vector<bool> entering(4 * c, false);
        int n = 0;
        for (auto [pos, down] : seeds) {
            int s = below_top(pos);
            if (comp[s] >= 0) continue;
            int start = down ? s : thru(s);
            int v = start;
            do {
                int o = thru(v);
                comp[v] = comp[o] = n;
                entering[v] = true;
                entering[o] = false;
                v = d.wire[o];
            } while (v != start);
            ++n;
        }
        return std::pair{entering, n};
    };
    auto [ent, n] = orient({{1, true}, {2, false}, {0, true}, {3, true}});
    d.entering = ent;
    d.components = n;
    if (n == 2) d.entering_alt = orient({{1, true}, {2, true}, {0, true}, {3, true}}).first;
    return d;
}

LaurentPoly kauffman_bracket(const LinkDiagram& d) {
    int n = d.crossings();
    if (n > 20) throw std::invalid_argument("state sum limited to 20 crossings, diagram has " + std::to_string(n));
    // arcs join slot pairs, so each state is a union of arc classes
    UnionFind arcs(4 * n);
    for (int s = 0; s < 4 * n; ++s) arcs.unite(s, d.wire[s]);
    std::vector<int> arc_of(4 * n), ids(4 * n, -1);
    int m = 0;
    for (int s = 0; s < 4 * n; ++s) {
        int r = arcs.find(s);
        if (ids[r] < 0) ids[r] = m++;
        arc_of[s] = ids[r];
    }
    // count[na][loops]
    std::vector<std::vector<i64>> count(n + 1, std::vector<i64>(m + 1, 0));
    UnionFind uf(m);
    for (std::uint32_t st = 0; st < (1u << n); ++st) {
        std::iota(uf.p.begin(), uf.p.end(), 0);
        int na = 0, loops = m;
        auto join = [&](int s1, int s2) {
            int a = uf.find(arc_of[s1]), b = uf.find(arc_of[s2]);
            if (a != b) {
                uf.p[a] = b;
                --loops;
            }
        };
        for (int k = 0; k < n; ++k) {
            bool a_smooth = !(st >> k & 1);
            na += a_smooth;
            bool horizontal = (d.over[k] == '\\') == a_smooth;
            if (horizontal) {
                join(4 * k + TL, 4 * k + TR);
                join(4 * k + BL, 4 * k + BR);
            } else {
                join(4 * k + TL, 4 * k + BL);
                join(4 * k + TR, 4 * k + BR);
            }
        }
        ++count[na][loops];
    }
    std::vector<LaurentPoly> dpow{LaurentPoly(1)};
    while (dpow.size() < count[0].size()) dpow.push_back(dpow.back() * kDelta);
    LaurentPoly out;
    for (int na = 0; na <= n; ++na)
        for (size_t loops = 1; loops < count[na].size(); ++loops)
            if (count[na][loops])
                out += LaurentPoly::monomial(2 * na - n, count[na][loops]) * dpow[loops - 1];
    return out;
}

LaurentPoly kauffman_bracket_transfer(const LinkDiagram& d) {
    // coefficients on the two crossingless matchings of four points:
    // m0 = {(0,1),(2,3)}, m1 = {(0,3),(1,2)}
    LaurentPoly m0(1), m1;
    const LaurentPoly a = LaurentPoly::monomial(1), ainv = LaurentPoly::monomial(-1);
    for (int k = 0; k < d.crossings(); ++k) {
        LaurentPoly e0, e1;
        if (d.position[k] == 1) {
            e1 = m0 + kDelta * m1;
        } else {
            e0 = kDelta * m0 + m1;
        }
        const LaurentPoly& we = d.over[k] == '\\' ? a : ainv;
        const LaurentPoly& wi = d.over[k] == '\\' ? ainv : a;
        m0 = we * e0 + wi * m0;
        m1 = we * e1 + wi * m1;
    }
    return kDelta * m0 + m1;
}

WritheResult diagram_writhe(const LinkDiagram& d) {
    auto total = [&](const std::vector<bool>& entering) {
        i64 w = 0;
        for (int k = 0; k < d.crossings(); ++k) {
            auto dir = [&](int s1, int s2) {
                int from = entering[4 * k + s1] ? s1 : s2, to = from == s1 ? s2 : s1;
                return std::pair{kX[to] - kX[from], kY[to] - kY[from]};
            };
            bool back = d.over[k] == '\\';
            auto o = back ? dir(TL, BR) : dir(TR, BL);
            auto u = back ? dir(TR, BL) : dir(TL, BR);
            w += o.first * u.second - o.second * u.first > 0 ? 1 : -1;
        }
        return w;
    };
    WritheResult r{total(d.entering), std::nullopt};
    if (d.entering_alt) r.wr_pm = total(*d.entering_alt);
    return r;
}

LaurentPoly normalized_from_original(const GridPoly& v) {
    if (v.is_zero()) throw std::invalid_argument("zero Jones polynomial");
    int h = v.top();
    i64 lead = v.coeff(h);
    if (lead != 1 && lead != -1) throw std::logic_error("leading coefficient of V is not a unit");
    LaurentPoly j;
    for (auto [key, c] : v.terms()) {
        if ((h - key) % 4 != 0) throw std::logic_error("V mixes exponent classes");
        int k = (h - key) / 4;
        j.add_term(k, c * lead * (k % 2 == 0 ? 1 : -1));
    }
    return j;
}

OracleJones oracle_jones(const Fraction& alpha, BracketMethod m) {
    LinkDiagram d = build_diagram(alpha);
    LaurentPoly br = m == BracketMethod::StateSum ? kauffman_bracket(d) : kauffman_bracket_transfer(d);
    i64 wr = diagram_writhe(d).wr;
    GridPoly v;
    // (-A^3)^{-wr} A^k = (-1)^wr A^{k - 3wr}, and A^e = t^{-e/4}
    i64 sign = wr % 2 == 0 ? 1 : -1;
    for (auto [e, c] : br.terms()) v.add_term(static_cast<int>(-(e - 3 * wr)), c * sign);
    return {v, normalized_from_original(v), wr};
}

}  // namespace rj
