#include "rj/quiver.hpp"

#include <bit>

namespace rj {

FenceQuiver build_quiver(const Fraction& alpha, QuiverOrientation o) {
    if (alpha.is_infinite() || alpha < Fraction(1, 1) || alpha == Fraction(1, 1))
        throw std::invalid_argument("quiver needs x/a > 1, got " + alpha.str());
    FenceQuiver g;
    g.blocks = regular_expand(alpha, Parity::Even).terms;
    std::vector<int> block_of;
    for (size_t b = 0; b < g.blocks.size(); ++b) {
        if (g.blocks[b] < 1) throw std::invalid_argument("even expansion of " + alpha.str() + " has a zero block");
        for (i64 k = 0; k < g.blocks[b]; ++k) block_of.push_back(static_cast<int>(b));
    }
    g.n = static_cast<int>(block_of.size());
    int forward = o == QuiverOrientation::OddBlocksForward ? 1 : 0;
    for (int i = 0; i + 1 < g.n; ++i) {
        if (block_of[i] % 2 == forward) g.arrows.push_back({i, i + 1});
        else g.arrows.push_back({i + 1, i});
    }
    return g;
}

std::vector<i64> closure_counts(const FenceQuiver& g) {
    // dp[in][k]: closures of vertices 0..i with vertex i in (in = 1) or out, k chosen
    std::vector<std::vector<i64>> out(1, std::vector<i64>(g.n + 1, 0)), in = out;
    out[0][0] = 1;
    in[0][1] = 1;
    auto dp_out = out[0], dp_in = in[0];
    for (int i = 1; i < g.n; ++i) {
        std::vector<i64> no(g.n + 1, 0), ni(g.n + 1, 0);
        bool forward = g.arrows[i - 1].first == i - 1;  // arrow i-1 -> i
        for (int k = 0; k <= g.n; ++k) {
            // i out: forbidden if i-1 in and arrow i-1 -> i
            no[k] = add_checked(dp_out[k], forward ? 0 : dp_in[k]);
            // i in: forbidden if i-1 out and arrow i -> i-1
            if (k > 0) ni[k] = add_checked(dp_in[k - 1], forward ? dp_out[k - 1] : 0);
        }
        dp_out = no;
        dp_in = ni;
    }
    std::vector<i64> r(g.n + 1);
    for (int k = 0; k <= g.n; ++k) r[k] = add_checked(dp_out[k], dp_in[k]);
    return r;
}

i64 count_closures(const FenceQuiver& g, int i) {
    if (i < 0 || i > g.n) throw std::out_of_range("closure size " + std::to_string(i) + " outside 0.." + std::to_string(g.n));
    return closure_counts(g)[i];
}

std::vector<i64> closure_counts_brute(const FenceQuiver& g) {
    if (g.n > 24) throw std::invalid_argument("brute-force closure count limited to 24 vertices");
    std::vector<i64> r(g.n + 1, 0);
    for (std::uint32_t m = 0; m < (1u << g.n); ++m) {
        bool ok = true;
        for (auto [u, v] : g.arrows)
            if ((m >> u & 1) && !(m >> v & 1)) {
                ok = false;
                break;
            }
        if (ok) ++r[std::popcount(m)];
    }
    return r;
}

}  // namespace rj
