#pragma once

#include <utility>
#include <vector>

#include "rj/cfrac.hpp"

namespace rj {

enum class QuiverOrientation {
    OddBlocksForward,   // arrow i -> i+1 when vertex i sits in block 1, 3, 5, ... (0-based)
    EvenBlocksForward,
};

struct FenceQuiver {
    int n = 0;                             // vertices 0..n-1 on a path
    std::vector<i64> blocks;               // even regular expansion of x/a
    std::vector<std::pair<int, int>> arrows;  // (from, to), one per path edge
};

// default orientation is the one whose closures count the coefficients of (a,x)_q
FenceQuiver build_quiver(const Fraction& alpha,
                         QuiverOrientation o = QuiverOrientation::OddBlocksForward);

// number of i-vertex subsets with no arrow leaving them
i64 count_closures(const FenceQuiver& g, int i);
std::vector<i64> closure_counts(const FenceQuiver& g);
std::vector<i64> closure_counts_brute(const FenceQuiver& g);  // n <= 24

}  // namespace rj
