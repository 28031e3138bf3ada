#pragma once

#include <optional>
#include <vector>

#include "rj/yat.hpp"

namespace rj {

enum class PathVariant { Principal, Alternate };

struct SeifertPath {
    std::vector<Fraction> vertices;  // 1/0 down to alpha
    PathVariant variant;
};

struct WritheResult {
    i64 wr;
    std::optional<i64> wr_pm;  // present iff alpha is of 1/0 type
    friend bool operator==(const WritheResult&, const WritheResult&) = default;
};

// principal path first, then the alternate one when alpha is of 1/0 type
std::vector<SeifertPath> seifert_paths(const YatTree& tree);

// t(Delta) for each fundamental triangle, top-down
std::vector<int> triangle_signs(const YatTree& tree, const SeifertPath& path);

struct Quadrilateral {
    int j;
    i64 z;
    bool through_f;  // path uses F_j (always false for j = 1)
    i64 t;
};

struct QuadrilateralSplit {
    std::vector<Quadrilateral> principal;
    std::vector<Quadrilateral> alternate;  // empty unless alpha is of 1/0 type
};

// endpoints of E_j: (alpha_j, beta_j) for j = 0..l, with E_0 = (0/1, 1/0)
std::vector<std::pair<Fraction, Fraction>> e_edges(const YatTree& tree);
std::vector<i64> z_values(const YatTree& tree, const SeifertPath& path);
QuadrilateralSplit quadrilaterals(const YatTree& tree);

// alpha > 1 is replaced by 1/alpha
WritheResult writhe_sign_walk(const Fraction& alpha);
WritheResult writhe_quadrilateral(const Fraction& alpha);
WritheResult writhe_recursive(const Fraction& alpha);

}  // namespace rj
