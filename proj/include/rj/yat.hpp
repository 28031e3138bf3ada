#pragma once

#include <vector>

#include "rj/cfrac.hpp"

namespace rj {

struct FundamentalTriangle {
    Fraction apex;   // beta
    Fraction left;   // beta_L, the smaller parent
    Fraction right;  // beta_R
    int index;       // 0 for the triangle on the edge 0/1 -- 1/0
};

struct YatTree {
    Fraction target;
    NegativeCF negcf;  // of 1/target
    std::vector<FundamentalTriangle> triangles;
    std::vector<Fraction> left_side;   // vertices below target, top-down
    std::vector<Fraction> right_side;  // vertices above target, top-down

    int l() const { return negcf.l(); }
    i64 lprime() const { return negcf.lprime(); }

    // 1/0 -> 0, 0/1 -> 1, apex of triangle i -> i + 2; -1 if absent
    int order(const Fraction& v) const;
    std::vector<Fraction> vertices() const;  // in creation order
    bool on_left(const Fraction& v) const { return v < target; }
};

YatTree build_yat(const Fraction& alpha);

// sum over upward paths from alpha to 0/1 or 1/1 of edge weights -t^{-1} (left) and -t (right)
LaurentPoly bracket_path_sum(const YatTree& tree);
// same by explicit path enumeration
LaurentPoly bracket_path_sum_enumerated(const YatTree& tree);

// (-1)^{wt~} t^{3 wt~/4} <Gamma>, wt~ = -wr - wt
GridPoly bracket_to_jones(const YatTree& tree, i64 wr);

}  // namespace rj
