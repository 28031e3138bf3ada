#pragma once

#include <optional>
#include <vector>

#include "rj/writhe.hpp"

namespace rj {

// Vertical 4-plat of alpha in (0,1). Twist box b acts on strands (1,2) for even b
// and (0,1) for odd b; caps join strands (0,1) and (2,3) at top and bottom.
// Crossing slots are numbered 4k + {TL, TR, BL, BR}.
struct LinkDiagram {
    Fraction alpha;
    std::vector<i64> twists;        // odd expansion a_1..a_n, alpha = [0, a_1, ..., a_n]
    std::vector<char> over;         // '\\' or '/' per crossing: direction of the over-strand
    std::vector<int> position;      // leftmost strand touched by each crossing
    std::vector<int> wire;          // slot -> slot at the other end of its arc
    int components = 0;
    std::vector<bool> entering;                     // principal orientation
    std::optional<std::vector<bool>> entering_alt;  // alternate, two-component case only

    int crossings() const { return static_cast<int>(over.size()); }
};

LinkDiagram build_diagram(const Fraction& alpha);

// Kauffman bracket in A, normalized so that the unknot is 1.
LaurentPoly kauffman_bracket(const LinkDiagram& d);           // state sum, at most 20 crossings
LaurentPoly kauffman_bracket_transfer(const LinkDiagram& d);  // two-dimensional transfer vector

WritheResult diagram_writhe(const LinkDiagram& d);

enum class BracketMethod { StateSum, Transfer };

struct OracleJones {
    GridPoly v;
    LaurentPoly j;
    i64 wr;
};

// V = (-A^3)^{-wr} <D> with t = A^{-4}; J from V by stripping the leading term and t = -q^{-1}
OracleJones oracle_jones(const Fraction& alpha, BracketMethod m = BracketMethod::Transfer);
LaurentPoly normalized_from_original(const GridPoly& v);

}  // namespace rj
