#pragma once

#include "rj/qrational.hpp"
#include "rj/writhe.hpp"

namespace rj {

struct JonesPair {
    Fraction alpha;
    LaurentPoly normalized;  // J_alpha(q)
    GridPoly original;       // V_alpha(t)
};

// q N_q + (1 - q) D_q. alpha < 1 is replaced by 1/alpha; 1 -> 1 and 1/0 -> q.
LaurentPoly jones_normalized(const Fraction& alpha);
// J_{a # b} = J_a + q^{ceil(N(a)/N(b))} J_b from J_1 = 1, J_inf = q
LaurentPoly jones_by_recursion(const Fraction& alpha);
// q^2 (a, x-a)_q - (q-1)(a, x)_q for alpha = x/a > 1
LaurentPoly jones_by_pairs(const Fraction& alpha);
// (a,x)_q == J_{x/a} + q (a-r, r)_q
bool pair_jones_identity(const Fraction& alpha);

// V_alpha(t) = (-1)^{wr+l} t^{(-3wr - 3l + 7l')/4} J_alpha(-t^{-1}), alpha > 1
GridPoly jones_original(const Fraction& alpha, i64 wr);
GridPoly jones_original(const Fraction& alpha);

JonesPair jones_pair(const Fraction& alpha);

}  // namespace rj
