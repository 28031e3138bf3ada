#pragma once

#include "rj/arith.hpp"

namespace rj {

struct CoprimePair {
    i64 a, b;
    CoprimePair(i64 a, i64 b);  // gcd(a,b) = 1; a zero entry only next to a 1
};

// (a,b)_q by the Euclidean recursion; (1,n)_q = (n,1)_q = [1+n]_q
LaurentPoly q_pair(const CoprimePair& p);
inline LaurentPoly q_pair(i64 a, i64 b) { return q_pair(CoprimePair(a, b)); }

int q_pair_degree(i64 a, i64 b);

// (a,x)_q (+) (b,y)_q = (a+b, x+y)_q for Farey neighbors x/a < y/b (ay - bx = 1)
i64 weighted_sum_exponent(i64 a, i64 x, i64 b, i64 y);
LaurentPoly q_pair_weighted_sum(i64 a, i64 x, const LaurentPoly& pax,
                                i64 b, i64 y, const LaurentPoly& pby);

// (x,a)_q obtained from (a,x)_q by exponent reversal
LaurentPoly q_pair_reverse(const LaurentPoly& pax);

}  // namespace rj
