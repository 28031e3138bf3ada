#pragma once

#include <utility>

#include "rj/cfrac.hpp"

namespace rj {

struct QRational {
    Fraction source;
    LaurentPoly numerator;    // N_q
    LaurentPoly denominator;  // D_q
};

// alpha >= 1 or 1/0. N_q(x/a) = (a, x-a)_q, D_q(x/a) = (a-r, r)_q with r = x mod a.
QRational q_rational(const Fraction& alpha);

// Unreduced bottom-up evaluation of [c_1..c_l]^-_q, no polynomial division.
std::pair<LaurentPoly, LaurentPoly> q_cf_evaluate(const NegativeCF& cf);

// weight ceil(N(alpha)/N(beta)); alpha < beta, beta may be 1/0
i64 q_farey_weight(const Fraction& alpha, const Fraction& beta);
QRational q_farey_sum(const QRational& A, const QRational& B);

}  // namespace rj
