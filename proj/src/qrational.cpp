#include "rj/qrational.hpp"

#include "rj/qint.hpp"

namespace rj {

QRational q_rational(const Fraction& alpha) {
    if (alpha.is_infinite()) return {alpha, LaurentPoly(1), LaurentPoly()};
    if (alpha < Fraction(1, 1))
        throw std::invalid_argument("q-rationals are defined here for fractions >= 1, got " + alpha.str());
    i64 x = alpha.num(), a = alpha.den();
    i64 r = x % a;
    return {alpha, q_pair(a, x - a), q_pair(a - r, r)};
}

std::pair<LaurentPoly, LaurentPoly> q_cf_evaluate(const NegativeCF& cf) {
    if (cf.terms.empty()) throw std::invalid_argument("empty continued fraction");
    LaurentPoly p = qint_of(cf.terms.back()), q(1);
    for (auto it = cf.terms.rbegin() + 1; it != cf.terms.rend(); ++it) {
        i64 c = *it;
        // [c]_q - q^{c-1} q/p  ->  ([c]_q p - q^{c-1} q) / p
        LaurentPoly np = qint_of(c) * p - q.shifted(static_cast<int>(c - 1));
        q = p;
        p = np;
    }
    return {p, q};
}

i64 q_farey_weight(const Fraction& alpha, const Fraction& beta) {
    return ceil_div(alpha.num(), beta.num());
}

QRational q_farey_sum(const QRational& A0, const QRational& B0) {
    // alpha is the smaller of the two
    const QRational& A = A0.source < B0.source ? A0 : B0;
    const QRational& B = A0.source < B0.source ? B0 : A0;
    if (!farey_neighbors(A.source, B.source))
        throw std::invalid_argument(A.source.str() + " and " + B.source.str() + " are not Farey neighbors");
    if (A.source < Fraction(1, 1) || B.source < Fraction(1, 1))
        throw std::invalid_argument("q-Farey sum needs both sources >= 1");
    int w = static_cast<int>(q_farey_weight(A.source, B.source));
    return {farey_sum(A.source, B.source),
            A.numerator + B.numerator.shifted(w),
            A.denominator + B.denominator.shifted(w)};
}

}  // namespace rj
