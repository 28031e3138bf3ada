#include "rj/qint.hpp"

#include <unordered_map>

namespace rj {

CoprimePair::CoprimePair(i64 a_, i64 b_) : a(a_), b(b_) {
    if (a < 0 || b < 0) throw std::invalid_argument("pair entries must be nonnegative");
    if ((a == 0 && b != 1) || (b == 0 && a != 1))
        throw std::invalid_argument("zero entry is only allowed in (1,0) and (0,1)");
    if (gcd64(a, b) != 1)
        throw std::invalid_argument("pair (" + std::to_string(a) + "," + std::to_string(b) + ") is not coprime");
}

namespace {

struct PairHash {
    size_t operator()(const std::pair<i64, i64>& p) const {
        return std::hash<i64>()(p.first * 1000003 + p.second);
    }
};

using Memo = std::unordered_map<std::pair<i64, i64>, LaurentPoly, PairHash>;

const LaurentPoly& pair_rec(i64 a, i64 b, Memo& memo) {
    auto key = std::make_pair(a, b);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    LaurentPoly r;
    if (a == 1) {
        r = qint_of(1 + b);
    } else if (b == 1) {
        r = qint_of(1 + a);
    } else if (a < b) {
        i64 rem = b % a;
        r = pair_rec(a - rem, rem, memo);
        r += pair_rec(a, b - a, memo).shifted(1);
    } else {
        i64 rem = a % b;
        r = pair_rec(a - b, b, memo);
        r += pair_rec(rem, b - rem, memo).shifted(static_cast<int>(ceil_div(a, b)));
    }
    return memo.emplace(key, std::move(r)).first->second;
}

}  // namespace

LaurentPoly q_pair(const CoprimePair& p) {
    Memo memo;
    return pair_rec(p.a, p.b, memo);
}

int q_pair_degree(i64 a, i64 b) {
    return q_pair(a, b).degree();
}

i64 weighted_sum_exponent(i64 a, i64 x, i64 b, i64 y) {
    __int128 det = static_cast<__int128>(a) * y - static_cast<__int128>(b) * x;
    if (det != 1) throw std::invalid_argument("x/a and y/b are not Farey neighbors (need ay - bx = 1)");
    if (a < 1 || x < 1 || b < 1 || y < 1) throw std::invalid_argument("weighted sum needs positive pairs");
    if (1 <= a && a <= x) return ceil_div(x, y);
    if (1 <= y && y <= b) return floor_div(x, y) + 1;
    throw std::invalid_argument("weighted sum needs 1 <= a <= x or 1 <= y <= b");
}

LaurentPoly q_pair_weighted_sum(i64 a, i64 x, const LaurentPoly& pax,
                                i64 b, i64 y, const LaurentPoly& pby) {
    i64 w = weighted_sum_exponent(a, x, b, y);
    return pax + pby.shifted(static_cast<int>(w));
}

LaurentPoly q_pair_reverse(const LaurentPoly& pax) {
    return pax.inverted().shifted(pax.degree());
}

}  // namespace rj
