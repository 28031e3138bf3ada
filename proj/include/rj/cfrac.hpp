#pragma once

#include <optional>
#include <vector>

#include "rj/arith.hpp"

namespace rj {

enum class Parity { Odd, Even };

// [a_1, a_2, ..., a_n] = a_1 + 1/(a_2 + 1/(...))
struct RegularCF {
    std::vector<i64> terms;
};

// [c_1, ..., c_l]^- = c_1 - 1/(c_2 - 1/(...))
struct NegativeCF {
    std::vector<i64> terms;

    int l() const { return static_cast<int>(terms.size()); }
    i64 lprime() const;  // sum (c_j - 2) + 1
    i64 wt() const;      // -sum (c_j - 2) + l - 1
};

enum class FractionType { OneOne, OneZero, ZeroOne };

const char* type_name(FractionType t);

RegularCF regular_expand(const Fraction& a, std::optional<Parity> parity = std::nullopt);
Fraction evaluate_regular(const RegularCF& cf);

NegativeCF negative_expand(const Fraction& a);
// accepts terms equal to 1 as well; throws arith_error on a zero denominator
Fraction evaluate_negative(const std::vector<i64>& terms);
inline Fraction evaluate_negative(const NegativeCF& cf) { return evaluate_negative(cf.terms); }

NegativeCF to_negative(const RegularCF& cf);
RegularCF to_regular(const NegativeCF& cf, std::optional<Parity> parity = std::nullopt);

bool farey_neighbors(const Fraction& a, const Fraction& b);
Fraction farey_sum(const Fraction& a, const Fraction& b);

struct Parents {
    Fraction left;   // smaller
    Fraction right;  // larger
};
Parents farey_parents(const Fraction& a);

struct SBStep {
    Fraction child;
    Fraction left;
    Fraction right;
};
// root 1/1 = 0/1 # 1/0 first, a last
std::vector<SBStep> stern_brocot_path(const Fraction& a);

FractionType fraction_type(const Fraction& a);
// type of the value [c_1..c_l]^- from the parity recursion alone
FractionType type_by_recursion(const NegativeCF& cf);

}  // namespace rj
