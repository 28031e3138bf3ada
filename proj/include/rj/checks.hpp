#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rj/arith.hpp"

namespace rj {

struct CheckReport {
    explicit CheckReport(std::string n) : name(std::move(n)) {}

    std::string name;
    i64 checked = 0;
    i64 failures = 0;
    std::string first_failure;  // empty when nothing failed

    bool ok() const { return failures == 0 && checked > 0; }
    // records one case; msg is only built for the first failure
    void expect(bool cond, const std::function<std::string()>& msg);
};

struct CheckLimits {
    i64 identity_max_sum = 60;   // a + x for pair identities and Jones methods
    i64 writhe_max_den = 100;
    i64 oracle_max_crossings = 14;
    i64 transfer_max_den = 100;
    i64 quiver_max_sum = 40;
    int quiver_brute_max = 16;
};

CheckReport check_golden_values();
CheckReport check_21_13_regression();
CheckReport check_pair_identities(i64 max_sum);
CheckReport check_jones_methods(i64 max_sum);
CheckReport check_writhe_methods(i64 max_den);
CheckReport check_oracle(i64 max_crossings, i64 max_den);
CheckReport check_quiver(i64 max_sum, int brute_max);

std::vector<CheckReport> run_all_checks(const CheckLimits& lim);

// coprime (a, x) with 1 <= a <= x and a + x <= max_sum, ordered by (a + x, a)
std::vector<std::pair<i64, i64>> coprime_pairs(i64 max_sum);
// fractions in (0,1) with denominator <= max_den, ordered by (denominator, numerator)
std::vector<Fraction> unit_fractions(i64 max_den);

// the golden polynomials used by the checks
GridPoly golden_v_12_5();
GridPoly golden_v_21_13();
GridPoly golden_v_16_9();

}  // namespace rj
