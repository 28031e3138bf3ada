#include "rj/cfrac.hpp"

#include <algorithm>

namespace rj {

i64 NegativeCF::lprime() const {
    i64 s = 1;
    for (i64 c : terms) s += c - 2;
    return s;
}

i64 NegativeCF::wt() const {
    i64 s = 0;
    for (i64 c : terms) s -= c - 2;
    return s + l() - 1;
}

const char* type_name(FractionType t) {
    switch (t) {
        case FractionType::OneOne: return "1/1";
        case FractionType::OneZero: return "1/0";
        case FractionType::ZeroOne: return "0/1";
    }
    return "?";
}

RegularCF regular_expand(const Fraction& a, std::optional<Parity> parity) {
    if (a.is_infinite() || a.is_zero()) throw std::invalid_argument("regular expansion needs a finite positive fraction");
    RegularCF cf;
    i64 x = a.num(), d = a.den();
    while (d) {
        cf.terms.push_back(x / d);
        i64 r = x % d;
        x = d;
        d = r;
    }
    if (!parity) return cf;
    bool want_odd = *parity == Parity::Odd;
    bool is_odd = cf.terms.size() % 2 == 1;
    if (want_odd == is_odd) return cf;
    auto& t = cf.terms;
    if (t.back() >= 2) {
        t.back() -= 1;
        t.push_back(1);
    } else {
        // last term is 1 only for a = 1/1 written as [1]; [1] has no shorter form
        if (t.size() < 2) throw std::invalid_argument("no expansion of " + a.str() + " with the requested parity");
        t.pop_back();
        t.back() += 1;
    }
    return cf;
}

Fraction evaluate_regular(const RegularCF& cf) {
    if (cf.terms.empty()) throw std::invalid_argument("empty continued fraction");
    // convergent recurrence
    i64 p0 = 1, q0 = 0, p1 = cf.terms[0], q1 = 1;
    for (size_t i = 1; i < cf.terms.size(); ++i) {
        i64 a = cf.terms[i];
        i64 p2 = add_checked(mul_checked(a, p1), p0);
        i64 q2 = add_checked(mul_checked(a, q1), q0);
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    }
    return Fraction::reduced(p1, q1);
}

NegativeCF negative_expand(const Fraction& a) {
    if (a.is_infinite() || a <= Fraction(1, 1)) throw std::invalid_argument("negative expansion needs a finite fraction > 1, got " + a.str());
    NegativeCF cf;
    i64 x = a.num(), d = a.den();
    for (;;) {
        i64 c = ceil_div(x, d);
        cf.terms.push_back(c);
        // a <- 1/(c - a) = d/(c d - x)
        i64 nd = c * d - x;
        if (nd == 0) break;
        x = d;
        d = nd;
    }
    return cf;
}

Fraction evaluate_negative(const std::vector<i64>& terms) {
    if (terms.empty()) throw std::invalid_argument("empty continued fraction");
    // bottom-up: value = p/q
    i64 p = terms.back(), q = 1;
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
        if (p == 0) throw arith_error("zero denominator in negative continued fraction");
        // c - q/p = (c p - q)/p
        i64 np = sub_checked(mul_checked(*it, p), q);
        q = p;
        p = np;
    }
    if (p < 0 || q < 0) {
        p = -p;
        q = -q;
    }
    if (p < 0 || q < 0) throw arith_error("negative value in negative continued fraction");
    return Fraction::reduced(p, q);
}

NegativeCF to_negative(const RegularCF& cf) {
    return negative_expand(evaluate_regular(cf));
}

RegularCF to_regular(const NegativeCF& cf, std::optional<Parity> parity) {
    return regular_expand(evaluate_negative(cf), parity);
}

bool farey_neighbors(const Fraction& a, const Fraction& b) {
    __int128 det = static_cast<__int128>(a.den()) * b.num() - static_cast<__int128>(b.den()) * a.num();
    return det == 1 || det == -1;
}

Fraction farey_sum(const Fraction& a, const Fraction& b) {
    return Fraction(add_checked(a.num(), b.num()), add_checked(a.den(), b.den()));
}

Parents farey_parents(const Fraction& a) {
    if (a.is_infinite() || a.is_zero()) throw std::invalid_argument("0/1 and 1/0 have no parents");
    RegularCF cf = regular_expand(a);
    Fraction p1, p2;
    // drop the last term, and decrement it
    if (cf.terms.size() == 1) {
        p1 = Fraction::infinity();
    } else {
        RegularCF head{std::vector<i64>(cf.terms.begin(), cf.terms.end() - 1)};
        p1 = evaluate_regular(head);
    }
    RegularCF dec = cf;
    dec.terms.back() -= 1;
    if (dec.terms.back() == 0) {
        // only for integers n = [n] with n = 1 handled above; [.., 1] never occurs in canonical form
        dec.terms.pop_back();
        if (dec.terms.empty()) {
            p2 = Fraction(0, 1);
        } else {
            // [a_0; ..., a_{n-1}, 0] is not canonical; value is [a_0; ..., a_{n-2}] when n >= 2
            throw std::logic_error("unexpected continued fraction shape");
        }
    } else {
        p2 = evaluate_regular(dec);
    }
    if (p1 < p2) return {p1, p2};
    return {p2, p1};
}

std::vector<SBStep> stern_brocot_path(const Fraction& a) {
    if (a.is_infinite() || a.is_zero()) throw std::invalid_argument("0/1 and 1/0 have no parents");
    std::vector<SBStep> out;
    Fraction cur = a;
    for (;;) {
        Parents p = farey_parents(cur);
        out.push_back({cur, p.left, p.right});
        if (cur == Fraction(1, 1)) break;
        // the younger parent is the one with the larger height num + den
        auto h = [](const Fraction& f) { return f.num() + f.den(); };
        cur = h(p.left) > h(p.right) ? p.left : p.right;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

FractionType fraction_type(const Fraction& a) {
    bool n = a.num() % 2, d = a.den() % 2;
    if (n && d) return FractionType::OneOne;
    if (n) return FractionType::OneZero;
    return FractionType::ZeroOne;
}

FractionType type_by_recursion(const NegativeCF& cf) {
    const auto& c = cf.terms;
    if (c.empty()) throw std::invalid_argument("empty continued fraction");
    auto odd = [](i64 v) { return static_cast<int>(((v % 2) + 2) % 2); };
    int n1 = odd(c[0]), d1 = 1;
    int n, d;
    if (c.size() == 1) {
        n = n1;
        d = d1;
    } else {
        int n2 = 1 - odd(c[0] * c[1]), d2 = odd(c[1]);
        int np = n1, dp = d1;
        n = n2;
        d = d2;
        for (size_t j = 2; j < c.size(); ++j) {
            int nn = (n * odd(c[j]) + np) % 2;
            int dn = (d * odd(c[j]) + dp) % 2;
            np = n; dp = d;
            n = nn; d = dn;
        }
    }
    if (n && d) return FractionType::OneOne;
    if (n) return FractionType::OneZero;
    return FractionType::ZeroOne;
}

}  // namespace rj
