#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace rj {

using i64 = std::int64_t;

struct arith_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Checked 64-bit helpers. Overflow throws instead of wrapping.
i64 add_checked(i64 a, i64 b);
i64 sub_checked(i64 a, i64 b);
i64 mul_checked(i64 a, i64 b);

i64 gcd64(i64 a, i64 b);
i64 floor_div(i64 a, i64 b);
i64 ceil_div(i64 a, i64 b);

// Nonnegative irreducible fraction; 1/0 is infinity.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    Fraction(i64 num, i64 den);  // throws unless irreducible and nonnegative

    static Fraction reduced(i64 num, i64 den);
    static Fraction infinity() { return Fraction(1, 0); }

    i64 num() const { return num_; }
    i64 den() const { return den_; }
    bool is_infinite() const { return den_ == 0; }
    bool is_zero() const { return num_ == 0; }

    Fraction reciprocal() const { return Fraction(den_, num_); }

    // floor and ceiling of a finite fraction
    i64 floor() const;
    i64 ceil() const;

    std::string str() const;

    friend bool operator==(const Fraction&, const Fraction&) = default;
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

private:
    i64 num_, den_;
};

Fraction parse_fraction(const std::string& s);  // "p/q" or "p"; no reduction

// Sparse Laurent polynomial with integer coefficients.
class LaurentPoly {
public:
    using Terms = std::map<int, i64>;

    LaurentPoly() = default;
    explicit LaurentPoly(i64 c) { if (c) t_[0] = c; }
    static LaurentPoly monomial(int e, i64 c = 1);
    static LaurentPoly from_coeffs(std::initializer_list<i64> cs, int low = 0);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    i64 coeff(int e) const;
    int degree() const;   // throws on zero
    int lowest() const;   // throws on zero
    i64 at_one() const;

    LaurentPoly shifted(int k) const;          // multiply by q^k
    LaurentPoly inverted() const;              // q -> q^{-1}
    LaurentPoly operator-() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    void add_term(int e, i64 c);

    std::string str(const std::string& var = "q") const;

private:
    Terms t_;
};

// [n]_q = 1 + q + ... + q^{n-1}, [0]_q = 0
LaurentPoly qint_of(i64 n);

// Polynomial on the quarter-integer grid: key k stands for t^{k/4}.
class GridPoly {
public:
    using Terms = std::map<int, i64>;

    GridPoly() = default;
    static GridPoly from_laurent(const LaurentPoly& p, int scale, int offset = 0);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    i64 coeff(int quarter) const;
    int top() const;     // highest quarter exponent
    int bottom() const;  // lowest quarter exponent
    void add_term(int quarter, i64 c);

    GridPoly shifted(int quarters) const;
    GridPoly operator-() const;
    bool on_half_grid() const;     // every key even
    bool on_integer_grid() const;  // every key divisible by 4

    friend bool operator==(const GridPoly&, const GridPoly&) = default;

    std::string str(const std::string& var = "t") const;

private:
    Terms t_;
};

// q -> -t^{-1}: q^k becomes (-1)^k t^{-k}
GridPoly substitute_neg_inverse(const LaurentPoly& p);

}  // namespace rj
