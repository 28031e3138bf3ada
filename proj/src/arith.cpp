#include "rj/arith.hpp"

#include <charconv>
#include <sstream>

namespace rj {

i64 add_checked(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw arith_error("integer overflow in addition");
    return r;
}

i64 sub_checked(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw arith_error("integer overflow in subtraction");
    return r;
}

i64 mul_checked(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw arith_error("integer overflow in multiplication");
    return r;
}

i64 gcd64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 floor_div(i64 a, i64 b) {
    if (b == 0) throw arith_error("division by zero");
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i64 ceil_div(i64 a, i64 b) {
    if (b == 0) throw arith_error("division by zero");
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

Fraction::Fraction(i64 num, i64 den) : num_(num), den_(den) {
    if (num < 0 || den < 0) throw std::invalid_argument("fraction parts must be nonnegative");
    if (num == 0 && den == 0) throw std::invalid_argument("0/0 is not a fraction");
    if (gcd64(num, den) != 1) throw std::invalid_argument("fraction " + std::to_string(num) + "/" + std::to_string(den) + " is not irreducible");
}

Fraction Fraction::reduced(i64 num, i64 den) {
    i64 g = gcd64(num, den);
    if (g == 0) throw std::invalid_argument("0/0 is not a fraction");
    return Fraction(num / g, den / g);
}

i64 Fraction::floor() const {
    if (is_infinite()) throw arith_error("floor of infinity");
    return num_ / den_;
}

i64 Fraction::ceil() const {
    if (is_infinite()) throw arith_error("ceiling of infinity");
    return ceil_div(num_, den_);
}

std::string Fraction::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    // cross multiplication works for 1/0 too: it compares as larger than any finite value
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

static i64 parse_int(const std::string& s, const std::string& whole) {
    i64 v = 0;
    if (s.empty()) throw std::invalid_argument("malformed fraction '" + whole + "'");
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw std::invalid_argument("malformed fraction '" + whole + "'");
    return v;
}

Fraction parse_fraction(const std::string& s) {
    auto slash = s.find('/');
    i64 n, d = 1;
    if (slash == std::string::npos) {
        n = parse_int(s, s);
    } else {
        n = parse_int(s.substr(0, slash), s);
        d = parse_int(s.substr(slash + 1), s);
    }
    if (n < 0 || d < 0) throw std::invalid_argument("negative fraction '" + s + "'");
    if (n == 0 && d == 0) throw std::invalid_argument("0/0 is not a fraction");
    if (gcd64(n, d) != 1) throw std::invalid_argument("reducible fraction '" + s + "'");
    return Fraction(n, d);
}

// ---- LaurentPoly ----

LaurentPoly LaurentPoly::monomial(int e, i64 c) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::from_coeffs(std::initializer_list<i64> cs, int low) {
    LaurentPoly p;
    int e = low;
    for (i64 c : cs) p.add_term(e++, c);
    return p;
}

void LaurentPoly::add_term(int e, i64 c) {
    if (c == 0) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, c);
        return;
    }
    it->second = add_checked(it->second, c);
    if (it->second == 0) t_.erase(it);
}

i64 LaurentPoly::coeff(int e) const {
    auto it = t_.find(e);
    return it == t_.end() ? 0 : it->second;
}

int LaurentPoly::degree() const {
    if (t_.empty()) throw arith_error("degree of the zero polynomial");
    return t_.rbegin()->first;
}

int LaurentPoly::lowest() const {
    if (t_.empty()) throw arith_error("lowest exponent of the zero polynomial");
    return t_.begin()->first;
}

i64 LaurentPoly::at_one() const {
    i64 s = 0;
    for (auto& [e, c] : t_) s = add_checked(s, c);
    return s;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (auto& [e, c] : t_) r.t_.emplace(e + k, c);
    return r;
}

LaurentPoly LaurentPoly::inverted() const {
    LaurentPoly r;
    for (auto& [e, c] : t_) r.t_.emplace(-e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto& [e, c] : t_) r.t_.emplace(e, sub_checked(0, c));
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.t_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.t_) add_term(e, sub_checked(0, c));
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto& [ea, ca] : a.t_)
        for (auto& [eb, cb] : b.t_) r.add_term(ea + eb, mul_checked(ca, cb));
    return r;
}

namespace {

// shared renderer; exp_text turns a nonzero key into the text after the variable
template <class Terms, class ExpText>
std::string render(const Terms& t, const std::string& var, ExpText exp_text) {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : t) {
        i64 mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag;
        os << var << exp_text(k);
    }
    return os.str();
}

}  // namespace

std::string LaurentPoly::str(const std::string& var) const {
    return render(t_, var, [](int e) -> std::string {
        if (e == 1) return "";
        return "^" + std::to_string(e);
    });
}

LaurentPoly qint_of(i64 n) {
    if (n < 0) throw std::invalid_argument("q-integer of a negative number");
    LaurentPoly p;
    for (i64 i = 0; i < n; ++i) p.add_term(static_cast<int>(i), 1);
    return p;
}

// ---- GridPoly ----

GridPoly GridPoly::from_laurent(const LaurentPoly& p, int scale, int offset) {
    GridPoly g;
    for (auto& [e, c] : p.terms()) g.add_term(e * scale + offset, c);
    return g;
}

void GridPoly::add_term(int k, i64 c) {
    if (c == 0) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_.emplace(k, c);
        return;
    }
    it->second = add_checked(it->second, c);
    if (it->second == 0) t_.erase(it);
}

i64 GridPoly::coeff(int k) const {
    auto it = t_.find(k);
    return it == t_.end() ? 0 : it->second;
}

int GridPoly::top() const {
    if (t_.empty()) throw arith_error("degree of the zero polynomial");
    return t_.rbegin()->first;
}

int GridPoly::bottom() const {
    if (t_.empty()) throw arith_error("lowest exponent of the zero polynomial");
    return t_.begin()->first;
}

GridPoly GridPoly::shifted(int k) const {
    GridPoly r;
    for (auto& [e, c] : t_) r.t_.emplace(e + k, c);
    return r;
}

GridPoly GridPoly::operator-() const {
    GridPoly r;
    for (auto& [e, c] : t_) r.t_.emplace(e, sub_checked(0, c));
    return r;
}

bool GridPoly::on_half_grid() const {
    for (auto& [k, c] : t_)
        if (k % 2 != 0) return false;
    return true;
}

bool GridPoly::on_integer_grid() const {
    for (auto& [k, c] : t_)
        if (k % 4 != 0) return false;
    return true;
}

std::string GridPoly::str(const std::string& var) const {
    return render(t_, var, [](int k) -> std::string {
        if (k % 4 == 0) {
            int e = k / 4;
            if (e == 1) return "";
            return "^" + std::to_string(e);
        }
        if (k % 2 == 0) return "^(" + std::to_string(k / 2) + "/2)";
        return "^(" + std::to_string(k) + "/4)";
    });
}

GridPoly substitute_neg_inverse(const LaurentPoly& p) {
    GridPoly g;
    for (auto& [e, c] : p.terms()) g.add_term(-4 * e, (e % 2 == 0) ? c : sub_checked(0, c));
    return g;
}

}  // namespace rj
