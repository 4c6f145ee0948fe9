#include "holant/algebra.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace holant {

AlgebraicNumber::AlgebraicNumber(mpq_class c0, mpq_class c1, mpq_class c2, mpq_class c3) {
    c_[0] = std::move(c0);
    c_[1] = std::move(c1);
    c_[2] = std::move(c2);
    c_[3] = std::move(c3);
    for (auto& q : c_) q.canonicalize();
}

AlgebraicNumber AlgebraicNumber::zeta() { return {0, 1, 0, 0}; }
AlgebraicNumber AlgebraicNumber::i() { return {0, 0, 1, 0}; }
AlgebraicNumber AlgebraicNumber::sqrt2() { return {0, 1, 0, -1}; }

AlgebraicNumber AlgebraicNumber::zeta_pow(long k) {
    long r = ((k % 8) + 8) % 8;
    AlgebraicNumber out;
    out.c_[r % 4] = r < 4 ? 1 : -1;
    return out;
}

AlgebraicNumber AlgebraicNumber::rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    mpq_class q(num, den);
    q.canonicalize();
    return AlgebraicNumber(q);
}

bool AlgebraicNumber::is_zero() const {
    return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool AlgebraicNumber::is_one() const {
    return c_[0] == 1 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool AlgebraicNumber::is_rational() const {
    return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

AlgebraicNumber AlgebraicNumber::operator-() const {
    AlgebraicNumber r;
    for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
    return r;
}

AlgebraicNumber& AlgebraicNumber::operator+=(const AlgebraicNumber& o) {
    for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
}

AlgebraicNumber& AlgebraicNumber::operator-=(const AlgebraicNumber& o) {
    for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
}

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    AlgebraicNumber r;
    if (a.is_rational()) {
        if (sgn(a.c_[0]) == 0) return r;
        for (int k = 0; k < 4; ++k)
            if (sgn(b.c_[k]) != 0) r.c_[k] = a.c_[0] * b.c_[k];
        return r;
    }
    if (b.is_rational()) return b * a;
    mpq_class t;
    for (int x = 0; x < 4; ++x) {
        if (sgn(a.c_[x]) == 0) continue;
        for (int y = 0; y < 4; ++y) {
            if (sgn(b.c_[y]) == 0) continue;
            t = a.c_[x] * b.c_[y];
            int d = x + y;
            if (d < 4)
                r.c_[d] += t;
            else
                r.c_[d - 4] -= t;
        }
    }
    return r;
}

AlgebraicNumber& AlgebraicNumber::operator*=(const AlgebraicNumber& o) {
    *this = *this * o;
    return *this;
}

AlgebraicNumber& AlgebraicNumber::operator/=(const AlgebraicNumber& o) {
    *this = *this * o.inverse();
    return *this;
}

AlgebraicNumber AlgebraicNumber::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return AlgebraicNumber(mpq_class(1) / c_[0]);
    // Column j of m is the coefficient vector of (*this) * w^j; solve m x = e0.
    std::array<std::array<mpq_class, 5>, 4> m;
    for (int j = 0; j < 4; ++j) {
        AlgebraicNumber col = *this * zeta_pow(j);
        for (int r = 0; r < 4; ++r) m[r][j] = col.c_[r];
    }
    for (int r = 0; r < 4; ++r) m[r][4] = r == 0 ? 1 : 0;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        while (piv < 4 && sgn(m[piv][col]) == 0) ++piv;
        std::swap(m[piv], m[col]);
        mpq_class inv = mpq_class(1) / m[col][col];
        for (int k = col; k < 5; ++k) m[col][k] *= inv;
        for (int r = 0; r < 4; ++r) {
            if (r == col || sgn(m[r][col]) == 0) continue;
            mpq_class f = m[r][col];
            for (int k = col; k < 5; ++k) m[r][k] -= f * m[col][k];
        }
    }
    return {m[0][4], m[1][4], m[2][4], m[3][4]};
}

AlgebraicNumber AlgebraicNumber::conj() const {
    // w -> w^-1 = -w^3, w^2 -> -w^2, w^3 -> -w.
    return {c_[0], -c_[3], -c_[2], -c_[1]};
}

AlgebraicNumber AlgebraicNumber::norm_sq() const { return *this * conj(); }

AlgebraicNumber AlgebraicNumber::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    AlgebraicNumber result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

bool lex_less(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    for (int k = 0; k < 4; ++k) {
        int c = cmp(a.c_[k], b.c_[k]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string AlgebraicNumber::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = 0; k < 4; ++k) {
        const mpq_class& q = c_[k];
        if (sgn(q) == 0) continue;
        mpq_class mag = abs(q);
        if (out.empty()) {
            if (sgn(q) < 0) out += "-";
        } else {
            out += sgn(q) < 0 ? " - " : " + ";
        }
        if (k == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += "w";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    AlgebraicNumber run() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("empty scalar", pos_);
        AlgebraicNumber acc;
        bool first = true;
        while (true) {
            skip();
            int sign = 1;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            skip();
            AlgebraicNumber t = term();
            acc += sign < 0 ? -t : t;
            first = false;
            skip();
            if (pos_ >= s_.size()) break;
        }
        return acc;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    mpz_class integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", start);
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    long exponent() {
        if (!peek('^')) return 1;
        ++pos_;
        skip();
        bool neg = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        std::size_t at = pos_;
        mpz_class e = integer();
        if (!e.fits_slong_p()) throw ParseError("exponent too large", at);
        return neg ? -e.get_si() : e.get_si();
    }

    AlgebraicNumber unit() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("expected 'w' or 'i'", pos_);
        char c = s_[pos_];
        if (c == 'w') {
            ++pos_;
            return AlgebraicNumber::zeta_pow(exponent());
        }
        if (c == 'i') {
            ++pos_;
            return AlgebraicNumber::zeta_pow(2 * exponent());
        }
        throw ParseError("expected 'w' or 'i'", pos_);
    }

    AlgebraicNumber term() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("expected term", pos_);
        char c = s_[pos_];
        if (c == 'w' || c == 'i') return unit();
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("unexpected character", pos_);
        mpz_class num = integer();
        mpz_class den = 1;
        if (peek('/')) {
            ++pos_;
            std::size_t at = pos_;
            den = integer();
            if (den == 0) throw ParseError("zero denominator", at);
        }
        mpq_class q(num, den);
        q.canonicalize();
        AlgebraicNumber r(q);
        if (peek('*')) {
            ++pos_;
            r *= unit();
        }
        return r;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

AlgebraicNumber AlgebraicNumber::parse(std::string_view text) { return Parser(text).run(); }

UnitFlags unit_tests(const AlgebraicNumber& x) {
    UnitFlags f;
    f.is_zero = x.is_zero();
    AlgebraicNumber x2 = x * x;
    AlgebraicNumber x4 = x2 * x2;
    AlgebraicNumber one(1);
    f.fourth_power_one = x4 == one;
    f.fourth_power_minus_one = x4 == -one;
    f.eighth_power_one = x4 * x4 == one;
    f.square_pm_one = x2 == one || x2 == -one;
    AlgebraicNumber i = AlgebraicNumber::i();
    f.square_pm_i = x2 == i || x2 == -i;
    return f;
}

std::ostream& operator<<(std::ostream& os, const AlgebraicNumber& x) { return os << x.to_string(); }

}  // namespace holant

namespace holant {

namespace {

std::optional<mpq_class> sqrt_q(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (sgn(q) == 0) return mpq_class(0);
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
    mpz_class n = sqrt(q.get_num()), d = sqrt(q.get_den());
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

// Elements of Q(i) as (re, im).
struct Gauss {
    mpq_class re, im;
};

std::optional<Gauss> sqrt_qi(const Gauss& p) {
    if (sgn(p.im) == 0) {
        if (auto r = sqrt_q(p.re)) return Gauss{*r, 0};
        if (auto r = sqrt_q(-p.re)) return Gauss{0, *r};
        return std::nullopt;
    }
    auto n = sqrt_q(p.re * p.re + p.im * p.im);
    if (!n) return std::nullopt;
    for (int s : {1, -1}) {
        mpq_class half = (p.re + s * *n) / 2;
        auto x = sqrt_q(half);
        if (!x || sgn(*x) == 0) continue;
        mpq_class y = p.im / (2 * *x);
        if (*x * *x - y * y == p.re) return Gauss{*x, y};
    }
    return std::nullopt;
}

AlgebraicNumber from_gauss(const Gauss& g) { return {g.re, 0, g.im, 0}; }

}  // namespace

std::optional<AlgebraicNumber> sqrt_exact(const AlgebraicNumber& x) {
    if (x.is_zero()) return AlgebraicNumber(0);
    // x = p + q*sqrt2 with p, q in Q(i); sqrt2 = w - w^3.
    const auto& c = x.coeffs();
    Gauss p{c[0], c[2]};
    Gauss q{(c[1] - c[3]) / 2, (c[1] + c[3]) / 2};
    AlgebraicNumber s2 = AlgebraicNumber::sqrt2();
    std::vector<AlgebraicNumber> candidates;
    if (sgn(q.re) == 0 && sgn(q.im) == 0) {
        if (auto r = sqrt_qi(p)) candidates.push_back(from_gauss(*r));
        Gauss half{p.re / 2, p.im / 2};
        if (auto r = sqrt_qi(half)) candidates.push_back(from_gauss(*r) * s2);
    } else {
        // Norm to Q(i): p^2 - 2 q^2.
        Gauss p2{p.re * p.re - p.im * p.im, 2 * p.re * p.im};
        Gauss q2{q.re * q.re - q.im * q.im, 2 * q.re * q.im};
        Gauss nrm{p2.re - 2 * q2.re, p2.im - 2 * q2.im};
        if (auto n = sqrt_qi(nrm)) {
            for (int s : {1, -1}) {
                Gauss half{(p.re + s * n->re) / 2, (p.im + s * n->im) / 2};
                if (auto a = sqrt_qi(half)) {
                    AlgebraicNumber av = from_gauss(*a);
                    if (av.is_zero()) continue;
                    AlgebraicNumber bv = from_gauss(q) / (AlgebraicNumber(2) * av);
                    candidates.push_back(av + bv * s2);
                }
            }
        }
    }
    for (const auto& r : candidates)
        if (r * r == x) return r;
    return std::nullopt;
}

}  // namespace holant
