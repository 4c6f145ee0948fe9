#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace holant {

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Element of Q(w), w = exp(i*pi/4), stored as c0 + c1 w + c2 w^2 + c3 w^3 with w^4 = -1.
class AlgebraicNumber {
public:
    using Coeffs = std::array<mpq_class, 4>;

    AlgebraicNumber() = default;
    AlgebraicNumber(long v) { c_[0] = v; }  // NOLINT(google-explicit-constructor)
    explicit AlgebraicNumber(const mpq_class& q) { c_[0] = q; }
    AlgebraicNumber(mpq_class c0, mpq_class c1, mpq_class c2, mpq_class c3);

    static AlgebraicNumber zeta();
    static AlgebraicNumber i();
    static AlgebraicNumber sqrt2();
    /// w^k for any integer k.
    static AlgebraicNumber zeta_pow(long k);
    static AlgebraicNumber rational(long num, long den);

    const mpq_class& coeff(int k) const { return c_[k]; }
    const Coeffs& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    AlgebraicNumber operator-() const;
    AlgebraicNumber& operator+=(const AlgebraicNumber& o);
    AlgebraicNumber& operator-=(const AlgebraicNumber& o);
    AlgebraicNumber& operator*=(const AlgebraicNumber& o);
    AlgebraicNumber& operator/=(const AlgebraicNumber& o);

    friend AlgebraicNumber operator+(AlgebraicNumber a, const AlgebraicNumber& b) { return a += b; }
    friend AlgebraicNumber operator-(AlgebraicNumber a, const AlgebraicNumber& b) { return a -= b; }
    friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return a * b.inverse();
    }
    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a.c_ == b.c_; }
    friend bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return !(a == b); }

    AlgebraicNumber inverse() const;
    AlgebraicNumber conj() const;
    AlgebraicNumber norm_sq() const;
    AlgebraicNumber pow(long e) const;

    /// Total order on the coefficient tuple; only meaningful for deterministic sorting.
    friend bool lex_less(const AlgebraicNumber& a, const AlgebraicNumber& b);

    std::string to_string() const;
    static AlgebraicNumber parse(std::string_view text);

private:
    Coeffs c_{};
};

using Alg = AlgebraicNumber;

struct UnitFlags {
    bool is_zero = false;
    bool fourth_power_one = false;       // x^4 = 1
    bool fourth_power_minus_one = false;  // x^4 = -1
    bool eighth_power_one = false;        // x^8 = 1
    bool square_pm_one = false;           // x^2 = +-1
    bool square_pm_i = false;             // x^2 = +-i
};

UnitFlags unit_tests(const AlgebraicNumber& x);

/// Square root inside Q(w) when one exists; the returned root is one of the two.
std::optional<AlgebraicNumber> sqrt_exact(const AlgebraicNumber& x);

std::ostream& operator<<(std::ostream& os, const AlgebraicNumber& x);

}  // namespace holant
