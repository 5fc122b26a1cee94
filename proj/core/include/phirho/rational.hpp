#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace phirho {

/// Arbitrary-precision rational kept in canonical form: gcd(num, den) == 1,
/// den > 0, zero represented as 0/1.  Structural equality is value equality.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit so integer literals flow into formulas
    Rational(long num, long den);
    explicit Rational(mpq_class q);

    /// Parses "num/den" or a bare integer, with optional leading '-'.
    /// Rejects whitespace, empty fields, and zero denominators.
    static Rational parse(std::string_view text);

    /// Always renders as "num/den", e.g. "-5/16", "0/1", "7/1".
    std::string str() const;
    std::string num_str() const;
    std::string den_str() const;

    double to_double() const { return v_.get_d(); }
    bool is_integer() const { return v_.get_den() == 1; }
    /// Value as long; throws std::domain_error unless an integer that fits.
    long to_long() const;

    int sign() const { return sgn(v_); }
    const mpq_class& raw() const { return v_; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

Rational abs(const Rational& q);
Rational pow_ui(const Rational& base, unsigned exp);

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Orders c * x^(3/2) against y without leaving the rationals.  The caller
/// passes c by its exact square c_squared (c >= 0 implied); x must be >= 0.
/// If y < 0 the left side wins outright; otherwise both sides are squared
/// (monotone on non-negatives) and c^2 * x^3 is compared against y^2.
std::strong_ordering compare_pow32(const Rational& c_squared,
                                   const Rational& x,
                                   const Rational& y);

}  // namespace phirho
