#pragma once

#include <gmpxx.h>

#include <string>

#include "slopecert/errors.hpp"

namespace slopecert {

using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal like "-2.35" into an exact rational.
Rational parse_rational(const std::string& text);

/// Half an ulp of a written decimal: "3.46" -> 1/200. Zero for "p/q" and integer forms.
Rational decimal_half_ulp(const std::string& text);

std::string rational_to_string(const Rational& value);

/**
 * A real quantity, either an exact rational (lo == hi) or an outward-rounded
 * interval enclosure with rational endpoints. Every arithmetic operation
 * returns an enclosure containing the true real result; rational operations
 * (+, -, *, /) are exact, so exactness is only lost through sqrt, sin, cos
 * and explicit outward rounding.
 */
class Scalar {
public:
    Scalar() : lo_(0), hi_(0) {}
    Scalar(long value) : lo_(value), hi_(lo_) {}
    Scalar(const Rational& value) : lo_(value), hi_(value) {}
    Scalar(Rational lo, Rational hi);

    static Scalar from_midpoint_radius(const Rational& mid, const Rational& radius);

    bool is_exact() const { return lo_ == hi_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    bool contains(const Rational& value) const { return lo_ <= value && value <= hi_; }
    bool contains_zero() const { return sgn(lo_) <= 0 && sgn(hi_) >= 0; }

    /// Midpoint as a double; display only, never used in a verdict.
    double approx() const;

    Scalar operator-() const { return Scalar(-hi_, -lo_); }
    Scalar abs() const;
    /// Tight square: nonnegative even when the interval straddles zero.
    Scalar square() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    /// Divisor must not contain zero.
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    friend bool operator==(const Scalar& a, const Scalar& b) = default;

private:
    Rational lo_, hi_;
};

/// a < b for every pair of points in the enclosures.
bool certainly_lt(const Scalar& a, const Scalar& b);
bool certainly_le(const Scalar& a, const Scalar& b);
bool certainly_gt(const Scalar& a, const Scalar& b);
bool certainly_ge(const Scalar& a, const Scalar& b);

/// Tri-state order: nullopt when the enclosures overlap without deciding.
enum class Order { Less, Equal, Greater, Indeterminate };
Order compare(const Scalar& a, const Scalar& b);

Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);

/// Widens endpoints outward to dyadic rationals with denominator 2^prec_bits.
/// Exact values are left untouched.
Scalar round_outward(const Scalar& value, int prec_bits);

/// Enclosure of the square root; exact when the input is an exact perfect
/// square, otherwise an interval of width <= 2^-prec_bits-ish (scaled by the
/// input's denominator). Input must be nonnegative (lo >= 0).
Scalar sqrt_enclosure(const Scalar& value, int prec_bits);

/// Enclosures of sin/cos for theta contained in [0, pi]. Taylor series with a
/// rigorous remainder, endpoints rounded outward to prec_bits.
Scalar sin_enclosure(const Scalar& theta, int prec_bits);
Scalar cos_enclosure(const Scalar& theta, int prec_bits);

/// Fixed high-precision enclosure of pi (width < 10^-90).
const Scalar& pi_enclosure();

Scalar sqrt2_enclosure(int prec_bits);
/// Enclosure of 2^(1/4).
Scalar fourth_root_two_enclosure(int prec_bits);

}  // namespace slopecert
