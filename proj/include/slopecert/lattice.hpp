#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slopecert/scalar.hpp"

namespace slopecert {

inline constexpr int kDefaultPrecBits = 128;

/// Translation vector on the universal cover of the horotorus.
struct Vec2 {
    Scalar x, y;

    Scalar squared_norm() const { return x.square() + y.square(); }
    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator*(const Scalar& s, const Vec2& v) { return {s * v.x, s * v.y}; }
};

/// The maximal horotorus as a Euclidean lattice: translations of the fixed
/// meridian and longitude. The lattice is {p*meridian + q*longitude}.
struct CuspShape {
    Vec2 meridian;
    Vec2 longitude;
    std::string name;

    /// |det(meridian, longitude)| as an enclosure; throws DegenerateLatticeError
    /// if the enclosure contains 0.
    Scalar area() const;
    bool is_exact() const {
        return meridian.x.is_exact() && meridian.y.is_exact() && longitude.x.is_exact() &&
               longitude.y.is_exact();
    }
};

/**
 * A slope: a primitive pair (p, q) naming an unoriented curve class on the
 * boundary torus. Canonical sign: q > 0, or q == 0 and p == 1. The meridian
 * is (1, 0); integral slopes n are (n, 1).
 */
struct Slope {
    long long p = 1;
    long long q = 0;

    friend bool operator==(const Slope&, const Slope&) = default;
    friend auto operator<=>(const Slope&, const Slope&) = default;
};

std::string to_string(const Slope& s);

struct SlopeReport {
    Slope slope;
    Scalar length;
    bool boundary_uncertain = false;  // length enclosure straddles the cutoff
};

/// Canonical-sign representative of +-(p, q). Throws ZeroSlopeError /
/// NonPrimitiveError; non-primitive input names a multiple curve, not a slope.
Slope normalize_slope(long long p, long long q);

/// Reduces an arbitrary nonzero pair to a slope plus the multiplicity divided
/// out. reduce_to_slope(2, 4) == {(1, 2), 2}.
std::pair<Slope, long long> reduce_to_slope(long long p, long long q);

/// The lattice point p*meridian + q*longitude.
Vec2 slope_vector(const CuspShape& shape, const Slope& s);

/// Euclidean norm of slope_vector; exact squared length is available through
/// slope_vector(...).squared_norm().
Scalar slope_length(const CuspShape& shape, const Slope& s, int prec_bits = kDefaultPrecBits);

/// Minimal geometric intersection number |p1 q2 - p2 q1|.
long long slope_distance(const Slope& s1, const Slope& s2);

/// |det(meridian, longitude)|; throws DegenerateLatticeError.
Scalar cusp_area(const CuspShape& shape);

/// Both routes to the triangle area Area(O, v1, v2): half the cross product of
/// the slope vectors, and half of distance * lattice area. Equal exactly for
/// rational shapes.
std::pair<Scalar, Scalar> triangle_area_identity(const CuspShape& shape, const Slope& s1,
                                                 const Slope& s2);

/// A shortest primitive lattice vector, tie-broken by smallest
/// (|p|, |q|, p, q) lexicographically among minimizers.
SlopeReport shortest_slope(const CuspShape& shape, int prec_bits = kDefaultPrecBits);

/// Exactly the canonical slopes with length <= cutoff, sorted by (length, p, q).
/// Slopes whose length enclosure straddles the cutoff are included with
/// boundary_uncertain set. The coefficient search box is provably exhaustive.
std::vector<SlopeReport> enumerate_short_slopes(const CuspShape& shape, const Scalar& cutoff,
                                                int prec_bits = kDefaultPrecBits);

/// Provable coefficient box: a lattice vector of norm <= cutoff has
/// |p| <= cutoff*|longitude|/area and |q| <= cutoff*|meridian|/area.
/// Returns (p_bound, q_bound) as safe integer upper bounds.
std::pair<long long, long long> coefficient_box(const CuspShape& shape, const Scalar& cutoff,
                                                int prec_bits = kDefaultPrecBits);

}  // namespace slopecert
