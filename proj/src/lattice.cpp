#include "slopecert/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <tuple>

namespace slopecert {

namespace {

Scalar from_ll(long long v) { return Scalar(static_cast<long>(v)); }

std::tuple<long long, long long, long long, long long> tie_key(const Slope& s) {
    return {std::llabs(s.p), std::llabs(s.q), s.p, s.q};
}

}  // namespace

std::string to_string(const Slope& s) {
    return std::to_string(s.p) + "/" + std::to_string(s.q);
}

Scalar CuspShape::area() const { return cusp_area(*this); }

Slope normalize_slope(long long p, long long q) {
    if (p == 0 && q == 0) throw ZeroSlopeError();
    long long g = std::gcd(std::llabs(p), std::llabs(q));
    if (g != 1) throw NonPrimitiveError(g);
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    return Slope{p, q};
}

std::pair<Slope, long long> reduce_to_slope(long long p, long long q) {
    if (p == 0 && q == 0) throw ZeroSlopeError();
    long long g = std::gcd(std::llabs(p), std::llabs(q));
    return {normalize_slope(p / g, q / g), g};
}

Vec2 slope_vector(const CuspShape& shape, const Slope& s) {
    return from_ll(s.p) * shape.meridian + from_ll(s.q) * shape.longitude;
}

Scalar slope_length(const CuspShape& shape, const Slope& s, int prec_bits) {
    return round_outward(sqrt_enclosure(slope_vector(shape, s).squared_norm(), prec_bits),
                         prec_bits);
}

long long slope_distance(const Slope& s1, const Slope& s2) {
    return std::llabs(s1.p * s2.q - s2.p * s1.q);
}

Scalar cusp_area(const CuspShape& shape) {
    Scalar det = shape.meridian.x * shape.longitude.y - shape.meridian.y * shape.longitude.x;
    if (det.contains_zero()) throw DegenerateLatticeError();
    return det.abs();
}

std::pair<Scalar, Scalar> triangle_area_identity(const CuspShape& shape, const Slope& s1,
                                                 const Slope& s2) {
    Vec2 v1 = slope_vector(shape, s1);
    Vec2 v2 = slope_vector(shape, s2);
    Scalar cross = (v1.x * v2.y - v1.y * v2.x).abs();
    Scalar half(Rational(1, 2));
    Scalar via_distance = half * from_ll(slope_distance(s1, s2)) * cusp_area(shape);
    return {half * cross, via_distance};
}

std::pair<long long, long long> coefficient_box(const CuspShape& shape, const Scalar& cutoff,
                                                int prec_bits) {
    Scalar area = cusp_area(shape);
    Scalar mer_len = sqrt_enclosure(shape.meridian.squared_norm(), prec_bits);
    Scalar lon_len = sqrt_enclosure(shape.longitude.squared_norm(), prec_bits);
    auto bound = [&](const Scalar& partner_len) -> long long {
        Rational hi = (cutoff * partner_len / area).hi();
        mpz_class b;
        mpz_cdiv_q(b.get_mpz_t(), hi.get_num().get_mpz_t(), hi.get_den().get_mpz_t());
        if (!b.fits_slong_p() || b.get_si() > 1000000)
            throw Error("short-slope search box too large; lattice is nearly degenerate");
        return std::max(0L, b.get_si());
    };
    return {bound(lon_len), bound(mer_len)};
}

std::vector<SlopeReport> enumerate_short_slopes(const CuspShape& shape, const Scalar& cutoff,
                                                int prec_bits) {
    if (sgn(cutoff.hi()) <= 0) throw Error("cutoff must be positive");
    auto [p_bound, q_bound] = coefficient_box(shape, cutoff, prec_bits);
    Scalar cutoff_sq = cutoff.square();
    std::vector<SlopeReport> out;
    auto consider = [&](const Slope& s) {
        Scalar len_sq = slope_vector(shape, s).squared_norm();
        Order cmp = compare(len_sq, cutoff_sq);
        if (cmp == Order::Greater) return;
        SlopeReport r;
        r.slope = s;
        r.length = slope_length(shape, s, prec_bits);
        r.boundary_uncertain = (cmp == Order::Indeterminate);
        out.push_back(std::move(r));
    };
    if (p_bound >= 1) consider(Slope{1, 0});
    for (long long q = 1; q <= q_bound; ++q)
        for (long long p = -p_bound; p <= p_bound; ++p)
            if (std::gcd(std::llabs(p), q) == 1) consider(Slope{p, q});
    std::sort(out.begin(), out.end(), [](const SlopeReport& a, const SlopeReport& b) {
        Rational la = a.length.lo(), lb = b.length.lo();
        if (la != lb) return la < lb;
        return std::tie(a.slope.p, a.slope.q) < std::tie(b.slope.p, b.slope.q);
    });
    return out;
}

SlopeReport shortest_slope(const CuspShape& shape, int prec_bits) {
    // any shortest vector is no longer than the shorter basis vector
    Scalar basis_min_sq = min(shape.meridian.squared_norm(), shape.longitude.squared_norm());
    Scalar cutoff = sqrt_enclosure(basis_min_sq, prec_bits);
    auto candidates = enumerate_short_slopes(shape, cutoff, prec_bits);
    if (candidates.empty()) throw Error("internal: empty shortest-vector candidate set");
    const SlopeReport* best = &candidates.front();
    Scalar best_sq = slope_vector(shape, best->slope).squared_norm();
    for (const auto& cand : candidates) {
        Scalar sq = slope_vector(shape, cand.slope).squared_norm();
        Order cmp = compare(sq, best_sq);
        if (cmp == Order::Less ||
            (cmp != Order::Greater && tie_key(cand.slope) < tie_key(best->slope))) {
            best = &cand;
            best_sq = sq;
        }
    }
    return *best;
}

}  // namespace slopecert
