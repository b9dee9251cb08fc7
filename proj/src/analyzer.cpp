#include "slopecert/analyzer.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace slopecert {

namespace {

struct IntegralSlopeHit {
    long long n;
    Scalar length;
    bool straddle;
};

std::vector<IntegralSlopeHit> scan_integral_slopes(const CuspShape& shape, const Scalar& cutoff,
                                                   int prec_bits) {
    auto [p_bound, q_bound] = coefficient_box(shape, cutoff, prec_bits);
    (void)q_bound;
    Scalar cutoff_sq = cutoff.square();
    std::vector<IntegralSlopeHit> hits;
    for (long long n = -p_bound; n <= p_bound; ++n) {
        Slope s{n, 1};
        Scalar len_sq = slope_vector(shape, s).squared_norm();
        Order cmp = compare(len_sq, cutoff_sq);
        if (cmp == Order::Greater) continue;
        hits.push_back({n, slope_length(shape, s, prec_bits), cmp == Order::Indeterminate});
    }
    return hits;
}

}  // namespace

std::vector<std::pair<long long, Scalar>> integral_short_slopes(const CuspShape& shape,
                                                                const Scalar& cutoff,
                                                                int prec_bits) {
    std::vector<std::pair<long long, Scalar>> out;
    for (auto& hit : scan_integral_slopes(shape, cutoff, prec_bits))
        out.emplace_back(hit.n, hit.length);
    return out;
}

VerifyReport verify_shape(const CuspShape& shape, int prec_bits) {
    VerifyReport report;
    report.shape_name = shape.name;

    Scalar sqrt2 = sqrt2_enclosure(prec_bits);
    Scalar shortest_sq = slope_vector(shape, shortest_slope(shape, prec_bits).slope).squared_norm();
    switch (compare(shortest_sq, sqrt2)) {  // len >= 2^(1/4) iff len^2 >= sqrt(2)
        case Order::Less: report.satisfies_min_slope = false; break;
        case Order::Indeterminate:
            report.satisfies_min_slope = false;
            report.uncertain = true;
            break;
        default: report.satisfies_min_slope = true;
    }

    Scalar area = cusp_area(shape);
    switch (compare(area, Scalar(Rational(67, 20)))) {
        case Order::Less: report.satisfies_min_area = false; break;
        case Order::Indeterminate:
            report.satisfies_min_area = false;
            report.uncertain = true;
            break;
        default: report.satisfies_min_area = true;
    }

    Scalar mer_sq = shape.meridian.squared_norm();
    switch (compare(mer_sq, Scalar(36))) {
        case Order::Greater: report.meridian_short = false; break;
        case Order::Indeterminate:
            report.meridian_short = false;
            report.uncertain = true;
            break;
        default: report.meridian_short = true;
    }

    for (auto& hit : scan_integral_slopes(shape, Scalar(6), prec_bits)) {
        report.integral_short_slopes.emplace_back(hit.n, hit.length);
        if (hit.straddle) report.uncertain = true;
    }
    report.count = static_cast<long long>(report.integral_short_slopes.size());
    if (report.count >= 2) {
        long long lo = report.integral_short_slopes.front().first;
        long long hi = report.integral_short_slopes.back().first;
        report.max_pairwise_distance = hi - lo;
    }
    report.bound_holds = report.satisfies_min_slope && report.satisfies_min_area &&
                         report.max_pairwise_distance <= 8 && report.count <= 9;
    return report;
}

std::vector<CuspShape> sample_constrained_shapes(const SamplerConfig& config, int prec_bits) {
    if (config.count < 1) throw Error("sampler count must be positive");
    if (config.meridian_min > config.meridian_max || config.area_min > config.area_max)
        throw Error("sampler range empty");
    if (config.meridian_max > 6) throw Error("meridian range must stay within [2^(1/4), 6]");
    Scalar mer_min_sq = Scalar(config.meridian_min).square();
    if (!certainly_ge(mer_min_sq, sqrt2_enclosure(prec_bits)))
        throw Error("meridian range must stay within [2^(1/4), 6]");
    if (config.area_min < Rational(67, 20)) throw Error("area range lower end must be >= 67/20");

    std::mt19937_64 rng(config.seed);
    const long kGrid = 1 << 20;
    std::uniform_int_distribution<long> pick(0, kGrid);
    auto uniform_in = [&](const Rational& lo, const Rational& hi) -> Rational {
        Rational u(pick(rng), kGrid);
        u.canonicalize();
        return Rational(lo + (hi - lo) * u);
    };

    Scalar sqrt2 = sqrt2_enclosure(prec_bits);
    std::vector<CuspShape> shapes;
    long long budget = config.count * 1000;
    while (static_cast<long long>(shapes.size()) < config.count) {
        if (budget-- <= 0) throw SamplerExhaustedError();
        Rational mer_len = uniform_in(config.meridian_min, config.meridian_max);
        Rational lon_x = uniform_in(-mer_len / 2, mer_len / 2);
        Rational area = uniform_in(config.area_min, config.area_max);
        Rational lon_y = area / mer_len;
        CuspShape shape{{Scalar(mer_len), Scalar(0)}, {Scalar(lon_x), Scalar(lon_y)}, ""};
        Scalar shortest_sq =
            slope_vector(shape, shortest_slope(shape, prec_bits).slope).squared_norm();
        if (!certainly_ge(shortest_sq, sqrt2)) continue;
        shape.name = "sample-" + std::to_string(shapes.size());
        shapes.push_back(std::move(shape));
    }
    return shapes;
}

CuspShape figure_eight_shape(int prec_bits) {
    // longitude translation 2*sqrt(3); external cusp data, re-validated in tests
    Scalar two_sqrt3 = sqrt_enclosure(Scalar(12), prec_bits);
    return CuspShape{{Scalar(1), Scalar(0)}, {Scalar(0), two_sqrt3}, "fig8"};
}

Figure8Demo figure8_demo(int prec_bits) {
    CuspShape shape = figure_eight_shape(prec_bits);
    VerifyReport report = verify_shape(shape, prec_bits);

    if (report.count != 9) throw Error("fig8 demo: expected 9 integral short slopes");
    if (report.integral_short_slopes.front().first != -4 ||
        report.integral_short_slopes.back().first != 4)
        throw Error("fig8 demo: expected integral slopes -4..4");
    if (report.max_pairwise_distance != 8) throw Error("fig8 demo: expected max distance 8");
    if (!report.meridian_short) throw Error("fig8 demo: meridian should be short");
    Scalar slope5_sq = slope_vector(shape, Slope{5, 1}).squared_norm();
    if (!certainly_gt(slope5_sq, Scalar(36))) throw Error("fig8 demo: slope 5 should be excluded");

    std::ostringstream text;
    text << "Figure-eight knot, maximal cusp: meridian (1, 0), longitude (0, 2*sqrt(3)).\n";
    text << "Cusp area 2*sqrt(3) ~ " << cusp_area(shape).approx() << " (>= 3.35).\n";
    text << "Integral slopes of length <= 6: ";
    for (auto& [n, len] : report.integral_short_slopes)
        text << n << " (len ~" << len.approx() << ") ";
    text << "\nCount: 9; slope 5 has length ~" << slope_length(shape, Slope{5, 1}).approx()
         << " > 6 and is excluded.\n";
    text << "distance(-4/1, 4/1) = " << slope_distance(Slope{-4, 1}, Slope{4, 1})
         << ": the distance bound 8 is attained.\n";
    text << "Including the meridian 1/0 (length 1), ten slopes are short.\n";
    text << "Meridian length 1 < 2^(1/4): the slope-length hypothesis excludes this knot,\n";
    text << "which is why it can meet the bound exactly.\n";
    return Figure8Demo{std::move(report), text.str()};
}

}  // namespace slopecert
