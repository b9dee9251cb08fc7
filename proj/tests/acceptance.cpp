// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria and tolerances are pinned here, not configurable.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "slopecert/analyzer.hpp"
#include "slopecert/certifier.hpp"
#include "slopecert/lattice.hpp"

using namespace slopecert;

namespace {

int failures = 0;

struct Check {
    std::string label;
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
    ~Check() {
        std::printf("%s %s\n", ok ? "PASS" : "FAIL", label.c_str());
        for (const auto& n : notes) std::printf("     - %s\n", n.c_str());
        if (!ok) ++failures;
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void criterion1_theorem_certification() {
    Check c{"criterion 1: theorem certification (delta_max = 8, runtime < 5 s)"};
    auto start = std::chrono::steady_clock::now();
    TheoremCertificate cert = certify_theorem();
    double elapsed = seconds_since(start);
    c.require(elapsed < 5.0, "runtime " + std::to_string(elapsed) + " s >= 5 s");
    c.require(cert.delta_max == 8, "delta_max != 8");
    c.require(cert.max_integral_candidates == 9, "candidate count != 9");
    for (const auto& r : cert.reports) {
        if (r.delta <= 8) {
            c.require(r.verdict == Verdict::WitnessFound,
                      "delta " + std::to_string(r.delta) + ": no verified witness");
            if (r.witness)
                c.require(witness_satisfies(*r.witness, r.delta, 128),
                          "delta " + std::to_string(r.delta) + ": witness re-check failed");
        } else {
            c.require(r.verdict == Verdict::Infeasible,
                      "delta " + std::to_string(r.delta) + ": not certified infeasible");
        }
    }
    for (int delta = 9; delta <= 12; ++delta) {
        TraceEntry e = combined_feasibility(delta);
        c.require(e.value.lo() > 1296,
                  "delta " + std::to_string(delta) + ": combined lower bound <= 1296");
        auto [olo, ohi] = oracle::decimal_combined_left(delta, 30);
        c.require(olo > 1296, "oracle: combined value <= 1296 at delta " + std::to_string(delta));
        c.require(e.value.lo() <= ohi && e.value.hi() >= olo,
                  "enclosure disagrees with 30-digit decimal oracle at delta " +
                      std::to_string(delta));
        if (delta == 9)
            c.require(e.value.lo() > 1361 && e.value.hi() < 1362,
                      "delta 9 enclosure not within [1361, 1362]");
    }
}

void criterion2_quartic_bound() {
    Check c{"criterion 2: quartic bound (floor 8, < 8.95, width < 1e-6)"};
    QuarticBound qb = quartic_bound();
    c.require(qb.floor == 8, "floor != 8");
    c.require(qb.enclosure.hi() < parse_rational("8.95"), "upper endpoint >= 8.95");
    c.require(qb.enclosure.width() < Rational(1, 1000000), "enclosure width >= 1e-6");
    Scalar arg =
        Scalar(2) * (Scalar(36) * sqrt2_enclosure(128) - Scalar(Rational(67, 20)).square());
    c.require(arg.hi() < 80, "2(36*sqrt(2) - 3.35^2) upper bound >= 80");
}

void criterion3_figure_eight() {
    Check c{"criterion 3: figure-eight sharpness (runtime < 1 s)"};
    auto start = std::chrono::steady_clock::now();
    Figure8Demo demo = figure8_demo();
    CuspShape shape = figure_eight_shape();
    Scalar len5_sq = slope_vector(shape, Slope{5, 1}).squared_norm();
    double elapsed = seconds_since(start);
    c.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s >= 1 s");
    c.require(demo.report.count == 9, "integral short slope count != 9");
    bool slopes_ok = demo.report.integral_short_slopes.size() == 9;
    for (std::size_t i = 0; i < demo.report.integral_short_slopes.size(); ++i)
        slopes_ok &= demo.report.integral_short_slopes[i].first == static_cast<long long>(i) - 4;
    c.require(slopes_ok, "integral short slopes are not exactly {-4..4}");
    c.require(demo.report.max_pairwise_distance == 8, "max distance != 8");
    c.require(certainly_gt(len5_sq, Scalar(36)), "slope 5 not certified longer than 6");
    c.require(shape.meridian.squared_norm() == Scalar(1), "meridian length != 1");
    c.require(certainly_ge(cusp_area(shape), Scalar(Rational(67, 20))), "area not >= 3.35");
}

void criterion4_property_suite() {
    Check c{"criterion 4: 1000 sampled shapes, zero bound violations (runtime < 30 s)"};
    auto start = std::chrono::steady_clock::now();
    auto shapes = sample_constrained_shapes(SamplerConfig{42, 1000});
    long long violations = 0;
    for (const auto& shape : shapes) {
        VerifyReport r = verify_shape(shape);
        if (!r.satisfies_min_slope || !r.satisfies_min_area) {
            ++violations;
            continue;
        }
        if (r.max_pairwise_distance > 8 || r.count > 9 || !r.bound_holds) ++violations;
    }
    double elapsed = seconds_since(start);
    c.require(shapes.size() == 1000, "sampler did not deliver 1000 shapes");
    c.require(violations == 0, std::to_string(violations) + " violation(s)");
    c.require(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s >= 30 s");
}

void criterion5_oracle_equivalence() {
    Check c{"criterion 5: oracle equivalence (enumeration, area identity, distances)"};
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        CuspShape shape = oracle::random_rational_shape(rng);
        auto expect = oracle::brute_force_short_slopes(shape, Rational(6));
        auto got = enumerate_short_slopes(shape, Scalar(6));
        bool same = got.size() == expect.size();
        if (same) {
            for (const Slope& s : expect) {
                bool found = false;
                for (const auto& r : got) found |= r.slope == s;
                same &= found;
            }
        }
        if (!same) {
            c.require(false, "enumeration mismatch on shape " + std::to_string(i));
            break;
        }
        auto integral_expect = oracle::brute_force_integral_slopes(shape, Rational(6));
        auto integral_got = integral_short_slopes(shape);
        bool integral_same = integral_expect.size() == integral_got.size();
        if (integral_same)
            for (std::size_t j = 0; j < integral_expect.size(); ++j)
                integral_same &= integral_expect[j] == integral_got[j].first;
        if (!integral_same) {
            c.require(false, "integral enumeration mismatch on shape " + std::to_string(i));
            break;
        }
        Slope s1 = oracle::random_slope(rng, 6);
        Slope s2 = oracle::random_slope(rng, 6);
        auto [direct, via_distance] = triangle_area_identity(shape, s1, s2);
        if (!(direct == via_distance)) {
            c.require(false, "triangle area identity broke on shape " + std::to_string(i));
            break;
        }
    }

    // distance formula vs geometric intersection count
    std::vector<Slope> slopes;
    for (long long q = 0; q <= 5; ++q)
        for (long long p = -5; p <= 5; ++p) {
            if (p == 0 && q == 0) continue;
            if (q == 0 && p != 1) continue;
            if (std::gcd(std::llabs(p), q) != 1) continue;
            slopes.push_back(Slope{p, q});
        }
    for (int i = 0; i < 20; ++i) {
        CuspShape shape = oracle::random_rational_shape(rng);
        bool all_match = true;
        for (std::size_t a = 0; a < slopes.size() && all_match; ++a)
            for (std::size_t b = a; b < slopes.size() && all_match; ++b)
                all_match = slope_distance(slopes[a], slopes[b]) ==
                            oracle::intersection_count(shape, slopes[a], slopes[b]);
        if (!all_match) {
            c.require(false, "distance vs intersection count mismatch on shape " +
                                 std::to_string(i));
            break;
        }
    }
}

void criterion6_precision_regression() {
    Check c{"criterion 6: doubling precision changes no determinate verdict"};
    TheoremCertificate base = certify_theorem(128);
    TheoremCertificate fine = certify_theorem(256);
    c.require(base.delta_max == fine.delta_max, "delta_max changed with precision");
    for (int i = 0; i < 12; ++i)
        c.require(base.reports[i].verdict == fine.reports[i].verdict,
                  "verdict changed at delta " + std::to_string(i + 1));
    c.require(quartic_bound(256).floor == quartic_bound(128).floor, "quartic floor changed");

    VerifyReport demo128 = figure8_demo(128).report;
    VerifyReport demo256 = figure8_demo(256).report;
    c.require(demo128.count == demo256.count && demo128.max_pairwise_distance ==
                                                    demo256.max_pairwise_distance,
              "figure-eight report changed with precision");

    auto shapes128 = sample_constrained_shapes(SamplerConfig{42, 100}, 128);
    auto shapes256 = sample_constrained_shapes(SamplerConfig{42, 100}, 256);
    bool stable = shapes128.size() == shapes256.size();
    for (std::size_t i = 0; stable && i < shapes128.size(); ++i) {
        VerifyReport a = verify_shape(shapes128[i], 128);
        VerifyReport b = verify_shape(shapes256[i], 256);
        stable = a.count == b.count && a.max_pairwise_distance == b.max_pairwise_distance &&
                 a.bound_holds == b.bound_holds;
    }
    c.require(stable, "sampled-shape verdicts changed with precision");
}

}  // namespace

int main() {
    criterion1_theorem_certification();
    criterion2_quartic_bound();
    criterion3_figure_eight();
    criterion4_property_suite();
    criterion5_oracle_equivalence();
    criterion6_precision_regression();
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
