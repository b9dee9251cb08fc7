#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "slopecert/certifier.hpp"

using namespace slopecert;

TEST_CASE("required_sin_lower is the exact rational 67*delta/720") {
    CHECK(required_sin_lower(8) == Scalar(Rational(67, 90)));
    CHECK(required_sin_lower(0) == Scalar(0));
    // delta = 11 already forces sin(theta) > 1
    Scalar r11 = required_sin_lower(11);
    CHECK(r11 == Scalar(Rational(737, 720)));
    CHECK(certainly_gt(r11, Scalar(1)));
}

TEST_CASE("required_cos_lower") {
    CHECK(required_cos_lower(7) == Scalar(0));  // 49/sqrt(2) < 36
    Scalar r9 = required_cos_lower(9);
    CHECK(oracle::matches_decimal(r9, "0.59099025766973192990"));
    CHECK(r9.width() < Rational(1, 1000000000));
    Scalar r8 = required_cos_lower(8);
    CHECK(oracle::matches_decimal(r8, "0.25707872210941782115"));
}

TEST_CASE("obtuse step raw comparison") {
    CHECK_FALSE(obtuse_step(7).pass);  // sqrt(2)*49 ~ 69.3 < 72
    CHECK(obtuse_step(8).pass);        // raw comparison holds even though the
                                       // argument only needs it for delta > 8
    CHECK(obtuse_step(9).pass);
}

TEST_CASE("combined feasibility at the pivotal deltas") {
    TraceEntry e9 = combined_feasibility(9);
    CHECK_FALSE(e9.pass);
    CHECK(e9.value.lo() > 1361);
    CHECK(e9.value.hi() < 1362);
    // frozen 30-digit oracle value (integer-sqrt decimal route)
    CHECK(oracle::matches_decimal(e9.value, "1361.675752120054837694275680204"));

    TraceEntry e8 = combined_feasibility(8);
    CHECK(e8.pass);
    CHECK(oracle::matches_decimal(e8.value, "803.891952292389007560909179420"));

    CHECK(combined_feasibility(1).pass);
}

TEST_CASE("combined feasibility agrees with the decimal oracle for delta 9..12") {
    for (int delta = 9; delta <= 12; ++delta) {
        TraceEntry e = combined_feasibility(delta);
        auto [lo, hi] = oracle::decimal_combined_left(delta, 30);
        CHECK_FALSE(e.pass);
        CHECK(lo > 1296);
        CHECK(e.value.hi() >= lo);
        CHECK(e.value.lo() <= hi);
    }
}

TEST_CASE("infeasibility is monotone in delta") {
    Rational prev_lo = 0;
    for (int delta = 9; delta <= 100; ++delta) {
        TraceEntry e = combined_feasibility(delta);
        CHECK_FALSE(e.pass);
        CHECK(e.value.lo() >= prev_lo);
        prev_lo = e.value.lo();
    }
}

TEST_CASE("quartic bound") {
    QuarticBound qb = quartic_bound();
    CHECK(qb.floor == 8);
    CHECK(oracle::matches_decimal(qb.enclosure, "8.90945433182430334150405288969"));
    CHECK(qb.enclosure.hi() < parse_rational("8.95"));
    CHECK(qb.enclosure.width() < Rational(1, 1000000));
    // 2(36*sqrt(2) - 11.2225) < 80
    Scalar arg = Scalar(2) * (Scalar(36) * sqrt2_enclosure(128) - Scalar(Rational(67, 20)).square());
    CHECK(arg.hi() < 80);
}

TEST_CASE("a hand-picked witness for delta 8 checks out") {
    TriangleWitness w{Scalar(6), Scalar(6), Scalar(2)};
    CHECK(witness_satisfies(w, 8, 128));
    CHECK(w.area(128).lo() > parse_rational("16.3"));  // ~16.36 >= 13.4
    CHECK(w.opposite_side_squared(128).lo() > parse_rational("101.9"));
}

TEST_CASE("find_witness") {
    for (int delta = 1; delta <= 8; ++delta) {
        auto w = find_witness(delta);
        REQUIRE(w.has_value());
        std::vector<TraceEntry> trace;
        CHECK(witness_satisfies(*w, delta, 128, &trace));
        for (const auto& e : trace) CHECK(e.pass);
    }
    CHECK_FALSE(find_witness(9).has_value());
    CHECK_FALSE(find_witness(12).has_value());
}

TEST_CASE("witness search is deterministic") {
    auto w1 = find_witness(8);
    auto w2 = find_witness(8);
    REQUIRE(w1.has_value());
    REQUIRE(w2.has_value());
    CHECK(w1->a == w2->a);
    CHECK(w1->b == w2->b);
    CHECK(w1->theta == w2->theta);
}

TEST_CASE("cosine law consistency of found witnesses") {
    auto w = find_witness(8);
    REQUIRE(w.has_value());
    double a = w->a.approx(), b = w->b.approx(), t = w->theta.approx();
    double c_sq = a * a + b * b - 2 * a * b * std::cos(t);
    Scalar enc = w->opposite_side_squared(128);
    CHECK(enc.lo().get_d() <= c_sq + 1e-9);
    CHECK(enc.hi().get_d() >= c_sq - 1e-9);
}

TEST_CASE("certify_theorem") {
    TheoremCertificate cert = certify_theorem();
    CHECK(cert.delta_max == 8);
    CHECK(cert.max_integral_candidates == 9);
    CHECK(cert.quartic.floor == 8);
    REQUIRE(cert.reports.size() == 12);
    for (const auto& r : cert.reports) {
        if (r.delta <= 8) {
            CHECK(r.verdict == Verdict::WitnessFound);
            REQUIRE(r.witness.has_value());
        } else {
            CHECK(r.verdict == Verdict::Infeasible);
            // every infeasible trace ends with a failed whole-enclosure comparison
            REQUIRE(!r.trace.empty());
            CHECK(r.trace.back().name == "combined_feasibility");
            CHECK_FALSE(r.trace.back().pass);
            CHECK(r.trace.back().value.lo() >= 1296);
        }
    }
}

TEST_CASE("doubling precision never flips a determinate verdict") {
    for (int delta = 1; delta <= 12; ++delta) {
        CertReport base = certify_delta(delta, 128);
        CertReport fine = certify_delta(delta, 256);
        CHECK(base.verdict == fine.verdict);
    }
    CHECK(quartic_bound(256).floor == quartic_bound(128).floor);
}
