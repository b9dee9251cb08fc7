#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slopecert/scalar.hpp"

namespace slopecert {

inline constexpr int kCertifierDefaultPrecBits = 128;
inline constexpr int kCertifierMaxPrecBits = 512;

/// The three numeric hypotheses feeding the distance bound, at a given
/// intersection distance delta: triangle sides at most 6, slope lengths at
/// least 2^(1/4), cusp area at least 67/20.
struct Constraints {
    Scalar side_max;
    Scalar min_slope_length;  // enclosure of 2^(1/4)
    Scalar min_area;          // exactly 67/20
    int delta;

    static Constraints for_delta(int delta, int prec_bits = kCertifierDefaultPrecBits);
};

/// Triangle (a, b, theta): side lengths from the origin and the angle between
/// them. Certifies satisfiability of the relaxed constraint system.
struct TriangleWitness {
    Scalar a;
    Scalar b;
    Scalar theta;  // radians, 0 < theta < pi

    Scalar opposite_side_squared(int prec_bits = kCertifierDefaultPrecBits) const;
    Scalar area(int prec_bits = kCertifierDefaultPrecBits) const;
};

struct TraceEntry {
    std::string name;
    Scalar value;
    std::string condition;
    bool pass = false;
};

enum class Verdict { Infeasible, WitnessFound, Indeterminate };

std::string to_string(Verdict v);

struct CertReport {
    int delta = 0;
    Verdict verdict = Verdict::Indeterminate;
    std::vector<TraceEntry> trace;
    std::optional<TriangleWitness> witness;
};

/// Lower bound on sin(theta) forced by the area hypothesis: 67*delta/720.
Scalar required_sin_lower(int delta);

/// Lower bound on |cos(theta)| forced by the length hypothesis:
/// max(0, (delta^2/sqrt(2) - 36)/36).
Scalar required_cos_lower(int delta, int prec_bits = kCertifierDefaultPrecBits);

/// Raw comparison 72 < sqrt(2)*delta^2, the step forcing an obtuse angle.
TraceEntry obtuse_step(int delta, int prec_bits = kCertifierDefaultPrecBits);

/// Necessary condition (delta^2/sqrt(2) - 36)^2 + (67 delta/20)^2 < 1296.
/// pass = still feasible, fail = certified infeasible. Throws
/// IndeterminateEnclosureError when the enclosure straddles 1296.
TraceEntry combined_feasibility(int delta, int prec_bits = kCertifierDefaultPrecBits);

struct QuarticBound {
    Scalar enclosure;  // sqrt(2*(36*sqrt(2) - (67/20)^2))
    long floor = 0;
};

QuarticBound quartic_bound(int prec_bits = kCertifierDefaultPrecBits);

/// Re-checks a candidate witness against all constraints with whole-enclosure
/// separation; appends one trace entry per constraint when trace != nullptr.
bool witness_satisfies(const TriangleWitness& w, int delta, int prec_bits,
                       std::vector<TraceEntry>* trace = nullptr);

/// Deterministic grid scan (64 x 64 x 256 over (a, b, theta), first satisfying
/// cell in scan order) with local bisection refinement under a fixed budget.
/// Absence of a witness is a legitimate return.
std::optional<TriangleWitness> find_witness(int delta, int prec_bits = kCertifierDefaultPrecBits);

/// Full verdict for one delta, refining precision on indeterminate enclosures
/// up to kCertifierMaxPrecBits.
CertReport certify_delta(int delta, int prec_bits = kCertifierDefaultPrecBits);

struct TheoremCertificate {
    std::vector<CertReport> reports;  // delta = 1..12
    int delta_max = 0;                // largest delta with a verified witness
    QuarticBound quartic;
    int max_integral_candidates = 0;  // delta_max + 1
};

/// Certifies the distance bound: witnesses for every delta <= 8, certified
/// infeasibility for 9..12, and the independent quartic route agreeing on 8.
TheoremCertificate certify_theorem(int prec_bits = kCertifierDefaultPrecBits);

}  // namespace slopecert
