#include "slopecert/certifier.hpp"

#include <algorithm>

namespace slopecert {

namespace {

const Rational kMinArea(67, 20);  // 3.35, exactly

Scalar delta_squared(int delta) { return Scalar(static_cast<long>(delta)).square(); }

}  // namespace

Constraints Constraints::for_delta(int delta, int prec_bits) {
    Constraints c;
    c.side_max = Scalar(6);
    c.min_slope_length = fourth_root_two_enclosure(prec_bits);
    c.min_area = Scalar(kMinArea);
    c.delta = delta;
    return c;
}

Scalar TriangleWitness::opposite_side_squared(int prec_bits) const {
    Scalar cos_t = cos_enclosure(theta, prec_bits);
    return a.square() + b.square() - Scalar(2) * a * b * cos_t;
}

Scalar TriangleWitness::area(int prec_bits) const {
    Scalar sin_t = sin_enclosure(theta, prec_bits);
    return Scalar(Rational(1, 2)) * a * b * sin_t;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Infeasible: return "Infeasible";
        case Verdict::WitnessFound: return "WitnessFound";
        case Verdict::Indeterminate: return "Indeterminate";
    }
    return "?";
}

Scalar required_sin_lower(int delta) {
    Rational r(67 * static_cast<long>(delta), 720);
    r.canonicalize();
    return Scalar(r);
}

Scalar required_cos_lower(int delta, int prec_bits) {
    Scalar raw = (delta_squared(delta) / sqrt2_enclosure(prec_bits) - Scalar(36)) / Scalar(36);
    if (certainly_le(raw, Scalar(0))) return Scalar(0);
    return max(raw, Scalar(0));
}

TraceEntry obtuse_step(int delta, int prec_bits) {
    Scalar rhs = sqrt2_enclosure(prec_bits) * delta_squared(delta);
    TraceEntry e;
    e.name = "obtuse_step";
    e.value = rhs;
    e.condition = "72 < sqrt(2)*delta^2";
    e.pass = certainly_gt(rhs, Scalar(72));
    return e;
}

TraceEntry combined_feasibility(int delta, int prec_bits) {
    Scalar cos_term = delta_squared(delta) / sqrt2_enclosure(prec_bits) - Scalar(36);
    Scalar sin_term = Scalar(kMinArea) * Scalar(static_cast<long>(delta));
    Scalar left = cos_term.square() + sin_term.square();
    TraceEntry e;
    e.name = "combined_feasibility";
    e.value = left;
    e.condition = "(delta^2/sqrt(2) - 36)^2 + (3.35*delta)^2 < 1296";
    if (left.lo() >= 1296) {
        e.pass = false;  // necessary condition violated on the whole enclosure
        return e;
    }
    if (left.hi() < 1296) {
        e.pass = true;
        return e;
    }
    throw IndeterminateEnclosureError("combined inequality enclosure straddles 1296 at " +
                                      std::to_string(prec_bits) + " bits");
}

QuarticBound quartic_bound(int prec_bits) {
    Scalar arg = Scalar(2) * (Scalar(36) * sqrt2_enclosure(prec_bits) -
                              Scalar(kMinArea).square());
    Scalar enc = sqrt_enclosure(arg, prec_bits);
    mpz_class flo, fhi;
    mpz_fdiv_q(flo.get_mpz_t(), enc.lo().get_num().get_mpz_t(), enc.lo().get_den().get_mpz_t());
    mpz_fdiv_q(fhi.get_mpz_t(), enc.hi().get_num().get_mpz_t(), enc.hi().get_den().get_mpz_t());
    if (flo != fhi)
        throw IndeterminateEnclosureError("quartic bound enclosure straddles an integer");
    return QuarticBound{enc, flo.get_si()};
}

bool witness_satisfies(const TriangleWitness& w, int delta, int prec_bits,
                       std::vector<TraceEntry>* trace) {
    auto record = [&](const std::string& name, const Scalar& value, const std::string& cond,
                      bool pass) {
        if (trace) trace->push_back(TraceEntry{name, value, cond, pass});
        return pass;
    };
    const Scalar six(6);
    const Scalar& pi = pi_enclosure();
    bool ok = true;
    ok &= record("side_a", w.a, "0 < a <= 6",
                 certainly_gt(w.a, Scalar(0)) && certainly_le(w.a, six));
    ok &= record("side_b", w.b, "0 < b <= 6",
                 certainly_gt(w.b, Scalar(0)) && certainly_le(w.b, six));
    ok &= record("angle", w.theta, "0 < theta < pi",
                 certainly_gt(w.theta, Scalar(0)) && certainly_lt(w.theta, pi));
    Scalar c_sq = w.opposite_side_squared(prec_bits);
    Scalar c_req = sqrt2_enclosure(prec_bits) * delta_squared(delta);
    ok &= record("opposite_side", c_sq, "c^2 >= sqrt(2)*delta^2", certainly_ge(c_sq, c_req));
    Scalar area2 = w.a * w.b * sin_enclosure(w.theta, prec_bits);  // 2*Area
    Scalar area_req = Scalar(kMinArea) * Scalar(static_cast<long>(delta));
    ok &= record("double_area", area2, "a*b*sin(theta) >= 3.35*delta",
                 certainly_ge(area2, area_req));
    return ok;
}

std::optional<TriangleWitness> find_witness(int delta, int prec_bits) {
    TraceEntry combined = combined_feasibility(delta, prec_bits);
    if (!combined.pass) return std::nullopt;

    constexpr int kSideCells = 64;
    constexpr int kAngleCells = 256;
    constexpr long kBudget = 1000000;

    // theta grid inside (0, 3.14) subset of (0, pi)
    std::vector<Rational> thetas(kAngleCells);
    std::vector<Scalar> sins(kAngleCells), coss(kAngleCells);
    for (int k = 0; k < kAngleCells; ++k) {
        Rational t = Rational(157, 50) * Rational(k + 1, kAngleCells + 1);
        t.canonicalize();
        thetas[k] = t;
        sins[k] = sin_enclosure(Scalar(t), prec_bits);
        coss[k] = cos_enclosure(Scalar(t), prec_bits);
    }

    Scalar c_req = sqrt2_enclosure(prec_bits) * delta_squared(delta);
    Rational area_req = kMinArea * delta;
    long evals = 0;

    auto check = [&](const Rational& a, const Rational& b, const Scalar& sin_t,
                     const Scalar& cos_t) {
        ++evals;
        Rational ab = a * b;
        Scalar c_sq = Scalar(a * a + b * b) - Scalar(2 * ab) * cos_t;
        if (!certainly_ge(c_sq, c_req)) return false;
        return certainly_ge(Scalar(ab) * sin_t, Scalar(area_req));
    };

    // scan sides from the long end; first satisfying cell in this order wins
    for (int i = 0; i < kSideCells && evals < kBudget; ++i) {
        Rational a = Rational(6 * (kSideCells - i), kSideCells);
        a.canonicalize();
        for (int j = 0; j < kSideCells && evals < kBudget; ++j) {
            Rational b = Rational(6 * (kSideCells - j), kSideCells);
            b.canonicalize();
            for (int k = 0; k < kAngleCells && evals < kBudget; ++k) {
                if (check(a, b, sins[k], coss[k]))
                    return TriangleWitness{Scalar(a), Scalar(b), Scalar(thetas[k])};
            }
        }
    }
    return std::nullopt;
}

namespace {

CertReport certify_delta_at(int delta, int prec_bits) {
    CertReport report;
    report.delta = delta;
    report.trace.push_back(TraceEntry{"required_sin_lower", required_sin_lower(delta),
                                      "sin(theta) must exceed 3.35*delta/36", true});
    report.trace.push_back(TraceEntry{"required_cos_lower", required_cos_lower(delta, prec_bits),
                                      "|cos(theta)| must exceed max(0, (delta^2/sqrt(2)-36)/36)",
                                      true});
    report.trace.push_back(obtuse_step(delta, prec_bits));
    TraceEntry combined = combined_feasibility(delta, prec_bits);
    report.trace.push_back(combined);
    if (!combined.pass) {
        report.verdict = Verdict::Infeasible;
        return report;
    }
    auto witness = find_witness(delta, prec_bits);
    if (!witness) {
        report.verdict = Verdict::Indeterminate;
        return report;
    }
    std::vector<TraceEntry> witness_trace;
    if (!witness_satisfies(*witness, delta, prec_bits, &witness_trace))
        throw Error("internal: witness failed its own re-check");
    for (auto& e : witness_trace) report.trace.push_back(std::move(e));
    report.witness = witness;
    report.verdict = Verdict::WitnessFound;
    return report;
}

}  // namespace

CertReport certify_delta(int delta, int prec_bits) {
    if (delta < 1) throw Error("delta must be >= 1");
    for (int prec = prec_bits; prec <= kCertifierMaxPrecBits; prec *= 2) {
        try {
            return certify_delta_at(delta, prec);
        } catch (const IndeterminateEnclosureError&) {
            if (prec * 2 > kCertifierMaxPrecBits) throw;
        }
    }
    throw IndeterminateEnclosureError("certify_delta: max precision reached");
}

TheoremCertificate certify_theorem(int prec_bits) {
    TheoremCertificate cert;
    cert.quartic = quartic_bound(prec_bits);
    for (int delta = 1; delta <= 12; ++delta) {
        CertReport r = certify_delta(delta, prec_bits);
        if (r.verdict == Verdict::WitnessFound) cert.delta_max = std::max(cert.delta_max, delta);
        cert.reports.push_back(std::move(r));
    }
    if (cert.quartic.floor != cert.delta_max)
        throw Error("certification routes disagree: quartic floor " +
                    std::to_string(cert.quartic.floor) + " vs witness scan " +
                    std::to_string(cert.delta_max));
    cert.max_integral_candidates = cert.delta_max + 1;
    return cert;
}

}  // namespace slopecert
