#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "slopecert/shape_io.hpp"

namespace {

using namespace slopecert;

constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitBoundViolation = 4;
constexpr int kExitIndeterminate = 5;

std::string fmt_scalar(const Scalar& s) {
    char approx[32];
    std::snprintf(approx, sizeof approx, "%.10g", s.approx());
    if (s.is_exact()) return rational_to_string(s.lo()) + " (~" + approx + ")";
    return "[" + rational_to_string(s.lo()) + ", " + rational_to_string(s.hi()) + "] (~" + approx +
           ")";
}

void emit(const json& envelope) { std::cout << envelope.dump(2) << "\n"; }

int cmd_length(const std::vector<std::string>& argv, const std::string& shape_spec,
               const std::string& slope_spec, const std::string& format, int prec) {
    CuspShape shape = parse_inline_shape(shape_spec, prec);
    Slope slope = parse_slope(slope_spec);
    cusp_area(shape);
    Scalar length = slope_length(shape, slope, prec);
    if (format == "json") {
        emit(report_envelope(argv, json{{"slope", to_string(slope)},
                                        {"length", scalar_to_json(length)}}));
    } else {
        std::cout << "length(" << to_string(slope) << ") = " << fmt_scalar(length) << "\n";
    }
    return 0;
}

int cmd_distance(const std::vector<std::string>& argv, const std::string& s1_spec,
                 const std::string& s2_spec, const std::string& format) {
    Slope s1 = parse_slope(s1_spec);
    Slope s2 = parse_slope(s2_spec);
    long long d = slope_distance(s1, s2);
    if (format == "json") {
        emit(report_envelope(argv, json{{"slope1", to_string(s1)},
                                        {"slope2", to_string(s2)},
                                        {"distance", d}}));
    } else {
        std::cout << "distance(" << to_string(s1) << ", " << to_string(s2) << ") = " << d << "\n";
    }
    return 0;
}

int cmd_short(const std::vector<std::string>& argv, const std::string& shape_spec,
              const std::string& max_length, const std::string& format, int prec) {
    CuspShape shape = parse_inline_shape(shape_spec, prec);
    Scalar cutoff(parse_rational(max_length));
    auto reports = enumerate_short_slopes(shape, cutoff, prec);
    if (format == "json") {
        json results = json::array();
        for (const auto& r : reports) results.push_back(slope_report_to_json(r));
        emit(report_envelope(argv, std::move(results)));
    } else {
        std::cout << reports.size() << " slope(s) of length <= " << rational_to_string(cutoff.lo())
                  << ":\n";
        for (const auto& r : reports) {
            std::cout << "  " << to_string(r.slope) << "  length " << fmt_scalar(r.length);
            if (r.boundary_uncertain) std::cout << "  [boundary uncertain]";
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_verify(const std::vector<std::string>& argv, const std::string& file_path,
               const std::string& shape_spec, long long count, std::uint64_t seed,
               const std::string& format, int prec) {
    std::vector<CuspShape> shapes;
    if (!file_path.empty()) {
        shapes = load_shape_file(file_path).entries;
    } else if (!shape_spec.empty()) {
        shapes.push_back(parse_inline_shape(shape_spec, prec));
    } else if (count > 0) {
        SamplerConfig config;
        config.seed = seed;
        config.count = count;
        shapes = sample_constrained_shapes(config, prec);
    } else {
        throw ParseError("verify needs a shape file, --shape, or --count");
    }

    json results = json::array();
    bool violation = false;
    for (const auto& shape : shapes) {
        VerifyReport report = verify_shape(shape, prec);
        if (report.satisfies_min_slope && report.satisfies_min_area && !report.bound_holds)
            violation = true;
        results.push_back(verify_report_to_json(report));
    }
    if (format == "table") {
        for (const auto& r : results) {
            std::cout << (r["shape_name"].get<std::string>().empty()
                              ? std::string("(unnamed)")
                              : r["shape_name"].get<std::string>())
                      << ": count=" << r["count"] << " max_distance=" << r["max_pairwise_distance"]
                      << " hypotheses=" << (r["satisfies_min_slope"].get<bool>() ? "T" : "F")
                      << (r["satisfies_min_area"].get<bool>() ? "T" : "F")
                      << " bound_holds=" << (r["bound_holds"].get<bool>() ? "yes" : "no") << "\n";
        }
    } else {
        emit(report_envelope(argv, std::move(results)));
    }
    if (violation) {
        std::cerr << "verify: bound violated on a shape satisfying both hypotheses"
                  << " (implementation bug)\n";
        return kExitBoundViolation;
    }
    return 0;
}

int cmd_certify(const std::vector<std::string>& argv, int delta, bool want_max,
                const std::string& format, int prec) {
    if (want_max) {
        TheoremCertificate cert = certify_theorem(prec);
        if (format == "json") {
            json results = json::array();
            for (const auto& r : cert.reports) results.push_back(cert_report_to_json(r));
            json envelope = report_envelope(argv, std::move(results));
            envelope["delta_max"] = cert.delta_max;
            envelope["max_integral_candidates"] = cert.max_integral_candidates;
            envelope["quartic_bound"] = scalar_to_json(cert.quartic.enclosure);
            emit(envelope);
        } else {
            for (const auto& r : cert.reports)
                std::cout << "delta = " << r.delta << ": " << to_string(r.verdict) << "\n";
            std::cout << "quartic bound sqrt(2(36*sqrt(2) - 3.35^2)) = "
                      << fmt_scalar(cert.quartic.enclosure) << ", floor "
                      << cert.quartic.floor << "\n";
            std::cout << "Delta_max = " << cert.delta_max << "\n";
            std::cout << "at most " << cert.max_integral_candidates
                      << " integral candidate surgeries\n";
        }
        return 0;
    }
    CertReport report = certify_delta(delta, prec);
    if (format == "json") {
        emit(report_envelope(argv, cert_report_to_json(report)));
    } else {
        std::cout << "delta = " << report.delta << ": " << to_string(report.verdict) << "\n";
        for (const auto& e : report.trace) {
            std::cout << "  " << e.name << ": " << fmt_scalar(e.value) << "  [" << e.condition
                      << "] " << (e.pass ? "pass" : "fail") << "\n";
        }
        if (report.witness) {
            std::cout << "  witness: a = " << fmt_scalar(report.witness->a)
                      << ", b = " << fmt_scalar(report.witness->b)
                      << ", theta = " << fmt_scalar(report.witness->theta) << "\n";
        }
    }
    return 0;
}

int cmd_demo(const std::vector<std::string>& argv, const std::string& which,
             const std::string& format, int prec) {
    if (which != "fig8") throw ParseError("unknown demo: " + which);
    Figure8Demo demo = figure8_demo(prec);
    if (format == "json") {
        json envelope = report_envelope(argv, verify_report_to_json(demo.report));
        envelope["narrative"] = demo.narrative;
        emit(envelope);
    } else {
        std::cout << demo.narrative;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"slopecert: certified slope geometry on maximal cusp tori"};
    app.require_subcommand(1);
    std::vector<std::string> echoed(argv, argv + argc);

    std::string shape_spec, slope_spec, slope2_spec, format = "table", file_path;
    std::string max_length = "6";
    int delta = 0, prec = kDefaultPrecBits;
    bool want_max = false;
    long long count = 0;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--precision", prec, "interval precision in bits");
    };

    auto* length = app.add_subcommand("length", "length of a slope on a cusp lattice");
    length->add_option("--shape", shape_spec)->required();
    length->add_option("--slope", slope_spec)->required();
    add_common(length);

    auto* distance = app.add_subcommand("distance", "intersection distance |p1*q2 - p2*q1|");
    distance->add_option("slope1", slope_spec)->required();
    distance->add_option("slope2", slope2_spec)->required();
    add_common(distance);

    auto* shortcmd = app.add_subcommand("short", "enumerate slopes of length <= cutoff");
    shortcmd->add_option("--shape", shape_spec)->required();
    shortcmd->add_option("--max-length", max_length);
    add_common(shortcmd);

    auto* verify = app.add_subcommand("verify", "check the distance-8 / count-9 bound per shape");
    verify->add_option("file", file_path, "ShapeFile JSON path");
    verify->add_option("--shape", shape_spec);
    verify->add_option("--count", count, "sample this many constrained shapes");
    verify->add_option("--seed", seed);
    add_common(verify);

    auto* certify = app.add_subcommand("certify", "certify the inequality chain");
    certify->add_option("--delta", delta)->check(CLI::PositiveNumber);
    certify->add_flag("--max", want_max, "full 1..12 table and Delta_max");
    add_common(certify);

    auto* demo = app.add_subcommand("demo", "built-in sharpness demo");
    std::string which = "fig8";
    demo->add_option("name", which, "demo name (fig8)");
    add_common(demo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitParse;
    }

    try {
        if (app.got_subcommand(length))
            return cmd_length(echoed, shape_spec, slope_spec, format, prec);
        if (app.got_subcommand(distance))
            return cmd_distance(echoed, slope_spec, slope2_spec, format);
        if (app.got_subcommand(shortcmd))
            return cmd_short(echoed, shape_spec, max_length, format, prec);
        if (app.got_subcommand(verify))
            return cmd_verify(echoed, file_path, shape_spec, count, seed, format, prec);
        if (app.got_subcommand(certify)) {
            if (!want_max && delta < 1) throw ParseError("certify needs --delta N or --max");
            return cmd_certify(echoed, delta, want_max, format, prec);
        }
        if (app.got_subcommand(demo)) return cmd_demo(echoed, which, format, prec);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ZeroSlopeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NonPrimitiveError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DegenerateLatticeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const IndeterminateEnclosureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIndeterminate;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitParse;
}
