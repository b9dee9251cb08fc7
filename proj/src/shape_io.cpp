#include "slopecert/shape_io.hpp"

#include <fstream>

namespace slopecert {

Scalar parse_boundary_scalar(const std::string& text, const Rational* uncertainty) {
    Rational mid = parse_rational(text);
    Rational radius = uncertainty ? *uncertainty : decimal_half_ulp(text);
    if (sgn(radius) == 0) return Scalar(mid);
    return Scalar::from_midpoint_radius(mid, radius);
}

CuspShape parse_inline_shape(const std::string& text, int prec_bits) {
    if (text == "fig8") return figure_eight_shape(prec_bits);
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4)
        throw ParseError("shape must be 'mx,my,lx,ly' or a built-in name: " + text);
    return CuspShape{{Scalar(parse_rational(parts[0])), Scalar(parse_rational(parts[1]))},
                     {Scalar(parse_rational(parts[2])), Scalar(parse_rational(parts[3]))},
                     text};
}

Slope parse_slope(const std::string& text) {
    auto slash = text.find('/');
    try {
        long long p = std::stoll(text.substr(0, slash));
        long long q = slash == std::string::npos ? 1 : std::stoll(text.substr(slash + 1));
        return normalize_slope(p, q);
    } catch (const std::logic_error&) {
        throw ParseError("bad slope: " + text);
    }
}

namespace {

Scalar entry_scalar(const json& value, const Rational* uncertainty) {
    if (!value.is_string()) throw ParseError("shape components must be number-strings");
    return parse_boundary_scalar(value.get<std::string>(), uncertainty);
}

Vec2 entry_vec(const json& value, const Rational* uncertainty) {
    if (!value.is_array() || value.size() != 2)
        throw ParseError("vector must be a pair of number-strings");
    return Vec2{entry_scalar(value[0], uncertainty), entry_scalar(value[1], uncertainty)};
}

}  // namespace

ShapeFile parse_shape_file(const json& doc) {
    if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
        throw ParseError("shape file must be an object with an 'entries' array");
    ShapeFile file;
    for (const auto& entry : doc["entries"]) {
        Rational radius;
        const Rational* uncertainty = nullptr;
        if (entry.contains("uncertainty")) {
            radius = parse_rational(entry["uncertainty"].get<std::string>());
            uncertainty = &radius;
        }
        CuspShape shape{entry_vec(entry.at("meridian"), uncertainty),
                        entry_vec(entry.at("longitude"), uncertainty),
                        entry.value("name", "")};
        cusp_area(shape);  // reject degenerate entries at the boundary
        file.entries.push_back(std::move(shape));
    }
    return file;
}

ShapeFile load_shape_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open shape file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ParseError("bad JSON in " + path + ": " + e.what());
    }
    return parse_shape_file(doc);
}

json scalar_to_json(const Scalar& value) {
    if (value.is_exact()) return json{{"rational", rational_to_string(value.lo())}};
    return json{{"interval", {rational_to_string(value.lo()), rational_to_string(value.hi())}}};
}

Scalar scalar_from_json(const json& doc) {
    if (doc.contains("rational")) return Scalar(parse_rational(doc["rational"].get<std::string>()));
    if (doc.contains("interval")) {
        const auto& pair = doc["interval"];
        return Scalar(parse_rational(pair.at(0).get<std::string>()),
                      parse_rational(pair.at(1).get<std::string>()));
    }
    throw ParseError("scalar must carry 'rational' or 'interval'");
}

json slope_report_to_json(const SlopeReport& report) {
    return json{{"slope", to_string(report.slope)},
                {"length", scalar_to_json(report.length)},
                {"boundary_uncertain", report.boundary_uncertain}};
}

json verify_report_to_json(const VerifyReport& report) {
    json slopes = json::array();
    for (const auto& [n, len] : report.integral_short_slopes)
        slopes.push_back(json{{"n", n}, {"length", scalar_to_json(len)}});
    return json{{"shape_name", report.shape_name},
                {"satisfies_min_slope", report.satisfies_min_slope},
                {"satisfies_min_area", report.satisfies_min_area},
                {"integral_short_slopes", std::move(slopes)},
                {"meridian_short", report.meridian_short},
                {"max_pairwise_distance", report.max_pairwise_distance},
                {"count", report.count},
                {"bound_holds", report.bound_holds},
                {"uncertain", report.uncertain}};
}

json trace_entry_to_json(const TraceEntry& entry) {
    return json{{"name", entry.name},
                {"value", scalar_to_json(entry.value)},
                {"condition", entry.condition},
                {"pass", entry.pass}};
}

json cert_report_to_json(const CertReport& report) {
    json trace = json::array();
    for (const auto& entry : report.trace) trace.push_back(trace_entry_to_json(entry));
    json out{{"delta", report.delta},
             {"verdict", to_string(report.verdict)},
             {"trace", std::move(trace)}};
    if (report.witness) {
        out["witness"] = json{{"a", scalar_to_json(report.witness->a)},
                              {"b", scalar_to_json(report.witness->b)},
                              {"theta", scalar_to_json(report.witness->theta)}};
    }
    return out;
}

json report_envelope(const std::vector<std::string>& command, json results) {
    return json{{"schema", kSchemaVersion},
                {"tool", "slopecert"},
                {"version", kToolVersion},
                {"command", command},
                {"results", std::move(results)}};
}

}  // namespace slopecert
