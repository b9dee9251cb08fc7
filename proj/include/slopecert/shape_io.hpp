#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "slopecert/analyzer.hpp"
#include "slopecert/certifier.hpp"
#include "slopecert/lattice.hpp"

namespace slopecert {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

using json = nlohmann::json;

/// Number-string at the file trust boundary: "p/q" and integers are exact; a
/// decimal becomes an interval of radius `uncertainty` (or half an ulp of the
/// written decimal when no radius is given). No binary-float rounding anywhere.
Scalar parse_boundary_scalar(const std::string& text, const Rational* uncertainty = nullptr);

/// Inline CLI shape: "mx,my,lx,ly" with rational/decimal components (parsed
/// exactly), or a named built-in ("fig8").
CuspShape parse_inline_shape(const std::string& text, int prec_bits = kDefaultPrecBits);

/// "p/q" or "p" slope argument.
Slope parse_slope(const std::string& text);

struct ShapeFile {
    std::vector<CuspShape> entries;
};

ShapeFile parse_shape_file(const json& doc);
ShapeFile load_shape_file(const std::string& path);

// Scalars serialize as {"rational": "p/q"} or {"interval": ["lo", "hi"]},
// rational endpoints only; the round trip is lossless.
json scalar_to_json(const Scalar& value);
Scalar scalar_from_json(const json& doc);

json slope_report_to_json(const SlopeReport& report);
json verify_report_to_json(const VerifyReport& report);
json trace_entry_to_json(const TraceEntry& entry);
json cert_report_to_json(const CertReport& report);

/// Top-level report wrapper: schema/tool/version, the echoed command line,
/// and the per-entry results.
json report_envelope(const std::vector<std::string>& command, json results);

}  // namespace slopecert
