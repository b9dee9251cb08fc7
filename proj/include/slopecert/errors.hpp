#pragma once

#include <stdexcept>
#include <string>

namespace slopecert {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (p, q) = (0, 0) names no curve.
struct ZeroSlopeError : Error {
    ZeroSlopeError() : Error("slope (0, 0) is not a curve class") {}
};

// gcd(|p|, |q|) > 1 names a multiple of a curve, not a slope.
struct NonPrimitiveError : Error {
    explicit NonPrimitiveError(long long g)
        : Error("non-primitive pair (gcd = " + std::to_string(g) + ")"), gcd(g) {}
    long long gcd;
};

// The determinant enclosure of (meridian, longitude) contains zero.
struct DegenerateLatticeError : Error {
    DegenerateLatticeError() : Error("degenerate lattice: basis determinant enclosure contains 0") {}
};

// An interval comparison could not be decided at the configured precision.
struct IndeterminateEnclosureError : Error {
    explicit IndeterminateEnclosureError(const std::string& what_arg) : Error(what_arg) {}
};

// The rejection sampler exceeded its retry budget.
struct SamplerExhaustedError : Error {
    SamplerExhaustedError() : Error("sampler rejection budget exhausted; constraints too tight") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what_arg) : Error(what_arg) {}
};

}  // namespace slopecert
