#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slopecert/lattice.hpp"

namespace slopecert {

/// Per-shape audit of the distance-8 / count-9 conclusion. The hypothesis
/// flags mirror the slope-length and area filters; bound_holds is only
/// asserted when both hold.
struct VerifyReport {
    std::string shape_name;
    bool satisfies_min_slope = false;  // shortest slope >= 2^(1/4)
    bool satisfies_min_area = false;   // area >= 67/20
    std::vector<std::pair<long long, Scalar>> integral_short_slopes;
    bool meridian_short = false;  // |(1,0)| <= 6
    long long max_pairwise_distance = 0;
    long long count = 0;
    bool bound_holds = false;
    bool uncertain = false;  // some comparison was within enclosure width of its threshold
};

struct SamplerConfig {
    std::uint64_t seed = 0;
    long long count = 1;
    // meridian length range, subset of [2^(1/4), 6]
    Rational meridian_min = Rational(5, 4);
    Rational meridian_max = Rational(6);
    // area range, lower end >= 67/20
    Rational area_min = Rational(67, 20);
    Rational area_max = Rational(12);
};

/// All n with |n*meridian + longitude| <= cutoff, ascending, with lengths.
std::vector<std::pair<long long, Scalar>> integral_short_slopes(
    const CuspShape& shape, const Scalar& cutoff = Scalar(6),
    int prec_bits = kDefaultPrecBits);

VerifyReport verify_shape(const CuspShape& shape, int prec_bits = kDefaultPrecBits);

/// Deterministic rejection sampler over shapes satisfying both hypotheses.
/// Throws SamplerExhaustedError when the rejection budget runs out.
std::vector<CuspShape> sample_constrained_shapes(const SamplerConfig& config,
                                                 int prec_bits = kDefaultPrecBits);

/// Built-in figure-eight cusp lattice: meridian (1, 0), longitude (0, 2*sqrt(3)).
/// The lattice data comes from the two-ideal-tetrahedron triangulation of the
/// figure-eight complement, not from this library.
CuspShape figure_eight_shape(int prec_bits = kDefaultPrecBits);

struct Figure8Demo {
    VerifyReport report;
    std::string narrative;
};

/// Sharpness demo: nine integral short slopes {-4..4}, max distance 8, slope 5
/// excluded. Throws Error if any of these fails to reproduce.
Figure8Demo figure8_demo(int prec_bits = kDefaultPrecBits);

}  // namespace slopecert
