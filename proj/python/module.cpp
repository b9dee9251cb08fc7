#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slopecert/analyzer.hpp"
#include "slopecert/certifier.hpp"
#include "slopecert/lattice.hpp"
#include "slopecert/shape_io.hpp"

namespace py = pybind11;
using namespace slopecert;

namespace {

CuspShape make_shape(const std::string& mx, const std::string& my, const std::string& lx,
                     const std::string& ly, const std::string& name) {
    return CuspShape{{Scalar(parse_rational(mx)), Scalar(parse_rational(my))},
                     {Scalar(parse_rational(lx)), Scalar(parse_rational(ly))},
                     name};
}

}  // namespace

PYBIND11_MODULE(_slopecert, m) {
    m.doc() = "certified slope geometry on maximal cusp tori";

    py::register_exception<ZeroSlopeError>(m, "ZeroSlopeError");
    py::register_exception<NonPrimitiveError>(m, "NonPrimitiveError");
    py::register_exception<DegenerateLatticeError>(m, "DegenerateLatticeError");
    py::register_exception<IndeterminateEnclosureError>(m, "IndeterminateEnclosureError");
    py::register_exception<SamplerExhaustedError>(m, "SamplerExhaustedError");

    py::class_<Scalar>(m, "Scalar")
        .def(py::init([](const std::string& text) { return Scalar(parse_rational(text)); }))
        .def_property_readonly("lo", [](const Scalar& s) { return rational_to_string(s.lo()); })
        .def_property_readonly("hi", [](const Scalar& s) { return rational_to_string(s.hi()); })
        .def_property_readonly("is_exact", &Scalar::is_exact)
        .def("__float__", &Scalar::approx)
        .def("__repr__", [](const Scalar& s) {
            if (s.is_exact()) return "Scalar(" + rational_to_string(s.lo()) + ")";
            return "Scalar([" + rational_to_string(s.lo()) + ", " + rational_to_string(s.hi()) +
                   "])";
        });

    py::class_<Slope>(m, "Slope")
        .def(py::init([](long long p, long long q) { return normalize_slope(p, q); }))
        .def_readonly("p", &Slope::p)
        .def_readonly("q", &Slope::q)
        .def("__eq__", [](const Slope& a, const Slope& b) { return a == b; })
        .def("__repr__", [](const Slope& s) { return "Slope(" + to_string(s) + ")"; });

    py::class_<CuspShape>(m, "CuspShape")
        .def(py::init(&make_shape), py::arg("mx"), py::arg("my"), py::arg("lx"), py::arg("ly"),
             py::arg("name") = "")
        .def_readonly("name", &CuspShape::name)
        .def("area", &CuspShape::area);

    py::class_<SlopeReport>(m, "SlopeReport")
        .def_readonly("slope", &SlopeReport::slope)
        .def_readonly("length", &SlopeReport::length)
        .def_readonly("boundary_uncertain", &SlopeReport::boundary_uncertain);

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("shape_name", &VerifyReport::shape_name)
        .def_readonly("satisfies_min_slope", &VerifyReport::satisfies_min_slope)
        .def_readonly("satisfies_min_area", &VerifyReport::satisfies_min_area)
        .def_readonly("integral_short_slopes", &VerifyReport::integral_short_slopes)
        .def_readonly("meridian_short", &VerifyReport::meridian_short)
        .def_readonly("max_pairwise_distance", &VerifyReport::max_pairwise_distance)
        .def_readonly("count", &VerifyReport::count)
        .def_readonly("bound_holds", &VerifyReport::bound_holds)
        .def_readonly("uncertain", &VerifyReport::uncertain);

    py::class_<TriangleWitness>(m, "TriangleWitness")
        .def_readonly("a", &TriangleWitness::a)
        .def_readonly("b", &TriangleWitness::b)
        .def_readonly("theta", &TriangleWitness::theta);

    py::class_<CertReport>(m, "CertReport")
        .def_readonly("delta", &CertReport::delta)
        .def_property_readonly("verdict",
                               [](const CertReport& r) { return to_string(r.verdict); })
        .def_readonly("witness", &CertReport::witness);

    m.def("normalize_slope", &normalize_slope, py::arg("p"), py::arg("q"));
    m.def("slope_distance", &slope_distance);
    m.def("slope_length", &slope_length, py::arg("shape"), py::arg("slope"),
          py::arg("prec_bits") = kDefaultPrecBits);
    m.def("cusp_area", &cusp_area);
    m.def("enumerate_short_slopes", &enumerate_short_slopes, py::arg("shape"), py::arg("cutoff"),
          py::arg("prec_bits") = kDefaultPrecBits);
    m.def("shortest_slope", &shortest_slope, py::arg("shape"),
          py::arg("prec_bits") = kDefaultPrecBits);
    m.def("integral_short_slopes", &integral_short_slopes, py::arg("shape"),
          py::arg("cutoff") = Scalar(6), py::arg("prec_bits") = kDefaultPrecBits);
    m.def("verify_shape", &verify_shape, py::arg("shape"),
          py::arg("prec_bits") = kDefaultPrecBits);
    m.def("figure_eight_shape", &figure_eight_shape, py::arg("prec_bits") = kDefaultPrecBits);
    m.def("figure8_demo", [](int prec_bits) {
        Figure8Demo demo = figure8_demo(prec_bits);
        return py::make_tuple(demo.report, demo.narrative);
    }, py::arg("prec_bits") = kDefaultPrecBits);
    m.def("sample_constrained_shapes", [](std::uint64_t seed, long long count, int prec_bits) {
        SamplerConfig config;
        config.seed = seed;
        config.count = count;
        return sample_constrained_shapes(config, prec_bits);
    }, py::arg("seed"), py::arg("count"), py::arg("prec_bits") = kDefaultPrecBits);
    m.def("certify_delta", &certify_delta, py::arg("delta"),
          py::arg("prec_bits") = kCertifierDefaultPrecBits);
    m.def("certify_theorem", [](int prec_bits) {
        TheoremCertificate cert = certify_theorem(prec_bits);
        py::dict out;
        out["delta_max"] = cert.delta_max;
        out["max_integral_candidates"] = cert.max_integral_candidates;
        out["quartic_bound"] = cert.quartic.enclosure;
        out["reports"] = cert.reports;
        return out;
    }, py::arg("prec_bits") = kCertifierDefaultPrecBits);
    m.def("quartic_bound", [](int prec_bits) {
        QuarticBound qb = quartic_bound(prec_bits);
        return py::make_tuple(qb.enclosure, qb.floor);
    }, py::arg("prec_bits") = kCertifierDefaultPrecBits);
    m.def("find_witness", &find_witness, py::arg("delta"),
          py::arg("prec_bits") = kCertifierDefaultPrecBits);
}
