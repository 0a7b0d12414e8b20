#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shiftspec/errors.hpp"
#include "shiftspec/experiment.hpp"
#include "shiftspec/multidim.hpp"
#include "shiftspec/operators.hpp"
#include "shiftspec/spectra.hpp"
#include "shiftspec/verify.hpp"

namespace py = pybind11;
using namespace shiftspec;

namespace {

double ext_to_double(const ExtReal& v) { return v.raw(); }

std::string contains_name(ContainsVerdict v) {
    switch (v) {
    case ContainsVerdict::Inside: return "inside";
    case ContainsVerdict::Boundary: return "boundary";
    case ContainsVerdict::Outside: return "outside";
    }
    return "?";
}

PointCloud cloud_from_points(const std::vector<Complex>& pts) {
    PointCloud c;
    c.points = pts;
    return c;
}

py::dict cert_to_dict(const Certificate& c) {
    py::dict d;
    d["verdict"] = verdict_name(c.verdict);
    d["lambda"] = c.lambda;
    d["context"] = c.context;
    d["residual_table"] = c.residual_table;
    d["growth_table"] = c.growth_table;
    d["bound"] = c.bound;
    d["tail"] = c.tail;
    d["identity_residual"] = c.identity_residual;
    d["margin"] = c.margin;
    d["reason"] = c.reason;
    d["params"] = c.params;
    return d;
}

} // namespace

PYBIND11_MODULE(shiftspec, m) {
    m.doc() = "spectra of shift, multiplier and Toeplitz operators on weighted sequence spaces";

    py::register_exception<UnsupportedNormError>(m, "UnsupportedNormError", PyExc_ValueError);
    py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ValueError);
    py::register_exception<PoleError>(m, "PoleError", PyExc_ZeroDivisionError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::enum_<Domain>(m, "Domain")
        .value("bilateral", Domain::Bilateral)
        .value("unilateral", Domain::Unilateral);

    py::class_<WeightFamily>(m, "WeightFamily")
        .def_static("constant", &WeightFamily::constant, py::arg("domain") = Domain::Bilateral)
        .def_static("geometric", &WeightFamily::geometric, py::arg("a"),
                    py::arg("domain") = Domain::Bilateral)
        .def_static("two_sided_exp", &WeightFamily::two_sided_exp, py::arg("alpha"),
                    py::arg("domain") = Domain::Bilateral)
        .def_static("polynomial", &WeightFamily::polynomial, py::arg("s"),
                    py::arg("domain") = Domain::Bilateral)
        .def_static("piecewise_super_exp", &WeightFamily::piecewise_super_exp,
                    py::arg("domain") = Domain::Bilateral)
        .def_static(
            "table",
            [](int offset, std::vector<double> values, const std::string& extension, double ratio,
               Domain d) {
                const TableExtension ext = extension == "geometric" ? TableExtension::GeometricTail
                                                                    : TableExtension::ConstantTail;
                return WeightFamily::table(offset, std::move(values), ext, ratio, d);
            },
            py::arg("offset"), py::arg("values"), py::arg("extension") = "constant",
            py::arg("ratio") = 1.0, py::arg("domain") = Domain::Bilateral)
        .def("__repr__", &WeightFamily::describe);

    m.def("eval_weight", &eval_weight, py::arg("weight"), py::arg("n"));

    py::class_<SpaceSpec>(m, "SpaceSpec")
        .def_static("weighted_lp", &SpaceSpec::weighted_lp, py::arg("domain"), py::arg("p"),
                    py::arg("weight"))
        .def_static("orlicz_space", &SpaceSpec::orlicz_space, py::arg("domain"), py::arg("K"),
                    py::arg("weight"))
        .def_static("variable_exponent", &SpaceSpec::variable_exponent, py::arg("domain"),
                    py::arg("q"));

    py::class_<OrliczFunction>(m, "OrliczFunction")
        .def_static("power", &OrliczFunction::power, py::arg("p"))
        .def_static("table", &OrliczFunction::table, py::arg("xs"), py::arg("ys"))
        .def("__call__", &OrliczFunction::operator());

    py::class_<ExponentRule>(m, "ExponentRule")
        .def_static("constant", &ExponentRule::constant, py::arg("q"))
        .def_static("table", &ExponentRule::table, py::arg("offset"), py::arg("values"),
                    py::arg("tail"))
        .def("__call__", &ExponentRule::operator());

    py::class_<FiniteSeq>(m, "FiniteSeq")
        .def(py::init<int, std::vector<Complex>>(), py::arg("offset"), py::arg("coeffs"))
        .def_static("unit", &FiniteSeq::unit, py::arg("k"), py::arg("value") = Complex(1.0, 0.0))
        .def("coeff", &FiniteSeq::coeff)
        .def("first", &FiniteSeq::first)
        .def("last", &FiniteSeq::last)
        .def("is_zero", &FiniteSeq::is_zero)
        .def("coeffs", &FiniteSeq::coeffs)
        .def("__add__", [](const FiniteSeq& a, const FiniteSeq& b) { return a + b; })
        .def("__sub__", [](const FiniteSeq& a, const FiniteSeq& b) { return a - b; });

    m.def("shift_norm", [](const SpaceSpec& s, int k) { return ext_to_double(shift_norm(s, k)); },
          py::arg("space"), py::arg("k"));
    m.def(
        "spectral_radius_shift",
        [](const SpaceSpec& s, bool forward, int horizon) {
            const RadiusBracket b = spectral_radius_shift(
                s, forward ? ShiftDirection::Forward : ShiftDirection::Backward, horizon);
            return py::make_tuple(ext_to_double(b.lower), ext_to_double(b.upper));
        },
        py::arg("space"), py::arg("forward") = true, py::arg("horizon") = 16);
    m.def(
        "boundedness",
        [](const SpaceSpec& s, bool forward) {
            const BoundednessReport r =
                boundedness(s, forward ? ShiftDirection::Forward : ShiftDirection::Backward);
            py::dict d;
            d["bounded"] = r.bounded;
            d["sup_ratio"] = r.sup_ratio;
            d["attained_at"] = r.attained_at;
            d["divergence"] = r.divergence;
            return d;
        },
        py::arg("space"), py::arg("forward") = true);

    m.def("space_norm", &space_norm, py::arg("space"), py::arg("f"));
    m.def("scale_seq", &scale_seq, py::arg("f"), py::arg("r"));

    py::class_<OperatorSpec>(m, "OperatorSpec")
        .def_static("multiplier", &OperatorSpec::multiplier, py::arg("phi"), py::arg("space"))
        .def_static("toeplitz", &OperatorSpec::toeplitz, py::arg("phi"), py::arg("space"))
        .def_static("shift_power", &OperatorSpec::shift_power, py::arg("k"), py::arg("space"))
        .def("__repr__", &OperatorSpec::describe);

    m.def("convolve", &convolve, py::arg("phi"), py::arg("f"));
    m.def("project_plus", &project_plus, py::arg("u"));
    m.def("apply_operator", &apply_operator, py::arg("op"), py::arg("f"));
    m.def(
        "finite_section",
        [](const OperatorSpec& op, int N) {
            const FiniteSection s = finite_section(op, N);
            const std::size_t dim = static_cast<std::size_t>(s.dim());
            std::vector<std::vector<Complex>> rows(dim, std::vector<Complex>(dim));
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) rows[i][j] = s.matrix.at(i, j);
            return rows;
        },
        py::arg("op"), py::arg("N"));
    m.def(
        "operator_norm_bracket",
        [](const OperatorSpec& op, int N) {
            const NormBracket b = operator_norm_bracket(op, N);
            return py::make_tuple(b.lower ? py::cast(*b.lower) : py::none(),
                                  py::cast(ext_to_double(b.upper)));
        },
        py::arg("op"), py::arg("N") = 128);

    m.def(
        "eval_symbol",
        [](const FiniteSeq& coeffs, Complex z) { return eval_symbol(LaurentSymbol(coeffs), z); },
        py::arg("coeffs"), py::arg("z"));
    m.def(
        "sup_on_circle",
        [](const FiniteSeq& coeffs, double r, int grid) {
            const CircleSup s = sup_on_circle(LaurentSymbol(coeffs), r, grid);
            return py::make_tuple(s.value, s.slack);
        },
        py::arg("coeffs"), py::arg("r"), py::arg("grid") = 4096);

    py::class_<SpectralRegion>(m, "SpectralRegion")
        .def_property_readonly("variant", &SpectralRegion::kind_name)
        .def_property_readonly("rmin", [](const SpectralRegion& r) { return r.rmin.raw(); })
        .def_property_readonly("rmax", [](const SpectralRegion& r) { return r.rmax.raw(); })
        .def_property_readonly("points", [](const SpectralRegion& r) { return r.cloud.points; })
        .def_property_readonly("inclusion_only",
                               [](const SpectralRegion& r) {
                                   return r.semantics == RegionSemantics::InclusionOnly;
                               })
        .def("__repr__", [](const SpectralRegion& r) { return "<SpectralRegion " + r.kind_name() + ">"; });

    m.def("predicted_sigma_shift", &predicted_sigma_shift, py::arg("space"));
    m.def(
        "predicted_sigma_unilateral",
        [](const SpaceSpec& s, bool forward) {
            return predicted_sigma_unilateral(s, forward ? ShiftDirection::Forward
                                                         : ShiftDirection::Backward);
        },
        py::arg("space"), py::arg("forward") = true);
    m.def("predicted_sigma_multiplier", &predicted_sigma_multiplier, py::arg("phi"), py::arg("space"),
          py::arg("radial_grid") = kDefaultRadialGrid, py::arg("angular_grid") = kDefaultAngularGrid);
    m.def(
        "predicted_sigma_toeplitz",
        [](const FiniteSeq& phi, const SpaceSpec& s, const std::string& side, int radial, int angular) {
            const ToeplitzSide ts = side == "backward" ? ToeplitzSide::CommutesWithBackward
                                                       : ToeplitzSide::CommutesWithForward;
            return predicted_sigma_toeplitz(phi, s, ts, radial, angular);
        },
        py::arg("phi"), py::arg("space"), py::arg("side") = "forward",
        py::arg("radial_grid") = kDefaultRadialGrid, py::arg("angular_grid") = kDefaultAngularGrid);
    m.def(
        "region_contains",
        [](const SpectralRegion& r, Complex lambda, double tol) {
            return contains_name(region_contains(r, lambda, tol));
        },
        py::arg("region"), py::arg("lambda_"), py::arg("tol") = 1e-9);
    m.def(
        "hausdorff",
        [](const std::vector<Complex>& a, const std::vector<Complex>& b) {
            return hausdorff(cloud_from_points(a), cloud_from_points(b));
        },
        py::arg("a"), py::arg("b"));

    m.def("approx_eigen_residual", &approx_eigen_residual, py::arg("op"), py::arg("z"), py::arg("N"));
    m.def("blowup_witness", &blowup_witness, py::arg("op"), py::arg("lambda_"), py::arg("Ns"));
    m.def(
        "outside_certificate",
        [](const FiniteSeq& phi, Complex lambda, const SpaceSpec& s, double r_minus, double r_plus,
           int mm) { return cert_to_dict(outside_certificate(phi, lambda, s, r_minus, r_plus, mm)); },
        py::arg("phi"), py::arg("lambda_"), py::arg("space"), py::arg("r_minus"), py::arg("r_plus"),
        py::arg("m") = 256);
    m.def(
        "neumann_outside_certificate",
        [](const OperatorSpec& op, Complex lambda, int horizon) {
            return cert_to_dict(neumann_outside_certificate(op, lambda, horizon));
        },
        py::arg("op"), py::arg("lambda_"), py::arg("horizon") = 64);
    m.def(
        "check_scaling_identity",
        [](const std::string& kind, const FiniteSeq& phi, const FiniteSeq& f, double r) {
            const ScalingCheck c = check_scaling_identity(
                kind == "unilateral" ? ScalingKind::Unilateral : ScalingKind::Bilateral, phi, f, r);
            return py::make_tuple(c.abs_dev, c.rel_dev);
        },
        py::arg("kind"), py::arg("phi"), py::arg("f"), py::arg("r"));
    m.def(
        "verify_point",
        [](const OperatorSpec& op, Complex lambda) {
            return cert_to_dict(verify_point(op, lambda, VerifyParams{}));
        },
        py::arg("op"), py::arg("lambda_"));

    py::class_<MultiIndexSeq>(m, "MultiIndexSeq")
        .def(py::init<int>(), py::arg("k"))
        .def_static("unit", &MultiIndexSeq::unit, py::arg("n"), py::arg("value") = Complex(1.0, 0.0))
        .def("set", &MultiIndexSeq::set, py::arg("n"), py::arg("value"))
        .def("coeff", &MultiIndexSeq::coeff)
        .def("dim", &MultiIndexSeq::dim)
        .def("__add__", [](const MultiIndexSeq& a, const MultiIndexSeq& b) { return a + b; });

    m.def(
        "joint_region_separable",
        [](const std::vector<SpaceSpec>& spaces) {
            const JointRegion r = joint_region_separable(spaces);
            py::dict d;
            d["factors"] = r.factors;
            d["exact"] = r.exact;
            return d;
        },
        py::arg("spaces"));
    m.def(
        "joint_exclusion_test",
        [](const std::vector<Complex>& z, const std::vector<SpaceSpec>& spaces, int degree,
           int random_polys, std::uint64_t seed) {
            const ExclusionOutcome r = joint_exclusion_test(z, spaces, degree, random_polys, seed);
            py::dict d;
            d["excluded"] = r.excluded;
            d["witness"] = r.witness;
            d["value"] = r.witness_value;
            d["bound"] = r.witness_bound;
            return d;
        },
        py::arg("z"), py::arg("spaces"), py::arg("degree") = 4, py::arg("random_polys") = 64,
        py::arg("seed") = 1);
    m.def("eval_symbol_multi", &eval_symbol_multi, py::arg("phi"), py::arg("z"));
    m.def(
        "predicted_sigma_multiplier_multi",
        [](const MultiIndexSeq& phi, const std::vector<SpaceSpec>& spaces, int angular, int radial) {
            return predicted_sigma_multiplier_multi(phi, spaces, angular, radial).points;
        },
        py::arg("phi"), py::arg("spaces"), py::arg("angular_grid") = 64, py::arg("radial_grid") = 9);
    m.def("approx_eigen_residual_multi", &approx_eigen_residual_multi, py::arg("phi"), py::arg("z"),
          py::arg("spaces"), py::arg("N"));
    m.def(
        "outside_certificate_multi",
        [](const MultiIndexSeq& phi, Complex lambda, const std::vector<SpaceSpec>& spaces, int mm) {
            return cert_to_dict(outside_certificate_multi(phi, lambda, spaces, mm));
        },
        py::arg("phi"), py::arg("lambda_"), py::arg("spaces"), py::arg("m") = 256);

    m.def(
        "run_config",
        [](const std::string& config_json, int workers) {
            const ExperimentConfig cfg = parse_config_text(config_json);
            const Report rep = run(cfg, workers);
            return rep.doc.dump();
        },
        py::arg("config_json"), py::arg("workers") = 1);

    m.attr("__version__") = kVersion;
}
