#include "shiftspec/experiment.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "shiftspec/errors.hpp"
#include "shiftspec/linalg.hpp"
#include "shiftspec/rng.hpp"

namespace shiftspec {

namespace {

const Json& require(const Json& j, const char* key) {
    if (!j.contains(key)) throw ConfigError(std::string("config: missing field '") + key + "'");
    return j.at(key);
}

double require_number(const Json& j, const char* key) {
    const Json& v = require(j, key);
    if (!v.is_number()) throw ConfigError(std::string("config: '") + key + "' must be a number");
    return v.get<double>();
}

int get_int(const Json& j, const char* key, int fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number_integer()) throw ConfigError(std::string("config: '") + key + "' must be an integer");
    return j.at(key).get<int>();
}

double get_number(const Json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number()) throw ConfigError(std::string("config: '") + key + "' must be a number");
    return j.at(key).get<double>();
}

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ConfigError("config: complex values are two-element arrays [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json ext_to_json(const ExtReal& v) {
    if (v.is_infinite()) return Json("inf");
    return Json(v.value());
}

WeightFamily weight_from_json(const Json& j, Domain d) {
    const std::string kind = require(j, "kind").get<std::string>();
    if (kind == "constant") return WeightFamily::constant(d);
    if (kind == "geometric") return WeightFamily::geometric(require_number(j, "a"), d);
    if (kind == "two_sided_exp") return WeightFamily::two_sided_exp(require_number(j, "alpha"), d);
    if (kind == "polynomial") return WeightFamily::polynomial(require_number(j, "s"), d);
    if (kind == "piecewise_super_exp") return WeightFamily::piecewise_super_exp(d);
    if (kind == "table") {
        std::vector<double> values;
        for (const auto& v : require(j, "values")) values.push_back(v.get<double>());
        const std::string ext = require(j, "extension").get<std::string>();
        if (ext == "constant")
            return WeightFamily::table(get_int(j, "offset", 0), values, TableExtension::ConstantTail, 1.0, d);
        if (ext == "geometric")
            return WeightFamily::table(get_int(j, "offset", 0), values, TableExtension::GeometricTail,
                                       require_number(j, "ratio"), d);
        throw ConfigError("config: table extension must be 'constant' or 'geometric'");
    }
    throw ConfigError("config: unknown weight kind '" + kind + "'");
}

} // namespace

SpaceSpec space_from_json(const Json& j) {
    const std::string dom = require(j, "domain").get<std::string>();
    Domain d;
    if (dom == "bilateral")
        d = Domain::Bilateral;
    else if (dom == "unilateral")
        d = Domain::Unilateral;
    else
        throw ConfigError("config: domain must be 'bilateral' or 'unilateral'");

    const Json& norm = require(j, "norm");
    const std::string family = require(norm, "family").get<std::string>();
    try {
        if (family == "weighted_lp")
            return SpaceSpec::weighted_lp(d, get_number(norm, "p", 2.0),
                                          weight_from_json(require(norm, "weight"), d));
        if (family == "orlicz") {
            const Json& kj = require(norm, "K");
            OrliczFunction K = kj.contains("power")
                                   ? OrliczFunction::power(kj.at("power").get<double>())
                                   : OrliczFunction::table(kj.at("xs").get<std::vector<double>>(),
                                                           kj.at("ys").get<std::vector<double>>());
            return SpaceSpec::orlicz_space(d, std::move(K), weight_from_json(require(norm, "weight"), d));
        }
        if (family == "variable_exponent") {
            const Json& qj = require(norm, "q");
            ExponentRule q = qj.contains("constant")
                                 ? ExponentRule::constant(qj.at("constant").get<double>())
                                 : ExponentRule::table(qj.value("offset", 0),
                                                       qj.at("values").get<std::vector<double>>(),
                                                       qj.at("tail").get<double>());
            return SpaceSpec::variable_exponent(d, std::move(q));
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    throw ConfigError("config: unknown norm family '" + family + "'");
}

FiniteSeq finite_seq_from_json(const Json& j) {
    const int offset = static_cast<int>(require_number(j, "offset"));
    std::vector<Complex> coeffs;
    for (const auto& c : require(j, "coeffs")) coeffs.push_back(complex_from_json(c));
    return FiniteSeq(offset, std::move(coeffs));
}

OperatorSpec operator_from_json(const Json& j, const SpaceSpec& space) {
    const std::string kind = require(j, "kind").get<std::string>();
    try {
        if (kind == "multiplier") return OperatorSpec::multiplier(finite_seq_from_json(require(j, "phi")), space);
        if (kind == "toeplitz") return OperatorSpec::toeplitz(finite_seq_from_json(require(j, "phi")), space);
        if (kind == "shift") return OperatorSpec::shift_power(get_int(j, "power", 1), space);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    throw ConfigError("config: unknown operator kind '" + kind + "'");
}

Json certificate_to_json(const Certificate& cert) {
    Json j;
    j["verdict"] = verdict_name(cert.verdict);
    j["lambda"] = complex_to_json(cert.lambda);
    j["context"] = cert.context;
    if (!cert.residual_table.empty()) {
        Json t = Json::array();
        for (const auto& [n, v] : cert.residual_table) t.push_back(Json::array({n, v}));
        j["residual_table"] = t;
    }
    if (!cert.growth_table.empty()) {
        Json t = Json::array();
        for (const auto& [n, v] : cert.growth_table)
            t.push_back(Json::array({n, std::isfinite(v) ? Json(v) : Json("inf")}));
        j["growth_table"] = t;
        j["growth_factor"] = std::isfinite(cert.growth_factor) ? Json(cert.growth_factor) : Json("inf");
    }
    if (cert.verdict == VerdictKind::OutsideBound) {
        j["bound"] = cert.bound;
        j["tail"] = cert.tail;
        j["identity_residual"] = cert.identity_residual;
        j["margin"] = cert.margin;
    }
    if (cert.verdict == VerdictKind::Inconclusive) j["reason"] = cert.reason;
    Json params;
    for (const auto& [k, v] : cert.params) params[k] = v;
    j["params"] = params;
    return j;
}

Json region_to_json(const SpectralRegion& region) {
    Json j;
    j["variant"] = region.kind_name();
    switch (region.kind) {
    case RegionKind::Annulus:
    case RegionKind::Disk:
    case RegionKind::Circle:
        j["rmin"] = ext_to_json(region.rmin);
        j["rmax"] = ext_to_json(region.rmax);
        break;
    case RegionKind::Cloud:
    case RegionKind::Image: {
        if (region.kind == RegionKind::Image) {
            j["base_rmin"] = ext_to_json(region.base_rmin);
            j["base_rmax"] = ext_to_json(region.base_rmax);
            j["semantics"] =
                region.semantics == RegionSemantics::Equality ? "equality" : "inclusion_only";
        }
        if (region.cloud.meta.truncated) j["truncation"] = region.cloud.meta.truncation_radius;
        if (region.cloud.meta.inner_punctured) j["inner_punctured"] = true;
        Json meta;
        meta["radial_grid"] = region.cloud.meta.radial_grid;
        meta["angular_grid"] = region.cloud.meta.angular_grid;
        j["grids"] = meta;
        j["points"] = region.cloud.points.size();
        break;
    }
    }
    return j;
}

ExperimentConfig parse_config(const Json& j) {
    if (!j.is_object()) throw ConfigError("config: top level must be an object");
    ExperimentConfig cfg;
    cfg.task = require(j, "task").get<std::string>();
    static const char* known[] = {"radius", "predict", "verify", "joint", "conjecture-gap", "selftest"};
    bool ok = false;
    for (const char* t : known) ok = ok || cfg.task == t;
    if (!ok) throw ConfigError("config: unknown task '" + cfg.task + "'");

    if (cfg.task == "radius" || cfg.task == "predict" || cfg.task == "verify" ||
        cfg.task == "conjecture-gap")
        space_from_json(require(j, "space"));
    if (cfg.task == "predict" || cfg.task == "verify" || cfg.task == "conjecture-gap")
        operator_from_json(require(j, "operator"), space_from_json(require(j, "space")));
    if (cfg.task == "verify") {
        if (!require(j, "lambdas").is_array() || require(j, "lambdas").empty())
            throw ConfigError("config: 'lambdas' must be a nonempty array");
        for (const auto& l : j.at("lambdas")) complex_from_json(l);
    }
    if (cfg.task == "joint") {
        const Json& spaces = require(j, "spaces");
        if (!spaces.is_array() || spaces.size() < 2) throw ConfigError("config: 'spaces' needs >= 2 entries");
        for (const auto& s : spaces) space_from_json(s);
        require(j, "phi");
    }
    // randomized test families need an explicit seed
    const bool randomized = cfg.task == "joint" && j.contains("exclusion_random_samples") &&
                            j.at("exclusion_random_samples").get<int>() > 0;
    if (randomized && !j.contains("seed"))
        throw ConfigError("config: randomized test families require a 'seed'");

    cfg.raw = j;
    return cfg;
}

ExperimentConfig parse_config_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    return parse_config(j);
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

namespace {

MultiIndexSeq multi_seq_from_json(const Json& j, int k) {
    MultiIndexSeq phi(k);
    for (const auto& term : require(j, "terms")) {
        const Json& nj = require(term, "n");
        if (!nj.is_array() || static_cast<int>(nj.size()) != k)
            throw ConfigError("config: multi index arity mismatch");
        MultiIndexSeq::Index n;
        for (const auto& v : nj) n.push_back(v.get<int>());
        phi.set(n, phi.coeff(n) + complex_from_json(require(term, "c")));
    }
    return phi;
}

Json run_radius(const Json& j) {
    const SpaceSpec space = space_from_json(require(j, "space"));
    const int horizon = get_int(j, "horizon", 64);
    Json out;
    for (const auto dir : {ShiftDirection::Forward, ShiftDirection::Backward}) {
        const RadiusBracket b = spectral_radius_shift(space, dir, horizon);
        const BoundednessReport br = boundedness(space, dir);
        Json side;
        side["lower"] = ext_to_json(b.lower);
        side["upper"] = ext_to_json(b.upper);
        side["bounded"] = br.bounded;
        if (br.bounded) {
            side["sup_ratio"] = br.sup_ratio;
            side["attained_at"] = br.attained_at;
            if (br.window_limited) side["window_limited"] = true;
        } else {
            Json dv = Json::array();
            for (const auto& [n, r] : br.divergence) dv.push_back(Json::array({n, r}));
            side["divergence"] = dv;
        }
        out[dir == ShiftDirection::Forward ? "forward" : "backward"] = side;
    }
    return out;
}

Json run_predict(const Json& j, std::vector<PointCloud>& clouds, std::vector<std::string>& names) {
    const SpaceSpec space = space_from_json(require(j, "space"));
    const OperatorSpec op = operator_from_json(require(j, "operator"), space);
    const int angular = get_int(j, "angular_grid", kDefaultAngularGrid);
    const int radial = get_int(j, "radial_grid", kDefaultRadialGrid);

    const bool include_points = j.contains("include_points") && j.at("include_points").get<bool>();
    const auto points_json = [](const PointCloud& cloud) {
        Json arr = Json::array();
        for (const auto& p : cloud.points) arr.push_back(Json::array({p.real(), p.imag()}));
        return arr;
    };

    Json out;
    if (space.domain == Domain::Bilateral) {
        const SpectralRegion base = predicted_sigma_shift(space);
        out["shift_region"] = region_to_json(base);
        const SpectralRegion image = predicted_sigma_multiplier(op.kernel(), space, radial, angular);
        out["region"] = region_to_json(image);
        if (include_points) out["points"] = points_json(image.cloud);
        clouds.push_back(image.cloud);
        names.push_back("cloud");
    } else if (op.kind == OperatorKind::ShiftPower) {
        const SpectralRegion disk = predicted_sigma_unilateral(
            space, op.power >= 0 ? ShiftDirection::Forward : ShiftDirection::Backward);
        out["region"] = region_to_json(disk);
    } else {
        const ToeplitzSide side = (!op.phi.is_zero() && op.phi.first() >= 0)
                                      ? ToeplitzSide::CommutesWithForward
                                      : ToeplitzSide::CommutesWithBackward;
        const SpectralRegion image = predicted_sigma_toeplitz(op.phi, space, side, radial, angular);
        out["side"] = side == ToeplitzSide::CommutesWithForward ? "forward" : "backward";
        out["region"] = region_to_json(image);
        if (include_points) out["points"] = points_json(image.cloud);
        clouds.push_back(image.cloud);
        names.push_back("cloud");
    }
    return out;
}

Json run_verify(const Json& j, int workers, std::vector<Certificate>& certs) {
    const SpaceSpec space = space_from_json(require(j, "space"));
    const OperatorSpec op = operator_from_json(require(j, "operator"), space);

    VerifyParams params;
    params.residual_N = get_int(j, "residual_N", params.residual_N);
    params.transform_m = get_int(j, "transform_m", params.transform_m);
    params.neumann_horizon = get_int(j, "neumann_horizon", params.neumann_horizon);
    params.tol = get_number(j, "tol", params.tol);
    if (j.contains("blowup_Ns")) {
        params.blowup_Ns.clear();
        for (const auto& n : j.at("blowup_Ns")) params.blowup_Ns.push_back(n.get<int>());
    }

    std::vector<Complex> lambdas;
    for (const auto& l : require(j, "lambdas")) lambdas.push_back(complex_from_json(l));

    certs.assign(lambdas.size(), Certificate{});
    parallel_for(lambdas.size(), workers,
                 [&](std::size_t i) { certs[i] = verify_point(op, lambdas[i], params); });

    Json out;
    Json list = Json::array();
    for (const auto& c : certs) list.push_back(certificate_to_json(c));
    out["certificates"] = list;
    if (j.contains("dump_section_N")) {
        const int N = j.at("dump_section_N").get<int>();
        out["section_csv"] = section_to_csv(finite_section(op, N));
    }
    return out;
}

Json run_joint(const Json& j, int workers, std::uint64_t seed, std::vector<PointCloud>& clouds,
               std::vector<std::string>& names) {
    std::vector<SpaceSpec> spaces;
    for (const auto& s : require(j, "spaces")) spaces.push_back(space_from_json(s));
    const int k = static_cast<int>(spaces.size());
    const MultiIndexSeq phi = multi_seq_from_json(require(j, "phi"), k);

    Json out;
    const JointRegion joint = joint_region_separable(spaces);
    Json factors = Json::array();
    for (const auto& f : joint.factors) factors.push_back(region_to_json(f));
    out["factors"] = factors;
    out["exact"] = joint.exact;

    const int angular = get_int(j, "angular_grid", 64);
    const int radial = get_int(j, "radial_grid", 9);
    const PointCloud cloud = predicted_sigma_multiplier_multi(phi, spaces, angular, radial);
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto& p : cloud.points) {
        lo = std::min(lo, std::abs(p));
        hi = std::max(hi, std::abs(p));
    }
    out["cloud_points"] = cloud.points.size();
    out["cloud_min_modulus"] = lo;
    out["cloud_max_modulus"] = hi;
    out["semantics"] = "equality";
    clouds.push_back(cloud);
    names.push_back("joint_cloud");

    if (j.contains("exclusion_points")) {
        Json rows = Json::array();
        for (const auto& pj : j.at("exclusion_points")) {
            std::vector<Complex> z;
            for (const auto& c : pj) z.push_back(complex_from_json(c));
            const ExclusionOutcome r = joint_exclusion_test(z, spaces);
            Json row;
            Json zs = Json::array();
            for (const auto& c : z) zs.push_back(complex_to_json(c));
            row["z"] = zs;
            row["excluded"] = r.excluded;
            if (r.excluded) {
                row["witness"] = r.witness;
                row["value"] = r.witness_value;
                row["bound"] = r.witness_bound;
            }
            rows.push_back(row);
        }
        out["exclusion"] = rows;
    }

    const int random_samples = get_int(j, "exclusion_random_samples", 0);
    if (random_samples > 0) {
        Rng rng(seed);
        std::vector<std::vector<Complex>> zs;
        zs.reserve(static_cast<std::size_t>(random_samples));
        for (int i = 0; i < random_samples; ++i) {
            std::vector<Complex> z;
            for (const auto& f : joint.factors) {
                const double rlo = f.rmin.value(), rhi = f.rmax.value();
                const double r = rlo + (rhi - rlo) * rng.uniform();
                z.push_back(rng.unit_complex() * r);
            }
            zs.push_back(std::move(z));
        }
        std::vector<int> excluded(zs.size(), 0);
        parallel_for(zs.size(), workers, [&](std::size_t i) {
            excluded[i] = joint_exclusion_test(zs[i], spaces).excluded ? 1 : 0;
        });
        int count = 0;
        for (int e : excluded) count += e;
        out["random_in_region_samples"] = random_samples;
        out["random_in_region_excluded"] = count;
    }

    if (j.contains("residual_samples")) {
        const int count = j.at("residual_samples").get<int>();
        const int N = get_int(j, "residual_N", 60);
        Rng rng(seed + 1);
        Json rows = Json::array();
        for (int i = 0; i < count; ++i) {
            std::vector<Complex> z;
            for (const auto& f : joint.factors) {
                // boundary polytorus: outer radius per axis
                z.push_back(rng.unit_complex() * f.rmax.value());
            }
            const double res = approx_eigen_residual_multi(phi, z, spaces, N);
            Json row;
            Json zs = Json::array();
            for (const auto& c : z) zs.push_back(complex_to_json(c));
            row["z"] = zs;
            row["N"] = N;
            row["residual"] = res;
            rows.push_back(row);
        }
        out["residuals"] = rows;
    }

    if (j.contains("lambdas")) {
        const int m = get_int(j, "transform_m", 256);
        Json rows = Json::array();
        for (const auto& lj : j.at("lambdas")) {
            const Complex lambda = complex_from_json(lj);
            rows.push_back(certificate_to_json(outside_certificate_multi(phi, lambda, spaces, m)));
        }
        out["outside_certificates"] = rows;
    }
    return out;
}

Json run_conjecture_gap(const Json& j, int workers, std::vector<PointCloud>& clouds,
                        std::vector<std::string>& names) {
    const SpaceSpec space = space_from_json(require(j, "space"));
    const OperatorSpec op = operator_from_json(require(j, "operator"), space);
    if (op.kind != OperatorKind::Toeplitz)
        throw ConfigError("config: conjecture-gap needs a toeplitz operator");

    const ToeplitzSide side = (!op.phi.is_zero() && op.phi.first() >= 0)
                                  ? ToeplitzSide::CommutesWithForward
                                  : ToeplitzSide::CommutesWithBackward;
    const int angular = get_int(j, "angular_grid", 512);
    const int radial = get_int(j, "radial_grid", 33);

    // certified inner prediction: symbol image of the one-sided disk
    const SpectralRegion inner = predicted_sigma_toeplitz(op.phi, space, side, radial, angular);

    // conjectured set: symbol image of the two-sided annulus
    const RadiusBracket fwd = spectral_radius_shift(space, ShiftDirection::Forward, 16);
    const RadiusBracket bwd = spectral_radius_shift(space, ShiftDirection::Backward, 16);
    if (fwd.upper.is_infinite() || bwd.upper.is_infinite())
        throw HypothesisError("conjecture-gap: both shifts must be bounded");
    const FiniteSeq coeffs =
        side == ToeplitzSide::CommutesWithForward ? op.phi : op.phi.reflected();
    const double r_out = side == ToeplitzSide::CommutesWithForward ? fwd.upper.value() : bwd.upper.value();
    const double r_in = side == ToeplitzSide::CommutesWithForward ? 1.0 / bwd.upper.value()
                                                                  : 1.0 / fwd.upper.value();
    SpectralRegion annulus = r_in == r_out ? SpectralRegion::circle(r_out)
                                           : SpectralRegion::annulus(ExtReal(r_in), ExtReal(r_out));
    SpectralRegion conjectured;
    conjectured.kind = RegionKind::Image;
    conjectured.cloud = image_of_region(LaurentSymbol(coeffs), annulus, radial, angular, 0.0);
    conjectured.symbol_coeffs = coeffs;
    conjectured.base_rmin = annulus.rmin;
    conjectured.base_rmax = annulus.rmax;
    conjectured.semantics = RegionSemantics::InclusionOnly;

    // lambda grid over the padded bounding box of the inner cloud
    double re_lo = 0, re_hi = 0, im_lo = 0, im_hi = 0;
    for (const auto& p : inner.cloud.points) {
        re_lo = std::min(re_lo, p.real());
        re_hi = std::max(re_hi, p.real());
        im_lo = std::min(im_lo, p.imag());
        im_hi = std::max(im_hi, p.imag());
    }
    const double pad = 0.5 * std::max(re_hi - re_lo, im_hi - im_lo) + 0.25;
    const int nx = get_int(j, "grid_nx", 21);
    const int ny = get_int(j, "grid_ny", 21);
    re_lo = get_number(j, "re_min", re_lo - pad);
    re_hi = get_number(j, "re_max", re_hi + pad);
    im_lo = get_number(j, "im_min", im_lo - pad);
    im_hi = get_number(j, "im_max", im_hi + pad);
    const double tol = get_number(j, "tol", 1e-2);

    std::vector<Complex> grid;
    grid.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix)
            grid.emplace_back(re_lo + (re_hi - re_lo) * ix / std::max(1, nx - 1),
                              im_lo + (im_hi - im_lo) * iy / std::max(1, ny - 1));

    // classification per grid point: 0 inside-certified, 1 outside-certified,
    // 2 uncertified
    std::vector<int> cls(grid.size(), 2);
    std::vector<int> in_conjecture(grid.size(), 0);
    const int horizon = get_int(j, "neumann_horizon", 64);
    parallel_for(grid.size(), workers, [&](std::size_t i) {
        const Complex lambda = grid[i];
        in_conjecture[i] = region_contains(conjectured, lambda, tol) != ContainsVerdict::Outside ? 1 : 0;
        if (region_contains(inner, lambda, tol) != ContainsVerdict::Outside) {
            cls[i] = 0;
            return;
        }
        const Certificate c = neumann_outside_certificate(op, lambda, horizon);
        if (c.verdict == VerdictKind::OutsideBound) cls[i] = 1;
    });

    int inside = 0, outside = 0, uncertified = 0, conj = 0, uncert_in_conj = 0;
    Json rows = Json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        Json row;
        row["lambda"] = complex_to_json(grid[i]);
        row["class"] = cls[i] == 0 ? "certified_inside" : cls[i] == 1 ? "certified_outside" : "uncertified";
        row["in_conjectured_set"] = in_conjecture[i] == 1;
        rows.push_back(row);
        inside += cls[i] == 0;
        outside += cls[i] == 1;
        uncertified += cls[i] == 2;
        conj += in_conjecture[i];
        uncert_in_conj += (cls[i] == 2 && in_conjecture[i] == 1);
    }

    Json out;
    out["inner_region"] = region_to_json(inner);
    out["conjectured_region"] = region_to_json(conjectured);
    out["grid"] = rows;
    Json summary;
    summary["certified_inside"] = inside;
    summary["certified_outside"] = outside;
    summary["uncertified"] = uncertified;
    summary["in_conjectured_set"] = conj;
    summary["uncertified_in_conjectured_set"] = uncert_in_conj;
    out["summary"] = summary;
    clouds.push_back(inner.cloud);
    names.push_back("inner_cloud");
    clouds.push_back(conjectured.cloud);
    names.push_back("conjectured_cloud");
    return out;
}

Json run_selftest();

} // namespace

Report run(const ExperimentConfig& cfg, int workers, std::uint64_t seed_override,
           bool has_seed_override) {
    const auto t0 = std::chrono::steady_clock::now();
    const Json& j = cfg.raw;
    std::uint64_t seed = 1;
    if (j.contains("seed")) seed = j.at("seed").get<std::uint64_t>();
    if (has_seed_override) seed = seed_override;

    Report rep;
    rep.doc["version"] = kVersion;
    rep.doc["task"] = cfg.task;
    {
        Json echo = cfg.raw;
        if (has_seed_override) echo["seed"] = seed;
        rep.doc["config"] = echo;
    }

    std::vector<PointCloud> clouds;
    std::vector<std::string> cloud_names;
    std::vector<Certificate> certs;

    if (cfg.task == "radius") {
        rep.doc["results"] = run_radius(j);
    } else if (cfg.task == "predict") {
        rep.doc["results"] = run_predict(j, clouds, cloud_names);
    } else if (cfg.task == "verify") {
        rep.doc["results"] = run_verify(j, workers, certs);
    } else if (cfg.task == "joint") {
        rep.doc["results"] = run_joint(j, workers, seed, clouds, cloud_names);
    } else if (cfg.task == "conjecture-gap") {
        rep.doc["results"] = run_conjecture_gap(j, workers, clouds, cloud_names);
    } else if (cfg.task == "selftest") {
        Json res = run_selftest();
        rep.doc["results"] = res;
        if (!res.at("all_passed").get<bool>()) rep.exit_code = 5;
    }

    // CSV extract payloads ride along inside the report document
    if (!clouds.empty()) {
        Json ex = Json::array();
        for (std::size_t i = 0; i < clouds.size(); ++i) {
            Json e;
            e["name"] = cloud_names[i];
            std::string csv;
            char buf[64];
            for (const auto& p : clouds[i].points) {
                std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.real(), p.imag());
                csv += buf;
            }
            e["csv"] = std::move(csv);
            ex.push_back(e);
        }
        rep.doc["cloud_extracts"] = ex;
    }
    if (!certs.empty()) {
        Json ex = Json::array();
        char buf[64];
        for (std::size_t i = 0; i < certs.size(); ++i) {
            const auto& c = certs[i];
            const auto& table = c.growth_table.empty() ? c.residual_table : c.growth_table;
            if (table.empty()) continue;
            Json e;
            e["name"] = (c.growth_table.empty() ? std::string("residual_") : std::string("growth_")) +
                        std::to_string(i);
            std::string csv = "N,value\n";
            for (const auto& [n, v] : table) {
                std::snprintf(buf, sizeof buf, "%d,%.17g\n", n, v);
                csv += buf;
            }
            e["csv"] = std::move(csv);
            ex.push_back(e);
        }
        if (!ex.empty()) rep.doc["table_extracts"] = ex;
    }

    const auto t1 = std::chrono::steady_clock::now();
    rep.doc["timing_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

void emit(const Report& report, const std::string& out_dir, const std::string& format) {
    if (format != "json" && format != "csv") throw ConfigError("emit: format must be 'json' or 'csv'");
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);

    // the timing field is excluded from the byte-stability guarantee; it is
    // serialized last so the stable prefix is still comparable
    const auto write = [&](const std::string& name, const std::string& text) {
        const fs::path p = fs::path(out_dir) / name;
        std::ofstream out(p, std::ios::binary);
        if (!out) throw IoError("cannot write: " + p.string());
        out << text;
        if (!out) throw IoError("write failed: " + p.string());
    };

    write("report.json", report.doc.dump(2) + "\n");

    if (format == "csv") {
        if (report.doc.contains("cloud_extracts"))
            for (const auto& e : report.doc.at("cloud_extracts"))
                write(e.at("name").get<std::string>() + ".csv", e.at("csv").get<std::string>());
        if (report.doc.contains("table_extracts"))
            for (const auto& e : report.doc.at("table_extracts"))
                write(e.at("name").get<std::string>() + ".csv", e.at("csv").get<std::string>());
        if (report.doc.contains("results") && report.doc.at("results").contains("section_csv"))
            write("section.csv", report.doc.at("results").at("section_csv").get<std::string>());
    }
}

namespace {

Json run_selftest() {
    Json checks = Json::array();
    bool all = true;
    const auto check = [&](const std::string& name, bool ok) {
        Json c;
        c["name"] = name;
        c["passed"] = ok;
        checks.push_back(c);
        all = all && ok;
    };

    const SpaceSpec l2z =
        SpaceSpec::weighted_lp(Domain::Bilateral, 2.0, WeightFamily::constant());
    const SpaceSpec l2_geo2 =
        SpaceSpec::weighted_lp(Domain::Bilateral, 2.0, WeightFamily::geometric(2.0));
    const SpaceSpec l2zp =
        SpaceSpec::weighted_lp(Domain::Unilateral, 2.0, WeightFamily::constant(Domain::Unilateral));

    {
        const RadiusBracket f = spectral_radius_shift(l2_geo2, ShiftDirection::Forward, 16);
        const RadiusBracket b = spectral_radius_shift(l2_geo2, ShiftDirection::Backward, 16);
        check("geometric radii", std::abs(f.upper.value() - 2.0) < 1e-12 &&
                                     std::abs(b.upper.value() - 0.5) < 1e-12);
    }
    {
        const SpaceSpec e1 =
            SpaceSpec::weighted_lp(Domain::Bilateral, 2.0, WeightFamily::two_sided_exp(1.0));
        const SpectralRegion r = predicted_sigma_shift(e1);
        check("two-sided exp annulus",
              std::abs(r.rmin.value() - std::exp(-1.0)) < 1e-9 &&
                  std::abs(r.rmax.value() - std::exp(1.0)) < 1e-9);
    }
    {
        const FiniteSeq phi = FiniteSeq::unit(1) + FiniteSeq::unit(-1);
        const Certificate c = outside_certificate(phi, Complex(3.0, 0.0), l2z, 1.0, 1.0, 256);
        check("outside certificate at 3", c.verdict == VerdictKind::OutsideBound && c.bound < 1e3);
    }
    {
        const OperatorSpec s = OperatorSpec::shift_power(1, l2zp);
        const Certificate c = neumann_outside_certificate(s, Complex(1.5, 0.0), 64);
        check("series bound at 1.5", c.verdict == VerdictKind::OutsideBound && c.bound <= 2.001);
    }
    {
        const OperatorSpec s = OperatorSpec::shift_power(1, l2zp);
        const auto table = blowup_witness(s, Complex(0.5, 0.0), {20, 30, 40});
        check("resolvent blow-up at 0.5",
              table.size() == 3 && table[2].second > 100.0 * table[0].second);
    }
    {
        const OperatorSpec back = OperatorSpec::toeplitz(FiniteSeq::unit(-1), l2zp);
        const double r = approx_eigen_residual(back, Complex(2.5, 0.0), 40);
        check("backward-shift eigenvector residual", r <= 1e-6);
    }
    {
        Rng rng(7);
        bool ok = true;
        for (int t = 0; t < 10; ++t) {
            std::vector<Complex> pc, fc;
            for (int i = 0; i < 4; ++i) pc.push_back(rng.complex_in_disc(1.0));
            for (int i = 0; i < 5; ++i) fc.push_back(rng.complex_in_disc(1.0));
            const FiniteSeq phi(-2, pc), f(-1, fc);
            const double r = 0.5 + rng.uniform() * 2.0;
            ok = ok && check_scaling_identity(ScalingKind::Bilateral, phi, f, r).rel_dev <= 1e-12;
        }
        check("scaling identity", ok);
    }
    {
        std::vector<SpaceSpec> spaces = {l2_geo2, l2z};
        const auto ex = joint_exclusion_test({Complex(3.0, 0.0), Complex(1.0, 0.0)}, spaces);
        const auto unk = joint_exclusion_test(
            {Complex(2.0 * std::cos(0.7853981633974483), 2.0 * std::sin(0.7853981633974483)),
             Complex(std::cos(1.0), std::sin(1.0))},
            spaces);
        check("joint exclusion", ex.excluded && !unk.excluded);
    }

    Json out;
    out["checks"] = checks;
    out["all_passed"] = all;
    return out;
}

} // namespace

} // namespace shiftspec
