#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "shiftspec/errors.hpp"
#include "shiftspec/multidim.hpp"
#include "shiftspec/rng.hpp"

using namespace shiftspec;

namespace {

SpaceSpec l2(WeightFamily w) { return SpaceSpec::weighted_lp(w.domain(), 2.0, std::move(w)); }

const std::vector<SpaceSpec> kGeoConst = {l2(WeightFamily::geometric(2.0)),
                                          l2(WeightFamily::constant())};

MultiIndexSeq random_multi(Rng& rng, int k, int terms) {
    MultiIndexSeq s(k);
    for (int t = 0; t < terms; ++t) {
        MultiIndexSeq::Index n;
        for (int i = 0; i < k; ++i) n.push_back(rng.uniform_int(-2, 2));
        s.set(n, s.coeff(n) + rng.complex_in_disc(1.0));
    }
    return s;
}

} // namespace

TEST_CASE("separable joint regions") {
    const JointRegion tt = joint_region_separable({l2(WeightFamily::constant()), l2(WeightFamily::constant())});
    CHECK(tt.exact);
    REQUIRE(tt.factors.size() == 2);
    CHECK(tt.factors[0].rmax.value() == doctest::Approx(1.0));
    CHECK(tt.factors[1].rmax.value() == doctest::Approx(1.0));

    const JointRegion gc = joint_region_separable(kGeoConst);
    CHECK(gc.factors[0].rmin.value() == doctest::Approx(2.0));
    CHECK(gc.factors[0].rmax.value() == doctest::Approx(2.0));

    const JointRegion eg = joint_region_separable(
        {l2(WeightFamily::two_sided_exp(1.0)), l2(WeightFamily::geometric(2.0))});
    CHECK(eg.factors[0].rmin.value() == doctest::Approx(std::exp(-1.0)).epsilon(1e-9));
    CHECK(eg.factors[0].rmax.value() == doctest::Approx(std::exp(1.0)).epsilon(1e-9));

    CHECK_THROWS_AS(joint_region_separable({l2(WeightFamily::polynomial(1.0)), l2(WeightFamily::constant())}),
                    UnsupportedNormError);
    CHECK_THROWS_AS(joint_region_separable({l2(WeightFamily::constant())}), std::invalid_argument);
}

TEST_CASE("multi symbol evaluation") {
    MultiIndexSeq sum = MultiIndexSeq::unit({1, 0}) + MultiIndexSeq::unit({0, 1});
    CHECK(eval_symbol_multi(sum, {Complex(1, 0), Complex(1, 0)}) == Complex(2.0, 0.0));

    const MultiIndexSeq mix = MultiIndexSeq::unit({1, -1});
    CHECK(eval_symbol_multi(mix, {Complex(2, 0), Complex(4, 0)}) == Complex(0.5, 0.0));

    const MultiIndexSeq one = MultiIndexSeq::unit({0, 0});
    CHECK(eval_symbol_multi(one, {Complex(9, 2), Complex(-3, 1)}) == Complex(1.0, 0.0));

    CHECK_THROWS_AS(eval_symbol_multi(mix, {Complex(2, 0), Complex(0, 0)}), PoleError);
}

TEST_CASE("multi convolution matches symbol products") {
    Rng rng(77);
    for (int t = 0; t < 20; ++t) {
        const MultiIndexSeq a = random_multi(rng, 2, 4);
        const MultiIndexSeq b = random_multi(rng, 2, 4);
        const std::vector<Complex> z = {rng.unit_complex() * (0.5 + rng.uniform()),
                                        rng.unit_complex() * (0.5 + rng.uniform())};
        const Complex lhs = eval_symbol_multi(convolve_multi(a, b), z);
        const Complex rhs = eval_symbol_multi(a, z) * eval_symbol_multi(b, z);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("joint exclusion certificates") {
    const ExclusionOutcome ex1 =
        joint_exclusion_test({Complex(3.0, 0.0), Complex(1.0, 0.0)}, kGeoConst);
    CHECK(ex1.excluded);
    CHECK(ex1.witness_value > ex1.witness_bound);

    const ExclusionOutcome ex2 =
        joint_exclusion_test({Complex(2.0, 0.0), Complex(0.5, 0.0)}, kGeoConst);
    CHECK(ex2.excluded);

    const Complex z1 = std::polar(2.0, 0.7853981633974483);
    const Complex z2 = std::polar(1.0, 1.0);
    CHECK(!joint_exclusion_test({z1, z2}, kGeoConst).excluded);
}

TEST_CASE("exclusion never fires on the exact joint region") {
    Rng rng(123);
    const std::vector<SpaceSpec> spaces = {l2(WeightFamily::geometric(2.0)),
                                           l2(WeightFamily::two_sided_exp(0.5))};
    const JointRegion joint = joint_region_separable(spaces);
    int fired = 0;
    for (int t = 0; t < 300; ++t) {
        std::vector<Complex> z;
        for (const auto& f : joint.factors) {
            const double r = f.rmin.value() + (f.rmax.value() - f.rmin.value()) * rng.uniform();
            z.push_back(rng.unit_complex() * r);
        }
        fired += joint_exclusion_test(z, spaces, 3, 16, 999).excluded ? 1 : 0;
    }
    CHECK(fired == 0);
}

TEST_CASE("prediction clouds over the polytorus") {
    // coordinate symbol projects onto its factor circle
    const PointCloud proj =
        predicted_sigma_multiplier_multi(MultiIndexSeq::unit({1, 0}), kGeoConst, 64, 9);
    for (const auto& p : proj.points) CHECK(std::abs(p) == doctest::Approx(2.0).epsilon(1e-12));

    // sum of circle variables sweeps the annulus 1 <= |w| <= 3
    const MultiIndexSeq sum = MultiIndexSeq::unit({1, 0}) + MultiIndexSeq::unit({0, 1});
    const PointCloud ann = predicted_sigma_multiplier_multi(sum, kGeoConst, 64, 9);
    double lo = 1e9, hi = 0.0;
    for (const auto& p : ann.points) {
        lo = std::min(lo, std::abs(p));
        hi = std::max(hi, std::abs(p));
    }
    CHECK(lo == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(hi == doctest::Approx(3.0).epsilon(1e-9));

    // product of unimodular circle variables stays on the torus image
    const std::vector<SpaceSpec> flat = {l2(WeightFamily::constant()), l2(WeightFamily::constant())};
    const PointCloud tor = predicted_sigma_multiplier_multi(MultiIndexSeq::unit({1, 1}), flat, 64, 9);
    for (const auto& p : tor.points) CHECK(std::abs(p) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("tensor residuals decay on the joint polytorus") {
    const std::vector<SpaceSpec> flat = {l2(WeightFamily::constant()), l2(WeightFamily::constant())};
    const MultiIndexSeq sum = MultiIndexSeq::unit({1, 0}) + MultiIndexSeq::unit({0, 1});

    CHECK(approx_eigen_residual_multi(sum, {Complex(0.0, 1.0), Complex(1.0, 0.0)}, flat, 60) <= 0.3);

    const MultiIndexSeq one = MultiIndexSeq::unit({0, 0});
    CHECK(approx_eigen_residual_multi(one, {Complex(0.0, 1.0), Complex(1.0, 0.0)}, flat, 20) == 0.0);

    CHECK(approx_eigen_residual_multi(MultiIndexSeq::unit({1, 0}),
                                      {Complex(2.0, 0.0), Complex(1.0, 0.0)}, kGeoConst, 60) <= 0.3);

    // halving the window roughly doubles nothing: residual shrinks with N
    const double r30 = approx_eigen_residual_multi(sum, {Complex(0.0, 1.0), Complex(1.0, 0.0)}, flat, 30);
    const double r120 = approx_eigen_residual_multi(sum, {Complex(0.0, 1.0), Complex(1.0, 0.0)}, flat, 120);
    CHECK(r120 < r30);
}

TEST_CASE("joint outside certificates") {
    const MultiIndexSeq sum = MultiIndexSeq::unit({1, 0}) + MultiIndexSeq::unit({0, 1});

    const Certificate far = outside_certificate_multi(sum, Complex(3.5, 0.0), kGeoConst, 256);
    CHECK(far.verdict == VerdictKind::OutsideBound);
    CHECK(far.identity_residual <= 1e-8);
    CHECK(far.margin == doctest::Approx(0.5).epsilon(1e-6));

    const Certificate hole = outside_certificate_multi(sum, Complex(0.5, 0.0), kGeoConst, 256);
    CHECK(hole.verdict == VerdictKind::OutsideBound);
    CHECK(hole.identity_residual <= 1e-8);

    const Certificate on = outside_certificate_multi(sum, Complex(2.0, 0.0), kGeoConst, 256);
    CHECK(on.verdict == VerdictKind::Inconclusive);
}

TEST_CASE("outside certificates agree with the prediction cloud") {
    const MultiIndexSeq sum = MultiIndexSeq::unit({1, 0}) + MultiIndexSeq::unit({0, 1});
    const PointCloud cloud = predicted_sigma_multiplier_multi(sum, kGeoConst, 128, 17);
    SpectralRegion region = SpectralRegion::from_cloud(cloud);
    for (const Complex lambda : {Complex(3.5, 0.0), Complex(0.5, 0.0), Complex(0.0, 3.4)}) {
        const Certificate c = outside_certificate_multi(sum, lambda, kGeoConst, 256);
        if (c.verdict == VerdictKind::OutsideBound)
            CHECK(region_contains(region, lambda, 0.05) == ContainsVerdict::Outside);
    }
}

TEST_CASE("three-factor joint operations") {
    const std::vector<SpaceSpec> flat3 = {l2(WeightFamily::constant()), l2(WeightFamily::constant()),
                                          l2(WeightFamily::constant())};
    const MultiIndexSeq sum3 = MultiIndexSeq::unit({1, 0, 0}) + MultiIndexSeq::unit({0, 1, 0}) +
                               MultiIndexSeq::unit({0, 0, 1});

    const JointRegion joint = joint_region_separable(flat3);
    CHECK(joint.factors.size() == 3);

    // |e^{ia} + e^{ib} + e^{ic}| spans [0, 3]
    const PointCloud cloud = predicted_sigma_multiplier_multi(sum3, flat3, 24, 5);
    double hi = 0.0;
    for (const auto& p : cloud.points) hi = std::max(hi, std::abs(p));
    CHECK(hi == doctest::Approx(3.0).epsilon(1e-9));

    CHECK(joint_exclusion_test({Complex(2.0, 0.0), Complex(1.0, 0.0), Complex(1.0, 0.0)}, flat3, 2, 8, 5)
              .excluded);
    CHECK(!joint_exclusion_test({Complex(0.0, 1.0), Complex(1.0, 0.0), Complex(-1.0, 0.0)}, flat3, 2, 8, 5)
               .excluded);

    CHECK(approx_eigen_residual_multi(sum3, {Complex(0.0, 1.0), Complex(1.0, 0.0), Complex(-1.0, 0.0)},
                                      flat3, 16) <= 0.8);

    const Certificate cert = outside_certificate_multi(sum3, Complex(4.0, 0.0), flat3, 64);
    CHECK(cert.verdict == VerdictKind::OutsideBound);
    CHECK(cert.identity_residual <= 1e-8);

    CHECK_THROWS_AS(joint_region_separable(
                        {l2(WeightFamily::constant()), l2(WeightFamily::constant()),
                         l2(WeightFamily::constant()), l2(WeightFamily::constant())}),
                    std::invalid_argument);
}

TEST_CASE("degenerate second axis reproduces the bilateral prediction") {
    // kernel supported on {n2 = 0} behaves like its one-variable version
    MultiIndexSeq phi(2);
    phi.set({1, 0}, Complex(1.0, 0.0));
    phi.set({-1, 0}, Complex(1.0, 0.0));
    const std::vector<SpaceSpec> flat = {l2(WeightFamily::constant()), l2(WeightFamily::constant())};
    const PointCloud cloud2 = predicted_sigma_multiplier_multi(phi, flat, 256, 9);

    const SpectralRegion seg = predicted_sigma_multiplier(
        FiniteSeq::unit(1) + FiniteSeq::unit(-1), l2(WeightFamily::constant()), 9, 256);
    const double pitch = 4.0 * 3.14159265358979323846 / 256.0;
    CHECK(hausdorff(cloud2, seg.cloud) <= pitch);
}
