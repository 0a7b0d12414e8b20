#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "shiftspec/rng.hpp"
#include "shiftspec/spaces.hpp"

using namespace shiftspec;

namespace {

FiniteSeq random_seq(Rng& rng, int max_half_width = 6) {
    const int lo = rng.uniform_int(-max_half_width, 0);
    const int hi = rng.uniform_int(0, max_half_width);
    std::vector<Complex> c;
    for (int n = lo; n <= hi; ++n) c.push_back(rng.complex_in_disc(2.0));
    return FiniteSeq(lo, std::move(c));
}

} // namespace

TEST_CASE("weighted lp norms") {
    const SpaceSpec l2 = SpaceSpec::weighted_lp(Domain::Bilateral, 2.0, WeightFamily::constant());
    const FiniteSeq f = FiniteSeq::unit(0) + FiniteSeq::unit(1);
    CHECK(space_norm(l2, f) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(space_norm(l2, FiniteSeq::zero()) == 0.0);

    const SpaceSpec w2 = SpaceSpec::weighted_lp(Domain::Bilateral, 2.0, WeightFamily::geometric(2.0));
    // ||e_k|| = omega(k)
    CHECK(space_norm(w2, FiniteSeq::unit(3)) == doctest::Approx(8.0));
    CHECK(space_norm(w2, FiniteSeq::unit(-2)) == doctest::Approx(0.25));
}

TEST_CASE("domain checking for norms") {
    const SpaceSpec zp = SpaceSpec::weighted_lp(Domain::Unilateral, 2.0,
                                                WeightFamily::constant(Domain::Unilateral));
    CHECK_THROWS_AS(space_norm(zp, FiniteSeq::unit(-1)), std::domain_error);
    CHECK(space_norm(zp, FiniteSeq::unit(4)) == doctest::Approx(1.0));
}

TEST_CASE("luxemburg norm by bisection") {
    const SpaceSpec orlicz = SpaceSpec::orlicz_space(Domain::Bilateral, OrliczFunction::power(2.0),
                                                     WeightFamily::constant());
    const FiniteSeq f(0, {Complex(3.0, 0.0), Complex(4.0, 0.0)});
    CHECK(space_norm(orlicz, f) == doctest::Approx(5.0).epsilon(1e-10));

    const SpaceSpec vexp =
        SpaceSpec::variable_exponent(Domain::Bilateral, ExponentRule::constant(3.0));
    CHECK(space_norm(vexp, FiniteSeq::unit(0, Complex(2.0, 0.0))) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("orlicz power rule matches weighted lp") {
    // K(x) = x^p with the modular weight omega^p reproduces the lp norm
    Rng rng(101);
    for (double p : {1.0, 2.0, 3.0}) {
        const SpaceSpec lp = SpaceSpec::weighted_lp(Domain::Bilateral, p, WeightFamily::constant());
        const SpaceSpec ko = SpaceSpec::orlicz_space(Domain::Bilateral, OrliczFunction::power(p),
                                                     WeightFamily::constant());
        for (int t = 0; t < 25; ++t) {
            const FiniteSeq f = random_seq(rng);
            if (f.is_zero()) continue;
            CHECK(space_norm(ko, f) == doctest::Approx(space_norm(lp, f)).epsilon(1e-10));
        }
    }
    // weighted match: omega_lp = geometric(a) corresponds to the modular
    // weight geometric(a^p)
    const double a = 1.3, p = 2.0;
    const SpaceSpec lp = SpaceSpec::weighted_lp(Domain::Bilateral, p, WeightFamily::geometric(a));
    const SpaceSpec ko = SpaceSpec::orlicz_space(Domain::Bilateral, OrliczFunction::power(p),
                                                 WeightFamily::geometric(std::pow(a, p)));
    for (int t = 0; t < 25; ++t) {
        const FiniteSeq f = random_seq(rng);
        if (f.is_zero()) continue;
        CHECK(space_norm(ko, f) == doctest::Approx(space_norm(lp, f)).epsilon(1e-10));
    }
}

TEST_CASE("constant variable exponent matches unweighted lp") {
    Rng rng(202);
    for (double p : {1.0, 2.0, 3.0}) {
        const SpaceSpec lp = SpaceSpec::weighted_lp(Domain::Bilateral, p, WeightFamily::constant());
        const SpaceSpec ve =
            SpaceSpec::variable_exponent(Domain::Bilateral, ExponentRule::constant(p));
        for (int t = 0; t < 25; ++t) {
            const FiniteSeq f = random_seq(rng);
            if (f.is_zero()) continue;
            CHECK(space_norm(ve, f) == doctest::Approx(space_norm(lp, f)).epsilon(1e-10));
        }
    }
}

TEST_CASE("norm axioms on random sequences") {
    Rng rng(303);
    const SpaceSpec spaces[] = {
        SpaceSpec::weighted_lp(Domain::Bilateral, 2.0, WeightFamily::two_sided_exp(0.4)),
        SpaceSpec::orlicz_space(Domain::Bilateral, OrliczFunction::power(2.5),
                                WeightFamily::constant()),
        SpaceSpec::variable_exponent(Domain::Bilateral,
                                     ExponentRule::table(-2, {1.0, 2.0, 3.0, 1.5, 2.5}, 2.0)),
    };
    for (const SpaceSpec& s : spaces) {
        for (int t = 0; t < 20; ++t) {
            const FiniteSeq f = random_seq(rng);
            const FiniteSeq g = random_seq(rng);
            if (f.is_zero() || g.is_zero()) continue;
            const Complex c = rng.complex_in_disc(3.0);
            if (c == Complex(0.0, 0.0)) continue;
            // absolute homogeneity
            CHECK(space_norm(s, f.scaled(c)) ==
                  doctest::Approx(std::abs(c) * space_norm(s, f)).epsilon(1e-12));
            // triangle inequality
            CHECK(space_norm(s, f + g) <=
                  space_norm(s, f) + space_norm(s, g) + 1e-10);
        }
    }
}

TEST_CASE("orlicz table rule validation") {
    // convex piecewise-linear table is accepted
    const OrliczFunction K = OrliczFunction::table({0.0, 1.0, 2.0, 3.0}, {0.0, 0.5, 2.0, 4.5});
    CHECK(K(1.0) == doctest::Approx(0.5));
    CHECK(K(2.5) == doctest::Approx(3.25));
    CHECK(K(4.0) == doctest::Approx(7.0)); // extended by the last slope

    CHECK_THROWS_AS(OrliczFunction::table({0.0, 1.0, 2.0}, {0.0, 2.0, 3.0}), std::invalid_argument);
    CHECK_THROWS_AS(OrliczFunction::table({0.0, 1.0}, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(OrliczFunction::table({0.0, 1.0, 0.5}, {0.0, 1.0, 2.0}), std::invalid_argument);

    const SpaceSpec s = SpaceSpec::orlicz_space(Domain::Bilateral, K, WeightFamily::constant());
    const FiniteSeq f(0, {Complex(1.0, 0.0), Complex(0.0, 2.0)});
    const double t = space_norm(s, f);
    // the Luxemburg value solves modular(t) = 1
    CHECK(K(1.0 / t) + K(2.0 / t) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("sequence scaling") {
    Rng rng(404);
    const FiniteSeq f = random_seq(rng);
    CHECK(max_abs_diff(scale_seq(f, Complex(1.0, 0.0)), f) == 0.0);
    CHECK(max_abs_diff(scale_seq(FiniteSeq::unit(3), Complex(2.0, 0.0)),
                       FiniteSeq::unit(3, Complex(8.0, 0.0))) == 0.0);
    CHECK_THROWS_AS(scale_seq(f, Complex(0.0, 0.0)), std::invalid_argument);

    for (int t = 0; t < 20; ++t) {
        const FiniteSeq g = random_seq(rng);
        const Complex r = rng.complex_in_disc(2.0) + Complex(0.5, 0.5);
        const Complex s = rng.complex_in_disc(2.0) + Complex(0.5, -0.5);
        const FiniteSeq lhs = scale_seq(scale_seq(g, r), s);
        const FiniteSeq rhs = scale_seq(g, r * s);
        const double scale = std::max(lhs.max_abs(), 1.0);
        CHECK(max_abs_diff(lhs, rhs) / scale <= 1e-12);
    }
}

TEST_CASE("unimodular scaling is an isometry of weighted lp") {
    Rng rng(505);
    const SpaceSpec s = SpaceSpec::weighted_lp(Domain::Bilateral, 2.0, WeightFamily::geometric(1.5));
    for (int t = 0; t < 20; ++t) {
        const FiniteSeq f = random_seq(rng);
        if (f.is_zero()) continue;
        const Complex z = rng.unit_complex();
        CHECK(space_norm(s, scale_seq(f, z)) == doctest::Approx(space_norm(s, f)).epsilon(1e-12));
    }
}
