#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "shiftspec/errors.hpp"
#include "shiftspec/rng.hpp"
#include "shiftspec/spaces.hpp"
#include "shiftspec/weights.hpp"

#include "oracles.hpp"

using namespace shiftspec;

namespace {

SpaceSpec l2(WeightFamily w) { return SpaceSpec::weighted_lp(w.domain(), 2.0, std::move(w)); }

} // namespace

TEST_CASE("weight evaluation") {
    CHECK(eval_weight(WeightFamily::constant(), 7) == doctest::Approx(1.0));
    CHECK(eval_weight(WeightFamily::geometric(2.0), 3) == doctest::Approx(8.0));
    CHECK(eval_weight(WeightFamily::two_sided_exp(1.0), -2) == doctest::Approx(7.3890560989).epsilon(1e-10));
    CHECK(eval_weight(WeightFamily::polynomial(2.0), -3) == doctest::Approx(16.0));
    CHECK(eval_weight(WeightFamily::piecewise_super_exp(), 2) == doctest::Approx(std::exp(4.0)));
    CHECK(eval_weight(WeightFamily::piecewise_super_exp(), -5) == doctest::Approx(1.0));
}

TEST_CASE("weight domain errors") {
    const WeightFamily w = WeightFamily::constant(Domain::Unilateral);
    CHECK_THROWS_AS(eval_weight(w, -1), std::domain_error);
    CHECK_THROWS_AS(WeightFamily::geometric(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(WeightFamily::table(0, {}, TableExtension::ConstantTail), std::invalid_argument);
}

TEST_CASE("table weight evaluation and tails") {
    const WeightFamily wc =
        WeightFamily::table(-1, {2.0, 1.0, 4.0}, TableExtension::ConstantTail);
    CHECK(eval_weight(wc, -1) == doctest::Approx(2.0));
    CHECK(eval_weight(wc, 1) == doctest::Approx(4.0));
    CHECK(eval_weight(wc, -10) == doctest::Approx(2.0));
    CHECK(eval_weight(wc, 10) == doctest::Approx(4.0));

    const WeightFamily wg =
        WeightFamily::table(0, {1.0, 3.0}, TableExtension::GeometricTail, 2.0);
    CHECK(eval_weight(wg, 3) == doctest::Approx(3.0 * 4.0)); // two steps past the window
    CHECK(eval_weight(wg, -2) == doctest::Approx(1.0 / 4.0));
}

TEST_CASE("shift norms: closed forms against the windowed oracle") {
    CHECK(shift_norm(l2(WeightFamily::constant()), 5).value() == doctest::Approx(1.0));

    const ExtReal g3 = shift_norm(l2(WeightFamily::geometric(2.0)), 3);
    CHECK(g3.value() == doctest::Approx(8.0));
    CHECK(g3.value() ==
          doctest::Approx(oracles::brute_shift_norm(WeightFamily::geometric(2.0), 3)).epsilon(1e-12));

    for (int k : {-4, -1, 1, 2, 5}) {
        for (const WeightFamily& w :
             {WeightFamily::two_sided_exp(0.7), WeightFamily::polynomial(1.5),
              WeightFamily::polynomial(-0.8), WeightFamily::two_sided_exp(-0.3)}) {
            const double lib = shift_norm(l2(w), k).value();
            const double oracle = oracles::brute_shift_norm(w, k);
            CHECK(lib == doctest::Approx(oracle).epsilon(1e-9));
        }
    }
}

TEST_CASE("shift norms on Z+ differ from the bilateral sups") {
    const WeightFamily w = WeightFamily::two_sided_exp(1.0, Domain::Unilateral);
    // on Z+ the ratio is constant e^k, no |n| kink
    CHECK(shift_norm(l2(w), -2).value() == doctest::Approx(std::exp(-2.0)));
    CHECK(shift_norm(l2(w), -2).value() ==
          doctest::Approx(oracles::brute_shift_norm(w, -2)).epsilon(1e-12));

    const WeightFamily p = WeightFamily::polynomial(-1.5, Domain::Unilateral);
    CHECK(shift_norm(l2(p), 2).value() == doctest::Approx(oracles::brute_shift_norm(p, 2, 200000)).epsilon(1e-4));
}

TEST_CASE("super-exponential weight: divergence rule") {
    const SpaceSpec s = l2(WeightFamily::piecewise_super_exp());
    const ShiftNormDetail d = shift_norm_detail(s, 1);
    CHECK(d.value.is_infinite());
    CHECK(!d.divergence_samples.empty());
    // backward direction stays flat
    CHECK(shift_norm(s, -1).value() == doctest::Approx(1.0));
}

TEST_CASE("shift norm needs a weighted-lp family") {
    const SpaceSpec orlicz = SpaceSpec::orlicz_space(Domain::Bilateral, OrliczFunction::power(2.0),
                                                     WeightFamily::constant());
    CHECK_THROWS_AS(shift_norm(orlicz, 1), UnsupportedNormError);
}

TEST_CASE("spectral radius brackets collapse for structured families") {
    const RadiusBracket c = spectral_radius_shift(l2(WeightFamily::constant()), ShiftDirection::Forward, 16);
    CHECK(c.lower.value() == doctest::Approx(1.0));
    CHECK(c.upper.value() == doctest::Approx(1.0));

    const RadiusBracket g = spectral_radius_shift(l2(WeightFamily::geometric(2.0)), ShiftDirection::Forward, 16);
    CHECK(g.lower.value() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(g.upper.value() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(oracles::brute_spectral_radius(WeightFamily::geometric(2.0), 1, 16) == doctest::Approx(2.0));

    const RadiusBracket gb = spectral_radius_shift(l2(WeightFamily::geometric(2.0)), ShiftDirection::Backward, 16);
    CHECK(gb.upper.value() == doctest::Approx(0.5).epsilon(1e-12));

    const RadiusBracket se = spectral_radius_shift(l2(WeightFamily::piecewise_super_exp()), ShiftDirection::Forward, 8);
    CHECK(se.lower.is_infinite());
    CHECK(se.upper.is_infinite());
}

TEST_CASE("spectral radius brackets stay nested as the horizon grows") {
    const WeightFamily w = WeightFamily::table(-3, {1.0, 5.0, 0.5, 2.0, 1.0, 3.0, 0.25},
                                               TableExtension::GeometricTail, 1.5);
    const SpaceSpec s = l2(w);
    RadiusBracket prev = spectral_radius_shift(s, ShiftDirection::Forward, 2);
    for (int h : {4, 8, 16, 32}) {
        const RadiusBracket b = spectral_radius_shift(s, ShiftDirection::Forward, h);
        CHECK(b.lower.raw() >= prev.lower.raw() - 1e-12);
        CHECK(b.upper.raw() <= prev.upper.raw() + 1e-12);
        CHECK(b.lower.raw() <= b.upper.raw() + 1e-12);
        prev = b;
    }
    // the tail rule pins the radius at the geometric tail ratio
    CHECK(prev.lower.value() == doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("geometric family closed forms") {
    const double a = 2.0;
    const SpaceSpec s = l2(WeightFamily::geometric(a));
    for (int k = -5; k <= 5; ++k)
        CHECK(shift_norm(s, k).value() == doctest::Approx(std::pow(a, k)).epsilon(1e-12));
}

TEST_CASE("submultiplicativity of shift power norms") {
    Rng rng(11);
    for (const WeightFamily& w :
         {WeightFamily::two_sided_exp(0.5), WeightFamily::polynomial(2.0),
          WeightFamily::table(-2, {1.0, 0.5, 2.0, 4.0, 1.0}, TableExtension::GeometricTail, 0.75)}) {
        const SpaceSpec s = l2(w);
        for (int t = 0; t < 40; ++t) {
            const int j = rng.uniform_int(-6, 6);
            const int k = rng.uniform_int(-6, 6);
            const ExtReal njk = shift_norm(s, j + k);
            const ExtReal nj = shift_norm(s, j);
            const ExtReal nk = shift_norm(s, k);
            if (njk.is_finite() && nj.is_finite() && nk.is_finite())
                CHECK(njk.value() <= nj.value() * nk.value() * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("boundedness certificates") {
    const BoundednessReport fwd = boundedness(l2(WeightFamily::two_sided_exp(1.0)), ShiftDirection::Forward);
    CHECK(fwd.bounded);
    CHECK(fwd.sup_ratio == doctest::Approx(std::exp(1.0)).epsilon(1e-12));

    const SpaceSpec se = l2(WeightFamily::piecewise_super_exp());
    const BoundednessReport up = boundedness(se, ShiftDirection::Forward);
    CHECK(!up.bounded);
    CHECK(up.divergence.size() >= 2);
    CHECK(up.divergence.back().second > up.divergence.front().second);

    const BoundednessReport down = boundedness(se, ShiftDirection::Backward);
    CHECK(down.bounded);
    CHECK(down.sup_ratio == doctest::Approx(1.0));

    // unboundedness is exactly the divergence of the single-step norm
    CHECK(!up.bounded);
    CHECK(shift_norm(se, 1).is_infinite());
}
