"""Smoke tests for the python module built from the C++ core."""

import json
import math

import pytest

import shiftspec as ss


def bilateral_l2(weight):
    return ss.SpaceSpec.weighted_lp(ss.Domain.bilateral, 2.0, weight)


def unilateral_l2(weight):
    return ss.SpaceSpec.weighted_lp(ss.Domain.unilateral, 2.0, weight)


def test_weights_and_radii():
    w = ss.WeightFamily.geometric(2.0)
    assert ss.eval_weight(w, 3) == pytest.approx(8.0)
    space = bilateral_l2(w)
    assert ss.shift_norm(space, 3) == pytest.approx(8.0)
    lo, hi = ss.spectral_radius_shift(space, forward=True)
    assert lo == pytest.approx(2.0)
    assert hi == pytest.approx(2.0)

    super_exp = bilateral_l2(ss.WeightFamily.piecewise_super_exp())
    assert math.isinf(ss.shift_norm(super_exp, 1))
    assert not ss.boundedness(super_exp, forward=True)["bounded"]


def test_norms_and_scaling():
    space = bilateral_l2(ss.WeightFamily.constant())
    f = ss.FiniteSeq(0, [3.0 + 0j, 4.0 + 0j])
    assert ss.space_norm(space, f) == pytest.approx(5.0)

    orlicz = ss.SpaceSpec.orlicz_space(ss.Domain.bilateral, ss.OrliczFunction.power(2.0),
                                       ss.WeightFamily.constant())
    assert ss.space_norm(orlicz, f) == pytest.approx(5.0, abs=1e-9)

    scaled = ss.scale_seq(ss.FiniteSeq.unit(2), 2.0 + 0j)
    assert scaled.coeff(2) == pytest.approx(4.0 + 0j)


def test_predicted_regions():
    annulus = ss.predicted_sigma_shift(bilateral_l2(ss.WeightFamily.two_sided_exp(1.0)))
    assert annulus.variant == "annulus"
    assert annulus.rmin == pytest.approx(math.exp(-1.0))
    assert annulus.rmax == pytest.approx(math.exp(1.0))

    cos_kernel = ss.FiniteSeq(-1, [1.0 + 0j, 0j, 1.0 + 0j])
    segment = ss.predicted_sigma_multiplier(cos_kernel, bilateral_l2(ss.WeightFamily.constant()),
                                            radial_grid=9, angular_grid=4096)
    assert ss.region_contains(segment, 0.5 + 0j, 1e-2) == "inside"
    assert ss.region_contains(segment, 1 + 1j, 1e-2) == "outside"

    disk = ss.predicted_sigma_unilateral(unilateral_l2(ss.WeightFamily.constant(ss.Domain.unilateral)))
    assert disk.variant == "disk"
    assert disk.rmax == pytest.approx(1.0)


def test_certificates():
    flat = bilateral_l2(ss.WeightFamily.constant())
    cos_kernel = ss.FiniteSeq(-1, [1.0 + 0j, 0j, 1.0 + 0j])

    cert = ss.outside_certificate(cos_kernel, 3.0 + 0j, flat, 1.0, 1.0, m=256)
    assert cert["verdict"] == "outside_bound"
    assert cert["identity_residual"] <= 1e-8

    zp = unilateral_l2(ss.WeightFamily.constant(ss.Domain.unilateral))
    fwd = ss.OperatorSpec.shift_power(1, zp)
    series = ss.neumann_outside_certificate(fwd, 1.5 + 0j)
    assert series["verdict"] == "outside_bound"
    assert series["bound"] <= 2.001

    back = ss.OperatorSpec.toeplitz(ss.FiniteSeq.unit(-1), zp)
    assert ss.approx_eigen_residual(back, 2.5 + 0j, 40) <= 1e-6

    table = ss.blowup_witness(fwd, 0.5 + 0j, [20, 30, 40])
    assert table[-1][1] > 100 * table[0][1]


def test_joint_operations():
    spaces = [bilateral_l2(ss.WeightFamily.geometric(2.0)), bilateral_l2(ss.WeightFamily.constant())]
    joint = ss.joint_region_separable(spaces)
    assert joint["exact"]

    assert ss.joint_exclusion_test([3.0 + 0j, 1.0 + 0j], spaces)["excluded"]
    assert not ss.joint_exclusion_test([2j, 1j], spaces)["excluded"]

    phi = ss.MultiIndexSeq.unit([1, 0]) + ss.MultiIndexSeq.unit([0, 1])
    points = ss.predicted_sigma_multiplier_multi(phi, spaces, angular_grid=32)
    moduli = sorted(abs(p) for p in points)
    assert moduli[0] == pytest.approx(1.0, abs=1e-2)
    assert moduli[-1] == pytest.approx(3.0, abs=1e-2)

    cert = ss.outside_certificate_multi(phi, 3.5 + 0j, spaces, m=256)
    assert cert["verdict"] == "outside_bound"
    assert cert["identity_residual"] <= 1e-8


def test_run_config_roundtrip():
    config = {
        "task": "radius",
        "space": {"domain": "bilateral",
                  "norm": {"family": "weighted_lp", "p": 2,
                           "weight": {"kind": "geometric", "a": 2.0}}},
        "horizon": 16,
    }
    report = json.loads(ss.run_config(json.dumps(config)))
    assert report["task"] == "radius"
    assert report["results"]["forward"]["upper"] == pytest.approx(2.0)
    assert report["results"]["backward"]["upper"] == pytest.approx(0.5)

    with pytest.raises(ValueError):
        ss.run_config(json.dumps({"task": "nope"}))
