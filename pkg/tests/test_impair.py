import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pipefom.impair import IDEAL, ImpairmentParams, gain_tf, impaired_residue, nonlinear_tf, stage_error

# atanh(tanh(0.2) * 0.5) / 0.2 at 50 significant digits (mpmath), frozen
NL_HALF_GOLDEN = 0.4950496340303606879808673
# 0.985 * NL_HALF_GOLDEN - 0.5
ERR_HALF_GOLDEN = -0.01237611048009472233884571

unit = st.floats(-1, 1, allow_nan=False)
alphas = st.floats(0, 3, allow_nan=False)
eps = st.floats(-0.5, 0.5, allow_nan=False)


def test_nonlinear_tf_reference_points():
    assert nonlinear_tf(0.0, 0.2) == 0.0
    assert nonlinear_tf(1.0, 0.2) == 1.0
    assert nonlinear_tf(-1.0, 0.2) == -1.0
    assert abs(nonlinear_tf(0.5, 1e-12) - 0.5) < 1e-9


def test_nonlinear_tf_golden():
    assert nonlinear_tf(0.5, 0.2) == pytest.approx(NL_HALF_GOLDEN, rel=1e-14)


def test_gain_tf():
    assert gain_tf(0.5, -0.015) == pytest.approx(0.4925, abs=1e-15)
    assert gain_tf(1.0, 0.0) == 1.0
    assert gain_tf(-1.0, -0.015) == pytest.approx(-0.985, abs=1e-15)


def test_stage_error_reference_points():
    p = ImpairmentParams(-0.015, 0.2)
    assert stage_error(0.0, p) == 0.0
    assert stage_error(1.0, p) == -0.015
    assert stage_error(0.5, p) == pytest.approx(ERR_HALF_GOLDEN, rel=1e-12)
    assert np.all(stage_error(np.linspace(-1, 1, 101), IDEAL) == 0.0)


def test_impaired_residue_composes_gain_after_compression():
    p = ImpairmentParams(-0.015, 0.2)
    u = np.linspace(-1, 1, 41)
    np.testing.assert_allclose(impaired_residue(u, p), 0.985 * nonlinear_tf(u, 0.2), rtol=0, atol=1e-15)
    np.testing.assert_allclose(impaired_residue(u, p) - u, stage_error(u, p), atol=1e-15)


@pytest.mark.parametrize("eps_gain, alpha_nl", [(1.0, 0.2), (-1.0, 0.2), (0.0, -0.1), (float("nan"), 0.0)])
def test_params_validation(eps_gain, alpha_nl):
    with pytest.raises(ValueError):
        ImpairmentParams(eps_gain, alpha_nl)


@given(unit, eps, alphas)
def test_stage_error_is_odd(u, e, a):
    p = ImpairmentParams(e, a)
    assert stage_error(-u, p) == pytest.approx(-stage_error(u, p), abs=1e-15)


def test_stage_error_is_odd_on_random_draws():
    rng = np.random.default_rng(7)
    u = rng.uniform(-1, 1, 1000)
    p = ImpairmentParams(-0.015, 0.2)
    np.testing.assert_array_equal(stage_error(-u, p), -stage_error(u, p))


@given(alphas)
def test_nonlinear_tf_strictly_increasing(a):
    u = np.linspace(-1, 1, 2001)
    assert np.all(np.diff(nonlinear_tf(u, a)) > 0)


@given(st.floats(0, 1e-4))
def test_small_alpha_is_near_identity(a):
    u = np.linspace(-1, 1, 201)
    assert np.max(np.abs(nonlinear_tf(u, a) - u)) <= 1e-7


@given(eps, alphas)
def test_stage_error_at_full_scale_is_gain_error(e, a):
    assert stage_error(1.0, ImpairmentParams(e, a)) == e


@given(unit, alphas)
def test_nonlinear_tf_stays_in_range(u, a):
    assert abs(nonlinear_tf(u, a)) <= 1.0
