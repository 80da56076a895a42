"""Generalized-Grassmann coherent states."""

import cmath
import math

import pytest

from gentile.coherent import (GrassmannElement, GrassmannOps, LambdaChoice,
                              build_coherent, compare_closed_form,
                              eigenstate_residual, lambda_value,
                              move_relation_check, normalization_poly)
from gentile.errors import OutOfRange

PRINTED_CHOICES = (LambdaChoice.ROOT_OF_UNITY_PLUS,
                   LambdaChoice.ROOT_OF_UNITY_MINUS,
                   LambdaChoice.ALTERNATING)


def test_lambda_values():
    n = 3
    assert lambda_value(LambdaChoice.ROOT_OF_UNITY_PLUS, 1, n) \
        == pytest.approx(cmath.exp(2j * math.pi / 4))
    assert lambda_value(LambdaChoice.ALTERNATING, 2, n) == 1.0
    assert lambda_value(LambdaChoice.ALTERNATING, 3, n) == -1.0
    with pytest.raises(OutOfRange):
        lambda_value(LambdaChoice.ALTERNATING, 4, n)
    with pytest.raises(OutOfRange):
        lambda_value(LambdaChoice.CUSTOM, 0, n)  # needs a table


def test_custom_lambda_zero_rejected():
    with pytest.raises(OutOfRange):
        lambda_value(LambdaChoice.CUSTOM, 0, 2, custom_table=[0.0, 1.0, 1.0])


def test_fermi_case_delta():
    # n=1, alternating lambda: delta = [1, 1] (the printed Fermi-case state)
    state = build_coherent(1, LambdaChoice.ALTERNATING)
    assert state.delta[0] == 1.0
    assert abs(state.delta[1] - 1.0) <= 1e-15
    assert eigenstate_residual(state) <= 1e-15


def test_delta_recursion_invariant():
    # delta(v+1) sqrt(<v+1>) = delta(v) lambda(v) is the defining recursion
    from gentile.rep import bracket_number
    import cmath as _cm
    for n in (2, 5, 9):
        for choice in PRINTED_CHOICES:
            state = build_coherent(n, choice)
            for v in range(n):
                amp = _cm.sqrt(bracket_number(n, v + 1))
                lhs = state.delta[v + 1] * amp
                rhs = state.delta[v] * lambda_value(choice, v, n)
                assert abs(lhs - rhs) <= 1e-12


@pytest.mark.parametrize("n", range(1, 13))
@pytest.mark.parametrize("choice", PRINTED_CHOICES)
def test_eigenstate_residual(n, choice):
    state = build_coherent(n, choice)
    assert eigenstate_residual(state) <= 1e-12


@pytest.mark.parametrize("n", range(1, 13))
@pytest.mark.parametrize("choice", PRINTED_CHOICES)
def test_closed_form_modulus(n, choice):
    # closed form and recursion agree up to a per-nu sign (branch artifact)
    state = build_coherent(n, choice)
    for _, rec, closed, rel, modulus_gap in compare_closed_form(state):
        assert modulus_gap <= 1e-12
        assert rel in (1, -1)
        assert min(abs(closed - rec), abs(closed + rec)) <= 1e-12


def test_closed_form_custom_rejected():
    state = build_coherent(2, LambdaChoice.CUSTOM,
                           custom_table=[1.0, 1.0, 1.0])
    with pytest.raises(OutOfRange):
        compare_closed_form(state)


@pytest.mark.parametrize("n", (1, 3, 6))
def test_move_relations(n):
    for choice in PRINTED_CHOICES:
        for power in range(n + 1):
            residuals = move_relation_check(n, choice, power)
            assert set(residuals) == {"psi_bdag", "psi_adag", "b_psi",
                                      "a_psi"}
            assert max(residuals.values()) <= 1e-12


def test_move_relation_power_range():
    with pytest.raises(OutOfRange):
        move_relation_check(2, LambdaChoice.ALTERNATING, 3)


def test_normalization_poly():
    state = build_coherent(3, LambdaChoice.ROOT_OF_UNITY_PLUS)
    poly = normalization_poly(state)
    assert poly[0] == 1.0
    assert len(poly) == 4
    assert all(c >= 0.0 for c in poly)


def test_grassmann_truncation():
    # psi^(n+1) = 0: raising the psi power past n annihilates the element
    n = 2
    ops = GrassmannOps(n, LambdaChoice.ROOT_OF_UNITY_PLUS)
    e = GrassmannElement.zero(n)
    e.coeffs[0, n] = 1.0  # |0> psi^n
    assert ops.apply_psi(e).max_abs() == 0.0
