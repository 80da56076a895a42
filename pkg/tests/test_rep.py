"""Matrix representation of the deformed ladder algebra."""

import cmath
import math

import numpy as np
import pytest

from gentile.errors import OutOfRange
from gentile.linalg import max_abs_diff
from gentile.rep import (bracket_number, build_rep, diag_of_num,
                         gentile_bracket, number_from_arcsin)


def test_bracket_number_oracle_n3():
    # q = i at n=3: <1>=1, <2>=1+i, <3>=i, <4>=0 by the geometric sum
    assert bracket_number(3, 0) == 0
    assert abs(bracket_number(3, 1) - 1) <= 1e-15
    assert abs(bracket_number(3, 2) - (1 + 1j)) <= 1e-15
    assert abs(bracket_number(3, 3) - 1j) <= 1e-15
    assert abs(bracket_number(3, 4)) <= 1e-15


def test_bracket_number_fermi():
    # n=1: q=-1, <1>=1, <2>=0 — the Pauli exclusion truncation
    assert abs(bracket_number(1, 1) - 1) <= 1e-15
    assert abs(bracket_number(1, 2)) <= 1e-15


def test_bracket_number_recursion():
    # <v+1> = 1 + q <v>, including the top wraparound <n+1> = 0
    for n in range(1, 12):
        q = cmath.exp(2j * math.pi / (n + 1))
        for v in range(n + 1):
            lhs = bracket_number(n, v + 1)
            rhs = 1 + q * bracket_number(n, v)
            assert abs(lhs - rhs) <= 1e-13


def test_defining_relation():
    for n in range(1, 25):
        rep = build_rep(n)
        assert max_abs_diff(gentile_bracket(rep.b, rep.a_dag, n),
                            np.eye(n + 1)) <= 1e-12


def test_rep_structure():
    rep = build_rep(4)
    assert rep.dim == 5
    # a_dag strictly raises with amplitude sqrt(<v+1>)
    for v in range(4):
        amp = rep.a_dag[v + 1, v]
        assert abs(amp ** 2 - bracket_number(4, v + 1)) <= 1e-13
    # diagonality of the quadratic combinations
    assert max_abs_diff(rep.a_dag @ rep.b,
                        np.diag([bracket_number(4, v) for v in range(5)])
                        ) <= 1e-12
    assert max_abs_diff(rep.b @ rep.a_dag,
                        np.diag([bracket_number(4, v + 1) for v in range(5)])
                        ) <= 1e-12


def test_conjugation_consistency():
    for n in (1, 2, 5, 8):
        rep = build_rep(n)
        assert max_abs_diff(rep.a, rep.a_dag.conj().T) == 0.0
        assert max_abs_diff(rep.b_dag, rep.b.conj().T) == 0.0
        assert max_abs_diff(rep.a_dag @ rep.a, rep.b_dag @ rep.b) <= 1e-12
        assert max_abs_diff(rep.a @ rep.a_dag, rep.b @ rep.b_dag) <= 1e-12


def test_number_commutators_exact():
    rep = build_rep(6)
    assert max_abs_diff(rep.num @ rep.a_dag - rep.a_dag @ rep.num,
                        rep.a_dag) <= 1e-13
    assert max_abs_diff(rep.num @ rep.b - rep.b @ rep.num, -rep.b) <= 1e-13


def test_fermi_limit_matrices():
    rep = build_rep(1)
    # the bracket degenerates to the anticommutator and a coincides with b
    assert max_abs_diff(rep.b @ rep.a_dag + rep.a_dag @ rep.b,
                        np.eye(2)) <= 1e-14
    assert max_abs_diff(rep.a, rep.b) <= 1e-14


def test_matrices_readonly():
    rep = build_rep(2)
    with pytest.raises(ValueError):
        rep.a_dag[0, 0] = 1.0


def test_build_rep_range():
    with pytest.raises(OutOfRange):
        build_rep(0)


def test_diag_of_num():
    rep = build_rep(3)
    m = diag_of_num(rep, lambda v: v * v)
    assert max_abs_diff(m, np.diag([0.0, 1.0, 4.0, 9.0])) == 0.0


def test_arcsin_audit_prediction():
    # principal branch: table value = ((n+1)/2pi) asin(sin(2 pi v/(n+1)))
    for n in range(1, 17):
        audit = number_from_arcsin(build_rep(n))
        for v, value, agrees in audit.table:
            predicted = (n + 1) / (2 * math.pi) \
                * math.asin(math.sin(2 * math.pi * v / (n + 1)))
            # asin is ill-conditioned at +/-1: rounding in the eigenvalues
            # can grow to ~sqrt(eps) in the reconstruction table
            assert abs(value - predicted) <= 1e-6
            # the flag is computed from the (condition-limited) table value,
            # so only states clearly off the prediction must be flagged
            if abs(predicted - v) > 1e-3:
                assert not agrees
            if agrees:
                assert abs(predicted - v) <= 1e-6


def test_arcsin_collision_n3():
    audit = number_from_arcsin(build_rep(3))
    assert audit.collision_flag
    assert (0, 2) in audit.collisions


def test_arcsin_no_collision_n2():
    audit = number_from_arcsin(build_rep(2))
    assert not audit.collision_flag
