"""Intermediate-statistics coherent states on the generalized-Grassmann module.

The module has basis |nu> psi^k with 0 <= nu, k <= n and the truncation
psi^(n+1) = 0.  psi moves past a number state by picking up the twist
lambda(nu, n); ladder operators act on the state index only.  The
coherent state is the annihilation-operator eigenstate with eigenvalue
psi, built from the recursion
delta(nu+1) * sqrt(<nu+1>) = delta(nu) * lambda(nu).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import OutOfRange
from .rep import bracket_number


class LambdaChoice(Enum):
    ROOT_OF_UNITY_PLUS = "root_of_unity_plus"
    ROOT_OF_UNITY_MINUS = "root_of_unity_minus"
    ALTERNATING = "alternating"
    CUSTOM = "custom"


def lambda_value(choice, v: int, n: int, custom_table=None) -> complex:
    """The twist phase lambda(nu, n) for the chosen construction."""
    if not 0 <= v <= n:
        raise OutOfRange(f"v must lie in [0, {n}], got {v}")
    if choice is LambdaChoice.ROOT_OF_UNITY_PLUS:
        return cmath.exp(2j * math.pi * v / (n + 1))
    if choice is LambdaChoice.ROOT_OF_UNITY_MINUS:
        return cmath.exp(-2j * math.pi * v / (n + 1))
    if choice is LambdaChoice.ALTERNATING:
        return complex((-1) ** v)
    if choice is LambdaChoice.CUSTOM:
        if custom_table is None:
            raise OutOfRange("CUSTOM choice requires a lambda table")
        if custom_table[0] == 0:
            raise OutOfRange("CUSTOM lambda(0, n) must be nonzero")
        return complex(custom_table[v])
    raise OutOfRange(f"unknown lambda choice {choice!r}")


@dataclass(frozen=True)
class GrassmannElement:
    """Element of the module spanned by |nu> psi^k, 0 <= nu, k <= n."""

    n: int
    coeffs: np.ndarray  # (n+1, n+1) complex, indexed [nu, k]

    @classmethod
    def zero(cls, n: int) -> "GrassmannElement":
        return cls(n, np.zeros((n + 1, n + 1), dtype=complex))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.coeffs)))

    def sub(self, other: "GrassmannElement") -> "GrassmannElement":
        return GrassmannElement(self.n, self.coeffs - other.coeffs)

    def scaled(self, s: complex) -> "GrassmannElement":
        return GrassmannElement(self.n, s * self.coeffs)


class GrassmannOps:
    """Operator actions on the module for one (n, lambda) choice."""

    def __init__(self, n: int, choice, custom_table=None):
        self.n = n
        self.lam = [lambda_value(choice, v, n, custom_table)
                    for v in range(n + 1)]
        self.sqrt_br = [cmath.sqrt(bracket_number(n, v))
                        for v in range(n + 2)]

    def apply_b(self, e: GrassmannElement) -> GrassmannElement:
        out = GrassmannElement.zero(self.n)
        for v in range(1, self.n + 1):
            out.coeffs[v - 1, :] += self.sqrt_br[v] * e.coeffs[v, :]
        return out

    def apply_a(self, e: GrassmannElement) -> GrassmannElement:
        out = GrassmannElement.zero(self.n)
        for v in range(1, self.n + 1):
            out.coeffs[v - 1, :] += self.sqrt_br[v].conjugate() * e.coeffs[v, :]
        return out

    def apply_adag(self, e: GrassmannElement) -> GrassmannElement:
        out = GrassmannElement.zero(self.n)
        for v in range(self.n):
            out.coeffs[v + 1, :] += self.sqrt_br[v + 1] * e.coeffs[v, :]
        return out

    def apply_bdag(self, e: GrassmannElement) -> GrassmannElement:
        out = GrassmannElement.zero(self.n)
        for v in range(self.n):
            out.coeffs[v + 1, :] += self.sqrt_br[v + 1].conjugate() \
                * e.coeffs[v, :]
        return out

    def apply_psi(self, e: GrassmannElement) -> GrassmannElement:
        """Left multiplication by psi; the k = n column truncates away."""
        out = GrassmannElement.zero(self.n)
        for v in range(self.n + 1):
            out.coeffs[v, 1:] += self.lam[v] * e.coeffs[v, :-1]
        return out


@dataclass(frozen=True)
class CoherentState:
    n: int
    choice: LambdaChoice
    delta: tuple  # delta(0, n) .. delta(n, n)
    element: GrassmannElement
    ops: GrassmannOps


def build_coherent(n: int, choice, custom_table=None) -> CoherentState:
    """Coherent state from the delta recursion, diagonal in (nu, k)."""
    if n < 1:
        raise OutOfRange(f"n must be >= 1, got {n}")
    ops = GrassmannOps(n, choice, custom_table)
    delta = [1 + 0j]
    for v in range(n):
        delta.append(delta[v] * ops.lam[v] / ops.sqrt_br[v + 1])
    element = GrassmannElement.zero(n)
    for v in range(n + 1):
        element.coeffs[v, v] = delta[v]
    return CoherentState(n=n, choice=choice, delta=tuple(delta),
                         element=element, ops=ops)


def eigenstate_residual(state: CoherentState) -> float:
    """Max-abs coefficient of b|psi> - psi|psi>; zero by construction."""
    lhs = state.ops.apply_b(state.element)
    rhs = state.ops.apply_psi(state.element)
    return lhs.sub(rhs).max_abs()


def closed_form_delta(n: int, sign: int, v: int) -> complex:
    """Printed closed form for delta(nu, n), principal square roots.

    ``sign`` +1/-1 selects the two root-of-unity lambda choices, 0 the
    alternating choice.  Nested principal roots need not distribute over
    the product, so the result can differ from the recursion by a sign.
    """
    if not 0 <= v <= n:
        raise OutOfRange(f"v must lie in [0, {n}], got {v}")
    if v == 0:
        return 1 + 0j
    q = cmath.exp(2j * math.pi / (n + 1))
    if sign == 0:
        phase = complex((-1) ** ((v - 1) * v // 2))
    elif sign in (1, -1):
        phase = cmath.exp(sign * 1j * math.pi * v * (v - 1) / (n + 1))
    else:
        raise OutOfRange(f"sign must be +1, -1, or 0, got {sign}")
    numerator = phase * (1 - q) ** (v / 2)
    denominator = 1 + 0j
    for j in range(1, v + 1):
        denominator *= cmath.sqrt(1 - cmath.exp(2j * math.pi * j / (n + 1)))
    return numerator / denominator


def compare_closed_form(state: CoherentState):
    """Per-nu comparison of recursion delta with the printed closed form.

    Returns rows (nu, recursion, closed form, sign in {+1,-1} relating
    them, |difference of moduli|).  Only meaningful for the three printed
    lambda choices.
    """
    sign = {LambdaChoice.ROOT_OF_UNITY_PLUS: 1,
            LambdaChoice.ROOT_OF_UNITY_MINUS: -1,
            LambdaChoice.ALTERNATING: 0}.get(state.choice)
    if sign is None:
        raise OutOfRange("no printed closed form for CUSTOM lambda")
    rows = []
    for v in range(state.n + 1):
        rec = state.delta[v]
        closed = closed_form_delta(state.n, sign, v)
        rel = 1 if abs(closed - rec) <= abs(closed + rec) else -1
        rows.append((v, rec, closed, rel, abs(abs(closed) - abs(rec))))
    return rows


def normalization_poly(state: CoherentState):
    """Coefficients [1, |delta(1)|^2, ..., |delta(n)|^2] of (psibar psi)^m.

    The normalization prefactor itself is formal in psibar*psi, so only
    the polynomial data is returned, never a number.
    """
    return [1.0] + [abs(d) ** 2 for d in state.delta[1:]]


def move_relation_check(n: int, choice, power: int, custom_table=None):
    """Residuals of the four psi move relations at the given power.

    Relations checked (as module transformations, on every basis element):
    psi bdag^p, psi adag^p, b^p psi, a^p psi, each against
    (lambda(p)/lambda(0)) times the reordered side.
    """
    if not 0 <= power <= n:
        raise OutOfRange(f"power must lie in [0, {n}], got {power}")
    ops = GrassmannOps(n, choice, custom_table)
    ratio = ops.lam[power] / ops.lam[0]

    def repeat(f, e, times):
        for _ in range(times):
            e = f(e)
        return e

    checks = {
        "psi_bdag": (lambda e: ops.apply_psi(repeat(ops.apply_bdag, e, power)),
                     lambda e: repeat(ops.apply_bdag,
                                      ops.apply_psi(e), power)),
        "psi_adag": (lambda e: ops.apply_psi(repeat(ops.apply_adag, e, power)),
                     lambda e: repeat(ops.apply_adag,
                                      ops.apply_psi(e), power)),
        "b_psi": (lambda e: repeat(ops.apply_b, ops.apply_psi(e), power),
                  lambda e: ops.apply_psi(repeat(ops.apply_b, e, power))),
        "a_psi": (lambda e: repeat(ops.apply_a, ops.apply_psi(e), power),
                  lambda e: ops.apply_psi(repeat(ops.apply_a, e, power))),
    }
    residuals = {}
    for name, (lhs_f, rhs_f) in checks.items():
        worst = 0.0
        for v in range(n + 1):
            for k in range(n + 1):
                e = GrassmannElement.zero(n)
                e.coeffs[v, k] = 1.0
                diff = lhs_f(e).sub(rhs_f(e).scaled(ratio))
                worst = max(worst, diff.max_abs())
        residuals[name] = worst
    return residuals
