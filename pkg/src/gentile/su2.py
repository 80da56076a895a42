"""su(2) representations from a single set of Gentile ladder operators.

J_z = N - n/2; J_+ = sum_l conj(lambda_l) A^l a_dag with A any diagonal
operator commuting with N.  The interpolation coefficients lambda_l are
solved by Newton divided differences over the n eigenvalue nodes of A on
|1>..|n>, the linear problem that makes each raising matrix element equal
the standard spin value c_+(nu) = sqrt((n-nu)(nu+1)).  The quadratic
coefficient equations from the [J_+, J_-] = 2 J_z diagonal are then
verified a posteriori.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DegenerateNodes, OutOfRange, WrongChoice
from .linalg import max_abs_diff
from .rep import GentileRep, build_rep

NODE_SEPARATION = 1e-9


class DiagonalChoice(Enum):
    NUM = "num"
    ADAG_B = "adagb"
    BDAG_A = "bdaga"
    ADAG_A = "adaga"
    A_ADAG = "aadag"


def ladder_targets(n: int):
    """Standard real raising matrix elements c_+(0)..c_+(n)."""
    if n < 1:
        raise OutOfRange(f"n must be >= 1, got {n}")
    return [math.sqrt((n - v) * (v + 1)) for v in range(n + 1)]


def diagonal_operator(rep: GentileRep, choice: DiagonalChoice) -> np.ndarray:
    if choice is DiagonalChoice.NUM:
        return rep.num
    if choice is DiagonalChoice.ADAG_B:
        return rep.a_dag @ rep.b
    if choice is DiagonalChoice.BDAG_A:
        return rep.b_dag @ rep.a
    if choice is DiagonalChoice.ADAG_A:
        return rep.a_dag @ rep.a
    if choice is DiagonalChoice.A_ADAG:
        return rep.a @ rep.a_dag
    raise OutOfRange(f"unknown diagonal choice {choice!r}")


def _check_nodes(nodes):
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            sep = abs(nodes[i] - nodes[j])
            if sep <= NODE_SEPARATION:
                # node index i corresponds to state |i+1>
                raise DegenerateNodes((i + 1, j + 1), sep)


def divided_differences(nodes, values):
    """Newton divided-difference table d_0 .. d_(m-1) over distinct nodes."""
    m = len(nodes)
    divided = list(values)
    for level in range(1, m):
        for i in range(m - 1, level - 1, -1):
            divided[i] = (divided[i] - divided[i - 1]) \
                / (nodes[i] - nodes[i - level])
    return divided


def newton_eval(nodes, divided, z: complex) -> complex:
    """Horner evaluation of the interpolant in the Newton basis."""
    acc = complex(divided[-1])
    for k in range(len(divided) - 2, -1, -1):
        acc = acc * (z - nodes[k]) + divided[k]
    return acc


def newton_coefficients(nodes, values):
    """Monomial coefficients of the interpolating polynomial.

    Newton divided differences over (possibly complex) nodes, then
    expansion of the Newton basis into powers.  Nodes must be distinct.
    The monomial form is for reporting; assembly and residual checks
    stay in the Newton basis, which is far better conditioned here.
    """
    m = len(nodes)
    divided = divided_differences(nodes, values)
    # accumulate prod_(j<k) (x - x_j) in the monomial basis
    coeffs = np.zeros(m, dtype=complex)
    basis = np.zeros(m, dtype=complex)
    basis[0] = 1.0
    coeffs += divided[0] * basis
    for k in range(1, m):
        shifted = np.zeros(m, dtype=complex)
        shifted[1:] = basis[:-1]
        basis = shifted - nodes[k - 1] * basis
        coeffs += divided[k] * basis
    return coeffs


@dataclass(frozen=True)
class Su2Rep:
    n: int
    j: float
    choice: DiagonalChoice
    lambdas: tuple          # lambda_0 .. lambda_(n-1)
    j_plus: np.ndarray
    j_minus: np.ndarray
    j_z: np.ndarray
    # Newton-basis data of p(z) = sum_l conj(lambda_l) z^l, kept for
    # stable residual checks (the monomial lambdas are report-friendly
    # but ill-conditioned to evaluate directly for larger n)
    nodes: tuple = None
    divided: tuple = None
    # populated by solve_extended; None for the single-branch solver
    choice_b: DiagonalChoice = None
    lambdas_b: tuple = None
    weight: float = 1.0


def _assemble(rep: GentileRep, a_matrix: np.ndarray, nodes, divided,
              raiser: np.ndarray) -> np.ndarray:
    """J_+ = p(A) raiser with p evaluated by Horner in the Newton basis."""
    dim = rep.dim
    eye = np.eye(dim, dtype=complex)
    poly = divided[-1] * eye
    for k in range(len(divided) - 2, -1, -1):
        poly = poly @ (a_matrix - nodes[k] * eye) + divided[k] * eye
    return poly @ raiser


def solve_representation(n: int, choice: DiagonalChoice) -> Su2Rep:
    """Solve the raising-operator interpolation for one diagonal choice."""
    rep = build_rep(n)
    a_matrix = diagonal_operator(rep, choice)
    nodes = [a_matrix[v, v] for v in range(1, n + 1)]
    _check_nodes(nodes)
    targets = []
    c_plus = ladder_targets(n)
    for v in range(n):
        amp = rep.a_dag[v + 1, v]  # sqrt(<v+1>)
        targets.append(c_plus[v] / amp)
    divided = divided_differences(nodes, targets)
    coeffs = newton_coefficients(nodes, targets)  # these are conj(lambda_l)
    j_plus = _assemble(rep, a_matrix, nodes, divided, rep.a_dag)
    j_z = rep.num - (n / 2.0) * np.eye(n + 1)
    return Su2Rep(n=n, j=n / 2.0, choice=choice,
                  lambdas=tuple(np.conj(coeffs)),
                  j_plus=j_plus, j_minus=j_plus.conj().T, j_z=j_z,
                  nodes=tuple(nodes), divided=tuple(divided))


def solve_extended(n: int, choice_a: DiagonalChoice,
                   choice_b: DiagonalChoice, weight: float) -> Su2Rep:
    """Split the ladder target between an A a_dag and a B b_dag branch."""
    if not 0.0 <= weight <= 1.0:
        raise OutOfRange(f"weight must lie in [0, 1], got {weight}")
    rep = build_rep(n)
    a_matrix = diagonal_operator(rep, choice_a)
    b_matrix = diagonal_operator(rep, choice_b)
    nodes_a = [a_matrix[v, v] for v in range(1, n + 1)]
    nodes_b = [b_matrix[v, v] for v in range(1, n + 1)]
    _check_nodes(nodes_a)
    _check_nodes(nodes_b)
    c_plus = ladder_targets(n)
    targets_a, targets_b = [], []
    for v in range(n):
        targets_a.append(weight * c_plus[v] / rep.a_dag[v + 1, v])
        targets_b.append((1.0 - weight) * c_plus[v] / rep.b_dag[v + 1, v])
    divided_a = divided_differences(nodes_a, targets_a)
    divided_b = divided_differences(nodes_b, targets_b)
    coeffs_a = newton_coefficients(nodes_a, targets_a)
    coeffs_b = newton_coefficients(nodes_b, targets_b)
    j_plus = _assemble(rep, a_matrix, nodes_a, divided_a, rep.a_dag) \
        + _assemble(rep, b_matrix, nodes_b, divided_b, rep.b_dag)
    j_z = rep.num - (n / 2.0) * np.eye(n + 1)
    return Su2Rep(n=n, j=n / 2.0, choice=choice_a,
                  lambdas=tuple(np.conj(coeffs_a)),
                  j_plus=j_plus, j_minus=j_plus.conj().T, j_z=j_z,
                  nodes=tuple(nodes_a), divided=tuple(divided_a),
                  choice_b=choice_b, lambdas_b=tuple(np.conj(coeffs_b)),
                  weight=weight)


def verify_representation(rep: Su2Rep, tol: float = 1e-9):
    """Residuals of the su(2) relations and the Casimir identity."""
    jp, jm, jz = rep.j_plus, rep.j_minus, rep.j_z
    eye = np.eye(jp.shape[0])
    residuals = {
        "comm87": max_abs_diff(jp @ jm - jm @ jp, 2.0 * jz),
        "comm88p": max_abs_diff(jz @ jp - jp @ jz, jp),
        "comm88m": max_abs_diff(jz @ jm - jm @ jz, -jm),
        "casimir": max_abs_diff(
            jz @ jz + (jp @ jm + jm @ jp) / 2.0,
            rep.j * (rep.j + 1.0) * eye),
    }
    return residuals, all(r <= tol for r in residuals.values())


def e010_residual(rep: Su2Rep) -> float:
    """Worst deviation of the printed double-sum equations from 2 nu - n.

    Only printed for the A = a_dag b choice.  The double sum over
    (l, q) factors exactly into |<nu>| |p(<nu>)|^2 - |<nu+1>| |p(<nu+1>)|^2
    with p(z) = sum_l conj(lambda_l) z^l, so it is evaluated through the
    stable Newton form of p rather than raw monomial powers.
    """
    if rep.choice is not DiagonalChoice.ADAG_B:
        raise WrongChoice(
            f"printed equations apply to ADAG_B, not {rep.choice}")
    n = rep.n
    grep = build_rep(n)
    brackets = grep.bracket_numbers
    worst = 0.0
    for v in range(n + 1):
        lo = newton_eval(rep.nodes, rep.divided, brackets[v])
        hi = newton_eval(rep.nodes, rep.divided, brackets[v + 1])
        total = abs(brackets[v]) * abs(lo) ** 2 \
            - abs(brackets[v + 1]) * abs(hi) ** 2
        worst = max(worst, abs(total - (2 * v - n)))
    return worst
