"""Finite-dimensional matrix realization of Gentile statistics.

For maximum occupation number n the single-mode state space is spanned by
|0>, ..., |n>.  The creation operator raises with amplitude
sqrt(<nu+1>), the annihilation operator b lowers with sqrt(<nu>), where
<nu> is the q-integer bracket number at q = exp(i*2*pi/(n+1)).  The
deformed exchange rule  b a^dag - q a^dag b = 1  then holds exactly,
including the wraparound on the top state where -q<n> = 1.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, OutOfRange
from .linalg import matrix_function


def bracket_number(n: int, v: int) -> complex:
    """The bracket number <v>_n = sum_{j=0}^{v-1} exp(i*2*pi*j/(n+1)).

    Computed as the finite geometric sum rather than the ratio form, so
    v = 0 is exactly 0 and there is no 0/0 anywhere.
    """
    if n < 1:
        raise OutOfRange(f"n must be >= 1, got {n}")
    if not 0 <= v <= n + 1:
        raise OutOfRange(f"v must lie in [0, {n + 1}], got {v}")
    theta = 2.0 * math.pi / (n + 1)
    return sum(cmath.exp(1j * theta * j) for j in range(v))


@dataclass(frozen=True)
class GentileRep:
    """Matrices of one Gentile mode on the (n+1)-dimensional Fock space."""

    n: int
    theta: float
    q: complex
    bracket_numbers: tuple  # <0>_n ... <n+1>_n
    a_dag: np.ndarray
    b: np.ndarray
    a: np.ndarray = field(repr=False, default=None)
    b_dag: np.ndarray = field(repr=False, default=None)
    num: np.ndarray = field(repr=False, default=None)

    @property
    def dim(self) -> int:
        return self.n + 1


def build_rep(n: int) -> GentileRep:
    """Construct the ladder, adjoint, and number matrices for one mode.

    a_dag and b carry the principal square roots of the bracket numbers;
    a and b_dag are defined as their conjugate transposes (the four are
    distinct matrices except in the Fermi and Bose limits).
    """
    if n < 1:
        raise OutOfRange(f"n must be >= 1, got {n}")
    theta = 2.0 * math.pi / (n + 1)
    q = cmath.exp(1j * theta)
    brackets = tuple(bracket_number(n, v) for v in range(n + 2))
    dim = n + 1
    a_dag = np.zeros((dim, dim), dtype=complex)
    b = np.zeros((dim, dim), dtype=complex)
    for v in range(n):
        amp = cmath.sqrt(brackets[v + 1])
        a_dag[v + 1, v] = amp
        b[v, v + 1] = amp
    num = np.diag(np.arange(dim, dtype=float)).astype(complex)
    for m in (a_dag, b, num):
        m.flags.writeable = False
    a = a_dag.conj().T
    b_dag = b.conj().T
    a.flags.writeable = False
    b_dag.flags.writeable = False
    return GentileRep(n=n, theta=theta, q=q, bracket_numbers=brackets,
                      a_dag=a_dag, b=b, a=a, b_dag=b_dag, num=num)


def gentile_bracket(u: np.ndarray, v: np.ndarray, n: int) -> np.ndarray:
    """The deformed bracket u v - exp(i*2*pi/(n+1)) v u."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if u.shape != v.shape:
        raise DimensionMismatch(f"shape {u.shape} vs {v.shape}")
    if n < 1:
        raise OutOfRange(f"n must be >= 1, got {n}")
    q = cmath.exp(2j * math.pi / (n + 1))
    return u @ v - q * (v @ u)


def diag_of_num(rep: GentileRep, f) -> np.ndarray:
    """Diagonal matrix with entries f(nu), nu = 0..n."""
    return np.diag([complex(f(v)) for v in range(rep.dim)])


@dataclass(frozen=True)
class ArcsinAudit:
    """Outcome of the arcsin-based number-operator reconstruction."""

    reconstructed: np.ndarray
    # rows (nu, reconstructed value, agrees with nu)
    table: tuple
    # (nu, nu') pairs of distinct occupation numbers sharing an eigenvalue
    # of the sine matrix; any such pair makes reconstruction impossible
    # for every arcsin branch
    collisions: tuple

    @property
    def collision_flag(self) -> bool:
        return bool(self.collisions)


def number_from_arcsin(rep: GentileRep, tol: float = 1e-12) -> ArcsinAudit:
    """Reconstruct the number operator from the sine combination.

    Builds M = (i/2)(a^dag b - b^dag a + a b^dag - b a^dag), whose
    eigenvalue on |nu> is sin(2*pi*nu/(n+1)), applies the principal-branch
    arcsin spectrally, and scales by (n+1)/(2*pi).  The per-state table
    records where the reconstruction agrees with nu; collisions between
    distinct nu values are flagged.
    """
    m = 0.5j * (rep.a_dag @ rep.b - rep.b_dag @ rep.a
                + rep.a @ rep.b_dag - rep.b @ rep.a_dag)
    herm_dev = float(np.max(np.abs(m - m.conj().T)))
    if herm_dev > tol:
        raise DimensionMismatch(
            f"sine combination not Hermitian: deviation {herm_dev:.3e}")
    scale = (rep.n + 1) / (2.0 * math.pi)
    rec = scale * matrix_function(m, math.asin, tol=tol, domain=(-1.0, 1.0))

    # M is diagonal in the Fock basis, so per-state values sit on the diagonal
    diag_m = np.real(np.diag(m))
    table = []
    for v in range(rep.dim):
        value = float(np.real(rec[v, v]))
        table.append((v, value, abs(value - v) <= 1e-9))
    collisions = []
    for v in range(rep.dim):
        for w in range(v + 1, rep.dim):
            if abs(diag_m[v] - diag_m[w]) <= 1e-9:
                collisions.append((v, w))
    return ArcsinAudit(reconstructed=rec, table=tuple(table),
                       collisions=tuple(collisions))
