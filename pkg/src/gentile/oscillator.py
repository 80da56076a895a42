"""The intermediate-statistics oscillator: Hamiltonian, spectrum, limits.

The default quadratic form (alpha = 1, beta = conj(q)) is diagonal in the
Fock basis, so three independent routes to the spectrum are available:
the per-state closed form, the residue-case level formulas, and the
Jacobi eigensolver.  Degeneracies are always computed by clustering the
per-state energies, never taken from level-counting claims.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import OutOfRange, PreconditionViolation
from .linalg import hermitian_eigen, max_abs_diff
from .rep import GentileRep, build_rep, diag_of_num

CLUSTER_TOL = 1e-9


@dataclass(frozen=True)
class OscillatorSpec:
    """Coefficients of the quadratic Hamiltonian (1/4)[alpha a^dag b
    + beta b a^dag + h.c.]."""

    n: int
    alpha: complex = None
    beta: complex = None

    def __post_init__(self):
        if self.n < 1:
            raise OutOfRange(f"n must be >= 1, got {self.n}")
        if self.alpha is None:
            object.__setattr__(self, "alpha", 1 + 0j)
        if self.beta is None:
            object.__setattr__(
                self, "beta", cmath.exp(-2j * math.pi / (self.n + 1)))


def build_hamiltonian(spec: OscillatorSpec, rep: GentileRep = None) -> np.ndarray:
    if rep is None:
        rep = build_rep(spec.n)
    alpha, beta = complex(spec.alpha), complex(spec.beta)
    h = (alpha * (rep.a_dag @ rep.b) + beta * (rep.b @ rep.a_dag)
         + np.conj(alpha) * (rep.b_dag @ rep.a)
         + np.conj(beta) * (rep.a @ rep.b_dag)) / 4.0
    return h


def per_state_energy(n: int, v: int) -> float:
    """Closed-form diagonal energy E(nu) of the default Hamiltonian."""
    if n < 1:
        raise OutOfRange(f"n must be >= 1, got {n}")
    if not 0 <= v <= n:
        raise OutOfRange(f"v must lie in [0, {n}], got {v}")
    t = math.pi / (n + 1)
    return 0.5 / math.sin(t) * (math.sin((2 * v - 1) * t)
                                + math.sin(2 * t) * math.cos(t))


def case_class(n: int) -> str:
    residue = n % 4
    return {1: "4t+1", 2: "4t+2", 3: "4t+3", 0: "4t+4"}[residue]


def _case_levels(n: int):
    """Raw level list from the residue-case formula, plus the prose count."""
    t = math.pi / (n + 1)
    base = math.cos(t) ** 2
    amp = 0.5 / math.sin(t)
    cls = case_class(n)
    if cls == "4t+1":
        ks = range((n + 1) // 2 + 1)
        levels = [base + amp * math.sin((4 * k - n - 1) * t / 2) for k in ks]
        prose_count = (n + 3) // 2
    elif cls in ("4t+2", "4t+4"):
        ks = range(n + 1)
        levels = [base + amp * math.sin((2 * k - n) * t / 2) for k in ks]
        prose_count = n + 1
    else:  # 4t+3
        ks = range((n - 1) // 2 + 1)
        levels = [base + amp * math.sin((4 * k - n + 1) * t / 2) for k in ks]
        prose_count = (n + 1) // 2
    return levels, prose_count


def _prose_multiplicity(cls: str, index: int, level_count: int) -> int:
    if cls == "4t+1":
        # prose: all levels two-fold except the non-degenerate highest
        return 1 if index == level_count - 1 else 2
    if cls in ("4t+2", "4t+4"):
        return 1
    return 2  # 4t+3: all two-fold


@dataclass(frozen=True)
class SpectrumReport:
    n: int
    case_class: str
    levels: tuple            # (energy, multiplicity), ascending
    ground: float
    highest: float
    per_state_energies: tuple
    prose_level_count: int
    # (level index, computed multiplicity, prose multiplicity) wherever
    # the computed value contradicts the prose claim
    degeneracy_discrepancies: tuple

    def to_dict(self):
        return {
            "n": self.n,
            "case_class": self.case_class,
            "levels": [{"energy": e, "multiplicity": m}
                       for e, m in self.levels],
            "ground": self.ground,
            "highest": self.highest,
            "per_state_energies": list(self.per_state_energies),
            "prose_level_count": self.prose_level_count,
            "degeneracy_discrepancies": [
                list(row) for row in self.degeneracy_discrepancies],
        }


def closed_form_spectrum(n: int) -> SpectrumReport:
    """Levels from the residue-case formula, multiplicities by clustering."""
    raw_levels, prose_count = _case_levels(n)
    per_state = [per_state_energy(n, v) for v in range(n + 1)]
    # dedupe case-formula values (the formulas can repeat a level exactly)
    unique = []
    for e in sorted(raw_levels):
        if not unique or abs(e - unique[-1]) > CLUSTER_TOL:
            unique.append(e)
    levels = []
    for e in unique:
        mult = sum(1 for x in per_state if abs(x - e) <= CLUSTER_TOL)
        levels.append((e, mult))
    cls = case_class(n)
    discrepancies = []
    for idx, (_, mult) in enumerate(levels):
        claimed = _prose_multiplicity(cls, idx, len(levels))
        if mult != claimed:
            discrepancies.append((idx, mult, claimed))
    return SpectrumReport(
        n=n, case_class=cls, levels=tuple(levels),
        ground=levels[0][0], highest=levels[-1][0],
        per_state_energies=tuple(per_state),
        prose_level_count=prose_count,
        degeneracy_discrepancies=tuple(discrepancies))


def spectrum_crosscheck(n: int, tol: float = 1e-10):
    """Compare case-formula levels against Jacobi eigenvalues of H.

    Returns (passed, max deviation, report).
    """
    report = closed_form_spectrum(n)
    h = build_hamiltonian(OscillatorSpec(n))
    eigvals, _ = hermitian_eigen(h, tol=tol)
    expanded = []
    for e, m in report.levels:
        expanded.extend([e] * m)
    if len(expanded) != n + 1:
        return False, math.inf, report
    deviation = max(abs(a - b) for a, b in zip(sorted(expanded), eigvals))
    return deviation <= tol, deviation, report


def ladder_commutation_check(n: int, tol: float = 1e-12):
    """Residuals of [H, x] = f(N-1) x = x f(N) for x in {adag, a, bdag, b}.

    f is +/- cos(2 pi . /(n+1)) with the sign of the relation.  Returns a
    dict relation -> (left-ordered residual, right-ordered residual) plus
    the overall pass flag.
    """
    rep = build_rep(n)
    h = build_hamiltonian(OscillatorSpec(n), rep)
    cos_n = diag_of_num(rep, lambda v: math.cos(2 * math.pi * v / (n + 1)))
    cos_nm1 = diag_of_num(rep,
                          lambda v: math.cos(2 * math.pi * (v - 1) / (n + 1)))
    cases = {
        "adag": (rep.a_dag, +1),
        "a": (rep.a, -1),
        "bdag": (rep.b_dag, +1),
        "b": (rep.b, -1),
    }
    residuals = {}
    for name, (x, sign) in cases.items():
        comm = h @ x - x @ h
        if sign > 0:
            left = max_abs_diff(comm, cos_nm1 @ x)
            right = max_abs_diff(comm, x @ cos_n)
        else:
            left = max_abs_diff(comm, -(cos_n @ x))
            right = max_abs_diff(comm, -(x @ cos_nm1))
        residuals[name] = (left, right)
    passed = all(max(pair) <= tol for pair in residuals.values())
    return residuals, passed


def bose_limit_check(n: int, v_max: int):
    """Worst deviation of E(nu) from nu + 1/2 for nu <= v_max << n.

    Also reports the deviation from the printed intermediate
    approximation pi*nu/(n+1) * cot(pi/(n+1)) + cos(2 pi/(n+1))/2.
    """
    if v_max > n / 100:
        raise PreconditionViolation(
            f"v_max = {v_max} too large for n = {n} (need v_max <= n/100)")
    t = math.pi / (n + 1)
    worst_bose = 0.0
    worst_approx = 0.0
    for v in range(v_max + 1):
        e = per_state_energy(n, v)
        worst_bose = max(worst_bose, abs(e - (v + 0.5)))
        approx = math.pi * v / (n + 1) / math.tan(t) + 0.5 * math.cos(2 * t)
        worst_approx = max(worst_approx, abs(e - approx))
    return worst_bose, worst_approx
