"""Audit runner: verify every cataloged identity symbolically and numerically.

Symbolic verdicts come from exact expansion (free polynomial or quotient
normal form); numeric spot-checks evaluate the same expressions with
random complex matrices or in the Gentile matrix representation.  A FAIL
verdict on a printed relation is a first-class outcome; only disagreement
between the two pipelines is an error.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from itertools import permutations

import numpy as np

from .catalog import (FORMAL_Q, FREE, MATRIX, Q_AT_N, Q_EQ_1, Q_EQ_MINUS_1,
                      QUOTIENT, IdentityEntry, build_catalog)
from .errors import InconsistentVerdict
from .linalg import max_abs_diff
from .rep import build_rep
from .symbolic import (Add, AntiCommutator, Commutator, Expr, Gen, Mul,
                       NBracket, Pow, Scal, Sub, SumCyc, SumPerm,
                       expand_free, generators_of, normal_order, product)

DEFAULT_N_VALUES = tuple(range(1, 9))
DEFAULT_TRIALS = 3
DEFAULT_TOL = 1e-9
RANDOM_DIM = 5


def eval_expr(e: Expr, assignment: dict, qval: complex, dim: int) -> np.ndarray:
    """Numeric matrix value of an expression tree."""
    if isinstance(e, Gen):
        return assignment[e.name]
    if isinstance(e, Scal):
        return e.value.eval_at(qval) * np.eye(dim, dtype=complex)
    if isinstance(e, Add):
        return eval_expr(e.left, assignment, qval, dim) \
            + eval_expr(e.right, assignment, qval, dim)
    if isinstance(e, Sub):
        return eval_expr(e.left, assignment, qval, dim) \
            - eval_expr(e.right, assignment, qval, dim)
    if isinstance(e, Mul):
        return eval_expr(e.left, assignment, qval, dim) \
            @ eval_expr(e.right, assignment, qval, dim)
    if isinstance(e, Pow):
        return np.linalg.matrix_power(
            eval_expr(e.base, assignment, qval, dim), e.exponent)
    if isinstance(e, NBracket):
        x = eval_expr(e.left, assignment, qval, dim)
        y = eval_expr(e.right, assignment, qval, dim)
        return x @ y - qval * (y @ x)
    if isinstance(e, Commutator):
        x = eval_expr(e.left, assignment, qval, dim)
        y = eval_expr(e.right, assignment, qval, dim)
        return x @ y - y @ x
    if isinstance(e, AntiCommutator):
        x = eval_expr(e.left, assignment, qval, dim)
        y = eval_expr(e.right, assignment, qval, dim)
        return x @ y + y @ x
    if isinstance(e, SumPerm):
        total = np.zeros((dim, dim), dtype=complex)
        for order in permutations(e.operands):
            total += eval_expr(product(order), assignment, qval, dim)
        return total
    if isinstance(e, SumCyc):
        ops = list(e.operands)
        total = np.zeros((dim, dim), dtype=complex)
        for shift in range(len(ops)):
            rotated = ops[shift:] + ops[:shift]
            total += eval_expr(product(rotated), assignment, qval, dim)
        return total
    raise TypeError(f"unknown node {type(e).__name__}")


@dataclass
class IdentityResult:
    identity_id: str
    strategy: str
    specialization: str
    symbolic_verdict: str | None  # PASS / FAIL / None (matrix-only)
    residual_digest: str
    numeric_residual: float | None
    n_tested: tuple
    verdict: str
    wall_time: float = 0.0
    degenerate_specializations: tuple = ()

    def to_record(self, seed: int) -> dict:
        return {
            "identity_id": self.identity_id,
            "strategy": self.strategy,
            "specialization": self.specialization,
            "verdict": self.verdict,
            "residual": (self.residual_digest if self.numeric_residual is None
                         else format(self.numeric_residual, ".17g")),
            "n_tested": list(self.n_tested),
            "seed": seed,
        }


@dataclass
class AuditReport:
    results: list
    seed: int
    tol: float

    def __post_init__(self):
        ids = [r.identity_id for r in self.results]
        assert len(ids) == len(set(ids)), "duplicate result ids"

    def by_id(self, identity_id: str) -> IdentityResult:
        for r in self.results:
            if r.identity_id == identity_id:
                return r
        raise KeyError(identity_id)

    @property
    def failing_ids(self):
        return [r.identity_id for r in self.results if r.verdict == "FAIL"]

    def to_json(self) -> str:
        return json.dumps([r.to_record(self.seed) for r in self.results],
                          indent=2)

    def table(self) -> str:
        lines = [f"{'identity':36} {'strategy':9} {'spec':12} "
                 f"{'verdict':7} {'time/s':>8}  residual"]
        for r in self.results:
            resid = (r.residual_digest if r.numeric_residual is None
                     else f"{r.numeric_residual:.3e}")
            lines.append(f"{r.identity_id:36} {r.strategy:9} "
                         f"{r.specialization:12} {r.verdict:7} "
                         f"{r.wall_time:8.4f}  {resid}")
        return "\n".join(lines)


def _digest(poly, limit: int = 120) -> str:
    text = repr(poly)
    return text if len(text) <= limit else text[:limit] + "..."


def _free_symbolic(entry: IdentityEntry):
    residual = expand_free(entry.lhs) - expand_free(entry.rhs)
    if entry.specialization in (Q_EQ_1, Q_EQ_MINUS_1):
        sign = 1 if entry.specialization == Q_EQ_1 else -1
        remaining = residual.specialize_unit(sign)
        passed = not remaining
        digest = "0" if passed else _digest(remaining)
    else:
        passed = residual.is_zero
        digest = "0" if passed else _digest(residual)
    return passed, digest


def run_free_suite(entries=None) -> AuditReport:
    """Expand every formal-q FREE identity to a canonical polynomial."""
    entries = [e for e in (entries or build_catalog())
               if e.strategy == FREE and e.specialization == FORMAL_Q]
    results = []
    for entry in entries:
        start = time.perf_counter()
        passed, digest = _free_symbolic(entry)
        results.append(IdentityResult(
            identity_id=entry.id, strategy=entry.strategy,
            specialization=entry.specialization,
            symbolic_verdict="PASS" if passed else "FAIL",
            residual_digest=digest, numeric_residual=None, n_tested=(),
            verdict="PASS" if passed else "FAIL",
            wall_time=time.perf_counter() - start))
    return AuditReport(results=results, seed=0, tol=0.0)


def run_limit_suite(entries=None) -> AuditReport:
    """Check q = 1 (commutator) and q = -1 (anticommutator) limit forms."""
    entries = [e for e in (entries or build_catalog())
               if e.strategy == FREE
               and e.specialization in (Q_EQ_1, Q_EQ_MINUS_1)]
    results = []
    for entry in entries:
        start = time.perf_counter()
        passed, digest = _free_symbolic(entry)
        results.append(IdentityResult(
            identity_id=entry.id, strategy=entry.strategy,
            specialization=entry.specialization,
            symbolic_verdict="PASS" if passed else "FAIL",
            residual_digest=digest, numeric_residual=None, n_tested=(),
            verdict="PASS" if passed else "FAIL",
            wall_time=time.perf_counter() - start))
    return AuditReport(results=results, seed=0, tol=0.0)


def _random_assignment(names, rng, dim):
    out = {}
    for name in sorted(names):
        # independent entries uniform on the complex unit disk
        r = np.sqrt(rng.uniform(0.0, 1.0, (dim, dim)))
        phi = rng.uniform(0.0, 2.0 * np.pi, (dim, dim))
        out[name] = r * np.exp(1j * phi)
    return out


def run_matrix_suite(n_values=DEFAULT_N_VALUES, trials=DEFAULT_TRIALS,
                     tol=DEFAULT_TOL, seed=0, entries=None) -> AuditReport:
    """Numeric evaluation of the catalog in matrix form.

    QUOTIENT and MATRIX entries are evaluated in the Gentile representation
    at every n; FREE formal-q entries are spot-checked with random complex
    matrices.  Degenerate specializations of cleared-denominator entries
    (the cleared prefactor vanishing at some n) are recorded.
    """
    catalog = entries or build_catalog()
    rng = np.random.default_rng(seed)
    reps = {n: build_rep(n) for n in n_values}
    results = []
    for entry in catalog:
        start = time.perf_counter()
        worst = 0.0
        symbolic = None
        digest = "0"
        degenerate = []
        if entry.strategy == FREE:
            if entry.specialization != FORMAL_Q:
                continue  # limit forms have no finite-n specialization
            residual_poly = expand_free(entry.lhs) - expand_free(entry.rhs)
            symbolic = "PASS" if residual_poly.is_zero else "FAIL"
            if symbolic == "FAIL":
                digest = _digest(residual_poly)
            names = generators_of(entry.lhs) | generators_of(entry.rhs)
            for n in n_values:
                qval = np.exp(2j * np.pi / (n + 1))
                if entry.denominator_cleared and n == 1:
                    degenerate.append(n)
                for _ in range(trials):
                    assign = _random_assignment(names, rng, RANDOM_DIM)
                    lhs = eval_expr(entry.lhs, assign, qval, RANDOM_DIM)
                    rhs = eval_expr(entry.rhs, assign, qval, RANDOM_DIM)
                    worst = max(worst, max_abs_diff(lhs, rhs))
        elif entry.strategy == QUOTIENT:
            residual_poly = normal_order(entry.lhs) - normal_order(entry.rhs)
            symbolic = "PASS" if residual_poly.is_zero else "FAIL"
            if symbolic == "FAIL":
                digest = _digest(residual_poly)
            for n in n_values:
                rep = reps[n]
                assign = {"adag": rep.a_dag, "b": rep.b, "N": rep.num}
                lhs = eval_expr(entry.lhs, assign, rep.q, rep.dim)
                rhs = eval_expr(entry.rhs, assign, rep.q, rep.dim)
                worst = max(worst, max_abs_diff(lhs, rhs))
        elif entry.strategy == MATRIX:
            for n in n_values:
                rep = reps[n]
                worst = max(worst, max_abs_diff(entry.lhs_builder(rep),
                                                entry.rhs_builder(rep)))
        else:
            raise ValueError(f"unknown strategy {entry.strategy!r}")
        numeric_verdict = "PASS" if worst <= tol else "FAIL"
        verdict = symbolic if symbolic is not None else numeric_verdict
        results.append(IdentityResult(
            identity_id=entry.id, strategy=entry.strategy,
            specialization=entry.specialization, symbolic_verdict=symbolic,
            residual_digest=digest, numeric_residual=worst,
            n_tested=tuple(n_values), verdict=verdict,
            wall_time=time.perf_counter() - start,
            degenerate_specializations=tuple(degenerate)))
    return AuditReport(results=results, seed=seed, tol=tol)


def audit_crosscheck(matrix_report: AuditReport) -> bool:
    """True iff symbolic verdicts agree with all numeric spot-checks.

    PASS requires every residual <= tol; FAIL requires some residual
    > 10*tol.  Vacuously true for an empty report.
    """
    tol = matrix_report.tol
    for r in matrix_report.results:
        if r.symbolic_verdict is None or r.numeric_residual is None:
            continue
        if r.symbolic_verdict == "PASS" and r.numeric_residual > tol:
            raise InconsistentVerdict(
                r.identity_id,
                f"symbolic PASS but numeric residual {r.numeric_residual:.3e}")
        if r.symbolic_verdict == "FAIL" and r.n_tested \
                and r.numeric_residual <= 10.0 * tol:
            raise InconsistentVerdict(
                r.identity_id,
                f"symbolic FAIL but numeric residual {r.numeric_residual:.3e}")
    return True


def run_full_audit(n_values=DEFAULT_N_VALUES, trials=DEFAULT_TRIALS,
                   tol=DEFAULT_TOL, seed=0, extra_entries=None):
    """Run every suite; returns (free, limit, matrix) reports."""
    catalog = build_catalog()
    if extra_entries:
        catalog = catalog + list(extra_entries)
    free = run_free_suite(catalog)
    limit = run_limit_suite(catalog)
    matrix = run_matrix_suite(n_values=n_values, trials=trials, tol=tol,
                              seed=seed, entries=catalog)
    return free, limit, matrix
