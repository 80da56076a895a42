"""Normal ordering in the quotient algebra of adag, b, N.

Rewrite rules (q formal):

    b * adag  ->  q * adag * b + 1
    N * adag  ->  adag * (N + 1)
    N * b     ->  b * (N - 1)

Every word reduces to the canonical form adag^j b^k N^m; a
:class:`QuotientPoly` maps (j, k, m) triples to Laurent-scalar
coefficients.  Each application of the first rule strictly reduces the
number of (b, adag) inversions, so rewriting terminates.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

import numpy as np

from ..errors import OutOfRange
from ..laurent import ONE, Q, LaurentScalar, q_integer
from .expr import (Add, AntiCommutator, Commutator, Expr, Gen, Mul, NBracket,
                   Pow, Scal, Sub, SumCyc, SumPerm, generators_of, product)

QUOTIENT_ALPHABET = frozenset({"adag", "b", "N"})


class QuotientPoly:
    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    clean[tuple(key)] = coeff
        self._terms = clean

    @property
    def terms(self):
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if not isinstance(other, QuotientPoly):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other):
        out = dict(self._terms)
        for k, c in other._terms.items():
            prev = out.get(k)
            out[k] = c if prev is None else prev + c
        return QuotientPoly(out)

    def __sub__(self, other):
        out = dict(self._terms)
        for k, c in other._terms.items():
            prev = out.get(k)
            out[k] = -c if prev is None else prev - c
        return QuotientPoly(out)

    def __neg__(self):
        return QuotientPoly({k: -c for k, c in self._terms.items()})

    def scale(self, s: LaurentScalar) -> "QuotientPoly":
        return QuotientPoly({k: s * c for k, c in self._terms.items()})

    def _mul_adag(self) -> "QuotientPoly":
        out: dict = {}
        for (j, k, m), c in self._terms.items():
            # N^m adag = adag (N+1)^m ; b^k adag = q^k adag b^k + <k> b^(k-1)
            for i in range(m + 1):
                binom = LaurentScalar.from_rational(comb(m, i))
                lead = (Q ** k) * c * binom
                _acc(out, (j + 1, k, i), lead)
                if k >= 1:
                    tail = q_integer(k) * c * binom
                    _acc(out, (j, k - 1, i), tail)
        return QuotientPoly(out)

    def _mul_b(self) -> "QuotientPoly":
        out: dict = {}
        for (j, k, m), c in self._terms.items():
            # N^m b = b (N-1)^m
            for i in range(m + 1):
                sign = 1 if (m - i) % 2 == 0 else -1
                binom = LaurentScalar.from_rational(sign * comb(m, i))
                _acc(out, (j, k + 1, i), c * binom)
        return QuotientPoly(out)

    def _mul_num(self) -> "QuotientPoly":
        return QuotientPoly({(j, k, m + 1): c
                             for (j, k, m), c in self._terms.items()})

    def __mul__(self, other):
        total = QuotientPoly()
        for (j, k, m), c in other._terms.items():
            part = self.scale(c)
            for _ in range(j):
                part = part._mul_adag()
            for _ in range(k):
                part = part._mul_b()
            for _ in range(m):
                part = part._mul_num()
            total = total + part
        return total

    def sorted_keys(self):
        return sorted(self._terms, key=lambda t: (sum(t), t))

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for j, k, m in self.sorted_keys():
            c = self._terms[(j, k, m)]
            word = "*".join(["adag"] * j + ["b"] * k + ["N"] * m) or "1"
            parts.append(f"({c!r})*{word}")
        return " + ".join(parts)

    def eval_rep(self, rep) -> np.ndarray:
        """Numeric value in the matrix representation of one Gentile mode."""
        dim = rep.dim
        total = np.zeros((dim, dim), dtype=complex)
        for (j, k, m), c in self._terms.items():
            mat = np.linalg.matrix_power(rep.a_dag, j)
            mat = mat @ np.linalg.matrix_power(rep.b, k)
            mat = mat @ np.linalg.matrix_power(rep.num, m)
            total += c.eval_at(rep.q) * mat
        return total


def _acc(store: dict, key, value: LaurentScalar):
    prev = store.get(key)
    store[key] = value if prev is None else prev + value


ZERO_Q = QuotientPoly()
ONE_Q = QuotientPoly({(0, 0, 0): ONE})
_GEN_Q = {
    "adag": QuotientPoly({(1, 0, 0): ONE}),
    "b": QuotientPoly({(0, 1, 0): ONE}),
    "N": QuotientPoly({(0, 0, 1): ONE}),
}


def normal_order(e: Expr) -> QuotientPoly:
    """Canonical normal-ordered form of an adag/b/N expression."""
    bad = generators_of(e) - QUOTIENT_ALPHABET
    if bad:
        raise OutOfRange(
            f"generators {sorted(bad)} not in the quotient alphabet "
            f"{sorted(QUOTIENT_ALPHABET)}")
    return _normal_order(e)


def _normal_order(e: Expr) -> QuotientPoly:
    if isinstance(e, Gen):
        return _GEN_Q[e.name]
    if isinstance(e, Scal):
        return QuotientPoly({(0, 0, 0): e.value})
    if isinstance(e, Add):
        return _normal_order(e.left) + _normal_order(e.right)
    if isinstance(e, Sub):
        return _normal_order(e.left) - _normal_order(e.right)
    if isinstance(e, Mul):
        return _normal_order(e.left) * _normal_order(e.right)
    if isinstance(e, Pow):
        out = ONE_Q
        base = _normal_order(e.base)
        for _ in range(e.exponent):
            out = out * base
        return out
    if isinstance(e, NBracket):
        x = _normal_order(e.left)
        y = _normal_order(e.right)
        return x * y - (y * x).scale(Q)
    if isinstance(e, Commutator):
        x = _normal_order(e.left)
        y = _normal_order(e.right)
        return x * y - y * x
    if isinstance(e, AntiCommutator):
        x = _normal_order(e.left)
        y = _normal_order(e.right)
        return x * y + y * x
    if isinstance(e, (SumPerm, SumCyc)):
        from itertools import permutations
        factors = list(e.operands)
        total = ZERO_Q
        if isinstance(e, SumPerm):
            orders = permutations(range(len(factors)))
            for order in orders:
                total = total + _normal_order(
                    product(factors[i] for i in order))
        else:
            for shift in range(len(factors)):
                rotated = factors[shift:] + factors[:shift]
                total = total + _normal_order(product(rotated))
        return total
    raise TypeError(f"unknown node {type(e).__name__}")


def quotient_check(lhs: Expr, rhs: Expr):
    """True plus zero residual iff lhs == rhs in the quotient algebra."""
    residual = normal_order(lhs) - normal_order(rhs)
    return residual.is_zero, residual
