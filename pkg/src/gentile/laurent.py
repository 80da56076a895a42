"""Exact Laurent-polynomial arithmetic in the formal deformation phase q.

A :class:`LaurentScalar` is a finite sum ``sum_k c_k q^k`` with exact
rational coefficients and integer (possibly negative) exponents.  The
symbol q stands for the phase ``exp(i*2*pi/(n+1))``; it is kept formal so
that identity checks are exact zero tests, and is specialized to a root of
unity only at evaluation time.
"""

from __future__ import annotations

import cmath
from fractions import Fraction

from .errors import OutOfRange


class LaurentScalar:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        clean: dict[int, Fraction] = {}
        if coeffs:
            for k, v in coeffs.items():
                f = v if isinstance(v, Fraction) else Fraction(v)
                if f:
                    clean[int(k)] = f
        self._coeffs = clean

    @property
    def coeffs(self):
        return dict(self._coeffs)

    @classmethod
    def from_rational(cls, value) -> "LaurentScalar":
        return cls({0: Fraction(value)})

    @classmethod
    def q_power(cls, k: int) -> "LaurentScalar":
        return cls({k: Fraction(1)})

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other):
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return LaurentScalar(out)

    def __sub__(self, other):
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out.get(k, Fraction(0)) - v
        return LaurentScalar(out)

    def __neg__(self):
        return LaurentScalar({k: -v for k, v in self._coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, LaurentScalar):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for k1, v1 in self._coeffs.items():
            for k2, v2 in other._coeffs.items():
                k = k1 + k2
                out[k] = out.get(k, Fraction(0)) + v1 * v2
        return LaurentScalar(out)

    def __pow__(self, exponent: int):
        if exponent < 0:
            if len(self._coeffs) == 1:
                ((k, v),) = self._coeffs.items()
                return LaurentScalar({k * exponent: v ** exponent})
            raise OutOfRange("negative powers only defined for monomials")
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def eval_at(self, q: complex) -> complex:
        """Numeric value with q set to an arbitrary complex number."""
        if not self._coeffs:
            return 0j
        return sum(complex(v) * q ** k for k, v in self._coeffs.items())

    def subs_unit(self, sign: int) -> Fraction:
        """Exact value at q = +1 or q = -1."""
        if sign not in (1, -1):
            raise OutOfRange("sign must be +1 or -1")
        total = Fraction(0)
        for k, v in self._coeffs.items():
            total += v if (sign == 1 or k % 2 == 0) else -v
        return total

    def __repr__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for k in sorted(self._coeffs):
            v = self._coeffs[k]
            if k == 0:
                parts.append(str(v))
            elif k == 1:
                parts.append(f"{v}*q" if v != 1 else "q")
            else:
                parts.append(f"{v}*q^{k}" if v != 1 else f"q^{k}")
        return " + ".join(parts)


ZERO = LaurentScalar()
ONE = LaurentScalar({0: Fraction(1)})
Q = LaurentScalar({1: Fraction(1)})
QINV = LaurentScalar({-1: Fraction(1)})


def q_integer(k: int) -> LaurentScalar:
    """The q-integer 1 + q + ... + q^(k-1)."""
    return LaurentScalar({j: Fraction(1) for j in range(k)})


def laurent_eval(s: LaurentScalar, n: int) -> complex:
    """Specialize q to exp(i*2*pi/(n+1)) and evaluate.

    The zero polynomial evaluates to exactly 0; cancellation happens in
    exact arithmetic before any floating point enters.
    """
    if n < 1:
        raise OutOfRange(f"n must be >= 1, got {n}")
    if s.is_zero:
        return 0j
    theta = 2.0 * cmath.pi / (n + 1)
    return sum(complex(v) * cmath.exp(1j * theta * k)
               for k, v in s.coeffs.items())
