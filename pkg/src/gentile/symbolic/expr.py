"""Operator-expression syntax trees.

Nodes are immutable dataclasses.  Products are binary; long products are
built by left folds.  Permutation/cyclic sum nodes carry a tuple of
operand expressions and denote the sum of products over all (cyclic)
orderings; sums over permuted *arguments of an arbitrary body* are built
with :func:`perm_sum` / :func:`cyc_sum`, which substitute explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from ..laurent import LaurentScalar

DEFAULT_ALPHABET = frozenset(
    {f"u{i}" for i in range(1, 10)} | {"u", "v", "w", "o",
                                       "adag", "a", "b", "bdag", "N"})


@dataclass(frozen=True)
class Expr:
    def __add__(self, other):
        return Add(self, _coerce(other))

    def __sub__(self, other):
        return Sub(self, _coerce(other))

    def __mul__(self, other):
        return Mul(self, _coerce(other))

    def __rmul__(self, other):
        return Mul(_coerce(other), self)

    def __pow__(self, k: int):
        return Pow(self, k)

    def __neg__(self):
        return Sub(Scal(LaurentScalar()), self)


def _coerce(x) -> Expr:
    if isinstance(x, Expr):
        return x
    if isinstance(x, LaurentScalar):
        return Scal(x)
    return Scal(LaurentScalar.from_rational(x))


@dataclass(frozen=True)
class Gen(Expr):
    name: str


@dataclass(frozen=True)
class Scal(Expr):
    value: LaurentScalar


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: int

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError("operator powers must be non-negative")


@dataclass(frozen=True)
class NBracket(Expr):
    """Deformed bracket [x, y]_n = x y - q y x with q formal."""
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Commutator(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class AntiCommutator(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class SumPerm(Expr):
    """Sum of the product of the operands over all orderings."""
    operands: tuple


@dataclass(frozen=True)
class SumCyc(Expr):
    """Sum of the product of the operands over all cyclic rotations."""
    operands: tuple


def product(factors) -> Expr:
    factors = list(factors)
    if not factors:
        return Scal(LaurentScalar.from_rational(1))
    out = factors[0]
    for f in factors[1:]:
        out = Mul(out, f)
    return out


def substitute(e: Expr, mapping: dict) -> Expr:
    """Replace generators by name; values are Expr or generator names."""
    if isinstance(e, Gen):
        repl = mapping.get(e.name)
        if repl is None:
            return e
        return Gen(repl) if isinstance(repl, str) else repl
    if isinstance(e, Scal):
        return e
    if isinstance(e, (Add, Sub, Mul, NBracket, Commutator, AntiCommutator)):
        return type(e)(substitute(e.left, mapping), substitute(e.right, mapping))
    if isinstance(e, Pow):
        return Pow(substitute(e.base, mapping), e.exponent)
    if isinstance(e, (SumPerm, SumCyc)):
        return type(e)(tuple(substitute(x, mapping) for x in e.operands))
    raise TypeError(f"unknown node {type(e).__name__}")


def perm_sum(body: Expr, symbols) -> Expr:
    """Sum of ``body`` over all permutations of the named generators."""
    symbols = list(symbols)
    terms = []
    for perm in permutations(symbols):
        terms.append(substitute(body, dict(zip(symbols, perm))))
    out = terms[0]
    for t in terms[1:]:
        out = Add(out, t)
    return out


def cyc_sum(body: Expr, symbols) -> Expr:
    """Sum of ``body`` over all cyclic rotations of the named generators."""
    symbols = list(symbols)
    k = len(symbols)
    terms = []
    for shift in range(k):
        rotated = symbols[shift:] + symbols[:shift]
        terms.append(substitute(body, dict(zip(symbols, rotated))))
    out = terms[0]
    for t in terms[1:]:
        out = Add(out, t)
    return out


def generators_of(e: Expr) -> set:
    if isinstance(e, Gen):
        return {e.name}
    if isinstance(e, Scal):
        return set()
    if isinstance(e, (Add, Sub, Mul, NBracket, Commutator, AntiCommutator)):
        return generators_of(e.left) | generators_of(e.right)
    if isinstance(e, Pow):
        return generators_of(e.base)
    if isinstance(e, (SumPerm, SumCyc)):
        out = set()
        for x in e.operands:
            out |= generators_of(x)
        return out
    raise TypeError(f"unknown node {type(e).__name__}")
