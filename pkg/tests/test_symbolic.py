"""Parser, free expansion, and quotient-algebra normal ordering."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentile.audit import eval_expr
from gentile.errors import OutOfRange, ParseError
from gentile.laurent import ONE, Q, LaurentScalar, q_integer
from gentile.linalg import max_abs_diff
from gentile.rep import build_rep
from gentile.symbolic import (Commutator, Gen, NBracket, QuotientPoly,
                              expand_free, normal_order, parse, perm_sum,
                              product, quotient_check)

# -- parser -------------------------------------------------------------------


def test_parse_defining_relation():
    e = parse("[b,adag]_n")
    assert isinstance(e, NBracket)


def test_parse_commutator_vs_bracket():
    assert isinstance(parse("[u,v]"), Commutator)
    assert isinstance(parse("[u,v]_n"), NBracket)


def test_parse_scalars():
    # q powers and rationals are Laurent scalars, not generators
    e = parse("q^-2 u + 1/3 v")
    poly = expand_free(e)
    terms = poly.terms
    assert terms[("u",)] == LaurentScalar.q_power(-2)
    assert terms[("v",)] == LaurentScalar.from_rational("1/3")


def test_parse_power_and_juxtaposition():
    lhs = expand_free(parse("adag^3 b"))
    rhs = expand_free(product([Gen("adag")] * 3 + [Gen("b")]))
    assert (lhs - rhs).is_zero


def test_parse_unknown_identifier():
    with pytest.raises(ParseError) as exc_info:
        parse("[b, xyz]_n")
    assert exc_info.value.offset > 0


def test_parse_error_carries_expected_set():
    with pytest.raises(ParseError) as exc_info:
        parse("[b,")
    assert exc_info.value.expected


def test_parse_alphabet_restriction():
    parse("u v", alphabet={"u", "v"})
    with pytest.raises(ParseError):
        parse("u w", alphabet={"u", "v"})


# -- free expansion -----------------------------------------------------------


def test_expand_bracket_definition():
    # [u,v]_n = uv - q vu in the free algebra
    poly = expand_free(parse("[u,v]_n"))
    assert poly.terms == {("u", "v"): ONE, ("v", "u"): -Q}


def test_expand_commutator_anticommutator():
    comm = expand_free(parse("[u,v]"))
    assert comm.terms == {("u", "v"): ONE, ("v", "u"): -ONE}
    anti = expand_free(parse("{u,v}"))
    assert anti.terms == {("u", "v"): ONE, ("v", "u"): ONE}


def test_expand_sumperm():
    # sumperm(u, v) = uv + vu for two operands
    poly = expand_free(parse("sumperm(u, v)"))
    assert poly.terms == {("u", "v"): ONE, ("v", "u"): ONE}


def test_expand_sumcyc():
    # three operands: cyclic orderings only (3 terms, not 6)
    poly = expand_free(parse("sumcyc(u, v, w)"))
    assert set(poly.terms) == {("u", "v", "w"), ("v", "w", "u"),
                               ("w", "u", "v")}


def test_perm_sum_substitution_helper():
    body = parse("[u1, u2]_n")
    full = expand_free(perm_sum(body, ["u1", "u2"]))
    # [u1,u2]_n + [u2,u1]_n = (1-q)(u1 u2 + u2 u1)
    expected = expand_free(parse("[u1,u2]_n + [u2,u1]_n"))
    assert (full - expected).is_zero


def test_specialize_unit():
    # [u,v]_n at q=1 is the plain commutator: [u,u] = 0
    poly = expand_free(parse("[u,v]_n - [u,v]"))
    assert poly.specialize_unit(1) == {}
    assert poly.specialize_unit(-1) != {}


# -- quotient normal ordering -------------------------------------------------


def test_defining_relation_normal_form():
    poly = normal_order(parse("[b,adag]_n"))
    assert poly.terms == {(0, 0, 0): ONE}


def test_rewrite_b_adag():
    # b adag -> q adag b + 1
    poly = normal_order(parse("b adag"))
    assert poly.terms == {(1, 1, 0): Q, (0, 0, 0): ONE}


def test_rewrite_bk_adag_oracle():
    # b^k adag = q^k adag b^k + <k> b^(k-1), frozen for k = 2
    poly = normal_order(parse("b^2 adag"))
    assert poly.terms == {(1, 2, 0): Q * Q, (0, 1, 0): q_integer(2)}


def test_rewrite_number_moves():
    assert normal_order(parse("N adag - adag N - adag")).is_zero
    assert normal_order(parse("N b - b N + b")).is_zero


def test_quotient_check():
    ok, residual = quotient_check(parse("[b,adag]_n"), parse("1"))
    assert ok and residual.is_zero
    ok, residual = quotient_check(parse("[b,adag]_n"), parse("2"))
    assert not ok and residual.terms == {(0, 0, 0): -ONE}


def test_normal_order_rejects_free_symbols():
    with pytest.raises(OutOfRange):
        normal_order(parse("u v"))


def test_quotientpoly_repr():
    assert repr(QuotientPoly()) == "0"
    assert "adag*b" in repr(normal_order(parse("adag b")))


# -- rewriter / representation compatibility ----------------------------------

_words = st.lists(st.sampled_from(["adag", "b", "N"]), min_size=1, max_size=6)


@settings(max_examples=60, deadline=None)
@given(_words, st.integers(min_value=1, max_value=6))
def test_normal_order_matches_representation(word, n):
    """Normal ordering is the identity map modulo the defining relations."""
    expr = product([Gen(name) for name in word])
    rep = build_rep(n)
    assignment = {"adag": rep.a_dag, "b": rep.b, "N": rep.num}
    direct = eval_expr(expr, assignment, rep.q, rep.dim)
    ordered = normal_order(expr).eval_rep(rep)
    scale = max(1.0, float(np.max(np.abs(direct))))
    assert max_abs_diff(direct, ordered) <= 1e-10 * scale
