from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, seed
from hypothesis import strategies as st

from oracles import cyclotomic
from salemcheeger.intpoly import (
    INF,
    EndpointIsRoot,
    IntPolynomial,
    NotIsolating,
    NotMonic,
    NotReciprocal,
    OddDegree,
    RationalInterval,
    cyclotomic_factor_order,
    cyclotomic_orders,
    discriminant,
    gcd,
    has_cyclotomic_factor,
    inverse_trace_transform,
    is_reciprocal,
    is_squarefree,
    isolate_real_roots,
    refine_root,
    resultant,
    sturm_count,
    trace_transform,
)

LEHMER = IntPolynomial([1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
SALEM4 = IntPolynomial([1, -1, -1, -1, 1])
LEHMER_TAU = Fraction("1.176280818259917506544070338474035050693")
SALEM4_TAU = Fraction("1.72208380573904224502706921215383146207")


def P(*cs):
    return IntPolynomial(cs)


def test_parse_forms_agree():
    assert IntPolynomial.parse("1,1,0,-1,-1,-1,-1,-1,0,1,1") == LEHMER
    assert IntPolynomial.parse("x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1") == LEHMER
    assert IntPolynomial.parse("s^2 - s - 3") == P(-3, -1, 1)
    assert IntPolynomial.parse("2*x^3 - 7") == P(-7, 0, 0, 2)
    assert IntPolynomial.parse(LEHMER.to_text()) == LEHMER


def test_degree_and_stripping():
    assert P(1, 2, 0, 0).degree == 1
    assert P().degree == -1
    assert P(0, 0).is_zero()


@pytest.mark.parametrize(
    "p, expected",
    [(SALEM4, True), (P(2, -3, 1), False), (P(1), True)],
)
def test_is_reciprocal(p, expected):
    assert is_reciprocal(p) is expected


@pytest.mark.parametrize(
    "p, q",
    [
        (SALEM4, P(-3, -1, 1)),
        (P(1, 0, 0, 0, 1), P(-2, 0, 1)),
        (P(1, -3, 1), P(-3, 1)),
    ],
)
def test_trace_transform_examples(p, q):
    assert trace_transform(p) == q
    assert inverse_trace_transform(q) == p


def test_trace_transform_errors():
    with pytest.raises(OddDegree):
        trace_transform(P(1, 1, 1, 1))
    with pytest.raises(NotReciprocal):
        trace_transform(P(1, 2, 3, 4, 1))
    with pytest.raises(NotMonic):
        trace_transform(P(2, 1, 2))
    with pytest.raises(NotMonic):
        inverse_trace_transform(P(1, 2))


def test_trace_transform_matches_substitution():
    # x^n Q(x + 1/x) computed through sympy
    x = sympy.Symbol("x")
    q = trace_transform(LEHMER)
    expr = sympy.expand(x**5 * sum(c * (x + 1 / x) ** k for k, c in enumerate(q.coeffs)))
    assert [int(c) for c in reversed(sympy.Poly(expr, x).all_coeffs())] == list(LEHMER.coeffs)


@st.composite
def reciprocal_monic(draw):
    n = draw(st.integers(1, 6))
    half = draw(st.lists(st.integers(-6, 6), min_size=n, max_size=n))
    cs = [1] + half[: n - 1] + [half[-1]] + list(reversed(half[: n - 1])) + [1]
    return IntPolynomial(cs)


@given(reciprocal_monic())
@seed(11)
def test_trace_roundtrip(p):
    assert inverse_trace_transform(trace_transform(p)) == p


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6))
@seed(12)
def test_inverse_then_forward(cs):
    q = IntPolynomial(cs + [1])
    assert trace_transform(inverse_trace_transform(q)) == q


@pytest.mark.parametrize(
    "q, a, b, n",
    [
        (P(-3, -1, 1), 2, INF, 1),
        (P(1, 0, 1), -INF, INF, 0),
        (P(-2, 0, 1), -2, 2, 2),
    ],
)
def test_sturm_count_examples(q, a, b, n):
    assert sturm_count(q, a, b) == n


def test_sturm_endpoint_root():
    with pytest.raises(EndpointIsRoot):
        sturm_count(P(-2, 1), 2, 5)


def test_isolate_examples():
    ivs = isolate_real_roots(P(-3, -1, 1))
    assert len(ivs) == 2
    lo, hi = ivs
    r1, r2 = (1 - 13**0.5) / 2, (1 + 13**0.5) / 2
    assert lo.lo < r1 < lo.hi and hi.lo < r2 < hi.hi
    assert isolate_real_roots(P(1, 0, 1)) == []
    three = isolate_real_roots(P(0, -3, 0, 1), Fraction(-5, 2), Fraction(5, 2))
    for iv, r in zip(three, (-(3**0.5), 0.0, 3**0.5)):
        assert iv.lo < r < iv.hi


def test_isolate_handles_rational_roots_and_multiplicity():
    # (x - 1/2)^2 (x + 3) (2x - 1): roots at midpoints of dyadic brackets
    p = P(-1, 2) * P(-1, 2) * P(3, 1) * P(-1, 2)
    ivs = isolate_real_roots(p)
    assert len(ivs) == 2
    for iv in ivs:
        assert p.sign_at(iv.lo) != 0 and p.sign_at(iv.hi) != 0


@given(st.lists(st.integers(-5, 5), min_size=2, max_size=7))
@seed(13)
def test_isolation_partitions_sturm_count(cs):
    q = IntPolynomial(cs)
    assume(q.degree >= 1 and is_squarefree(q))
    ivs = isolate_real_roots(q)
    assert len(ivs) == sturm_count(q)
    assert sum(sturm_count(q, iv.lo, iv.hi) for iv in ivs) == sturm_count(q)
    for a, b in zip(ivs, ivs[1:]):
        assert a.hi <= b.lo
    # compare against sympy's own real root count
    x = sympy.Symbol("x")
    assert len(sympy.Poly(list(reversed(q.coeffs)), x).real_roots(multiple=True)) == len(ivs)


@pytest.mark.parametrize(
    "p, iv, bits, root",
    [
        (P(-2, 0, 1), RationalInterval(1, 2), 20, Fraction(14142135623730950488, 10**19)),
        (LEHMER, RationalInterval(1, 2), 30, LEHMER_TAU),
        (SALEM4, RationalInterval(1, 2), 30, SALEM4_TAU),
    ],
)
def test_refine_root_examples(p, iv, bits, root):
    out = refine_root(p, iv, bits)
    assert out.width <= Fraction(1, 2**bits)
    assert out.lo <= root <= out.hi
    assert iv.contains_interval(out)
    assert out.is_dyadic()


def test_refine_root_non_dyadic_input():
    iv = RationalInterval(Fraction(1, 3), Fraction(5, 3))
    out = refine_root(P(-2, 0, 1), iv, 40)
    assert out.is_dyadic() and iv.contains_interval(out) and out.width <= Fraction(1, 2**40)


def test_refine_root_rejects_non_isolating():
    with pytest.raises(NotIsolating):
        refine_root(P(-2, 0, 1), RationalInterval(-2, 2), 10)


def test_refine_nested_in_bits():
    a = refine_root(LEHMER, RationalInterval(1, 2), 10)
    b = refine_root(LEHMER, RationalInterval(1, 2), 40)
    assert a.contains_interval(b)


@given(st.lists(st.integers(-5, 5), min_size=2, max_size=7), st.integers(1, 60))
@seed(14)
def test_refine_keeps_sign_change(cs, bits):
    q = IntPolynomial(cs)
    assume(q.degree >= 1 and is_squarefree(q))
    for iv in isolate_real_roots(q):
        out = refine_root(q, iv, bits)
        assert iv.contains_interval(out)
        if out.width:
            assert q.sign_at(out.lo) * q.sign_at(out.hi) < 0


@pytest.mark.parametrize(
    "p, expected, order",
    [
        (P(1, 1, 1, 1, 1), True, 5),
        (LEHMER, False, None),
        (P(1, -2, -1, -2, 1), True, 3),
    ],
)
def test_cyclotomic_examples(p, expected, order):
    assert has_cyclotomic_factor(p) is expected
    assert cyclotomic_factor_order(p) == order


def test_cyclotomic_factor_product():
    assert P(1, 1, 1) * P(1, -3, 1) == P(1, -2, -1, -2, 1)


def test_every_small_cyclotomic_detected():
    ms = [m for m in range(1, 200) if sympy.totient(m) <= 12]
    for m in ms:
        phi = IntPolynomial(cyclotomic(m))
        assert phi.degree == sympy.totient(m)
        assert has_cyclotomic_factor(phi), m
    assert set(ms) <= set(cyclotomic_orders(12))


def test_cyclotomic_orders_complete():
    for deg in range(1, 13):
        want = {m for m in range(1, 2 * deg * deg + 50) if sympy.totient(m) <= deg}
        assert set(cyclotomic_orders(deg)) == want


def test_gcd_and_discriminant():
    assert gcd(P(-1, 0, 1), P(1, 1)) == P(1, 1)
    assert discriminant(P(-3, -1, 1)) == 13
    x = sympy.Symbol("x")
    for cs in ([3, 4, -5, -5, 1, 1], [1, 0, -3, 1], [-7, 2, 0, 5]):
        q = IntPolynomial(cs)
        sp = sympy.Poly(list(reversed(cs)), x)
        assert discriminant(q) == sympy.discriminant(sp)
        assert resultant(q, q.derivative()) == sympy.resultant(sp, sp.diff(x))
