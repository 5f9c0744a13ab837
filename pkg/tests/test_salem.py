import itertools
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, seed
from hypothesis import strategies as st

from oracles import oracle_is_salem, oracle_real_root_above
from salemcheeger.intpoly import IntPolynomial, RationalInterval, inverse_trace_transform
from salemcheeger.salem import (
    NotFound,
    NotSalem,
    NotSalemReason,
    certificate_from_json,
    certificate_to_json,
    certify_salem,
    compare_tau,
    dyadic_to_decimal,
    enumerate_salem,
    geodesic_length,
    geodesic_length_from_interval,
    half_geodesic_length,
    is_salem,
    salem_rejection,
    smallest_salem,
    tau_approx,
)

LEHMER = IntPolynomial([1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
SALEM4 = IntPolynomial([1, -1, -1, -1, 1])


def P(*cs):
    return IntPolynomial(cs)


def _mp(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


def test_degree_four_certificate():
    cert = certify_salem(SALEM4)
    assert cert.q == P(-3, -1, 1)
    assert cert.circle_root_count == 1
    with mpmath.workprec(256):
        tau = oracle_real_root_above(list(SALEM4.coeffs))
        assert _mp(cert.tau_interval.lo) <= tau <= _mp(cert.tau_interval.hi)
        s0 = (1 + mpmath.sqrt(13)) / 2
        assert _mp(cert.s0_interval.lo) <= s0 <= _mp(cert.s0_interval.hi)


def test_lehmer_certificate():
    cert = certify_salem(LEHMER)
    assert cert.half_degree == 5
    assert cert.circle_root_count == 4
    assert abs(cert.tau - 1.1762808182599175) < 1e-12


@pytest.mark.parametrize(
    "p, reason",
    [
        (P(1, 1, 1, 1, 1), NotSalemReason.HasCyclotomicFactor),
        (P(1, -3, 1), NotSalemReason.DegreeTooSmall),
        (P(1, 2, 3, 2, 2), NotSalemReason.NotMonic),
        (P(1, 0, 0, 1), NotSalemReason.OddDegree),
        (P(1, 2, 3, 4, 1), NotSalemReason.NotReciprocal),
        (P(1, -3, 1) * P(1, -3, 1), NotSalemReason.RepeatedFactor),
        (P(1, -2, -1, -2, 1), NotSalemReason.HasCyclotomicFactor),
        (P(1, -3, 1) * P(1, -4, 1), NotSalemReason.MultipleRootsBeyondTwo),
        (inverse_trace_transform(P(-3, 1, 1)), NotSalemReason.NoRootBeyondTwo),
    ],
)
def test_rejection_reasons(p, reason):
    assert salem_rejection(p) is reason
    with pytest.raises(NotSalem) as info:
        certify_salem(p)
    assert info.value.reason is reason


def test_complex_trace_root_reason():
    # Q = s^2 + 1 has complex roots; P = x^4 + 3x^2 + 1
    p = inverse_trace_transform(P(1, 0, 1))
    assert salem_rejection(p) is NotSalemReason.ComplexTraceRoot


def test_no_circle_conjugate_reason():
    # s^3 - 8s + 1: roots near 2.77, 0.13, -2.89
    p = inverse_trace_transform(P(1, -8, 0, 1))
    assert salem_rejection(p) is NotSalemReason.NoCircleConjugate


@given(st.integers(1, 80))
@seed(21)
def test_tau_nested_in_bits(bits):
    cert = certify_salem(LEHMER)
    a, b = tau_approx(cert, bits), tau_approx(cert, bits + 7)
    assert a.contains_interval(b)
    assert a.width <= Fraction(1, 2**bits)
    assert a.is_dyadic() and b.is_dyadic()


def test_geodesic_is_twice_half_length():
    cert = certify_salem(SALEM4)
    tau = tau_approx(cert, 60)
    half = half_geodesic_length(tau, 61)
    full = geodesic_length_from_interval(tau, 60)
    assert full == RationalInterval(2 * half.lo, 2 * half.hi)


def test_geodesic_against_oracle():
    for p in (SALEM4, LEHMER):
        cert = certify_salem(p)
        g = geodesic_length(cert, 80)
        assert g.width <= Fraction(1, 2**80)
        with mpmath.workprec(256):
            ref = 2 * mpmath.log(oracle_real_root_above(list(p.coeffs)))
            assert _mp(g.lo) <= ref <= _mp(g.hi)


def test_degenerate_tau_interval():
    # a point interval at 2 is a legal (degenerate) enclosure
    out = geodesic_length_from_interval(RationalInterval(2, 2), 40)
    ref = 2 * mpmath.log(2)
    assert float(out.lo) <= ref <= float(out.hi)
    assert out.width <= Fraction(1, 2**40)


def test_json_roundtrip():
    cert = certify_salem(LEHMER)
    obj = certificate_to_json(cert)
    assert all(isinstance(v, str) for v in obj.values())
    assert certificate_from_json(obj) == cert


def test_dyadic_to_decimal():
    assert dyadic_to_decimal(Fraction(5, 8)) == "0.625"
    assert dyadic_to_decimal(Fraction(-3, 2)) == "-1.5"
    assert dyadic_to_decimal(Fraction(7)) == "7"
    with pytest.raises(ValueError):
        dyadic_to_decimal(Fraction(1, 3))


def test_enumeration_small_box_against_oracle():
    found = {c.q.coeffs for c in enumerate_salem(2, 3)}
    expected = set()
    for q0, q1 in itertools.product(range(-3, 4), repeat=2):
        p = inverse_trace_transform(P(q0, q1, 1))
        if oracle_is_salem(list(p.coeffs)):
            expected.add((q0, q1, 1))
    assert found == expected
    assert (-3, -1, 1) in found


def test_enumeration_sorted_and_partition_invariant():
    serial = enumerate_salem(3, 2)
    assert [c.q.coeffs for c in serial] == sorted(c.q.coeffs for c in serial)
    assert enumerate_salem(3, 2, jobs=3) == serial


def test_enumeration_argument_checks():
    with pytest.raises(ValueError):
        enumerate_salem(1, 3)
    with pytest.raises(ValueError):
        enumerate_salem(2, 0)


def test_smallest_degree_four():
    assert smallest_salem(2, 5).q == P(-3, -1, 1)


def test_compare_tau_orders():
    a, b = certify_salem(LEHMER), certify_salem(SALEM4)
    assert compare_tau(a, b) == -1
    assert compare_tau(b, a) == 1
    assert compare_tau(a, a) == 0


def test_smallest_not_found():
    # degree 10 needs a trace coefficient of size 5 to reach Lehmer; H = 1 has nothing
    with pytest.raises(NotFound):
        smallest_salem(5, 1)


@pytest.mark.slow
def test_smallest_degree_ten_is_lehmer():
    assert smallest_salem(5, 5, jobs=4).p == LEHMER


@given(st.lists(st.integers(-2, 2), min_size=2, max_size=2))
@seed(22)
def test_is_salem_matches_oracle_degree_six(half):
    p = P(1, half[0], half[1], 0, half[1], half[0], 1)
    assert is_salem(p) == oracle_is_salem(list(p.coeffs))


@pytest.mark.parametrize("n, height", [(2, 4), (3, 3), (4, 2)])
def test_prefilter_does_not_change_enumeration(monkeypatch, n, height):
    import salemcheeger.salem as salem_mod

    fast = enumerate_salem(n, height)
    monkeypatch.setattr(salem_mod, "_quick_reject", lambda q: False)
    assert enumerate_salem(n, height) == fast
