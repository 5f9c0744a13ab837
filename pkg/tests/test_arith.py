import pytest
import sympy
from hypothesis import given, seed
from hypothesis import strategies as st

from oracles import brute_legendre, quadratic_irreducible_mod_p, quadratic_split_mod_p, roots_mod_p
from salemcheeger.arith import (
    TRACE_DELTA,
    RamificationPlan,
    find_inert_prime,
    find_split_prime,
    legendre,
    odd_primes,
    ramification_plan,
    torsion_order_bound,
    trace_field,
)
from salemcheeger.intpoly import IntPolynomial
from salemcheeger.salem import NotFound, certify_salem, enumerate_salem

SALEM4 = IntPolynomial([1, -1, -1, -1, 1])
LEHMER = IntPolynomial([1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])


def test_trace_field_degree_four():
    tf = trace_field(certify_salem(SALEM4))
    assert tf.degree == 2
    assert tf.totally_real
    assert tf.disc_q == 13
    # s0 = (1 + sqrt 13) / 2  <=>  (2 s0 - 1)^2 = 13 with s0 > 1/2
    assert (2 * tf.s0_interval.lo - 1) ** 2 < 13 < (2 * tf.s0_interval.hi - 1) ** 2


def test_trace_field_disc_matches_sympy():
    tf = trace_field(certify_salem(LEHMER))
    s = sympy.Symbol("s")
    assert tf.disc_q == sympy.discriminant(sympy.Poly(list(reversed(tf.q.coeffs)), s))


def test_degree_four_plan():
    plan = ramification_plan(certify_salem(SALEM4))
    assert plan.archimedean_count == 1
    assert plan.finite_prime == (3, 0)
    assert plan.delta_residue == 2
    assert plan.parity_ok
    assert plan.ramified_places == 2
    assert RamificationPlan.from_json(plan.to_json()) == plan


def test_odd_degree_plan_has_no_finite_prime():
    plan = ramification_plan(certify_salem(LEHMER))
    assert plan.archimedean_count == 4
    assert plan.finite_prime is None
    assert plan.parity_ok
    with pytest.raises(ValueError):
        find_inert_prime(trace_field(certify_salem(LEHMER)))


def test_inert_not_found_with_tiny_bound():
    with pytest.raises(NotFound):
        find_inert_prime(trace_field(certify_salem(SALEM4)), bound=2)


def test_split_prime():
    tf = trace_field(certify_salem(SALEM4))
    p, a = find_split_prime(tf, TRACE_DELTA, 1000)
    assert a in roots_mod_p(list(tf.q.coeffs), p)
    assert quadratic_split_mod_p(a, p)
    with pytest.raises(ValueError):
        find_split_prime(tf, IntPolynomial([]), 100)


def test_odd_primes():
    assert odd_primes(30) == (3, 5, 7, 11, 13, 17, 19, 23, 29)
    assert odd_primes(2) == ()
    assert list(odd_primes(10_000)) == list(sympy.primerange(3, 10_001))


@given(st.integers(-10**6, 10**6), st.sampled_from([3, 5, 7, 11, 13, 97, 101, 997]))
@seed(31)
def test_legendre_matches_brute_force(n, p):
    assert legendre(n, p) == brute_legendre(n, p)


def _inert_oracle(q, disc, bound):
    """Smallest (p, a) by brute force over all residues."""
    for p in sympy.primerange(3, bound + 1):
        if disc % p == 0:
            continue
        for a in roots_mod_p(list(q.coeffs), p):
            if quadratic_irreducible_mod_p(a, p):
                return p, a
    return None


@pytest.mark.parametrize("n, height", [(2, 3), (3, 2), (4, 1)])
def test_inert_prime_is_smallest(n, height):
    for cert in enumerate_salem(n, height):
        tf = trace_field(cert)
        if tf.degree % 2:
            continue
        assert find_inert_prime(tf, 500) == _inert_oracle(tf.q, tf.disc_q, 500)


@pytest.mark.parametrize("n, height", [(2, 3), (3, 2)])
def test_parity_over_enumeration(n, height):
    for cert in enumerate_salem(n, height):
        plan = ramification_plan(cert)
        assert plan.parity_ok
        assert plan.archimedean_count == n - 1
        assert (plan.finite_prime is not None) == (n % 2 == 0)


def test_torsion_bound():
    assert torsion_order_bound(2) == 4
    # 2 cos(2 pi / n) has degree phi(n) / 2 for n >= 3, so it lies in a field of
    # degree d only if phi(n) <= 2 d
    x = sympy.Symbol("x")
    degs = {n: sympy.degree(sympy.minimal_polynomial(2 * sympy.cos(2 * sympy.pi / n), x), x) for n in range(3, 31)}
    for d in range(1, 8):
        for n, deg in degs.items():
            if deg <= d:
                assert sympy.totient(n) <= torsion_order_bound(d)
