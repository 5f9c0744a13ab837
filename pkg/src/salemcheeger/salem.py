"""Certification and enumeration of Salem numbers.

A monic reciprocal P of degree 2n is the minimal polynomial of a Salem number
iff its trace polynomial Q (P(x) = x^n Q(x + 1/x)) has one real root beyond 2
and its other n - 1 roots in (-2, 2), and P is irreducible. Irreducibility is
certified by ruling out cyclotomic factors: any proper factor of a polynomial
with this root pattern has all its roots on the unit circle, hence is
cyclotomic by Kronecker's theorem.
"""

from __future__ import annotations

import enum
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

from .intpoly import (
    INF,
    IntPolynomial,
    RationalInterval,
    exact_div,
    has_cyclotomic_factor,
    inverse_trace_transform,
    is_reciprocal,
    is_squarefree,
    refine_root,
    root_bound,
    sturm_count,
    trace_transform,
)

DEFAULT_BITS = 53


class NotSalemReason(enum.Enum):
    NotMonic = "NotMonic"
    OddDegree = "OddDegree"
    DegreeTooSmall = "DegreeTooSmall"
    NotReciprocal = "NotReciprocal"
    RepeatedFactor = "RepeatedFactor"
    HasCyclotomicFactor = "HasCyclotomicFactor"
    ComplexTraceRoot = "ComplexTraceRoot"
    NoRootBeyondTwo = "NoRootBeyondTwo"
    MultipleRootsBeyondTwo = "MultipleRootsBeyondTwo"
    TraceRootAtBoundary = "TraceRootAtBoundary"
    NoCircleConjugate = "NoCircleConjugate"


class NotSalem(ValueError):
    def __init__(self, reason: NotSalemReason, poly: IntPolynomial | None = None):
        super().__init__(reason.value)
        self.reason = reason
        self.poly = poly


class NotFound(LookupError):
    pass


@dataclass(frozen=True)
class SalemCertificate:
    p: IntPolynomial
    q: IntPolynomial
    tau_interval: RationalInterval
    s0_interval: RationalInterval
    circle_root_count: int

    @property
    def half_degree(self) -> int:
        return self.q.degree

    @property
    def tau(self) -> float:
        return float(self.tau_interval.mid)


def _count_beyond_two(q: IntPolynomial) -> int:
    # a root at 2 is removed first so the Sturm endpoint is admissible
    while q.sign_at(2) == 0:
        q = exact_div(q, IntPolynomial([-2, 1]))
    return sturm_count(q, 2, INF)


def salem_rejection(p: IntPolynomial) -> NotSalemReason | None:
    """First failing check of the certification pipeline, or None if Salem."""
    if not p.is_monic():
        return NotSalemReason.NotMonic
    if p.degree % 2:
        return NotSalemReason.OddDegree
    if p.degree < 4:
        return NotSalemReason.DegreeTooSmall
    if not is_reciprocal(p):
        return NotSalemReason.NotReciprocal
    if not is_squarefree(p):
        return NotSalemReason.RepeatedFactor
    if has_cyclotomic_factor(p):
        return NotSalemReason.HasCyclotomicFactor
    q = trace_transform(p)
    n = q.degree
    if sturm_count(q) != n:
        return NotSalemReason.ComplexTraceRoot
    beyond = _count_beyond_two(q)
    if beyond == 0:
        return NotSalemReason.NoRootBeyondTwo
    if beyond > 1:
        return NotSalemReason.MultipleRootsBeyondTwo
    if q.sign_at(2) == 0 or q.sign_at(-2) == 0:
        return NotSalemReason.TraceRootAtBoundary
    if sturm_count(q, -2, 2) != n - 1:
        return NotSalemReason.NoCircleConjugate
    return None


def _tau_bracket(p: IntPolynomial) -> RationalInterval:
    return RationalInterval(1, root_bound(p))


def _outward_dyadic(x: Fraction, bits: int, up: bool) -> Fraction:
    scale = 2**bits
    n = x * scale
    k = -((-n.numerator) // n.denominator) if up else n.numerator // n.denominator
    return Fraction(k, scale)


def _s0_from_tau(tau: RationalInterval, bits: int) -> RationalInterval:
    # x + 1/x is increasing on (1, oo)
    lo = tau.lo + 1 / tau.lo
    hi = tau.hi + 1 / tau.hi
    return RationalInterval(_outward_dyadic(lo, bits, False), _outward_dyadic(hi, bits, True))


def certify_salem(p: IntPolynomial, bits: int = DEFAULT_BITS) -> SalemCertificate:
    """Certify p as a Salem minimal polynomial or raise NotSalem with the first failed check."""
    reason = salem_rejection(p)
    if reason is not None:
        raise NotSalem(reason, p)
    q = trace_transform(p)
    tau = refine_root(p, _tau_bracket(p), bits)
    return SalemCertificate(
        p=p,
        q=q,
        tau_interval=tau,
        s0_interval=_s0_from_tau(tau, bits + 8),
        circle_root_count=q.degree - 1,
    )


def is_salem(p: IntPolynomial) -> bool:
    return salem_rejection(p) is None


def tau_approx(cert: SalemCertificate, bits: int) -> RationalInterval:
    """Dyadic enclosure of tau of width <= 2**-bits; nested in bits."""
    return refine_root(cert.p, _tau_bracket(cert.p), bits)


def _libmpf_to_fraction(t) -> Fraction:
    sign, man, exp, _ = t
    v = Fraction(int(man) * 2**exp) if exp >= 0 else Fraction(int(man), 2**-exp)
    return -v if sign else v


def log_enclosure(iv: RationalInterval, bits: int) -> RationalInterval:
    """Rigorous dyadic enclosure of ln over iv (iv.lo > 0) with rounding slack << 2**-bits."""
    ctx = mpmath.iv
    old = ctx.prec
    ctx.prec = bits + 32
    try:
        lo = ctx.mpf(iv.lo.numerator) / ctx.mpf(iv.lo.denominator)
        hi = ctx.mpf(iv.hi.numerator) / ctx.mpf(iv.hi.denominator)
        x = ctx.mpf([lo.a, hi.b])
        (a, _), (_, b) = (ctx.log(x.a)._mpi_, ctx.log(x.b)._mpi_)
    finally:
        ctx.prec = old
    return RationalInterval(_libmpf_to_fraction(a), _libmpf_to_fraction(b))


def half_geodesic_length(tau: RationalInterval, bits: int) -> RationalInterval:
    return log_enclosure(tau, bits)


def geodesic_length_from_interval(tau: RationalInterval, bits: int) -> RationalInterval:
    half = half_geodesic_length(tau, bits + 1)
    return RationalInterval(2 * half.lo, 2 * half.hi)


def geodesic_length(cert: SalemCertificate, bits: int = DEFAULT_BITS) -> RationalInterval:
    """Enclosure of 2 ln(tau) of width <= 2**-bits.

    d(2 ln x)/dx < 2 for x > 1, so tau to bits + 2 leaves half the budget for
    the log rounding.
    """
    tau = tau_approx(cert, bits + 2)
    return geodesic_length_from_interval(tau, bits)


# --- enumeration --------------------------------------------------------------


def _candidate_qs(n: int, height: int, lead: Sequence[int] = ()) -> Iterable[tuple[int, ...]]:
    """Coefficient vectors (q_0, ..., q_{n-1}) in lexicographic order.

    ``lead`` fixes a prefix of q_0, q_1, ... (used to partition the box).
    """
    r = range(-height, height + 1)
    free = n - len(lead)
    for rest in itertools.product(r, repeat=free):
        yield tuple(lead) + rest


def _quick_reject(q: IntPolynomial) -> bool:
    # one root > 2 and the rest in (-2, 2) force Q(2) < 0 and (-1)^n Q(-2) > 0
    n = q.degree
    if q(2) >= 0 or (-1) ** n * q(-2) <= 0:
        return True
    # cheap Sturm pattern test before the cyclotomic sweep
    return sturm_count(q, -2, 2) != n - 1


def _certify_box(n: int, height: int, lead: tuple[int, ...], bits: int) -> list[SalemCertificate]:
    out = []
    for cs in _candidate_qs(n, height, lead):
        q = IntPolynomial(cs + (1,))
        if _quick_reject(q):
            continue
        p = inverse_trace_transform(q)
        if salem_rejection(p) is None:
            out.append(certify_salem(p, bits))
    return out


def enumerate_salem(n: int, height: int, jobs: int = 1, bits: int = DEFAULT_BITS) -> list[SalemCertificate]:
    """Every Salem number of degree 2n whose trace polynomial has coefficients in [-H, H].

    Output is sorted lexicographically by Q's coefficient vector (constant term
    first). With ``jobs > 1`` the box is split on the constant coefficient and
    the parts are merged; the result is identical to the serial run.
    """
    if n < 2:
        raise ValueError("half degree must be >= 2")
    if height < 1:
        raise ValueError("height must be >= 1")
    if jobs <= 1:
        found = _certify_box(n, height, (), bits)
    else:
        leads = [(c,) for c in range(-height, height + 1)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = ex.map(_certify_box, *zip(*[(n, height, lead, bits) for lead in leads]))
            found = [c for part in parts for c in part]
    found.sort(key=lambda c: c.q.coeffs)
    return found


def compare_tau(a: SalemCertificate, b: SalemCertificate) -> int:
    """Sign of tau_a - tau_b, refining both until the enclosures separate."""
    if a.p == b.p:
        return 0
    ia, ib = a.tau_interval, b.tau_interval
    bits = 128
    while ia.overlaps(ib):
        ia, ib = tau_approx(a, bits), tau_approx(b, bits)
        bits *= 2
    return -1 if ia.hi < ib.lo else 1


def smallest_salem(n: int, height: int, jobs: int = 1) -> SalemCertificate:
    certs = enumerate_salem(n, height, jobs=jobs)
    if not certs:
        raise NotFound(f"no Salem number of degree {2 * n} with height <= {height}")
    best = certs[0]
    for c in certs[1:]:
        if compare_tau(c, best) < 0:
            best = c
    return best


# --- serialization ------------------------------------------------------------


def dyadic_to_decimal(x: Fraction) -> str:
    """Exact decimal expansion of a dyadic rational."""
    x = Fraction(x)
    d = x.denominator
    if d & (d - 1):
        raise ValueError(f"{x} is not dyadic")
    k = d.bit_length() - 1
    num = abs(x.numerator) * 5**k
    sign = "-" if x < 0 else ""
    if k == 0:
        return f"{sign}{num}"
    digits = str(num).rjust(k + 1, "0")
    return f"{sign}{digits[:-k]}.{digits[-k:]}"


def certificate_to_json(cert: SalemCertificate, bits: int = DEFAULT_BITS) -> dict:
    g = geodesic_length(cert, bits)
    return {
        "p": cert.p.to_text(),
        "q": cert.q.to_text(),
        "tau_lo": dyadic_to_decimal(cert.tau_interval.lo),
        "tau_hi": dyadic_to_decimal(cert.tau_interval.hi),
        "s0_lo": dyadic_to_decimal(cert.s0_interval.lo),
        "s0_hi": dyadic_to_decimal(cert.s0_interval.hi),
        "geodesic_lo": dyadic_to_decimal(g.lo),
        "geodesic_hi": dyadic_to_decimal(g.hi),
        "circle_root_count": str(cert.circle_root_count),
    }


def certificate_from_json(obj: dict) -> SalemCertificate:
    q = IntPolynomial.parse(obj["q"])
    return SalemCertificate(
        p=IntPolynomial.parse(obj["p"]),
        q=q,
        tau_interval=RationalInterval(Fraction(obj["tau_lo"]), Fraction(obj["tau_hi"])),
        s0_interval=RationalInterval(Fraction(obj["s0_lo"]), Fraction(obj["s0_hi"])),
        circle_root_count=int(obj.get("circle_root_count", q.degree - 1)),
    )
