"""Exact integer polynomials: Sturm sequences, real-root isolation, trace transform.

Everything here is integer/`Fraction` arithmetic. Sturm chains are kept integral
by pseudo-division with positive multipliers, which preserves every sign the
root count depends on.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]

INF = float("inf")


class PolynomialError(ValueError):
    pass


class NotMonic(PolynomialError):
    pass


class OddDegree(PolynomialError):
    pass


class NotReciprocal(PolynomialError):
    pass


class EndpointIsRoot(PolynomialError):
    pass


class NotIsolating(PolynomialError):
    pass


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    cs = [int(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients stored constant term first."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        """Accept either the canonical ``1,0,-1`` form or ``x^2 - 1``."""
        text = text.strip()
        if re.fullmatch(r"\s*[-+]?\d+(\s*,\s*[-+]?\d+)*\s*", text):
            return cls(int(t) for t in text.split(","))
        return cls(_parse_human(text))

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    @property
    def degree(self) -> int:
        # zero polynomial gets degree -1
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self), len(other))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other: "IntPolynomial") -> "IntPolynomial":
        out = IntPolynomial()
        for c in reversed(self.coeffs):
            out = out * other + IntPolynomial([c])
        return out

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> "IntPolynomial":
        """Primitive part with positive leading coefficient."""
        if self.is_zero():
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPolynomial(c // g for c in self.coeffs)

    def mod(self, p: int) -> tuple[int, ...]:
        return tuple(c % p for c in self.coeffs)

    def eval_mod(self, x: int, p: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % p
        return acc

    def sign_at(self, x: Rational | float) -> int:
        """Exact sign of self(x); x may be +/-inf."""
        if self.is_zero():
            return 0
        if x == INF:
            return _sgn(self.lc)
        if x == -INF:
            return _sgn(self.lc) * (-1 if self.degree % 2 else 1)
        x = Fraction(x)
        # homogeneous evaluation keeps everything in integers
        p, q = x.numerator, x.denominator
        d = self.degree
        acc = 0
        for k, c in enumerate(self.coeffs):
            if c:
                acc += c * p**k * q ** (d - k)
        return _sgn(acc)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = "x" if k == 1 else f"x^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        s0, b0 = terms[0]
        out = ("-" if s0 == "-" else "") + b0
        for s, b in terms[1:]:
            out += f" {s} {b}"
        return out


def _sgn(v) -> int:
    return (v > 0) - (v < 0)


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*([a-zA-Z]\w*)?(?:\s*\^\s*(\d+))?")


def _parse_human(text: str) -> list[int]:
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise PolynomialError("empty polynomial")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise PolynomialError(f"cannot parse polynomial near {s[pos:]!r}")
        sign, num, var, exp = m.groups()
        if not num and not var:
            raise PolynomialError(f"cannot parse polynomial near {s[pos:]!r}")
        c = int(num) if num else 1
        if sign == "-":
            c = -c
        k = (int(exp) if exp else 1) if var else 0
        coeffs[k] = coeffs.get(k, 0) + c
        pos = m.end()
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return out


def pseudo_divmod(a: IntPolynomial, b: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial, int]:
    """Return (q, r, m) with m*a = q*b + r, m a positive integer."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.degree < b.degree:
        return IntPolynomial(), a, 1
    k = a.degree - b.degree + 1
    lc = b.lc
    if lc < 0 and k % 2:
        k += 1
    m = lc**k
    r = list((a * m).coeffs)
    q = [0] * (a.degree - b.degree + 1)
    db = b.degree
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c == 0:
            continue
        # exact because m carries enough powers of lc
        t, rem = divmod(c, lc)
        assert rem == 0
        q[i - db] = t
        for j, bc in enumerate(b.coeffs):
            r[i - db + j] -= t * bc
    return IntPolynomial(q), IntPolynomial(r), m


def exact_div(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """a / b when the quotient is an integer polynomial; raises otherwise."""
    q, r, m = pseudo_divmod(a, b)
    if not r.is_zero() or any(c % m for c in q.coeffs):
        raise PolynomialError(f"{b} does not divide {a} over the integers")
    return IntPolynomial(c // m for c in q.coeffs)


def gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Gcd over the rationals, returned primitive with positive leading coefficient."""
    a, b = a.primitive(), b.primitive()
    while not b.is_zero():
        _, r, _ = pseudo_divmod(a, b)
        a, b = b, r.primitive()
    return a


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    g = gcd(p, p.derivative())
    if g.degree <= 0:
        return p
    return exact_div(p, g)


def is_squarefree(p: IntPolynomial) -> bool:
    return gcd(p, p.derivative()).degree <= 0


def sturm_sequence(p: IntPolynomial) -> list[IntPolynomial]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        _, r, _ = pseudo_divmod(seq[-2], seq[-1])
        if r.is_zero():
            break
        # m > 0 and content > 0, so the scaled -r keeps the true signs
        g = r.content()
        seq.append(IntPolynomial(-c // g for c in r.coeffs))
    return seq


def _variations(seq: Sequence[IntPolynomial], x) -> int:
    signs = [s for s in (q.sign_at(x) for q in seq) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def sturm_count(p: IntPolynomial, a=-INF, b=INF) -> int:
    """Number of distinct real roots of p in the open interval (a, b)."""
    if p.is_zero():
        raise PolynomialError("zero polynomial has infinitely many roots")
    if not a < b:
        raise ValueError("need a < b")
    for e in (a, b):
        if e not in (INF, -INF) and p.sign_at(e) == 0:
            raise EndpointIsRoot(f"{e} is a root of {p}")
    seq = sturm_sequence(p)
    return _variations(seq, a) - _variations(seq, b)


@dataclass(frozen=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction

    def __init__(self, lo: Rational, hi: Rational):
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def contains_interval(self, other: "RationalInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def overlaps(self, other: "RationalInterval") -> bool:
        return not (self.hi < other.lo or other.hi < self.lo)

    def is_dyadic(self) -> bool:
        return is_dyadic(self.lo) and is_dyadic(self.hi)

    def __float__(self) -> float:
        return float(self.mid)


def is_dyadic(x: Fraction) -> bool:
    d = Fraction(x).denominator
    return d & (d - 1) == 0


def root_bound(p: IntPolynomial) -> int:
    """Power of two strictly exceeding |r| for every complex root r (Cauchy)."""
    lc = abs(p.lc)
    m = max((abs(c) for c in p.coeffs[:-1]), default=0)
    bound = 1 + Fraction(m, lc)
    b = 1
    while b <= bound:
        b *= 2
    return b


def _finite(p: IntPolynomial, a, b) -> tuple[Fraction, Fraction]:
    B = root_bound(p)
    lo = Fraction(-B) if a == -INF else Fraction(a)
    hi = Fraction(B) if b == INF else Fraction(b)
    return lo, hi


def _split_point(p: IntPolynomial, lo: Fraction, hi: Fraction) -> Fraction:
    """A non-root near the middle of (lo, hi); dyadic when lo and hi are."""
    w = hi - lo
    mid = lo + w / 2
    if p.sign_at(mid):
        return mid
    k = 3
    while True:
        for c in (mid + w / 2**k, mid - w / 2**k):
            if p.sign_at(c):
                return c
        k += 1


def isolate_real_roots(p: IntPolynomial, a=-INF, b=INF) -> list[RationalInterval]:
    """Disjoint isolating intervals for the real roots of p in (a, b), ascending.

    Each returned interval is open-isolating: its endpoints are not roots and its
    Sturm count is exactly one.
    """
    if p.is_zero():
        raise PolynomialError("zero polynomial")
    for e in (a, b):
        if e not in (INF, -INF) and p.sign_at(e) == 0:
            raise EndpointIsRoot(f"{e} is a root of {p}")
    q = squarefree_part(p)
    if q.degree < 1:
        return []
    seq = sturm_sequence(q)
    lo, hi = _finite(q, a, b)
    out: list[RationalInterval] = []
    stack = [(lo, hi, _variations(seq, lo) - _variations(seq, hi))]
    while stack:
        l, h, c = stack.pop()
        if c == 0:
            continue
        if c == 1:
            out.append(RationalInterval(l, h))
            continue
        m = _split_point(q, l, h)
        vm = _variations(seq, m)
        stack.append((m, h, vm - _variations(seq, h)))
        stack.append((l, m, _variations(seq, l) - vm))
    out.sort(key=lambda iv: iv.lo)
    return out


def _bisection_points(p: IntPolynomial, iv: RationalInterval, sgn_lo: int):
    """Yield successively nested (lo, hi) brackets of the root, endpoints dyadic eventually."""
    lo, hi = iv.lo, iv.hi
    while True:
        w = hi - lo
        if not is_dyadic(lo):
            k = max(0, -math.floor(math.log2(w / 4)))
            d = Fraction(math.ceil((lo + w / 4) * 2**k), 2**k)
        elif not is_dyadic(hi):
            k = max(0, -math.floor(math.log2(w / 4)))
            d = Fraction(math.floor((hi - w / 4) * 2**k), 2**k)
        else:
            d = lo + w / 2
        s = p.sign_at(d)
        if s == 0:
            yield d, d
            return
        if s == sgn_lo:
            lo = d
        else:
            hi = d
        yield lo, hi


def refine_root(p: IntPolynomial, iv: RationalInterval, bits: int) -> RationalInterval:
    """Shrink an isolating interval of a simple root to width <= 2**-bits.

    Endpoints of the result are dyadic; the result lies inside ``iv``. The
    sequence of brackets is deterministic, so results for increasing ``bits``
    are nested.
    """
    s_lo, s_hi = p.sign_at(iv.lo), p.sign_at(iv.hi)
    if s_lo * s_hi >= 0 or sturm_count(p, iv.lo, iv.hi) != 1:
        raise NotIsolating(f"[{iv.lo}, {iv.hi}] does not isolate a simple root of {p}")
    target = Fraction(1, 2**bits)
    lo, hi = iv.lo, iv.hi
    if hi - lo <= target and is_dyadic(lo) and is_dyadic(hi):
        return iv
    for lo, hi in _bisection_points(p, iv, s_lo):
        if hi - lo <= target and is_dyadic(lo) and is_dyadic(hi):
            break
    return RationalInterval(lo, hi)


# --- cyclotomic factors -------------------------------------------------------


@lru_cache(maxsize=None)
def _totients(limit: int) -> tuple[int, ...]:
    phi = list(range(limit + 1))
    for i in range(2, limit + 1):
        if phi[i] == i:
            for j in range(i, limit + 1, i):
                phi[j] -= phi[j] // i
    return tuple(phi)


def cyclotomic_orders(degree: int) -> list[int]:
    """All m >= 1 with phi(m) <= degree; phi(m) >= sqrt(m/2) bounds the sieve."""
    limit = max(2, 2 * degree * degree)
    phi = _totients(limit)
    return [m for m in range(1, limit + 1) if phi[m] <= degree]


def has_cyclotomic_factor(p: IntPolynomial) -> bool:
    return cyclotomic_factor_order(p) is not None


def cyclotomic_factor_order(p: IntPolynomial) -> int | None:
    """Smallest m with gcd(p, x^m - 1) nonconstant, or None."""
    if p.is_zero():
        raise PolynomialError("zero polynomial")
    if p.degree < 1:
        return None
    for m in cyclotomic_orders(p.degree):
        xm1 = IntPolynomial([-1] + [0] * (m - 1) + [1])
        if gcd(p, xm1).degree >= 1:
            return m
    return None


# --- reciprocal polynomials and the trace transform ---------------------------


def is_reciprocal(p: IntPolynomial) -> bool:
    if p.is_zero():
        raise PolynomialError("zero polynomial")
    return p.coeffs == p.coeffs[::-1]


@lru_cache(maxsize=None)
def _power_sums(n: int) -> tuple[IntPolynomial, ...]:
    """T_k(s) with x^k + x^-k = T_k(x + 1/x); T_0 = 2."""
    s = IntPolynomial([0, 1])
    ts = [IntPolynomial([2]), s]
    for _ in range(2, n + 1):
        ts.append(s * ts[-1] - ts[-2])
    return tuple(ts[: n + 1])


def trace_transform(p: IntPolynomial) -> IntPolynomial:
    """Q of degree n with p(x) = x^n Q(x + 1/x), for p monic reciprocal of degree 2n."""
    if not p.is_monic():
        raise NotMonic(f"{p} is not monic")
    if p.degree % 2:
        raise OddDegree(f"{p} has odd degree")
    if not is_reciprocal(p):
        raise NotReciprocal(f"{p} is not reciprocal")
    n = p.degree // 2
    ts = _power_sums(n)
    q = IntPolynomial([p[n]])
    for k in range(1, n + 1):
        q = q + ts[k] * p[n + k]
    return q


def inverse_trace_transform(q: IntPolynomial) -> IntPolynomial:
    """p(x) = x^n Q(x + 1/x) expanded binomially."""
    if not q.is_monic():
        raise NotMonic(f"{q} is not monic")
    n = q.degree
    out = [0] * (2 * n + 1)
    # (x + 1/x)^k x^n = sum_j C(k, j) x^(n + k - 2j)
    for k, c in enumerate(q.coeffs):
        if c:
            for j in range(k + 1):
                out[n + k - 2 * j] += c * math.comb(k, j)
    return IntPolynomial(out)


# --- resultants ---------------------------------------------------------------


def _bareiss_det(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def resultant(a: IntPolynomial, b: IntPolynomial) -> int:
    """Sylvester-matrix resultant, exact (fraction-free Bareiss elimination)."""
    m, n = a.degree, b.degree
    if m < 0 or n < 0:
        return 0
    size = m + n
    if size == 0:
        return 1
    rows = []
    for i in range(n):
        rows.append([0] * i + list(reversed(a.coeffs)) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(reversed(b.coeffs)) + [0] * (size - n - 1 - i))
    return _bareiss_det(rows)


def discriminant(p: IntPolynomial) -> int:
    n = p.degree
    if n < 1:
        raise PolynomialError("discriminant needs degree >= 1")
    r = resultant(p, p.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    q, rem = divmod(sign * r, p.lc)
    assert rem == 0
    return q
