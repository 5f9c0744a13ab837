"""Trace field and quaternion ramification data attached to a Salem number.

Only degree-one primes of k0 = Q(s0) are searched: pairs (p, a) with Q(a) = 0
mod p. Since tau^2 - s0 tau + 1 = 0, such a prime is inert in k0(tau) exactly
when a^2 - 4 is a non-residue mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .intpoly import IntPolynomial, RationalInterval, discriminant, sturm_count
from .salem import NotFound, SalemCertificate

DEFAULT_PRIME_BOUND = 10_000
TRACE_DELTA = IntPolynomial([-4, 0, 1])  # s^2 - 4


@dataclass(frozen=True)
class TraceFieldData:
    q: IntPolynomial
    degree: int
    totally_real: bool
    s0_interval: RationalInterval
    disc_q: int


@dataclass(frozen=True)
class RamificationPlan:
    archimedean_count: int
    finite_prime: Optional[tuple[int, int]]
    delta_residue: Optional[int]
    parity_ok: bool

    @property
    def ramified_places(self) -> int:
        return self.archimedean_count + (1 if self.finite_prime else 0)

    def to_json(self) -> dict:
        fp = self.finite_prime
        return {
            "archimedean_count": str(self.archimedean_count),
            "finite_prime": None if fp is None else {"p": str(fp[0]), "a": str(fp[1])},
            "delta_residue": None if self.delta_residue is None else str(self.delta_residue),
            "parity_ok": self.parity_ok,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "RamificationPlan":
        fp = obj.get("finite_prime")
        dr = obj.get("delta_residue")
        return cls(
            archimedean_count=int(obj["archimedean_count"]),
            finite_prime=None if fp is None else (int(fp["p"]), int(fp["a"])),
            delta_residue=None if dr is None else int(dr),
            parity_ok=bool(obj["parity_ok"]),
        )


def trace_field(cert: SalemCertificate) -> TraceFieldData:
    q = cert.q
    return TraceFieldData(
        q=q,
        degree=q.degree,
        totally_real=sturm_count(q) == q.degree,
        s0_interval=cert.s0_interval,
        disc_q=discriminant(q),
    )


def legendre(n: int, p: int) -> int:
    """Legendre symbol (n/p) for an odd prime p, by Euler's criterion."""
    r = pow(n % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


@lru_cache(maxsize=16)
def odd_primes(bound: int) -> tuple[int, ...]:
    if bound < 3:
        return ()
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(bound**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return tuple(i for i in range(3, bound + 1) if sieve[i])


def _degree_one_primes(tf: TraceFieldData, bound: int, primes=None):
    """(p, a) with p odd, p not dividing disc Q and Q(a) = 0 mod p, lexicographically."""
    for p in odd_primes(bound) if primes is None else primes:
        if tf.disc_q % p == 0:
            continue
        for a in range(p):
            if tf.q.eval_mod(a, p) == 0:
                yield p, a


def find_inert_prime(tf: TraceFieldData, bound: int = DEFAULT_PRIME_BOUND) -> tuple[int, int]:
    if tf.degree % 2:
        raise ValueError("a finite ramified prime is only needed for even degree")
    for p, a in _degree_one_primes(tf, bound):
        d = (a * a - 4) % p
        if d and legendre(d, p) == -1:
            return p, a
    raise NotFound(f"no inert degree-one prime <= {bound}")


def find_split_prime(tf: TraceFieldData, delta: IntPolynomial, bound: int = DEFAULT_PRIME_BOUND) -> tuple[int, int]:
    """Smallest degree-one prime (p, a) where delta(a) is a nonzero square mod p."""
    if delta.is_zero():
        raise ValueError("delta must be nonzero")
    for p, a in _degree_one_primes(tf, bound):
        if legendre(delta.eval_mod(a, p), p) == 1:
            return p, a
    raise NotFound(f"no split degree-one prime <= {bound}")


def ramification_plan(cert: SalemCertificate, bound: int = DEFAULT_PRIME_BOUND) -> RamificationPlan:
    """Ram(A): every real place but the defining one, plus one inert prime when needed for parity."""
    tf = trace_field(cert)
    arch = tf.degree - 1
    fp = None
    residue = None
    if tf.degree % 2 == 0:
        fp = find_inert_prime(tf, bound)
        p, a = fp
        residue = (a * a - 4) % p
    count = arch + (1 if fp else 0)
    return RamificationPlan(arch, fp, residue, count % 2 == 0)


def torsion_order_bound(degree: int) -> int:
    """phi(n) <= 2 * [k0 : Q] whenever 2 cos(2 pi / n) lies in k0."""
    return 2 * degree
