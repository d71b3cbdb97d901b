"""Exact integer primitives: integer square roots, perfect-square tests,
and the periodic continued fraction of √d.

Everything here works on arbitrary-precision ints and ``fractions.Fraction``.
No floating point is used anywhere: membership tests and fundamental
solutions downstream must be bit-exact.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import count as _count

from .errors import DomainError

__all__ = [
    "isqrt",
    "is_perfect_square",
    "is_squarefree",
    "squarefree_part",
    "totient",
    "ContinuedFraction",
    "cf_sqrt",
    "convergents",
]


def isqrt(n: int) -> int:
    """Exact floor of √n for n ≥ 0."""
    if n < 0:
        raise DomainError("isqrt is undefined for negative integers")
    return math.isqrt(n)


def is_perfect_square(n: int) -> tuple[bool, int | None]:
    """Whether n is a perfect square; returns the nonnegative root when it is."""
    if n < 0:
        return False, None
    r = math.isqrt(n)
    if r * r == n:
        return True, r
    return False, None


def is_squarefree(n: int) -> bool:
    """Trial-division squarefreeness test for n ≥ 1 (desk scale, n ≤ ~10¹²)."""
    if n < 1:
        raise DomainError("squarefreeness is tested for positive integers only")
    if n % 4 == 0:
        return False
    while n % 2 == 0:
        n //= 2
    p = 3
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        while n % p == 0:
            n //= p
        p += 2
    return True


def squarefree_part(n: int) -> tuple[int, int]:
    """Write n = s²·D with D squarefree (sign of n carried by D).

    Returns (s, D).  n must be nonzero.
    """
    if n == 0:
        raise DomainError("0 has no squarefree decomposition")
    sign = 1 if n > 0 else -1
    n = abs(n)
    s, d = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    d *= n  # leftover prime
    return s, sign * d


def totient(n: int) -> int:
    """Euler's φ(n) by trial-division factorization."""
    if n < 1:
        raise DomainError("totient is defined for positive integers")
    result = n
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if n > 1:
        result -= result // n
    return result


@dataclass(frozen=True)
class ContinuedFraction:
    """Periodic continued fraction [a0; a1, ..., aL, a1, ..., aL, ...] of a
    quadratic surd √d.

    For non-square d > 1 the tail is purely periodic and ends with 2·a0
    (classical palindrome property).
    """

    a0: int
    tail: tuple[int, ...]

    @property
    def period_length(self) -> int:
        return len(self.tail)

    def coefficients(self):
        """Infinite generator a0, a1, a2, ... cycling through the period."""
        yield self.a0
        while True:
            yield from self.tail


def cf_sqrt(d: int) -> ContinuedFraction:
    """Exact periodic continued fraction expansion of √d for non-square d > 1.

    Uses the standard (m, den, a) iteration:
        m'   = den·a − m
        den' = (d − m'²) / den
        a'   = ⌊(a0 + m') / den'⌋
    The period closes when the state (m, den) returns to its initial value.
    """
    if d <= 1:
        raise DomainError("cf_sqrt needs d > 1")
    a0 = math.isqrt(d)
    if a0 * a0 == d:
        raise DomainError("cf_sqrt is undefined for perfect squares")
    tail = []
    m, den, a = 0, 1, a0
    first_state = None
    while True:
        m = den * a - m
        den = (d - m * m) // den
        a = (a0 + m) // den
        state = (m, den)
        if first_state is None:
            first_state = state
        elif state == first_state:
            break
        tail.append(a)
        if a == 2 * a0 and den == 1:
            break
    return ContinuedFraction(a0, tuple(tail))


def convergents(cf: ContinuedFraction, count: int) -> list[Fraction]:
    """First `count` convergents p/q of a continued fraction, in lowest terms.

    Standard three-term recurrences p_k = a_k·p_{k-1} + p_{k-2} (same for q);
    Fraction normalization keeps gcd(p, q) = 1 automatically.
    """
    if count < 1:
        raise DomainError("convergents needs count >= 1")
    return [Fraction(p, q) for p, q in convergent_pairs(cf, count)]


def convergent_pairs(cf: ContinuedFraction, limit: int):
    """Generator of raw convergent pairs (p, q), up to `limit` of them."""
    pm2, pm1 = 0, 1
    qm2, qm1 = 1, 0
    coeffs = cf.coefficients()
    for _ in range(limit):
        a = next(coeffs)
        pm2, pm1 = pm1, a * pm1 + pm2
        qm2, qm1 = qm1, a * qm1 + qm2
        yield pm1, qm1
