"""Dense integer polynomials and the exact root-isolation toolkit.

Coefficients are stored constant-first: (c0, c1, ..., cd) means
c0 + c1·x + ... + cd·x^d.  All algorithms are exact: rational arithmetic
via fractions.Fraction, integer arithmetic for resultants and division.

The complex root isolation is classical rectangle subdivision: the number
of roots inside a rational rectangle is the winding number of f along the
boundary, computed exactly through Cauchy indices of signed-remainder
(Sturm-type) sequences of the real/imaginary edge polynomials.  Rectangles
are split in half (the cut nudged off roots and corner degeneracies) until
each holds a single root.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, ResourceLimitError
from .intarith import totient

__all__ = [
    "IntPolynomial",
    "Box",
    "resultant",
    "cyclotomic",
    "orders_with_totient_at_most",
    "isolate_roots",
    "refine_box",
    "count_roots_in_box",
]


# ---------------------------------------------------------------------------
# Rational polynomial helpers (tuples of Fraction, constant-first)
# ---------------------------------------------------------------------------

QPoly = tuple  # tuple[Fraction, ...]

_F0 = Fraction(0)
_F1 = Fraction(1)


def _qtrim(cs) -> QPoly:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _qadd(a: QPoly, b: QPoly) -> QPoly:
    n = max(len(a), len(b))
    return _qtrim(
        (a[i] if i < len(a) else _F0) + (b[i] if i < len(b) else _F0) for i in range(n)
    )


def _qneg(a: QPoly) -> QPoly:
    return tuple(-c for c in a)


def _qscale(a: QPoly, k: Fraction) -> QPoly:
    if k == 0:
        return ()
    return tuple(c * k for c in a)


def _qmul(a: QPoly, b: QPoly) -> QPoly:
    if not a or not b:
        return ()
    out = [_F0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _qtrim(out)


def _qshift(a: QPoly) -> QPoly:
    """Multiply by x."""
    if not a:
        return ()
    return (_F0,) + tuple(a)


def _qdivmod(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [_F0] * max(0, len(a) - len(b) + 1)
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        k = len(r) - 1 - db
        c = r[-1] / lb
        q[k] = c
        for i in range(db + 1):
            r[k + i] -= c * b[i]
        r.pop()
    return _qtrim(q), _qtrim(r)


def _qeval(a: QPoly, x: Fraction) -> Fraction:
    acc = _F0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _qderiv(a: QPoly) -> QPoly:
    return _qtrim(i * a[i] for i in range(1, len(a)))


def _qmonic(a: QPoly) -> QPoly:
    if not a:
        return ()
    return tuple(c / a[-1] for c in a)


def _qgcd(a: QPoly, b: QPoly) -> QPoly:
    while b:
        _, r = _qdivmod(a, b)
        a, b = b, r
    return _qmonic(a)


def _qxgcd(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly, QPoly]:
    """Extended Euclid in ℚ[x]: returns (g, u, v) with u·a + v·b = g, g monic."""
    r0, r1 = a, b
    u0, u1 = (_F1,), ()
    v0, v1 = (), (_F1,)
    while r1:
        q, r = _qdivmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _qadd(u0, _qneg(_qmul(q, u1)))
        v0, v1 = v1, _qadd(v0, _qneg(_qmul(q, v1)))
    if r0:
        lead = r0[-1]
        r0 = tuple(c / lead for c in r0)
        u0 = tuple(c / lead for c in u0)
        v0 = tuple(c / lead for c in v0)
    return r0, u0, v0


# ---------------------------------------------------------------------------
# Signed remainder sequences and Cauchy indices
# ---------------------------------------------------------------------------


def _signed_remainder_chain(p: QPoly, q: QPoly) -> list[QPoly]:
    chain = [p]
    if q:
        chain.append(q)
        while True:
            _, r = _qdivmod(chain[-2], chain[-1])
            if not r:
                break
            chain.append(_qneg(r))
    return chain


def _variations(values) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _var_at(chain: list[QPoly], x: Fraction) -> int:
    return _variations(_qeval(c, x) for c in chain)


def cauchy_index(p: QPoly, q: QPoly, a: Fraction, b: Fraction) -> int:
    """Cauchy index of q/p over [a, b]: (+∞ jumps) − (−∞ jumps) at poles.

    Requires p(a) ≠ 0 and p(b) ≠ 0.
    """
    if _qeval(p, a) == 0 or _qeval(p, b) == 0:
        raise DomainError("Cauchy index endpoint lies on a pole")
    chain = _signed_remainder_chain(p, q)
    return _var_at(chain, a) - _var_at(chain, b)


def _sturm_count(g: QPoly, a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots of g in (a, b], endpoints off the roots."""
    return cauchy_index(g, _qderiv(g), a, b)


# ---------------------------------------------------------------------------
# Integer polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients constant-first, trailing zeros stripped."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in cs))

    # -- basic structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if self.is_zero:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return not self.is_zero and self.leading == 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        if self.is_zero:
            return "IntPolynomial('0')"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            term = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = "" if (abs(c) == 1 and i > 0) else str(abs(c))
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(f"{sign} {mag}{term}".strip() if parts else f"{sign}{mag}{term}")
        return f"IntPolynomial('{' '.join(parts)}')"

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            (self.coeffs[i] if i < len(self.coeffs) else 0)
            + (other.coeffs[i] if i < len(other.coeffs) else 0)
            for i in range(n)
        )

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def scale(self, k: int) -> "IntPolynomial":
        return IntPolynomial(k * c for c in self.coeffs)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * self.coeffs[i] for i in range(1, len(self.coeffs)))

    def divide_exact(self, other: "IntPolynomial") -> "IntPolynomial | None":
        """Exact quotient self/other in ℤ[x], or None when it does not divide."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q, r = _qdivmod(self.to_q(), other.to_q())
        if r:
            return None
        if any(c.denominator != 1 for c in q):
            return None
        return IntPolynomial(int(c) for c in q)

    # -- conversions ----------------------------------------------------------

    def to_q(self) -> QPoly:
        return tuple(Fraction(c) for c in self.coeffs)

    @staticmethod
    def from_q(q: QPoly) -> "IntPolynomial":
        """Clear denominators and content: primitive part with positive leading."""
        q = _qtrim(q)
        if not q:
            return IntPolynomial(())
        den = math.lcm(*(c.denominator for c in q))
        ints = [int(c * den) for c in q]
        g = math.gcd(*(abs(c) for c in ints))
        if ints[-1] < 0:
            g = -g
        return IntPolynomial(c // g for c in ints)

    # -- content / primitive / squarefree -------------------------------------

    def content(self) -> int:
        """gcd of coefficients, carrying the sign of the leading coefficient."""
        if self.is_zero:
            return 0
        g = math.gcd(*(abs(c) for c in self.coeffs))
        return -g if self.leading < 0 else g

    def primitive_part(self) -> "IntPolynomial":
        c = self.content()
        return IntPolynomial(v // c for v in self.coeffs)

    def gcd(self, other: "IntPolynomial") -> "IntPolynomial":
        """Primitive gcd in ℤ[x] with positive leading coefficient."""
        if self.is_zero:
            return other.primitive_part() if not other.is_zero else IntPolynomial(())
        if other.is_zero:
            return self.primitive_part()
        return IntPolynomial.from_q(_qgcd(self.to_q(), other.to_q()))

    def is_squarefree(self) -> bool:
        if self.is_zero:
            return False
        return self.gcd(self.derivative()).degree == 0

    def squarefree_part(self) -> "IntPolynomial":
        """Primitive product of the distinct irreducible factors."""
        if self.is_zero:
            raise DomainError("zero polynomial has no squarefree part")
        if self.degree == 0:
            return IntPolynomial((1,))
        g = self.gcd(self.derivative())
        q = self.primitive_part().divide_exact(g)
        return q.primitive_part()

    # -- factorization ---------------------------------------------------------

    def factor(self) -> tuple[int, list[tuple["IntPolynomial", int]]]:
        """Full factorization over ℤ: (content, [(primitive irreducible, multiplicity)]).

        Desk-scale algorithm: Yun squarefree decomposition, then rational
        roots plus Kronecker interpolation for higher-degree factors.
        """
        if self.is_zero:
            raise DomainError("cannot factor the zero polynomial")
        content = self.content()
        prim = self.primitive_part()
        factors: list[tuple[IntPolynomial, int]] = []
        for part, mult in _yun_squarefree(prim):
            for irr in _factor_squarefree(part):
                factors.append((irr, mult))
        factors.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
        return content, factors


def _yun_squarefree(f: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm: f primitive -> [(squarefree part, multiplicity)]."""
    if f.degree == 0:
        return []
    out = []
    g = f.gcd(f.derivative())
    if g.degree == 0:
        return [(f, 1)]
    w = f.primitive_part().divide_exact(g)
    i = 1
    while w.degree > 0:
        y = w.gcd(g)
        s = w.divide_exact(y)
        if s.degree > 0:
            out.append((s.primitive_part(), i))
        w = y
        g = g.divide_exact(y)
        if g is None:  # pragma: no cover - primitive bookkeeping
            raise AssertionError("Yun decomposition lost integrality")
        i += 1
    return out


def _int_divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _rational_roots(f: IntPolynomial) -> list[Fraction]:
    """All rational roots of a primitive squarefree polynomial."""
    roots = []
    if f.constant == 0:
        roots.append(Fraction(0))
        return roots  # caller strips x and re-runs
    for q in _int_divisors(f.leading):
        for p in _int_divisors(f.constant):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if f(cand) == 0 and cand not in roots:
                    roots.append(cand)
    roots.sort()
    return roots


_KRONECKER_WORK_LIMIT = 2_000_000


def _factor_squarefree(f: IntPolynomial) -> list[IntPolynomial]:
    """Irreducible factors of a primitive squarefree polynomial (any order)."""
    if f.degree <= 0:
        return []
    if f.degree == 1:
        return [f if f.leading > 0 else -f]
    if f.constant == 0:
        rest = f.divide_exact(IntPolynomial((0, 1)))
        return [IntPolynomial((0, 1))] + _factor_squarefree(rest)
    factors = []
    work = f
    for root in _rational_roots(f):
        lin = IntPolynomial((-root.numerator, root.denominator))
        quot = work.divide_exact(lin)
        if quot is not None:
            factors.append(lin)
            work = quot
    if work.degree <= 1:
        if work.degree == 1:
            factors.append(work if work.leading > 0 else -work)
        return factors
    split = _kronecker_split(work)
    if split is None:
        factors.append(work if work.leading > 0 else -work)
    else:
        g, h = split
        factors.extend(_factor_squarefree(g))
        factors.extend(_factor_squarefree(h))
    return factors


def _kronecker_split(f: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial] | None:
    """Find a nontrivial factorization f = g·h with 2 <= deg g <= deg f / 2.

    Interpolates candidate factors through divisor tuples of f at small
    integer points (f has no rational roots here, so f(point) ≠ 0).
    """
    points_pool = [0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6]
    for m in range(2, f.degree // 2 + 1):
        pts = points_pool[: m + 1]
        vals = [f(t) for t in pts]
        divisor_lists = [_int_divisors(v) for v in vals]
        work = 1
        for dl in divisor_lists:
            work *= 2 * len(dl)
        if work > _KRONECKER_WORK_LIMIT:
            raise ResourceLimitError(
                f"factorization search space too large ({work} candidates)"
            )
        for combo in _divisor_tuples(divisor_lists):
            g = _interpolate(pts, combo)
            if len(g) - 1 != m or any(c.denominator != 1 for c in g):
                continue
            gi = IntPolynomial(int(c) for c in g)
            h = f.divide_exact(gi)
            if h is not None:
                return gi, h
    return None


def _divisor_tuples(divisor_lists):
    """Signed divisor combinations; the first coordinate stays positive
    (g and -g divide together, so half the space suffices)."""

    def rec(i, acc):
        if i == len(divisor_lists):
            yield tuple(acc)
            return
        for d in divisor_lists[i]:
            signs = (d,) if i == 0 else (d, -d)
            for s in signs:
                acc.append(s)
                yield from rec(i + 1, acc)
                acc.pop()

    yield from rec(0, [])


def _interpolate(xs, ys) -> QPoly:
    """Lagrange interpolation over ℚ through (xs[i], ys[i])."""
    result: QPoly = ()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        num: QPoly = (Fraction(yi),)
        den = _F1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            num = _qmul(num, (Fraction(-xj), _F1))
            den *= Fraction(xi - xj)
        result = _qadd(result, _qscale(num, 1 / den))
    return result


# ---------------------------------------------------------------------------
# Resultants (Sylvester matrix, fraction-free Bareiss elimination)
# ---------------------------------------------------------------------------


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Res(f, g) over ℤ.  Zero iff f and g share a complex root."""
    if f.is_zero or g.is_zero:
        raise DomainError("resultant needs nonzero polynomials")
    m, n = f.degree, g.degree
    if m == 0:
        return f.constant**n
    if n == 0:
        return g.constant**m
    size = m + n
    mat = [[0] * size for _ in range(size)]
    fc = f.coeffs[::-1]  # leading first
    gc = g.coeffs[::-1]
    for i in range(n):
        mat[i][i : i + m + 1] = fc
    for i in range(m):
        mat[n + i][i : i + n + 1] = gc
    return _bareiss_det(mat)


def _bareiss_det(mat: list[list[int]]) -> int:
    n = len(mat)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            for r in range(k + 1, n):
                if mat[r][k] != 0:
                    mat[k], mat[r] = mat[r], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) // prev
            mat[i][k] = 0
        prev = mat[k][k]
    return sign * mat[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Cyclotomic polynomials
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial Φ_n, via Φ_n = (x^n − 1)/∏_{d|n, d<n} Φ_d."""
    if n < 1:
        raise DomainError("cyclotomic index must be positive")
    num = IntPolynomial([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            num = num.divide_exact(cyclotomic(d))
    return num


def orders_with_totient_at_most(bound: int) -> list[int]:
    """All n with φ(n) ≤ bound (finite: φ(n) ≥ √(n/2))."""
    if bound < 1:
        return []
    limit = 2 * bound * bound + 1
    return [n for n in range(1, limit + 1) if totient(n) <= bound]


# ---------------------------------------------------------------------------
# Exact complex root isolation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Box:
    """Axis-aligned rational rectangle [x0, x1] × [y0, y1] in ℂ."""

    x0: Fraction
    x1: Fraction
    y0: Fraction
    y1: Fraction

    @property
    def width(self) -> Fraction:
        return self.x1 - self.x0

    @property
    def height(self) -> Fraction:
        return self.y1 - self.y0

    @property
    def midpoint(self) -> tuple[Fraction, Fraction]:
        return (self.x0 + self.x1) / 2, (self.y0 + self.y1) / 2

    def approx(self) -> complex:
        mx, my = self.midpoint
        return complex(mx, my)

    def contains(self, x: Fraction, y: Fraction) -> bool:
        return self.x0 <= x <= self.x1 and self.y0 <= y <= self.y1


def _edge_horizontal(f: IntPolynomial, c: Fraction) -> tuple[QPoly, QPoly]:
    """Real/imaginary parts of f(t + i·c) as polynomials in t."""
    u: QPoly = ()
    v: QPoly = ()
    for a in reversed(f.coeffs):
        u, v = _qadd(_qadd(_qshift(u), _qscale(v, -c)), (Fraction(a),)), _qadd(
            _qshift(v), _qscale(u, c)
        )
    return u, v


def _edge_vertical(f: IntPolynomial, c: Fraction) -> tuple[QPoly, QPoly]:
    """Real/imaginary parts of f(c + i·t) as polynomials in t."""
    u: QPoly = ()
    v: QPoly = ()
    for a in reversed(f.coeffs):
        u, v = _qadd(_qadd(_qscale(u, c), _qneg(_qshift(v))), (Fraction(a),)), _qadd(
            _qshift(u), _qscale(v, c)
        )
    return u, v


def eval_complex(f: IntPolynomial, x: Fraction, y: Fraction) -> tuple[Fraction, Fraction]:
    """f(x + iy) as an exact (re, im) pair."""
    re, im = _F0, _F0
    for a in reversed(f.coeffs):
        re, im = re * x - im * y + a, re * y + im * x
    return re, im


def _corner_regular(f: IntPolynomial, x: Fraction, y: Fraction) -> bool:
    re, im = eval_complex(f, x, y)
    return re != 0 and im != 0


def _segment_has_root(u: QPoly, v: QPoly, t0: Fraction, t1: Fraction) -> bool:
    """Whether f vanishes somewhere on the closed edge parametrized by t."""
    g = _qgcd(u, v)
    if not g:
        return True  # u = v = 0 identically: f vanishes on the whole line
    if len(g) == 1:
        return False
    if _qeval(g, t0) == 0 or _qeval(g, t1) == 0:
        return True
    return _sturm_count(g, t0, t1) > 0


def _boundary_ok(f: IntPolynomial, box: Box) -> bool:
    for x, y in (
        (box.x0, box.y0),
        (box.x1, box.y0),
        (box.x1, box.y1),
        (box.x0, box.y1),
    ):
        if not _corner_regular(f, x, y):
            return False
    ub, vb = _edge_horizontal(f, box.y0)
    if _segment_has_root(ub, vb, box.x0, box.x1):
        return False
    ut, vt = _edge_horizontal(f, box.y1)
    if _segment_has_root(ut, vt, box.x0, box.x1):
        return False
    ul, vl = _edge_vertical(f, box.x0)
    if _segment_has_root(ul, vl, box.y0, box.y1):
        return False
    ur, vr = _edge_vertical(f, box.x1)
    if _segment_has_root(ur, vr, box.y0, box.y1):
        return False
    return True


def count_roots_in_box(f: IntPolynomial, box: Box) -> int:
    """Number of roots of f inside the box (with multiplicity), by the winding
    number of f along the counterclockwise boundary.

    Requires f nonzero on the boundary and both components of f nonzero at
    the corners (use `_boundary_ok` first when in doubt).
    """
    ub, vb = _edge_horizontal(f, box.y0)
    ut, vt = _edge_horizontal(f, box.y1)
    ul, vl = _edge_vertical(f, box.x0)
    ur, vr = _edge_vertical(f, box.x1)
    total = (
        cauchy_index(vb, ub, box.x0, box.x1)
        + cauchy_index(vr, ur, box.y0, box.y1)
        - cauchy_index(vt, ut, box.x0, box.x1)
        - cauchy_index(vl, ul, box.y0, box.y1)
    )
    if total % 2:
        raise AssertionError("odd total Cauchy index: boundary touches a root?")
    return total // 2


def _cauchy_radius(f: IntPolynomial) -> Fraction:
    """Strict bound: every root has |α| < 1 + max|c_i| / |lead|."""
    lead = abs(f.leading)
    if f.degree == 0:
        return Fraction(1)
    return 1 + Fraction(max(abs(c) for c in f.coeffs[:-1]), lead)


def _initial_box(f: IntPolynomial) -> Box:
    m = _cauchy_radius(f)
    for j in range(64):
        mm = m + Fraction(j, 7)
        box = Box(-mm, mm, -mm - Fraction(1, 3), mm + Fraction(2, 5))
        if _boundary_ok(f, box):
            return box
    raise AssertionError("could not find a regular initial box")


def _split_candidates(lo: Fraction, hi: Fraction, n: int):
    mid = (lo + hi) / 2
    width = hi - lo
    yield mid
    for j in range(1, 4 * (n + 2)):
        off = width * Fraction(j, 16 * (n + 2))
        yield mid + off
        yield mid - off


def _split_box(f: IntPolynomial, box: Box) -> tuple[Box, Box]:
    vertical = box.width >= box.height  # split the longer side
    n = f.degree
    if vertical:
        for c in _split_candidates(box.x0, box.x1, n):
            u, v = _edge_vertical(f, c)
            if _segment_has_root(u, v, box.y0, box.y1):
                continue
            if not (_corner_regular(f, c, box.y0) and _corner_regular(f, c, box.y1)):
                continue
            return Box(box.x0, c, box.y0, box.y1), Box(c, box.x1, box.y0, box.y1)
    else:
        for c in _split_candidates(box.y0, box.y1, n):
            u, v = _edge_horizontal(f, c)
            if _segment_has_root(u, v, box.x0, box.x1):
                continue
            if not (_corner_regular(f, box.x0, c) and _corner_regular(f, box.x1, c)):
                continue
            return Box(box.x0, box.x1, box.y0, c), Box(box.x0, box.x1, c, box.y1)
    raise AssertionError("no admissible cut line found")


def isolate_roots(f: IntPolynomial) -> list[Box]:
    """Isolating boxes for all complex roots of a squarefree polynomial.

    Deterministic: returned boxes are sorted by (x0, y0).
    """
    if f.is_zero or f.degree < 1:
        raise DomainError("isolate_roots needs degree >= 1")
    if not f.is_squarefree():
        raise DomainError("isolate_roots needs a squarefree polynomial")
    box = _initial_box(f)
    total = count_roots_in_box(f, box)
    if total != f.degree:
        raise AssertionError("initial box missed roots")
    done: list[Box] = []
    queue: list[tuple[Box, int]] = [(box, total)]
    steps = 0
    while queue:
        steps += 1
        if steps > 400 * f.degree:
            raise ResourceLimitError("root isolation did not converge")
        b, n = queue.pop()
        if n == 0:
            continue
        if n == 1:
            done.append(b)
            continue
        left, right = _split_box(f, b)
        nl = count_roots_in_box(f, left)
        nr = count_roots_in_box(f, right)
        if nl + nr != n:
            raise AssertionError("subdivision lost roots")
        queue.append((left, nl))
        queue.append((right, nr))
    done.sort(key=lambda b: (b.x0, b.y0))
    return done


def refine_box(f: IntPolynomial, box: Box) -> Box:
    """Halve an isolating box, keeping the unique root inside."""
    left, right = _split_box(f, box)
    if count_roots_in_box(f, left) == 1:
        return left
    return right
