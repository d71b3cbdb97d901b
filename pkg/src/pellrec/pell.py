"""Generalized Pell equations x² − d·y² = t.

The unit equation x² − d·y² = 1 is solved from the continued fraction of
√d.  The general equation is organized into finitely many solution
classes: each class is the orbit of one canonical representative under
multiplication by ±(x₁ + y₁√d)^±1 and coordinate sign flips, and its
coordinate sequences satisfy V_{m+2} = 2·x₁·V_{m+1} − V_m.  Membership in
the coordinate sets X and Y is a closed-form perfect-square test.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebraic import QuadraticElem
from .errors import DomainError
from .intarith import cf_sqrt, convergent_pairs, is_perfect_square, is_squarefree, isqrt

__all__ = [
    "PellEquation",
    "FundamentalSolution",
    "SolutionClass",
    "SolutionSetHandle",
    "fundamental_solution",
    "solve_classes",
    "generate_solutions",
    "member_X",
    "member_Y",
]


@dataclass(frozen=True)
class PellEquation:
    """x² − d·y² = t with d > 1 squarefree and t ≠ 0."""

    d: int
    t: int

    def __init__(self, d: int, t: int):
        if d <= 1:
            raise DomainError("d must be an integer > 1")
        if not is_squarefree(d):
            raise DomainError(f"d = {d} is not squarefree")
        if t == 0:
            raise DomainError("t must be nonzero")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "t", t)


@dataclass(frozen=True)
class FundamentalSolution:
    """Minimal positive solution of x² − d·y² = 1 (x₁ > 1)."""

    x1: int
    y1: int


@lru_cache(maxsize=None)
def fundamental_solution(d: int) -> FundamentalSolution:
    """Smallest positive (x₁, y₁) with x₁² − d·y₁² = 1, from the continued
    fraction convergents of √d (it appears within two periods)."""
    if d <= 1 or not is_squarefree(d):
        raise DomainError("d must be a squarefree integer > 1")
    cf = cf_sqrt(d)
    for p, q in convergent_pairs(cf, 2 * cf.period_length + 1):
        if p * p - d * q * q == 1 and q >= 1:
            return FundamentalSolution(p, q)
    raise AssertionError("no fundamental solution within two periods")


def _sign_quad(a: int, b: int, d: int) -> int:
    """Exact sign of a + b·√d for integers a, b and non-square d > 1."""
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return 1 if b > 0 else -1
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    big_a = a * a > d * b * b
    return ((a > 0) - (a < 0)) if big_a else (1 if b > 0 else -1)


def _abs_exceeds(a: int, b: int, d: int, cap: int) -> bool:
    """Exact |a + b·√d| > cap."""
    if _sign_quad(a, b, d) < 0:
        a, b = -a, -b
    return _sign_quad(a - cap, b, d) > 0


@dataclass(frozen=True)
class SolutionClass:
    """One orbit of solutions, anchored at the canonical representative
    (G₀, H₀) with G₀, H₀ ≥ 0 and H₀ minimal over the orbit.

    (G₁, H₁) is the next solution up; both coordinate sequences satisfy
    V_{m+2} = 2·x₁·V_{m+1} − V_m, i.e. V_m = B·β^m + C·γ^m with
    β = x₁ + y₁·√d, γ its conjugate (units: β·γ = 1), B = (G₀ + H₀√d)/2,
    C its conjugate (B·C = t/4 ≠ 0).
    """

    equation: PellEquation
    g0: int
    h0: int
    g1: int
    h1: int

    def __post_init__(self):
        d, t = self.equation.d, self.equation.t
        for g, h in ((self.g0, self.h0), (self.g1, self.h1)):
            if g * g - d * h * h != t:
                raise AssertionError("class anchors must solve the equation")

    @property
    def recurrence_coefficients(self) -> tuple[int, int]:
        """(2·x₁, −1): shared by every class of the equation."""
        return 2 * fundamental_solution(self.equation.d).x1, -1

    @property
    def beta(self) -> QuadraticElem:
        fs = fundamental_solution(self.equation.d)
        return QuadraticElem(fs.x1, fs.y1, self.equation.d)

    @property
    def gamma(self) -> QuadraticElem:
        return self.beta.conjugate()

    @property
    def binet_x(self) -> tuple[QuadraticElem, QuadraticElem]:
        """(B, C) with G_m = B·β^m + C·γ^m."""
        b = QuadraticElem(Fraction(self.g0, 2), Fraction(self.h0, 2), self.equation.d)
        return b, b.conjugate()

    @property
    def binet_y(self) -> tuple[QuadraticElem, QuadraticElem]:
        """(B', C') with H_m = B'·β^m + C'·γ^m: B' = (G₀ + H₀√d)/(2√d),
        C' its conjugate."""
        d = self.equation.d
        b = QuadraticElem(Fraction(self.h0, 2), Fraction(self.g0, 2 * d), d)
        return b, b.conjugate()

    def solutions_in_window(self, ylimit: int) -> set[tuple[int, int]]:
        """Every integer solution of the equation produced by this class with
        |y| ≤ ylimit (all four sign combinations of the orbit elements).

        The walk in each direction stops once the relevant conjugate
        magnitude exceeds an exact cap past which |y| can never return
        below the limit.
        """
        d, t = self.equation.d, self.equation.t
        fs = fundamental_solution(d)
        x1, y1 = fs.x1, fs.y1
        root_d = isqrt(d) + 1
        cap = abs(self.g0) + (abs(self.h0) + 2 * ylimit + 2) * root_d + 2
        found: set[tuple[int, int]] = set()

        def emit(x: int, y: int):
            if abs(y) <= ylimit:
                for sx in {x, -x}:
                    for sy in {y, -y}:
                        found.add((sx, sy))

        # forward: z·β^m, |z| strictly grows
        x, y = self.g0, self.h0
        while not _abs_exceeds(x, y, d, cap):
            emit(x, y)
            x, y = x * x1 + d * y * y1, x * y1 + y * x1
        # backward: z·γ^m, |z̄| strictly grows
        x, y = self.g0, self.h0
        while not _abs_exceeds(x, -y, d, cap):
            emit(x, y)
            x, y = x * x1 - d * y * y1, y * x1 - x * y1
        return found


@dataclass(frozen=True)
class SolutionSetHandle:
    """The complete finite list of solution classes of one equation.

    `class_count` is the observed number of classes and `anchor_bound` the
    largest |coordinate| among class anchors (observed analogues of the
    abstract finiteness constants; they are reported, not asserted to be
    optimal).
    """

    equation: PellEquation
    classes: tuple[SolutionClass, ...]

    @property
    def is_solvable(self) -> bool:
        return bool(self.classes)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def anchor_bound(self) -> int:
        if not self.classes:
            return 0
        return max(
            max(abs(c.g0), abs(c.h0), abs(c.g1), abs(c.h1)) for c in self.classes
        )

    def all_solutions(self, ylimit: int) -> set[tuple[int, int]]:
        out: set[tuple[int, int]] = set()
        for cls in self.classes:
            out |= cls.solutions_in_window(ylimit)
        return out

    def to_dict(self) -> dict:
        return {
            "d": self.equation.d,
            "t": self.equation.t,
            "solvable": self.is_solvable,
            "class_count": self.class_count,
            "anchor_bound": self.anchor_bound,
            "recurrence_coefficients": list(self.classes[0].recurrence_coefficients)
            if self.classes
            else None,
            "classes": [
                {"G0": c.g0, "H0": c.h0, "G1": c.g1, "H1": c.h1} for c in self.classes
            ],
        }


def _canonical_representative(eq: PellEquation, x: int, y: int) -> tuple[int, int]:
    """Walk the orbit of (x, y) to the element with minimal |y| (then x ≥ 0,
    y ≥ 0).  |y| over the orbit is unimodal in the unit exponent, so greedy
    descent over both neighbours finds the global minimum."""
    d = eq.d
    fs = fundamental_solution(d)
    x1, y1 = fs.x1, fs.y1
    a, b = abs(x), abs(y)
    while True:
        back = (abs(a * x1 - d * b * y1), abs(b * x1 - a * y1))
        fwd = (abs(a * x1 + d * b * y1), abs(a * y1 + b * x1))
        best = min((back, fwd), key=lambda p: p[1])
        if best[1] < b:
            a, b = best
        else:
            return a, b


def _search_bound(eq: PellEquation) -> int:
    """Exhaustive-search cap on |y| for class representatives: the classical
    fundamental-region bounds max(y₁·√(|t|(x₁+1)/2)/√d, y₁·√|t|), rounded up."""
    fs = fundamental_solution(eq.d)
    t = abs(eq.t)
    b1 = fs.y1 * fs.y1 * t * (fs.x1 + 1) // (2 * eq.d)
    b2 = fs.y1 * fs.y1 * t
    return 1 + isqrt(max(b1, b2))


def solve_classes(eq: PellEquation) -> SolutionSetHandle:
    """All solution classes of x² − d·y² = t.

    Scans 0 ≤ y ≤ the classical fundamental-region bound, reduces every hit
    to its canonical orbit representative, and deduplicates.  An unsolvable
    equation yields an empty handle (not an error).
    """
    d, t = eq.d, eq.t
    fs = fundamental_solution(d)
    reps: set[tuple[int, int]] = set()
    for y in range(0, _search_bound(eq) + 1):
        rhs = t + d * y * y
        if rhs < 0:
            continue
        ok, x = is_perfect_square(rhs)
        if ok:
            reps.add(_canonical_representative(eq, x, y))
    classes = []
    for g0, h0 in sorted(reps, key=lambda p: (p[1], p[0])):
        g1 = g0 * fs.x1 + d * h0 * fs.y1
        h1 = g0 * fs.y1 + h0 * fs.x1
        classes.append(SolutionClass(eq, g0, h0, g1, h1))
    return SolutionSetHandle(eq, tuple(classes))


def generate_solutions(cls: SolutionClass, count: int) -> list[tuple[int, int, int]]:
    """First `count` solutions (x, y, m) of the class, m = 0, 1, 2, ...
    via V_{m+2} = 2·x₁·V_{m+1} − V_m.  Every emitted pair is re-checked
    against the equation."""
    if count < 1:
        raise DomainError("count must be >= 1")
    d, t = cls.equation.d, cls.equation.t
    two_x1 = cls.recurrence_coefficients[0]
    out = []
    gx = [cls.g0, cls.g1]
    hy = [cls.h0, cls.h1]
    for m in range(count):
        if m >= 2:
            gx.append(two_x1 * gx[-1] - gx[-2])
            hy.append(two_x1 * hy[-1] - hy[-2])
        x, y = gx[m], hy[m]
        if x * x - d * y * y != t:
            raise AssertionError("generated pair violates the equation")
        out.append((x, y, m))
    return out


def member_X(eq: PellEquation, v: int, positive_only: bool = False):
    """Is v an x-coordinate of some integer solution?  Returns (flag, y).

    v ∈ X  ⇔  v² − t ≥ 0, divisible by d, and (v² − t)/d is a perfect
    square.  With positive_only=True, only solutions with x, y ≥ 1 count
    (the positive-solution convention)."""
    w = v * v - eq.t
    if w < 0 or w % eq.d:
        return False, None
    ok, y = is_perfect_square(w // eq.d)
    if not ok:
        return False, None
    if positive_only and (v < 1 or y < 1):
        return False, None
    return True, y


def member_Y(eq: PellEquation, v: int, positive_only: bool = False):
    """Is v a y-coordinate of some integer solution?  Returns (flag, x).

    v ∈ Y  ⇔  d·v² + t is a nonnegative perfect square."""
    w = eq.d * v * v + eq.t
    if w < 0:
        return False, None
    ok, x = is_perfect_square(w)
    if not ok:
        return False, None
    if positive_only and (v < 1 or x < 1):
        return False, None
    return True, x
