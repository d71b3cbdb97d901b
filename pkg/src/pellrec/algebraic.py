"""Exact algebraic-number predicates: quadratic field arithmetic, root
extraction with isolating boxes, root-of-unity and degeneracy tests,
bounded multiplicative-dependence search, and the excluded binary form
x² + ax ± 1 with (a² ∓ 4)/d a rational square.

Arithmetic lives in ℚ and real/imaginary quadratic fields ℚ(√D)
(``QuadraticElem``); roots of higher degree are carried as a minimal
polynomial plus an exact isolating box (``AlgebraicNumber``) and support
only the operations the predicates need.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ResourceLimitError
from .intarith import is_perfect_square, squarefree_part
from .poly import (
    Box,
    IntPolynomial,
    cyclotomic,
    isolate_roots,
    orders_with_totient_at_most,
    refine_box,
    resultant,
    _qadd,
    _qdivmod,
    _qmul,
    _qneg,
    _qscale,
    _qtrim,
    _qxgcd,
    _interpolate,
)

__all__ = [
    "QuadraticElem",
    "AlgebraicNumber",
    "NumberFieldElem",
    "roots_of",
    "is_root_of_unity",
    "ratio_poly",
    "is_degenerate",
    "mult_dependent",
    "is_excluded_binary",
    "quad_unit_check",
    "power_sums",
]

_F0 = Fraction(0)


# ---------------------------------------------------------------------------
# Quadratic field elements a + b·√d
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadraticElem:
    """Exact element a + b·√d of ℚ(√d), d squarefree, d ∉ {0, 1}.

    Negative d gives an imaginary quadratic field, e.g. (1 + √-3)/2 is
    QuadraticElem(1/2, 1/2, -3).
    """

    a: Fraction
    b: Fraction
    d: int

    def __init__(self, a, b, d: int):
        s, sf = squarefree_part(d) if d != 0 else (0, 0)
        if d in (0, 1) or s != 1:
            raise DomainError(f"√{d} does not generate a quadratic field reduced form")
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "d", d)

    # -- structure -------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def conjugate(self) -> "QuadraticElem":
        return QuadraticElem(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a

    def _pair(self, other):
        """Coordinates of self and other in a common field: (sa, sb, oa, ob, d)."""
        if isinstance(other, (int, Fraction)):
            return self.a, self.b, Fraction(other), _F0, self.d
        if isinstance(other, QuadraticElem):
            if self.b != 0 and other.b != 0 and self.d != other.d:
                raise DomainError("mixed quadratic fields")
            d = self.d if self.b != 0 else (other.d if other.b != 0 else self.d)
            return self.a, self.b, other.a, other.b, d
        return None

    # -- field operations --------------------------------------------------

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        sa, sb, oa, ob, d = pair
        return QuadraticElem(sa + oa, sb + ob, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticElem(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        sa, sb, oa, ob, d = pair
        return QuadraticElem(sa * oa + d * sb * ob, sa * ob + sb * oa, d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadraticElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero element of a quadratic field")
        return QuadraticElem(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        _, _, oa, ob, d = pair
        return self * QuadraticElem(oa, ob, d).inverse()

    def __pow__(self, n: int) -> "QuadraticElem":
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadraticElem(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadraticElem):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return self.d == other.d and self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    # -- real-field extras --------------------------------------------------

    def sign(self) -> int:
        """Sign of the real number a + b√d (requires d > 0)."""
        if self.d < 0:
            raise DomainError("sign of a non-real quadratic element")
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a² with d·b²
        lhs, rhs = a * a, self.d * b * b
        if lhs == rhs:
            return 0
        big_is_a = lhs > rhs
        return (1 if a > 0 else -1) if big_is_a else (1 if b > 0 else -1)

    def abs_greater_than(self, bound) -> bool:
        """Exact |a + b√d| > bound for real fields, bound a rational."""
        v = self if self.sign() >= 0 else -self
        return (v - Fraction(bound)).sign() > 0

    def minimal_polynomial(self) -> IntPolynomial:
        if self.b == 0:
            return IntPolynomial.from_q((-self.a, Fraction(1)))
        return IntPolynomial.from_q((self.norm(), -self.trace(), Fraction(1)))

    def approx(self) -> complex:
        root = math.sqrt(abs(self.d))
        if self.d > 0:
            return complex(float(self.a) + float(self.b) * root, 0.0)
        return complex(float(self.a), float(self.b) * root)

    def __repr__(self):
        if self.b == 0:
            return f"QuadraticElem({self.a})"
        return f"QuadraticElem({self.a} + {self.b}·√{self.d})"


# ---------------------------------------------------------------------------
# Algebraic numbers of degree ≥ 3: minimal polynomial + isolating box
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AlgebraicNumber:
    """A root of an irreducible integer polynomial, pinned by an exact
    rational isolating box (the box contains exactly that one root)."""

    minpoly: IntPolynomial
    box: Box

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    def refine(self) -> "AlgebraicNumber":
        return AlgebraicNumber(self.minpoly, refine_box(self.minpoly, self.box))

    def approx(self) -> complex:
        return self.box.approx()

    def __repr__(self):
        z = self.approx()
        return f"AlgebraicNumber(deg {self.degree}, ≈{z.real:.4g}{z.imag:+.4g}i)"


class NumberFieldElem:
    """Element of ℚ[x]/(g) for an irreducible g: a reduced polynomial in the
    root.  Only the ring operations needed for Binet coefficients."""

    __slots__ = ("minpoly", "rep")

    def __init__(self, minpoly: IntPolynomial, rep):
        self.minpoly = minpoly
        _, r = _qdivmod(_qtrim(Fraction(c) for c in rep), minpoly.to_q())
        self.rep = r

    @property
    def is_zero(self) -> bool:
        return not self.rep

    @property
    def is_rational(self) -> bool:
        return len(self.rep) <= 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise DomainError("not a rational element")
        return self.rep[0] if self.rep else Fraction(0)

    def __add__(self, other: "NumberFieldElem") -> "NumberFieldElem":
        return NumberFieldElem(self.minpoly, _qadd(self.rep, other.rep))

    def __mul__(self, other: "NumberFieldElem") -> "NumberFieldElem":
        return NumberFieldElem(self.minpoly, _qmul(self.rep, other.rep))

    def inverse(self) -> "NumberFieldElem":
        if self.is_zero:
            raise ZeroDivisionError("zero element of a number field")
        g, u, _ = _qxgcd(self.rep, self.minpoly.to_q())
        if len(g) != 1:
            raise DomainError("minimal polynomial not irreducible?")
        return NumberFieldElem(self.minpoly, _qscale(u, 1 / g[0]))

    def __eq__(self, other):
        return (
            isinstance(other, NumberFieldElem)
            and self.minpoly == other.minpoly
            and self.rep == other.rep
        )

    def __repr__(self):
        return f"NumberFieldElem({self.rep} mod {self.minpoly!r})"


def power_sums(f: IntPolynomial, upto: int) -> list[Fraction]:
    """Power sums p_k = Σ α_i^k of the roots of f, k = 0..upto, by Newton's
    identities (works for non-monic f; values are rational)."""
    d = f.degree
    if d < 1:
        raise DomainError("power sums need degree >= 1")
    c = f.to_q()
    lead = c[-1]
    p: list[Fraction] = [Fraction(d)]
    for k in range(1, upto + 1):
        acc = Fraction(0)
        for i in range(1, min(k - 1, d) + 1):
            acc += c[d - i] * p[k - i]
        if k <= d:
            acc += k * c[d - k]
        p.append(-acc / lead)
    return p


# ---------------------------------------------------------------------------
# Roots of integer polynomials
# ---------------------------------------------------------------------------


def quadratic_roots(g: IntPolynomial) -> tuple[QuadraticElem, QuadraticElem]:
    """Both roots of an irreducible integer quadratic, as exact elements of
    ℚ(√D) for the squarefree kernel D of the discriminant."""
    if g.degree != 2:
        raise DomainError("quadratic_roots needs degree 2")
    c, b, a = g.coeffs[0], g.coeffs[1], g.coeffs[2]
    disc = b * b - 4 * a * c
    s, dd = squarefree_part(disc)
    if dd == 1:
        raise DomainError("polynomial is reducible over ℚ")
    re = Fraction(-b, 2 * a)
    im = Fraction(s, 2 * a)
    return QuadraticElem(re, im, dd), QuadraticElem(re, -im, dd)


def roots_of(f: IntPolynomial) -> list[tuple[object, int]]:
    """All distinct complex roots of f with multiplicities.

    Rational roots come back as Fraction, quadratic ones as QuadraticElem,
    higher-degree ones as AlgebraicNumber with an exact isolating box.
    Deterministic order: factors by (degree, coefficients), then roots within
    a factor (rational; +√D before −√D; boxes by position).
    """
    if f.is_zero:
        raise DomainError("zero polynomial has no root list")
    _, factors = f.factor()
    out: list[tuple[object, int]] = []
    for g, mult in factors:
        if g.degree == 1:
            out.append((Fraction(-g.coeffs[0], g.coeffs[1]), mult))
        elif g.degree == 2:
            r1, r2 = quadratic_roots(g)
            out.append((r1, mult))
            out.append((r2, mult))
        else:
            for box in isolate_roots(g):
                out.append((AlgebraicNumber(g, box), mult))
    return out


# ---------------------------------------------------------------------------
# Root of unity detection
# ---------------------------------------------------------------------------


def _minpoly_of(alpha) -> IntPolynomial:
    if isinstance(alpha, int):
        alpha = Fraction(alpha)
    if isinstance(alpha, Fraction):
        return IntPolynomial.from_q((-alpha, Fraction(1)))
    if isinstance(alpha, QuadraticElem):
        return alpha.minimal_polynomial()
    if isinstance(alpha, AlgebraicNumber):
        return alpha.minpoly
    raise DomainError(f"unsupported algebraic value {alpha!r}")


def _power_equals_one(alpha, n: int) -> bool:
    """Exact test α^n = 1 via minimal-polynomial arithmetic: since the
    minimal polynomial is irreducible, α^n = 1 iff minpoly divides x^n − 1."""
    mp = _minpoly_of(alpha)
    xn_minus_1 = IntPolynomial([-1] + [0] * (n - 1) + [1]) if n else IntPolynomial((0,))
    _, r = _qdivmod(xn_minus_1.to_q(), mp.to_q())
    return not r


def is_root_of_unity(alpha) -> tuple[bool, int | None]:
    """Whether α is a root of unity; returns its exact order when it is.

    Checks α^n = 1 for every candidate order n with φ(n) ≤ deg(α) — a
    finite list, since any primitive n-th root of unity has degree φ(n).
    """
    if isinstance(alpha, int):
        alpha = Fraction(alpha)
    if isinstance(alpha, Fraction):
        if alpha == 0:
            raise DomainError("0 is not in the multiplicative group")
        if alpha == 1:
            return True, 1
        if alpha == -1:
            return True, 2
        return False, None
    if isinstance(alpha, QuadraticElem) and alpha.is_zero:
        raise DomainError("0 is not in the multiplicative group")
    deg = _minpoly_of(alpha).degree
    for n in orders_with_totient_at_most(deg):
        if _power_equals_one(alpha, n):
            return True, n
    return False, None


# ---------------------------------------------------------------------------
# Degeneracy: is some root ratio α_i/α_j a root of unity?
# ---------------------------------------------------------------------------


def ratio_poly(f: IntPolynomial) -> IntPolynomial:
    """A polynomial whose roots include every ratio α_i/α_j (i ≠ j) of the
    roots of f, namely Res_y(f(y), f(x·y)) with the (x−1)^deg(f) block from
    the i = j ratios divided out.

    Computed by interpolation: the resultant is evaluated at deg(f)² + 1
    nonzero integers (where the Sylvester shape stays generic) and
    reconstructed exactly over ℚ.
    """
    if f.is_zero or f.degree < 1:
        raise DomainError("ratio_poly needs degree >= 1")
    if f.constant == 0:
        raise DomainError("zero root has no ratios: require f(0) != 0")
    if not f.is_squarefree():
        raise DomainError("ratio_poly expects a squarefree polynomial")
    d = f.degree
    npts = d * d + 1
    pts: list[int] = []
    k = 1
    while len(pts) < npts:
        pts.append(k)
        if len(pts) < npts:
            pts.append(-k)
        k += 1
    vals = []
    for x0 in pts:
        scaled = IntPolynomial(c * x0**i for i, c in enumerate(f.coeffs))  # f(x0·y)
        vals.append(resultant(f, scaled))
    q = _interpolate(pts, vals)
    if any(c.denominator != 1 for c in q):
        raise AssertionError("resultant interpolation must be integral")
    rp = IntPolynomial(int(c) for c in q)
    x_minus_1 = IntPolynomial((-1, 1))
    for _ in range(d):
        nxt = rp.divide_exact(x_minus_1)
        if nxt is None:
            raise AssertionError("expected (x-1)^deg factor from i = j ratios")
        rp = nxt
    return rp


def is_degenerate(f: IntPolynomial) -> bool:
    """Whether some ratio of two distinct roots of f is a root of unity.

    f must be squarefree with nonzero constant term.  A ratio of two
    algebraic numbers of degree ≤ d has degree ≤ d², so it suffices to
    divide the ratio polynomial by the cyclotomics Φ_n with φ(n) ≤ d².
    """
    if f.degree < 2:
        return False
    rp = ratio_poly(f)
    dd = f.degree * f.degree
    for n in orders_with_totient_at_most(dd):
        if n == 1:
            continue  # ratio 1 needs a repeated root, excluded by squarefree f
        if rp.divide_exact(cyclotomic(n)) is not None:
            return True
    return False


# ---------------------------------------------------------------------------
# Bounded multiplicative dependence
# ---------------------------------------------------------------------------


def _factor_rational(q: Fraction) -> tuple[int, dict[int, int]]:
    """Sign and prime-exponent vector of a nonzero rational."""
    sign = 1 if q > 0 else -1
    vec: dict[int, int] = {}
    for n, direction in ((abs(q.numerator), 1), (q.denominator, -1)):
        p = 2
        while p * p <= n:
            while n % p == 0:
                vec[p] = vec.get(p, 0) + direction
                n //= p
            p += 1 if p == 2 else 2
        if n > 1:
            vec[n] = vec.get(n, 0) + direction
    return sign, {p: e for p, e in vec.items() if e}


def _normalize_pair(r: int, s: int) -> tuple[int, int]:
    if r < 0 or (r == 0 and s < 0):
        return -r, -s
    return r, s


def _rational_dependence(a: Fraction, b: Fraction, rmax: int, smax: int):
    """Minimal (r, s) ≠ 0 with a^r = b^s, or None.  Exact via factorization;
    the bounds only clamp the returned pair."""
    sa, va = _factor_rational(a)
    sb, vb = _factor_rational(b)
    if not va or not vb:
        raise DomainError("±1 inputs are roots of unity")
    primes = set(va) | set(vb)
    if any(p not in va or p not in vb for p in primes):
        return None
    # all cross-ratios must agree: e_p(a)·e_q(b) = e_q(a)·e_p(b)
    plist = sorted(primes)
    p0 = plist[0]
    for p in plist[1:]:
        if va[p0] * vb[p] != va[p] * vb[p0]:
            return None
    g = math.gcd(vb[p0], va[p0])
    r, s = vb[p0] // g, va[p0] // g
    # r·e_p(a) = s·e_p(b) now holds for all p; fix signs
    sign_ok = (sa if r % 2 else 1) == (sb if s % 2 else 1)
    if not sign_ok:
        r, s = 2 * r, 2 * s
    if abs(r) > rmax or abs(s) > smax:
        return None
    r, s = _normalize_pair(r, s)
    return r, s


def _rationalizing_exponent(alpha: QuadraticElem, bound: int) -> int | None:
    """Smallest 1 ≤ s ≤ bound with α^s ∈ ℚ, else None."""
    acc = QuadraticElem(1, 0, alpha.d)
    for s in range(1, bound + 1):
        acc = acc * alpha
        if acc.is_rational:
            return s
    return None


def _as_algebraic(x):
    if isinstance(x, int):
        return Fraction(x)
    return x


def mult_dependent(alpha, beta, bound: int = 50):
    """Search for (r, s) ≠ (0, 0), |r|, |s| ≤ bound, with α^r = β^s.

    Returns the pair normalized to a positive leading entry, or None for
    "independent up to the bound".  Inputs must be nonzero rationals or
    quadratic elements that are not roots of unity (use is_root_of_unity
    first); degree ≥ 3 algebraic numbers are not supported.
    """
    if bound < 1:
        raise DomainError("bound must be >= 1")
    alpha, beta = _as_algebraic(alpha), _as_algebraic(beta)
    for v in (alpha, beta):
        if isinstance(v, AlgebraicNumber):
            raise DomainError("degree >= 3 algebraic numbers are not supported")
        rou, _ = is_root_of_unity(v)
        if rou:
            raise DomainError("roots of unity are trivially dependent")
    if isinstance(alpha, QuadraticElem) and alpha.is_rational:
        alpha = alpha.a
    if isinstance(beta, QuadraticElem) and beta.is_rational:
        beta = beta.a

    if isinstance(alpha, Fraction) and isinstance(beta, Fraction):
        return _rational_dependence(alpha, beta, bound, bound)

    if isinstance(alpha, Fraction) and isinstance(beta, QuadraticElem):
        flipped = mult_dependent(beta, alpha, bound)
        return None if flipped is None else _normalize_pair(flipped[1], flipped[0])

    if isinstance(alpha, QuadraticElem) and isinstance(beta, Fraction):
        s0 = _rationalizing_exponent(alpha, bound)
        if s0 is None:
            return None  # α^r irrational for all |r| ≤ bound, β^s always rational
        inner = _rational_dependence((alpha**s0).a, beta, bound // s0, bound)
        if inner is None:
            return None
        r, s = inner
        return _normalize_pair(r * s0, s)

    if isinstance(alpha, QuadraticElem) and isinstance(beta, QuadraticElem):
        if alpha.d == beta.d:
            pow_a = {m: alpha**m for m in range(1, bound + 1)}
            pow_b = {n: beta**n for n in range(1, bound + 1)}
            best = None
            for m in range(1, bound + 1):
                for n in range(1, bound + 1):
                    key = (max(m, n), m, n)
                    if best is not None and key >= best[0]:
                        continue
                    if pow_a[m] == pow_b[n]:
                        best = (key, (m, n))
                    elif pow_a[m] * pow_b[n] == 1:
                        best = (key, (m, -n))
            return None if best is None else _normalize_pair(*best[1])
        # distinct quadratic fields intersect in ℚ: any relation forces both
        # powers rational
        s_a = _rationalizing_exponent(alpha, bound)
        s_b = _rationalizing_exponent(beta, bound)
        if s_a is None or s_b is None:
            return None
        inner = _rational_dependence(
            (alpha**s_a).a, (beta**s_b).a, bound // s_a, bound // s_b
        )
        if inner is None:
            return None
        r, s = inner
        return _normalize_pair(r * s_a, s * s_b)

    raise DomainError(f"unsupported inputs {alpha!r}, {beta!r}")


# ---------------------------------------------------------------------------
# Excluded binary form and unit checks
# ---------------------------------------------------------------------------


def is_excluded_binary(f: IntPolynomial, d: int) -> bool:
    """True iff f = x² + ax ± 1 and (a² ∓ 4)/d is the square of a rational.

    For integers, (a² ∓ 4)/d ∈ ℚ² exactly when (a² ∓ 4)·d is a perfect
    square, so the test stays in ℤ.
    """
    if f.degree != 2 or f.leading != 1 or f.constant not in (1, -1):
        return False
    a = f.coeffs[1]
    val = a * a - 4 if f.constant == 1 else a * a + 4
    prod = val * d
    ok, _ = is_perfect_square(prod)
    return ok


def quad_unit_check(e: QuadraticElem) -> bool:
    """Whether an algebraic integer of ℚ(√d) is a unit (norm ±1)."""
    if e.trace().denominator != 1 or e.norm().denominator != 1:
        raise DomainError("not an algebraic integer of the field")
    return abs(e.norm()) == 1
