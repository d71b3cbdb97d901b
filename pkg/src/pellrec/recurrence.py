"""Integer linear recurrence sequences: exact term generation, the
characteristic polynomial, exact Binet decomposition for simple
recurrences, and the classifier for the finiteness-theorem hypotheses.

The Binet coefficients are computed per irreducible factor g of the
characteristic polynomial f: for a root α of g,

    η(α) = h(α) / f'(α),   h(x) = Σ_j (U_{k−1−j} − Σ_l a_l·U_{k−1−j−l})·x^j,

so each η lives in ℚ(α) and is reduced exactly mod g.  Evaluation sums
field traces per factor (power sums via Newton's identities), which keeps
U_n exact for roots of any degree.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .algebraic import (
    AlgebraicNumber,
    NumberFieldElem,
    QuadraticElem,
    is_degenerate,
    is_excluded_binary,
    is_root_of_unity,
    mult_dependent,
    power_sums,
    quadratic_roots,
)
from .errors import DomainError, NotSimpleError
from .intarith import is_squarefree
from .poly import IntPolynomial, isolate_roots, _qdivmod, _qmul, _qtrim

__all__ = [
    "LinearRecurrence",
    "BinetForm",
    "BinetTerm",
    "SequenceClassification",
    "binet_decompose",
    "classify",
    "parse_recurrence",
]


@dataclass(frozen=True)
class LinearRecurrence:
    """U_n = a1·U_{n−1} + ... + ak·U_{n−k} with integer data.

    `coefficients` is (a1, ..., ak) with ak ≠ 0; `initial_terms` is
    (U_0, ..., U_{k−1}), not all zero.
    """

    coefficients: tuple[int, ...]
    initial_terms: tuple[int, ...]

    def __init__(self, coefficients, initial_terms):
        coefficients = tuple(int(c) for c in coefficients)
        initial_terms = tuple(int(u) for u in initial_terms)
        if not coefficients:
            raise DomainError("recurrence order must be at least 1")
        if coefficients[-1] == 0:
            raise DomainError("the trailing coefficient a_k must be nonzero")
        if len(initial_terms) != len(coefficients):
            raise DomainError("need exactly k initial terms for an order-k recurrence")
        if all(u == 0 for u in initial_terms):
            raise DomainError("initial terms must not all be zero")
        object.__setattr__(self, "coefficients", coefficients)
        object.__setattr__(self, "initial_terms", initial_terms)

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def iter_terms(self):
        """Stream U_0, U_1, U_2, ... without re-deriving earlier terms."""
        window = list(self.initial_terms)
        yield from window
        while True:
            nxt = sum(a * u for a, u in zip(self.coefficients, reversed(window)))
            yield nxt
            window.pop(0)
            window.append(nxt)

    def term(self, n: int) -> int:
        if n < 0:
            raise DomainError("term index must be nonnegative")
        it = self.iter_terms()
        for _ in range(n):
            next(it)
        return next(it)

    def terms(self, n_max: int) -> list[int]:
        """U_0 .. U_{n_max} inclusive."""
        if n_max < 0:
            raise DomainError("term index must be nonnegative")
        it = self.iter_terms()
        return [next(it) for _ in range(n_max + 1)]

    def char_poly(self) -> IntPolynomial:
        """x^k − a1·x^{k−1} − ... − ak (monic, degree k)."""
        k = self.order
        coeffs = [0] * (k + 1)
        coeffs[k] = 1
        for i, a in enumerate(self.coefficients, start=1):
            coeffs[k - i] = -a
        return IntPolynomial(coeffs)

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "coeffs": list(self.coefficients),
            "init": list(self.initial_terms),
        }

    def to_text(self) -> str:
        cs = ",".join(str(c) for c in self.coefficients)
        us = ",".join(str(u) for u in self.initial_terms)
        return f"order {self.order}; coeffs {cs}; init {us}"


_TEXT_RE = re.compile(
    r"^\s*order\s+(\d+)\s*;\s*coeffs\s+([-\d,\s]+);\s*init\s+([-\d,\s]+)$",
    re.IGNORECASE,
)


def parse_recurrence(spec: str) -> LinearRecurrence:
    """Parse a recurrence from its textual form
    `order k; coeffs a1,...,ak; init U0,...,U{k-1}`, the JSON equivalent,
    or the inline form `k;a1,...,ak;U0,...,U{k-1}`.
    """
    spec = spec.strip()
    if not spec:
        raise DomainError("empty recurrence specification")
    if spec.startswith("{"):
        try:
            data = json.loads(spec)
        except json.JSONDecodeError as e:
            raise DomainError(f"bad JSON recurrence: {e}") from None
        try:
            rec = LinearRecurrence(data["coeffs"], data["init"])
        except KeyError as e:
            raise DomainError(f"JSON recurrence missing key {e}") from None
        if "order" in data and int(data["order"]) != rec.order:
            raise DomainError("declared order does not match coefficient count")
        return rec
    m = _TEXT_RE.match(spec)
    if m:
        k = int(m.group(1))
        coeffs = [int(c) for c in m.group(2).replace(" ", "").split(",") if c]
        init = [int(u) for u in m.group(3).replace(" ", "").split(",") if u]
        if len(coeffs) != k:
            raise DomainError("declared order does not match coefficient count")
        return LinearRecurrence(coeffs, init)
    parts = spec.split(";")
    if len(parts) == 3:
        try:
            k = int(parts[0])
            coeffs = [int(c) for c in parts[1].split(",") if c.strip()]
            init = [int(u) for u in parts[2].split(",") if u.strip()]
        except ValueError:
            raise DomainError(f"cannot parse recurrence spec {spec!r}") from None
        if len(coeffs) != k:
            raise DomainError("declared order does not match coefficient count")
        return LinearRecurrence(coeffs, init)
    raise DomainError(f"cannot parse recurrence spec {spec!r}")


# ---------------------------------------------------------------------------
# Binet decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BinetTerm:
    """One η·αⁿ summand; η and α are exact elements of the same field."""

    root: object  # Fraction | QuadraticElem | AlgebraicNumber
    eta: object  # Fraction | QuadraticElem | NumberFieldElem


class _FactorBlock:
    """All conjugate roots of one irreducible factor share an η-representation
    g ↦ η = rep(α); the block contributes trace(rep(α)·α^n) to U_n."""

    __slots__ = ("factor", "rep", "psums", "psums_poly")

    def __init__(self, factor: IntPolynomial, rep):
        self.factor = factor
        self.rep = _qtrim(rep)
        self.psums: list[Fraction] = []

    def contribution(self, n: int) -> Fraction:
        need = n + len(self.rep)
        if len(self.psums) <= need:
            self.psums = power_sums(self.factor, need + 16)
        return sum(
            (c * self.psums[n + j] for j, c in enumerate(self.rep)), Fraction(0)
        )


@dataclass(frozen=True)
class BinetForm:
    """Exact closed form U_n = Σ η_i·α_iⁿ of a simple recurrence.

    Factors whose η vanished identically are dropped; `effective` is the
    reduced recurrence generating the same sequence.
    """

    recurrence: LinearRecurrence
    terms: tuple[BinetTerm, ...]
    dropped_roots: tuple[object, ...]
    effective: LinearRecurrence
    _blocks: tuple[_FactorBlock, ...]

    @property
    def effective_order(self) -> int:
        return self.effective.order

    @property
    def is_reduced(self) -> bool:
        return self.effective.order < self.recurrence.order

    def evaluate(self, n: int) -> int:
        if n < 0:
            raise DomainError("Binet evaluation needs n >= 0")
        total = Fraction(0)
        for block in self._blocks:
            total += block.contribution(n)
        if total.denominator != 1:
            raise AssertionError("Binet evaluation must be an integer")
        return int(total)


def _initial_numerator(rec: LinearRecurrence) -> IntPolynomial:
    """h(x) with η(α) = h(α)/f'(α): coefficient of x^j is
    U_{k−1−j} − Σ_{l=1}^{k−1−j} a_l·U_{k−1−j−l}."""
    k = rec.order
    a = rec.coefficients
    u = rec.initial_terms
    coeffs = []
    for j in range(k):
        m = k - 1 - j
        c = u[m] - sum(a[l - 1] * u[m - l] for l in range(1, m + 1))
        coeffs.append(c)
    return IntPolynomial(coeffs)


def binet_decompose(rec: LinearRecurrence) -> BinetForm:
    """Exact Binet form of a simple recurrence.

    Raises NotSimpleError when the characteristic polynomial has a repeated
    root.  η = 0 factors trigger effective-order reduction instead of an
    error: the reduced recurrence reproduces the whole sequence.
    """
    f = rec.char_poly()
    if not f.is_squarefree():
        raise NotSimpleError("characteristic polynomial has a repeated root")
    fprime = f.derivative().to_q()
    h = _initial_numerator(rec).to_q()
    _, factors = f.factor()
    terms: list[BinetTerm] = []
    blocks: list[_FactorBlock] = []
    dropped: list[object] = []
    kept_factors: list[IntPolynomial] = []
    for g, _mult in factors:
        gq = g.to_q()
        _, fp_mod = _qdivmod(fprime, gq)
        inv = NumberFieldElem(g, fp_mod).inverse()
        rep = NumberFieldElem(g, _qmul(h, inv.rep)).rep
        roots = _factor_roots(g)
        if not rep:
            dropped.extend(roots)
            continue
        kept_factors.append(g)
        blocks.append(_FactorBlock(g, rep))
        for root in roots:
            terms.append(BinetTerm(root, _eta_value(g, rep, root)))
    effective = _reduced_recurrence(rec, kept_factors)
    form = BinetForm(rec, tuple(terms), tuple(dropped), effective, tuple(blocks))
    for n in range(rec.order + 4):
        if form.evaluate(n) != rec.term(n):
            raise AssertionError("Binet form does not reproduce the sequence")
    return form


def _factor_roots(g: IntPolynomial) -> list[object]:
    if g.degree == 1:
        return [Fraction(-g.coeffs[0], g.coeffs[1])]
    if g.degree == 2:
        r1, r2 = quadratic_roots(g)
        return [r1, r2]
    return [AlgebraicNumber(g, box) for box in isolate_roots(g)]


def _eta_value(g: IntPolynomial, rep, root):
    """η = rep(α) in the same representation as the root."""
    if g.degree == 1:
        return rep[0] if rep else Fraction(0)
    if g.degree == 2:
        acc = QuadraticElem(0, 0, root.d)
        power = QuadraticElem(1, 0, root.d)
        for c in rep:
            acc = acc + power * c
            power = power * root
        return acc
    return NumberFieldElem(g, rep)


def _reduced_recurrence(
    rec: LinearRecurrence, kept: list[IntPolynomial]
) -> LinearRecurrence:
    e = IntPolynomial((1,))
    for g in kept:
        e = e * g
    m = e.degree
    if m == rec.order:
        return rec
    if m == 0:
        raise AssertionError("all Binet coefficients vanished for nonzero data")
    coeffs = [-e.coeffs[m - i] for i in range(1, m + 1)]
    reduced = LinearRecurrence(coeffs, rec.terms(m - 1))
    for n in range(rec.order + 10):
        if reduced.term(n) != rec.term(n):
            raise AssertionError("effective-order reduction changed the sequence")
    return reduced


# ---------------------------------------------------------------------------
# Theorem-hypothesis classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SequenceClassification:
    """Hypothesis flags for one recurrence against one Pell modulus d.

    `theorem_applies` is the conjunction: simple, non-degenerate, no root of
    unity among the (effective) roots, all testable root pairs
    multiplicatively independent up to `independence_bound`, and the
    characteristic polynomial is not the excluded x² + ax ± 1 form for d.
    """

    d: int
    independence_bound: int
    simple: bool
    degenerate: bool
    has_root_of_unity_root: bool
    pairwise_mult_independent: bool
    excluded_binary_form: bool
    quadratic_unit_factor: bool
    theorem_applies: bool
    original_order: int
    effective_order: int
    reduced: bool
    root_of_unity_orders: tuple[int, ...]
    dependent_pairs: tuple[tuple[str, str, int, int], ...]
    unverified_pairs: tuple[tuple[str, str], ...]
    notes: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "independence_bound": self.independence_bound,
            "simple": self.simple,
            "degenerate": self.degenerate,
            "has_root_of_unity_root": self.has_root_of_unity_root,
            "pairwise_mult_independent_up_to_bound": self.pairwise_mult_independent,
            "excluded_binary_form": self.excluded_binary_form,
            "quadratic_unit_factor": self.quadratic_unit_factor,
            "theorem_applies": self.theorem_applies,
            "original_order": self.original_order,
            "effective_order": self.effective_order,
            "reduced": self.reduced,
            "root_of_unity_orders": list(self.root_of_unity_orders),
            "dependent_pairs": [list(p) for p in self.dependent_pairs],
            "unverified_pairs": [list(p) for p in self.unverified_pairs],
            "notes": list(self.notes),
        }


def _root_label(root) -> str:
    if isinstance(root, Fraction):
        return str(root)
    if isinstance(root, QuadraticElem):
        return f"{root.a}{'+' if root.b >= 0 else ''}{root.b}√{root.d}"
    return repr(root)


def classify(
    rec: LinearRecurrence, d: int, independence_bound: int = 50
) -> SequenceClassification:
    """Compute every hypothesis flag of the finiteness theorem for (rec, d).

    Effective-order reduction (dropping η = 0 roots) runs first, so the
    flags describe the minimal recurrence generating the sequence.  Root
    pairs whose multiplicative independence cannot be decided exactly
    (degree ≥ 3 irrationals) are reported in `unverified_pairs` and make
    `pairwise_mult_independent` False rather than silently passing.
    """
    if d <= 1 or not is_squarefree(d):
        raise DomainError("d must be a squarefree integer > 1")
    if independence_bound < 1:
        raise DomainError("independence bound must be >= 1")
    notes: list[str] = []
    simple = True
    try:
        form = binet_decompose(rec)
        eff_poly = form.effective.char_poly()
        eff_order = form.effective.order
        reduced = form.is_reduced
        roots = [t.root for t in form.terms]
        if reduced:
            notes.append(
                "effective order reduced from "
                f"{rec.order} to {eff_order} (vanishing Binet coefficients)"
            )
    except NotSimpleError:
        simple = False
        eff_poly = rec.char_poly().squarefree_part()
        eff_order = eff_poly.degree
        reduced = False
        roots = []
        for g, _m in eff_poly.factor()[1]:
            roots.extend(_factor_roots(g))
        notes.append(
            "repeated characteristic roots: flags computed on the squarefree part"
        )

    degenerate = is_degenerate(eff_poly) if eff_poly.degree >= 2 else False

    rou_orders: list[int] = []
    rou_flags: dict[int, bool] = {}
    for idx, root in enumerate(roots):
        flag, order = is_root_of_unity(root)
        rou_flags[idx] = flag
        if flag:
            rou_orders.append(order)
    has_rou = bool(rou_orders)

    dependent: list[tuple[str, str, int, int]] = []
    unverified: list[tuple[str, str]] = []
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if rou_flags[i] or rou_flags[j]:
                continue  # covered by the root-of-unity flag
            try:
                rel = mult_dependent(roots[i], roots[j], independence_bound)
            except DomainError:
                unverified.append((_root_label(roots[i]), _root_label(roots[j])))
                continue
            if rel is not None:
                r, s = rel
                dependent.append((_root_label(roots[i]), _root_label(roots[j]), r, s))
    pairwise = not dependent and not unverified
    if unverified:
        notes.append(
            "multiplicative independence undecided for degree >= 3 root pairs"
        )

    excluded = is_excluded_binary(eff_poly, d)
    quad_unit = any(
        is_excluded_binary(g, d)
        for g, _m in eff_poly.factor()[1]
        if g.degree == 2
    )

    theorem = (
        simple
        and not degenerate
        and not has_rou
        and pairwise
        and not excluded
    )
    return SequenceClassification(
        d=d,
        independence_bound=independence_bound,
        simple=simple,
        degenerate=degenerate,
        has_root_of_unity_root=has_rou,
        pairwise_mult_independent=pairwise,
        excluded_binary_form=excluded,
        quadratic_unit_factor=quad_unit,
        theorem_applies=theorem,
        original_order=rec.order,
        effective_order=eff_order,
        reduced=reduced,
        root_of_unity_orders=tuple(sorted(rou_orders)),
        dependent_pairs=tuple(dependent),
        unverified_pairs=tuple(unverified),
        notes=tuple(notes),
    )
