from fractions import Fraction

import pytest

from pellrec.algebraic import (
    AlgebraicNumber,
    NumberFieldElem,
    QuadraticElem,
    is_degenerate,
    is_excluded_binary,
    is_root_of_unity,
    mult_dependent,
    power_sums,
    quad_unit_check,
    quadratic_roots,
    ratio_poly,
    roots_of,
)
from pellrec.errors import DomainError
from pellrec.poly import IntPolynomial, cyclotomic, orders_with_totient_at_most

from oracles import numeric_degenerate

P = IntPolynomial
Q = QuadraticElem
half = Fraction(1, 2)


# -- QuadraticElem -----------------------------------------------------------


def test_quadratic_arithmetic():
    a = Q(2, 1, 3)  # 2 + √3
    b = a.conjugate()  # 2 − √3
    assert a + b == 4
    assert a * b == 1
    assert a.norm() == 1 and a.trace() == 4
    assert (a**3) * (a**-3) == 1
    assert a**2 == Q(7, 4, 3)
    assert (a / b) * b == a
    assert a.minimal_polynomial() == P((1, -4, 1))


def test_quadratic_sign_exact():
    assert Q(2, 1, 3).sign() == 1
    assert Q(-2, 1, 3).sign() == -1  # −2 + √3 < 0
    assert Q(-1, 1, 3).sign() == 1  # −1 + √3 > 0
    assert Q(1, -1, 3).sign() == -1
    assert Q(0, -2, 5).sign() == -1
    assert Q(Fraction(1, 2), 0, 5).sign() == 1
    assert Q(3, -1, 2).abs_greater_than(1)  # |3 − √2| ≈ 1.59 > 1
    assert not Q(3, -1, 2).abs_greater_than(2)


def test_quadratic_rejects_bad_d():
    with pytest.raises(DomainError):
        Q(1, 1, 4)
    with pytest.raises(DomainError):
        Q(1, 1, 12)
    with pytest.raises(DomainError):
        Q(1, 1, 1)
    Q(1, 1, -3)  # imaginary fields are fine


def test_mixed_field_rejected():
    with pytest.raises(DomainError):
        Q(1, 1, 2) + Q(1, 1, 3)
    assert Q(1, 0, 2) + Q(1, 1, 3) == Q(2, 1, 3)  # rationals embed anywhere


# -- roots_of ----------------------------------------------------------------


def test_roots_of_cubic_with_complex_pair():
    # x³ − 3x² + 3x − 2 = (x − 2)(x² − x + 1): roots 2, (1 ± √3 i)/2
    roots = roots_of(P((-2, 3, -3, 1)))
    assert (Fraction(2), 1) in roots
    vals = [r for r, _ in roots if isinstance(r, Q)]
    assert Q(half, half, -3) in vals and Q(half, -half, -3) in vals


def test_roots_of_remark_quadratic():
    roots = roots_of(P((1, -4, 1)))
    assert [r for r, _ in roots] == [Q(2, 1, 3), Q(2, -1, 3)]


def test_roots_of_split_quadratic():
    roots = roots_of(P((6, -5, 1)))  # factor order: (x−3) sorts before (x−2)
    assert roots == [(Fraction(3), 1), (Fraction(2), 1)]


def test_roots_of_multiplicities_and_product():
    f = P((-1, 1)) * P((-1, 1)) * P((3, 1))
    roots = roots_of(f)
    assert (Fraction(1), 2) in roots and (Fraction(-3), 1) in roots
    # product of roots with multiplicity = ± constant/leading
    prod = Fraction(1)
    for r, m in roots:
        prod *= Fraction(r) ** m
    assert abs(prod) == abs(Fraction(f.constant, f.leading))


def test_roots_of_quartic_cyclotomic():
    roots = roots_of(cyclotomic(12))
    assert len(roots) == 4
    assert all(isinstance(r, AlgebraicNumber) and m == 1 for r, m in roots)


# -- is_root_of_unity ---------------------------------------------------------


def test_root_of_unity_quadratics():
    zeta6 = Q(half, half, -3)  # (1 + √3 i)/2
    assert is_root_of_unity(zeta6) == (True, 6)
    assert zeta6**6 == 1 and all(zeta6**m != 1 for m in range(1, 6))
    assert is_root_of_unity(Q(2, 1, 3)) == (False, None)
    assert is_root_of_unity(Fraction(-1)) == (True, 2)
    assert is_root_of_unity(Fraction(1)) == (True, 1)
    assert is_root_of_unity(Q(-half, half, -3)) == (True, 3)
    assert is_root_of_unity(Q(0, 1, -1)) == (True, 4)  # i


def test_root_of_unity_zero_rejected():
    with pytest.raises(DomainError):
        is_root_of_unity(Fraction(0))


def test_root_of_unity_higher_degree():
    for n in (5, 7, 8, 9, 10, 11, 12):
        for root, _ in roots_of(cyclotomic(n)):
            assert is_root_of_unity(root) == (True, n)
    for root, _ in roots_of(P((-1, -1, 0, 1))):  # x³ − x − 1: no unit roots
        flag, _ = is_root_of_unity(root)
        assert not flag


# -- ratio_poly / is_degenerate ------------------------------------------------


def test_ratio_poly_split_quadratic():
    rp = ratio_poly(P((6, -5, 1)))
    assert rp(Fraction(3, 2)) == 0
    assert rp(Fraction(2, 3)) == 0
    assert rp.degree == 2


def test_ratio_poly_cubic_has_cyclotomic_factor():
    rp = ratio_poly(P((-2, 3, -3, 1)))
    assert rp.divide_exact(cyclotomic(3)) is not None


def test_ratio_poly_rejects_zero_root():
    with pytest.raises(DomainError):
        ratio_poly(P((0, -1, 1)))  # x² − x


def test_is_degenerate_examples():
    assert is_degenerate(P((-2, 3, -3, 1))) is True
    assert is_degenerate(P((1, -4, 1))) is False
    assert is_degenerate(P((-1, -1, 1))) is False  # x² − x − 1
    assert is_degenerate(P((1, 0, 1))) is True  # roots ±i, ratio −1
    assert is_degenerate(P((-1, 0, 1))) is True  # roots ±1
    assert is_degenerate(P((6, -5, 1))) is False


def test_is_degenerate_matches_numeric_oracle_sample():
    orders = orders_with_totient_at_most(9)
    for coeffs in [
        (-2, 3, -3, 1),
        (1, -4, 1),
        (-1, -1, 1),
        (6, -5, 1),
        (2, 0, 0, 1),  # x³ + 2
        (4, 0, 1),  # x² + 4: roots ±2i
        (-4, 0, 1),
        (1, 1, 1, 1),  # (x+1)(x²+1) 4th/2nd roots of unity
        (3, -1, -3, 1),
        (5, 5, -1, 1),
    ]:
        f = P(coeffs).squarefree_part()
        assert is_degenerate(f) == numeric_degenerate(f.coeffs, orders), coeffs


# -- mult_dependent -------------------------------------------------------------


def test_mult_dependent_golden_pair():
    phi = Q(half, half, 5)
    psi = Q(half, -half, 5)
    assert mult_dependent(phi, psi, 2) == (2, -2)  # φ² = ψ^{−2} since φψ = −1
    assert (phi**2) * (psi**2) == 1


def test_mult_dependent_rationals():
    assert mult_dependent(Fraction(2), Fraction(3), 50) is None
    assert mult_dependent(Fraction(2), Fraction(4), 2) == (2, 1)
    assert mult_dependent(Fraction(4), Fraction(2), 2) == (1, 2)
    assert mult_dependent(Fraction(2, 3), Fraction(9, 4), 3) == (2, -1)
    assert mult_dependent(Fraction(6), Fraction(12), 50) is None


def test_mult_dependent_symmetry_and_verification():
    cases = [
        (Fraction(2), Fraction(8)),
        (Q(2, 1, 3), Q(7, 4, 3)),  # (2+√3)² = 7+4√3
        (Q(2, 1, 3), Q(2, -1, 3)),  # conjugate units: (2+√3)(2−√3) = 1
        (Q(3, 2, 2), Fraction(2)),  # norm 1 unit vs 2: independent
    ]
    for a, b in cases:
        res = mult_dependent(a, b, 20)
        res_flip = mult_dependent(b, a, 20)
        if res is None:
            assert res_flip is None
        else:
            r, s = res
            av = a if isinstance(a, Q) else Q(a, 0, 2)
            bv = b if isinstance(b, Q) else Q(b, 0, av.d)
            assert av**r == bv**s
            assert res_flip == (res[1], res[0]) or res_flip == (-res[1], -res[0])


def test_mult_dependent_cross_field():
    # 2+√3 and 3+2√2: units of different fields, powers never rational
    assert mult_dependent(Q(2, 1, 3), Q(3, 2, 2), 20) is None
    # √2 and √3: (√2)² = 2, (√3)² = 3, 2^r = 3^s only trivially
    assert mult_dependent(Q(0, 1, 2), Q(0, 1, 3), 20) is None
    # √2 and 3: never dependent
    assert mult_dependent(Q(0, 1, 2), Fraction(3), 20) is None
    # √2 and 4: (√2)^4 = 4
    assert mult_dependent(Q(0, 1, 2), Fraction(4), 20) == (4, 1)
    # √2 vs √8 = 2√2: (√2)^... 8 = (√8)²  and 8 = (√2)^6 → (6, 2) → reduced (3, 1)
    dep = mult_dependent(Q(0, 1, 2), Q(0, 2, 2), 20)
    assert dep is not None
    r, s = dep
    assert Q(0, 1, 2) ** r == Q(0, 2, 2) ** s


def test_mult_dependent_rejects_units_and_high_degree():
    with pytest.raises(DomainError):
        mult_dependent(Fraction(-1), Fraction(2), 10)
    with pytest.raises(DomainError):
        mult_dependent(Q(half, half, -3), Fraction(2), 10)
    cubic_root = roots_of(P((-1, -1, 0, 1)))[0][0]
    with pytest.raises(DomainError):
        mult_dependent(cubic_root, Fraction(2), 10)


# -- excluded form / unit checks -------------------------------------------------


def test_is_excluded_binary():
    f = P((1, -4, 1))
    assert is_excluded_binary(f, 3) is True  # (16 − 4)/3 = 4 = 2²
    assert is_excluded_binary(f, 5) is False  # 12/5 is not a square
    assert is_excluded_binary(P((6, -5, 1)), 3) is False  # constant 6
    assert is_excluded_binary(P((-1, -1, 1)), 5) is True  # (1 + 4)/5 = 1
    assert is_excluded_binary(P((-1, -1, 1)), 3) is False
    assert is_excluded_binary(P((1, -4, 1, 0, 3)), 3) is False  # degree 4


def test_quad_unit_check():
    assert quad_unit_check(Q(2, 1, 3)) is True
    assert quad_unit_check(Q(9, 4, 5)) is True
    assert quad_unit_check(Q(1, 2, 2)) is False  # norm 1 − 8 = −7
    assert quad_unit_check(Q(half, half, 5)) is True  # golden ratio: norm −1
    with pytest.raises(DomainError):
        quad_unit_check(Q(half, half, 3))  # not an algebraic integer


# -- number-field support ---------------------------------------------------------


def test_power_sums_split_quadratic():
    f = P((6, -5, 1))  # roots 2, 3
    assert power_sums(f, 4) == [2, 5, 13, 35, 97]


def test_power_sums_nonmonic():
    f = P((-1, 0, 2))  # roots ±1/√2: p0 = 2, p1 = 0, p2 = 1, p3 = 0, p4 = 1/2
    assert power_sums(f, 4) == [2, 0, 1, 0, Fraction(1, 2)]


def test_number_field_elem():
    g = P((-1, -1, 0, 1))  # x³ − x − 1
    alpha = NumberFieldElem(g, (Fraction(0), Fraction(1)))
    inv = alpha.inverse()
    assert (alpha * inv).as_fraction() == 1
    # α³ = α + 1
    cubed = alpha * alpha * alpha
    assert cubed.rep == (Fraction(1), Fraction(1))


def test_quadratic_roots_reducible_rejected():
    with pytest.raises(DomainError):
        quadratic_roots(P((6, -5, 1)))
