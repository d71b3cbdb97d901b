from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pellrec.errors import DomainError
from pellrec.intarith import (
    ContinuedFraction,
    cf_sqrt,
    convergents,
    is_perfect_square,
    is_squarefree,
    isqrt,
    squarefree_part,
    totient,
)


def test_isqrt_examples():
    assert isqrt(0) == 0
    assert isqrt(80) == 8  # 8² = 64 <= 80 < 81 = 9²
    assert isqrt(81) == 9


def test_isqrt_negative_rejected():
    with pytest.raises(DomainError):
        isqrt(-1)


@given(st.integers(min_value=0, max_value=10**60))
def test_isqrt_floor_property(n):
    r = isqrt(n)
    assert r * r <= n < (r + 1) * (r + 1)


def test_is_perfect_square_examples():
    assert is_perfect_square(81) == (True, 9)  # 5·16 + 1 = 81
    assert is_perfect_square(-4) == (False, None)
    assert is_perfect_square(12) == (False, None)  # isqrt(12) = 3, 9 != 12
    assert is_perfect_square(0) == (True, 0)


def test_is_squarefree_small():
    assert is_squarefree(1)
    assert is_squarefree(2)
    assert is_squarefree(30)
    assert not is_squarefree(4)
    assert not is_squarefree(12)
    assert not is_squarefree(49)


def test_squarefree_part():
    assert squarefree_part(12) == (2, 3)
    assert squarefree_part(49) == (7, 1)
    assert squarefree_part(-75) == (5, -3)
    assert squarefree_part(1) == (1, 1)


def test_totient_small():
    known = {1: 1, 2: 1, 3: 2, 4: 2, 5: 4, 6: 2, 7: 6, 8: 4, 9: 6, 10: 4, 11: 10, 12: 4}
    for n, phi in known.items():
        assert totient(n) == phi


# Hand-run CF algorithm for the oracle values below:
#   √2: a0=1; m,den = 1,1 -> a=2 repeating            => [1; 2]
#   √3: a0=1; states (1,2) a=1, (1,1) a=2 repeating   => [1; 1,2]
#   √5: a0=2; m,den = 2,1 -> a=4 repeating            => [2; 4]
def test_cf_sqrt_hand_values():
    assert cf_sqrt(2) == ContinuedFraction(1, (2,))
    assert cf_sqrt(3) == ContinuedFraction(1, (1, 2))
    assert cf_sqrt(5) == ContinuedFraction(2, (4,))
    assert cf_sqrt(7) == ContinuedFraction(2, (1, 1, 1, 4))


def test_cf_sqrt_rejects_bad_input():
    with pytest.raises(DomainError):
        cf_sqrt(1)
    with pytest.raises(DomainError):
        cf_sqrt(9)


def test_cf_period_ends_with_double_a0():
    for d in range(2, 10_001):
        if not is_squarefree(d):
            continue
        r = isqrt(d)
        if r * r == d:
            continue
        cf = cf_sqrt(d)
        assert cf.tail[-1] == 2 * cf.a0, d
        # palindrome property of the body of the period
        body = cf.tail[:-1]
        assert body == body[::-1], d


def test_convergents_hand_values():
    assert convergents(cf_sqrt(3), 4) == [
        Fraction(1),
        Fraction(2),
        Fraction(5, 3),
        Fraction(7, 4),
    ]
    assert convergents(cf_sqrt(2), 3) == [Fraction(1), Fraction(3, 2), Fraction(7, 5)]
    assert convergents(cf_sqrt(5), 2) == [Fraction(2), Fraction(9, 4)]


def test_convergents_count_validation():
    with pytest.raises(DomainError):
        convergents(cf_sqrt(2), 0)


@settings(max_examples=30)
@given(st.sampled_from([2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 19, 21, 22, 23, 29, 31]))
def test_pell_value_cycles_and_hits_one(d):
    # |p² − d·q²| along convergents cycles with the CF period (the sign
    # alternates when the period is odd), and a convergent among the first
    # 2L solves p² − d·q² = 1.
    cf = cf_sqrt(d)
    L = cf.period_length
    cs = convergents(cf, 2 * L + 1)
    values = [f.numerator**2 - d * f.denominator**2 for f in cs]
    assert 1 in values[: 2 * L]
    assert [abs(v) for v in values[:L]] == [abs(v) for v in values[L : 2 * L]]
