"""Independent brute-force oracles used by the test suite.

These deliberately avoid the library code paths they are checking:
membership and solution enumeration run on raw integer scans, and the
degeneracy oracle works on high-precision numeric roots.
"""
from math import isqrt

import mpmath


def brute_solutions(d: int, t: int, ymax: int) -> set[tuple[int, int]]:
    """All integer solutions of x² − d·y² = t with |y| ≤ ymax, by direct scan."""
    out = set()
    for y in range(0, ymax + 1):
        rhs = t + d * y * y
        if rhs < 0:
            continue
        x = isqrt(rhs)
        if x * x == rhs:
            for sx in ({x, -x}):
                for sy in ({y, -y}):
                    out.add((sx, sy))
    return out


def brute_member_x(d: int, t: int, v: int, ymax: int) -> bool:
    return any(x == v for x, _ in brute_solutions(d, t, ymax))


def brute_member_y(d: int, t: int, v: int, ymax: int) -> bool:
    return abs(v) <= ymax and any(y == v for _, y in brute_solutions(d, t, abs(v)))


def numeric_degenerate(coeffs, orders, tol=mpmath.mpf("1e-30")) -> bool:
    """Numeric degeneracy oracle: roots at 60 digits, ratios with modulus
    within tol of 1 get an order check |ratio^n − 1| < tol."""
    with mpmath.workdps(60):
        roots = mpmath.polyroots([mpmath.mpf(c) for c in reversed(coeffs)], maxsteps=200)
        for i in range(len(roots)):
            for j in range(len(roots)):
                if i == j:
                    continue
                ratio = roots[i] / roots[j]
                if abs(abs(ratio) - 1) < tol:
                    for n in orders:
                        if n >= 2 and abs(ratio**n - 1) < tol:
                            return True
    return False
