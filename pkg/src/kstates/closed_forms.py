"""Closed forms and recurrences for the two-bridge state polynomials.

``B(n, r)`` below is the state polynomial of the two-bridge shadow with ``n``
and ``r`` half-twists; ``B(n, INF)`` is the (2, n)-torus shadow.
"""

from __future__ import annotations

from math import comb

from .polynomial import ONE, X, IntPolynomial
from .tangle import INF, ExtendedCount, parse_count

__all__ = [
    "binom",
    "alpha",
    "b_n0",
    "b_ninf",
    "b_nr_closed",
    "b_nr_recurrence",
    "b_nr_classes",
    "class_counts",
    "b_nr",
    "coeff_formula",
    "coeff_k1",
    "coeff_k2",
    "degree_formula",
    "leading_coeff",
    "special_rows",
    "SPECIAL_ROWS",
]

X_PLUS_1 = X + 1
X2_MINUS_1 = X * X - 1


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def _finite(*values) -> None:
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ValueError(f"expected a finite nonnegative count, got {v!r}")


def alpha(n: int) -> IntPolynomial:
    """``((x+1)^n - 1) / x``; coefficient of ``x^k`` is ``C(n, k+1)``."""
    _finite(n)
    return (X_PLUS_1 ** n - 1).div_x()


def b_n0(n: int) -> IntPolynomial:
    _finite(n)
    return X * X_PLUS_1 ** n


def b_ninf(n: int) -> IntPolynomial:
    _finite(n)
    return X_PLUS_1 ** n + X2_MINUS_1


def b_nr_closed(n: int, r: int) -> IntPolynomial:
    _finite(n, r)
    first = (X_PLUS_1 ** r + X2_MINUS_1).div_x() * X_PLUS_1 ** n
    second = X2_MINUS_1 * (X_PLUS_1 ** r - 1).div_x()
    return first + second


def b_nr_recurrence(n: int, r: ExtendedCount) -> IntPolynomial:
    """Iterate over ``n``: ``B(n, r) = B(n-1, r) + (x+1)^(n-1) B(INF, r)``.

    The base is ``B(0, r) = x (x+1)^r``. For ``r = INF`` the torus recurrence
    ``B(n, INF) = B(n-1, 0) + B(n-1, INF)`` from ``B(0, INF) = x^2`` is used.
    """
    _finite(n)
    r = parse_count(r)
    if r is INF:
        poly = X * X
        for i in range(1, n + 1):
            poly = b_n0(i - 1) + poly
        return poly
    twist_column = X_PLUS_1 ** r + X2_MINUS_1
    poly = X * X_PLUS_1 ** r
    power = ONE
    for _ in range(n):
        poly = poly + power * twist_column
        power = power * X_PLUS_1
    return poly


def b_nr_classes(n: int, r: int):
    """The four state classes ``(x^2 a_n, x^2 a_r, x a_n a_r, x)`` with ``a = alpha``.

    They sum to ``B(n, r)``. The state-level reading of the classes needs
    ``n, r >= 1``; the polynomials themselves are returned for any finite input.
    """
    _finite(n, r)
    an, ar = alpha(n), alpha(r)
    x2 = X * X
    return (x2 * an, x2 * ar, X * an * ar, X)


def class_counts(n: int, r: int) -> tuple[int, int, int, int]:
    """Number of states in each class (the class polynomials at ``x = 1``)."""
    return tuple(p(1) for p in b_nr_classes(n, r))


def b_nr(n: ExtendedCount, r: ExtendedCount) -> IntPolynomial:
    """``B(n, r)`` for any pair of extended counts other than ``(INF, INF)``."""
    n, r = parse_count(n), parse_count(r)
    if n is INF and r is INF:
        raise ValueError("B(inf, inf) is not defined")
    if r is INF:
        return b_ninf(n)
    if n is INF:
        return b_ninf(r)
    return b_nr_closed(n, r)


def coeff_formula(n: int, r: int, k: int) -> int:
    """Number of states of ``B(n, r)`` with ``k`` circles, by binomial sums."""
    _finite(n, r, k)
    return (
        binom(n + r, k + 1)
        + binom(n, k - 1)
        + binom(r, k - 1)
        - binom(n, k + 1)
        - binom(r, k + 1)
        - (1 if k == 1 else 0)
    )


def coeff_k1(n: int, r: int) -> int:
    _finite(n, r)
    return n * r + 1


def coeff_k2(n: int, r: int) -> int:
    _finite(n, r)
    return n * (binom(r, 2) + 1) + r * (binom(n, 2) + 1)


def degree_formula(n: int, r: int) -> int:
    _finite(n, r)
    return max(n + 1, r + 1, n + r - 1)


def leading_coeff(n: ExtendedCount, r: ExtendedCount) -> int:
    return b_nr(n, r).leading()


def _row_r1(n: int) -> IntPolynomial:
    return X_PLUS_1 ** (n + 1) + X2_MINUS_1


def _row_r2(n: int) -> IntPolynomial:
    return (2 * X + 2) * X_PLUS_1 ** n + X2_MINUS_1 * (X + 2)


def _row_diag(n: int) -> IntPolynomial:
    return (X_PLUS_1 ** (2 * n) + X2_MINUS_1 * (2 * X_PLUS_1 ** n - 1)).div_x()


SPECIAL_ROWS = {"r1": _row_r1, "r2": _row_r2, "diag": _row_diag}


def special_rows(name: str, n: int) -> IntPolynomial:
    """Dedicated closed forms for ``B(n, 1)`` (``r1``), ``B(n, 2)`` (``r2``), ``B(n, n)`` (``diag``)."""
    _finite(n)
    try:
        fn = SPECIAL_ROWS[name]
    except KeyError:
        raise ValueError(f"unknown special row {name!r}; choose from {sorted(SPECIAL_ROWS)}") from None
    return fn(n)
