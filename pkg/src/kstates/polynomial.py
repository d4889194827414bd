"""Exact dense integer polynomials in one variable ``x``.

Coefficients are stored in ascending order of powers as Python ints, so no
operation can overflow.
"""

from __future__ import annotations

from typing import Iterable, Sequence

__all__ = [
    "IntPolynomial",
    "NotDivisibleError",
    "ZERO",
    "ONE",
    "X",
    "add",
    "sub",
    "mul",
    "exact_div_by_x",
    "eval_int",
    "degree",
    "coeff",
    "leading",
]

#: degree of the zero polynomial
ZERO_DEGREE = float("-inf")


class NotDivisibleError(ArithmeticError):
    """Raised when dividing by ``x`` a polynomial with nonzero constant term."""


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPolynomial:
    """Immutable polynomial with exact integer coefficients.

    ``coeffs[k]`` is the coefficient of ``x**k``. The stored tuple never has a
    trailing zero; the zero polynomial stores ``()``.

    >>> p = IntPolynomial([0, 5, 8, 3])
    >>> p.human()
    '5x + 8x^2 + 3x^3'
    >>> p(1)
    16
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _normalize(coeffs)
        for v in c:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"coefficients must be int, got {type(v).__name__}")
        self._coeffs = c

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        if k < 0:
            raise ValueError("negative power")
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls([c])

    @classmethod
    def parse(cls, text: str) -> IntPolynomial:
        """Parse the ascending space-separated coefficient form, e.g. ``"0 5 8 3"``."""
        return cls(int(tok) for tok in text.split())

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self):
        """Largest power with a nonzero coefficient; ``-inf`` for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else ZERO_DEGREE

    def coeff(self, k: int) -> int:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return 0

    def leading(self) -> int:
        return self._coeffs[-1] if self._coeffs else 0

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-v for v in self._coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u == 0:
                continue
            for j, v in enumerate(b):
                out[i + j] += u * v
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative int")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def div_x(self) -> IntPolynomial:
        if self.coeff(0) != 0:
            raise NotDivisibleError(f"{self.human()} is not divisible by x")
        return IntPolynomial(self._coeffs[1:])

    def __call__(self, t: int) -> int:
        acc = 0
        for v in reversed(self._coeffs):
            acc = acc * t + v
        return acc

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int) and not isinstance(other, bool):
            return self._coeffs == _normalize([other])
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self._coeffs)!r})"

    def __str__(self):
        return self.human()

    def coeff_string(self) -> str:
        """Canonical machine form: ascending coefficients separated by spaces."""
        if not self._coeffs:
            return "0"
        return " ".join(str(v) for v in self._coeffs)

    def human(self) -> str:
        """Ascending powers, zero terms omitted: ``x^2 - 1`` prints as ``-1 + x^2``."""
        parts = []
        for k, v in enumerate(self._coeffs):
            if v == 0:
                continue
            mag = abs(v)
            if k == 0:
                body = str(mag)
            else:
                var = "x" if k == 1 else f"x^{k}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(("+ " if v > 0 else "- ") + body)
        return " ".join(parts) if parts else "0"


def _coerce(value):
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return IntPolynomial([value])
    return NotImplemented


ZERO = IntPolynomial()
ONE = IntPolynomial([1])
X = IntPolynomial([0, 1])


def add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p + q


def sub(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p - q


def mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p * q


def exact_div_by_x(p: IntPolynomial) -> IntPolynomial:
    """Shift coefficients down one power; the constant term must be zero."""
    return p.div_x()


def eval_int(p: IntPolynomial, t: int) -> int:
    return p(t)


def degree(p: IntPolynomial):
    return p.degree()


def coeff(p: IntPolynomial, k: int) -> int:
    return p.coeff(k)


def leading(p: IntPolynomial) -> int:
    return p.leading()


def from_counts(counts: Sequence[int]) -> IntPolynomial:
    """Polynomial whose ``x**k`` coefficient is ``counts[k]`` (a state histogram)."""
    return IntPolynomial(counts)
