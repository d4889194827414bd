"""Two-bridge shadow diagrams built by twisting and closing a 0-tangle.

A tangle here is a partial diagram with four boundary slots ``nw, ne, sw, se``.
Each slot names the edge whose loose end sits there. ``twist_right`` adds a
half-twist between the two east ends, ``twist_bottom`` between the two south
ends, and the two closures join the ends pairwise into a closed diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .diagram import DisjointSet, ShadowDiagram

__all__ = [
    "INF",
    "ExtendedCount",
    "parse_count",
    "is_inf",
    "Tangle",
    "zero_tangle",
    "twist_right",
    "twist_bottom",
    "closure_denominator",
    "closure_numerator",
    "build_two_bridge",
    "build_torus",
]


class _Infinity:
    """The symbolic half-twist count of the infinity tangle."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()
ExtendedCount = Union[int, _Infinity]


def is_inf(value) -> bool:
    return value is INF


def parse_count(token) -> ExtendedCount:
    """``"inf"`` (also ``"∞"``) or a nonnegative integer."""
    if token is INF:
        return INF
    if isinstance(token, int) and not isinstance(token, bool):
        value = token
    else:
        text = str(token).strip().lower()
        if text in ("inf", "∞", "infinity"):
            return INF
        try:
            value = int(text)
        except ValueError:
            raise ValueError(f"expected a nonnegative integer or 'inf', got {token!r}") from None
    if value < 0:
        raise ValueError(f"half-twist count must be nonnegative, got {value}")
    return value


@dataclass(frozen=True)
class Tangle:
    edge_count: int
    crossings: tuple[tuple[int, int, int, int], ...]
    nw: int
    ne: int
    sw: int
    se: int

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)


def zero_tangle() -> Tangle:
    """Two horizontal arcs: ``a`` joins nw to ne, ``b`` joins sw to se."""
    return Tangle(2, (), nw=0, ne=0, sw=1, se=1)


def twist_right(t: Tangle) -> Tangle:
    c, d = t.edge_count, t.edge_count + 1
    crossing = (t.ne, c, d, t.se)
    return Tangle(t.edge_count + 2, t.crossings + (crossing,), t.nw, c, t.sw, d)


def twist_bottom(t: Tangle) -> Tangle:
    c, d = t.edge_count, t.edge_count + 1
    crossing = (t.sw, t.se, c, d)
    return Tangle(t.edge_count + 2, t.crossings + (crossing,), t.nw, t.ne, d, c)


def _close(t: Tangle, pairs) -> ShadowDiagram:
    ds = DisjointSet(t.edge_count)
    for a, b in pairs:
        ds.union(a, b)
    used = {ds.find(e) for c in t.crossings for e in c}
    roots = {ds.find(e) for e in range(t.edge_count)}
    crossings = [tuple(ds.find(e) for e in c) for c in t.crossings]
    return ShadowDiagram.from_crossings(crossings, free_circles=len(roots - used))


def closure_denominator(t: Tangle) -> ShadowDiagram:
    """Join nw to sw and ne to se."""
    return _close(t, [(t.nw, t.sw), (t.ne, t.se)])


def closure_numerator(t: Tangle) -> ShadowDiagram:
    """Join nw to ne and sw to se."""
    return _close(t, [(t.nw, t.ne), (t.sw, t.se)])


def build_torus(k: int) -> ShadowDiagram:
    """Shadow of the (2, k)-torus link: numerator closure of ``k`` right twists."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    t = zero_tangle()
    for _ in range(k):
        t = twist_right(t)
    return closure_numerator(t)


def build_two_bridge(n: ExtendedCount, r: ExtendedCount) -> ShadowDiagram:
    """Shadow of the two-bridge diagram with ``n`` and ``r`` half-twists.

    ``n`` right twists, then ``r`` bottom twists, then the denominator closure.
    A single infinite count gives the torus shadow of the other count.
    """
    n, r = parse_count(n), parse_count(r)
    if n is INF and r is INF:
        raise ValueError("B(inf, inf) is not defined")
    if r is INF:
        return build_torus(n)
    if n is INF:
        return build_torus(r)
    t = zero_tangle()
    for _ in range(n):
        t = twist_right(t)
    for _ in range(r):
        t = twist_bottom(t)
    return closure_denominator(t)
