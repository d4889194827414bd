"""Shadow diagrams, Kauffman states and the state-sum polynomial.

A shadow diagram is a 4-valent planar graph: every crossing is a 4-tuple of
edge identifiers listed in the cyclic order of its ports, and every edge
identifier occurs in exactly two ports. Crossing-free loops are kept as a
bare count (``free_circles``).

Splitting a crossing ``(p0, p1, p2, p3)`` joins either ``{p0, p1}`` and
``{p2, p3}`` (split A) or ``{p1, p2}`` and ``{p3, p0}`` (split B). A state
chooses one split per crossing; bit ``i`` of a state mask set means crossing
``i`` takes split B.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .polynomial import IntPolynomial

__all__ = [
    "ShadowDiagram",
    "DisjointSet",
    "TooManyCrossingsError",
    "FREE_CIRCLE",
    "SPLIT_A",
    "SPLIT_B",
    "DEFAULT_MAX_CROSSINGS",
    "max_crossings",
    "trivial_knot",
    "circle_count",
    "state_histogram",
    "state_polynomial",
    "count_states_with_circles",
    "disjoint_union",
    "connected_sum",
    "splice_choices",
]

SPLIT_A = 0
SPLIT_B = 1

DEFAULT_MAX_CROSSINGS = 30
MAX_CROSSINGS_ENV = "KSTATES_MAX_CROSSINGS"

#: splice-site marker for :func:`connected_sum` meaning "one of the free circles"
FREE_CIRCLE = "free"


class TooManyCrossingsError(ValueError):
    """The diagram has more crossings than the enumeration cap allows."""


def max_crossings() -> int:
    """Enumeration cap, overridable with ``KSTATES_MAX_CROSSINGS``."""
    raw = os.environ.get(MAX_CROSSINGS_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_CROSSINGS
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_CROSSINGS_ENV} must be an integer, got {raw!r}") from None
    if cap < 0:
        raise ValueError(f"{MAX_CROSSINGS_ENV} must be nonnegative")
    return cap


class DisjointSet:
    """Union-find over ``0..n-1`` with path compression and union by size.

    ``components`` tracks the number of disjoint sets so callers never need a
    final pass over the roots.
    """

    __slots__ = ("parent", "size", "components")

    def __init__(self, n: int):
        self.reset(n)

    def reset(self, n: int) -> None:
        self.parent = list(range(n))
        self.size = [1] * n
        self.components = n

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.components -= 1
        return True


@dataclass(frozen=True)
class ShadowDiagram:
    """Crossings as port-ordered 4-tuples of edge ids plus a count of free circles.

    Every id in ``range(edge_count)`` must occur in exactly two ports. Use
    :meth:`from_crossings` to build one from arbitrary hashable edge labels.
    """

    edge_count: int
    crossings: tuple[tuple[int, int, int, int], ...] = ()
    free_circles: int = 0

    def __post_init__(self):
        crossings = tuple(tuple(c) for c in self.crossings)
        object.__setattr__(self, "crossings", crossings)
        if self.free_circles < 0:
            raise ValueError("free_circles must be nonnegative")
        uses = Counter()
        for c in crossings:
            if len(c) != 4:
                raise ValueError(f"crossing {c!r} does not have four ports")
            uses.update(c)
        for e, n in uses.items():
            if not isinstance(e, int) or not 0 <= e < self.edge_count:
                raise ValueError(f"edge id {e!r} outside range({self.edge_count})")
            if n != 2:
                raise ValueError(f"edge {e} occupies {n} ports, expected 2")
        if len(uses) != self.edge_count:
            missing = sorted(set(range(self.edge_count)) - set(uses))
            raise ValueError(f"edges {missing} occupy no port; store them as free circles")

    @classmethod
    def from_crossings(cls, crossings: Iterable[Sequence], free_circles: int = 0) -> ShadowDiagram:
        """Relabel edges densely in order of first appearance."""
        labels: dict = {}
        out = []
        for c in crossings:
            out.append(tuple(labels.setdefault(e, len(labels)) for e in c))
        return cls(len(labels), tuple(out), free_circles)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def ports(self, edge: int) -> list[tuple[int, int]]:
        """The two ``(crossing, position)`` pairs occupied by ``edge``."""
        return [(i, j) for i, c in enumerate(self.crossings) for j, e in enumerate(c) if e == edge]

    def relabeled(self, mapping: Sequence[int]) -> ShadowDiagram:
        return ShadowDiagram(
            self.edge_count,
            tuple(tuple(mapping[e] for e in c) for c in self.crossings),
            self.free_circles,
        )

    def reordered(self, order: Sequence[int]) -> ShadowDiagram:
        return ShadowDiagram(
            self.edge_count, tuple(self.crossings[i] for i in order), self.free_circles
        )


def trivial_knot() -> ShadowDiagram:
    return ShadowDiagram(0, (), 1)


def _split_pairs(d: ShadowDiagram):
    """Per crossing: ((A pair 1, A pair 2), (B pair 1, B pair 2))."""
    return [
        (((p0, p1), (p2, p3)), ((p1, p2), (p3, p0)))
        for p0, p1, p2, p3 in d.crossings
    ]


def _as_mask(d: ShadowDiagram, state) -> int:
    m = d.crossing_count
    if isinstance(state, int):
        if not 0 <= state < (1 << m):
            raise ValueError(f"state mask {state} out of range for {m} crossings")
        return state
    bits = list(state)
    if len(bits) != m:
        raise ValueError(f"state has {len(bits)} entries, diagram has {m} crossings")
    mask = 0
    for i, b in enumerate(bits):
        if isinstance(b, str):
            b = {"A": SPLIT_A, "B": SPLIT_B}[b.upper()]
        if b not in (SPLIT_A, SPLIT_B):
            raise ValueError(f"invalid split {b!r}")
        mask |= b << i
    return mask


def circle_count(d: ShadowDiagram, state) -> int:
    """Number of closed curves after splitting every crossing.

    ``state`` is either an int mask or a sequence of ``"A"``/``"B"`` (or 0/1)
    with one entry per crossing.
    """
    mask = _as_mask(d, state)
    ds = DisjointSet(d.edge_count)
    for i, (a_pairs, b_pairs) in enumerate(_split_pairs(d)):
        (u, v), (w, z) = b_pairs if (mask >> i) & 1 else a_pairs
        ds.union(u, v)
        ds.union(w, z)
    return ds.components + d.free_circles


def _check_cap(d: ShadowDiagram) -> None:
    cap = max_crossings()
    if d.crossing_count > cap:
        raise TooManyCrossingsError(
            f"too many crossings: {d.crossing_count} > {cap} ({MAX_CROSSINGS_ENV})"
        )


def _histogram_range(d: ShadowDiagram, start: int, stop: int) -> list[int]:
    # Hot loop: DisjointSet inlined (path halving, union by size), fresh
    # parent/size lists per mask.
    edges = d.edge_count
    flat = [(*a[0], *a[1], *b[0], *b[1]) for a, b in _split_pairs(d)]
    hist = [0] * (edges + 1)
    base = list(range(edges))
    ones = [1] * edges
    for mask in range(start, stop):
        parent = base[:]
        size = ones[:]
        comps = edges
        bit = mask
        for a0, a1, a2, a3, b0, b1, b2, b3 in flat:
            pairs = ((b0, b1), (b2, b3)) if bit & 1 else ((a0, a1), (a2, a3))
            bit >>= 1
            for u, v in pairs:
                while parent[u] != u:
                    parent[u] = parent[parent[u]]
                    u = parent[u]
                while parent[v] != v:
                    parent[v] = parent[parent[v]]
                    v = parent[v]
                if u != v:
                    if size[u] < size[v]:
                        u, v = v, u
                    parent[v] = u
                    size[u] += size[v]
                    comps -= 1
        hist[comps] += 1
    return hist


def state_histogram(d: ShadowDiagram, workers: int = 1) -> list[int]:
    """``hist[k]`` is the number of states with ``k`` circles.

    With ``workers > 1`` the mask space is cut into contiguous ranges evaluated
    in separate processes; the merged result is identical to the serial loop.
    """
    _check_cap(d)
    total = 1 << d.crossing_count
    if workers <= 1 or total < 4096:
        hist = _histogram_range(d, 0, total)
    else:
        step = -(-total // workers)
        bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        hist = [0] * (d.edge_count + 1)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_histogram_range, d, lo, hi) for lo, hi in bounds]
            for f in futures:
                for k, v in enumerate(f.result()):
                    hist[k] += v
    if d.free_circles:
        hist = [0] * d.free_circles + hist
    return hist


def state_polynomial(d: ShadowDiagram, workers: int = 1) -> IntPolynomial:
    """Sum of ``x**circle_count(d, s)`` over all ``2**m`` states ``s``."""
    return IntPolynomial(state_histogram(d, workers=workers))


def count_states_with_circles(d: ShadowDiagram, k: int) -> int:
    """Number of states of ``d`` with exactly ``k`` circles."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    _check_cap(d)
    inner = k - d.free_circles
    # no state can have more curves than edge classes
    if inner < 0 or inner > d.edge_count or (inner == 0 and d.edge_count > 0):
        return 0
    hist = _histogram_range(d, 0, 1 << d.crossing_count)
    return hist[inner]


def disjoint_union(d1: ShadowDiagram, d2: ShadowDiagram) -> ShadowDiagram:
    off = d1.edge_count
    shifted = tuple(tuple(e + off for e in c) for c in d2.crossings)
    return ShadowDiagram(
        d1.edge_count + d2.edge_count,
        d1.crossings + shifted,
        d1.free_circles + d2.free_circles,
    )


def splice_choices(d: ShadowDiagram) -> list:
    """Every admissible splice site of ``d``: each edge id, then ``FREE_CIRCLE`` if any."""
    sites: list = list(range(d.edge_count))
    if d.free_circles:
        sites.append(FREE_CIRCLE)
    return sites


def _default_site(d: ShadowDiagram):
    if d.edge_count:
        return 0
    if d.free_circles:
        return FREE_CIRCLE
    raise ValueError("nothing to splice: diagram has no edges and no free circles")


def connected_sum(d1: ShadowDiagram, d2: ShadowDiagram, edge1=None, edge2=None) -> ShadowDiagram:
    """Cut one edge in each summand and cross-splice the loose ends.

    ``edge1``/``edge2`` pick the splice sites (an edge id or ``FREE_CIRCLE``);
    the default is the lowest-numbered edge, falling back to a free circle.
    If edge ``e`` of ``d1`` sits at ports P1, P2 and edge ``f`` of ``d2`` at
    Q1, Q2, the result has one edge at {P1, Q1} and another at {P2, Q2}.
    """
    for d in (d1, d2):
        if not d.edge_count and not d.free_circles:
            raise ValueError("nothing to splice: diagram has no edges and no free circles")
    site1 = _default_site(d1) if edge1 is None else edge1
    site2 = _default_site(d2) if edge2 is None else edge2
    for d, site in ((d1, site1), (d2, site2)):
        if site == FREE_CIRCLE:
            if not d.free_circles:
                raise ValueError("no free circle to splice into")
        elif not (isinstance(site, int) and 0 <= site < d.edge_count):
            raise ValueError(f"edge {site!r} not in diagram")

    u = disjoint_union(d1, d2)
    if site1 == FREE_CIRCLE or site2 == FREE_CIRCLE:
        # a free circle absorbs into the other summand's curve
        return ShadowDiagram(u.edge_count, u.crossings, u.free_circles - 1)

    e, f = site1, site2 + d1.edge_count
    (p2,) = u.ports(e)[1:]
    (q1,) = u.ports(f)[:1]
    crossings = [list(c) for c in u.crossings]
    crossings[p2[0]][p2[1]] = f
    crossings[q1[0]][q1[1]] = e
    return ShadowDiagram(u.edge_count, tuple(tuple(c) for c in crossings), u.free_circles)
