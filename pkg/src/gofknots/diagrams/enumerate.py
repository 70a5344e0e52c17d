"""Bounded exhaustive enumeration of simple closed curves on a diagram.

A normal multicurve is determined by how many times it crosses each edge of
the diagram together with, in every cell, a non-crossing matching of the
crossing points on the cell boundary in which no arc joins a side to itself.
Enumeration therefore runs over edge weights, then over the matchings of
each cell, and keeps the weight/matching choices that trace out a single
closed curve.  Every curve arises exactly once, so no deduplication pass is
needed, and simplicity holds by construction.

Two budgets bound the search.  ``max_crossings`` limits the total number of
crossings with the four disk boundaries.  Free sides (the reducing circle,
and the extra arcs of ``S2xS1`` pieces) are not disk boundaries, so a curve
can wind around them at no cost; ``max_free`` caps those crossings to keep
the search finite.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Iterator, Mapping, Optional

from gofknots.diagrams.complex import FREE, StandardDiagram, build_standard_diagram
from gofknots.diagrams.curves import NormalCurve, Transit, is_essential, is_gof

__all__ = ["enumerate_curves", "search_gof", "cell_matchings", "DEFAULT_MAX_FREE"]

DEFAULT_MAX_FREE = 2


@lru_cache(maxsize=None)
def cell_matchings(labels: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Non-crossing perfect matchings of points on a circle.

    ``labels[i]`` is the side carrying point ``i`` (points listed in
    counterclockwise order).  Points on the same side are never matched.
    Each matching is returned as a tuple ``m`` with ``m[i]`` the partner of
    ``i``.
    """
    n = len(labels)
    if n % 2:
        return ()

    @lru_cache(maxsize=None)
    def interval(lo: int, hi: int) -> tuple[tuple[tuple[int, int], ...], ...]:
        if lo >= hi:
            return ((),)
        out = []
        for j in range(lo + 1, hi, 2):
            if labels[j] == labels[lo]:
                continue
            inner = interval(lo + 1, j)
            if not inner:
                continue
            outer = interval(j + 1, hi)
            for a in inner:
                for b in outer:
                    out.append(((lo, j),) + a + b)
        return tuple(out)

    result = []
    for pairs in interval(0, n):
        m = [0] * n
        for i, j in pairs:
            m[i], m[j] = j, i
        result.append(tuple(m))
    return tuple(result)


class _Layout:
    """Edge bookkeeping shared by every weight assignment on one diagram."""

    def __init__(self, diagram: StandardDiagram):
        self.diagram = diagram
        edges = diagram.edges()
        # disk-boundary edges first, then free ones; within each, order by
        # the cells they touch so that cells are completed early
        self.edges = sorted(
            edges,
            key=lambda e: (diagram.side(*e[0]).carrier == FREE, max(e[0][0], e[1][0]), e),
        )
        self.is_free = [diagram.side(*e[0]).carrier == FREE for e in self.edges]
        # curve family of each edge: "d", "e", "D'", "E'" or "free"
        self.families = [diagram.side(*e[0]).carrier.rstrip("+-") for e in self.edges]
        self.edge_of = {}
        for i, (u, v) in enumerate(self.edges):
            self.edge_of[u] = i
            self.edge_of[v] = i
        last = {}
        for c, cell in enumerate(diagram.cells):
            last[c] = max(self.edge_of[(c, s)] for s in range(len(cell)))
        self.completes = [[c for c in last if last[c] == i] for i in range(len(self.edges))]

    def labels(self, c: int, weights) -> tuple[int, ...]:
        out = []
        for s in range(len(self.diagram.cells[c])):
            out.extend([s] * weights[self.edge_of[(c, s)]])
        return tuple(out)


def _weight_vectors(layout: _Layout, max_crossings: int, max_free: int, limits=None, prefix=()):
    """Edge weight vectors within budget for which every cell admits a matching."""
    n = len(layout.edges)
    weights = list(prefix) + [0] * (n - len(prefix))
    caps = dict(limits or {})
    fams = layout.families
    used = {f: 0 for f in set(fams)}

    def feasible(i: int) -> bool:
        for c in layout.completes[i]:
            if not cell_matchings(layout.labels(c, weights)):
                return False
        return True

    for i, w in enumerate(prefix):
        used[fams[i]] += w
        if not feasible(i):
            return

    def room(i: int, crossings: int, free: int) -> int:
        top = max_free - free if layout.is_free[i] else max_crossings - crossings
        fam = fams[i]
        if fam in caps:
            top = min(top, caps[fam] - used[fam])
        return top

    def rec(i: int, crossings: int, free: int):
        if i == n:
            if any(weights):
                yield tuple(weights)
            return
        fam = fams[i]
        for w in range(room(i, crossings, free) + 1):
            weights[i] = w
            if not feasible(i):
                continue
            used[fam] += w
            if layout.is_free[i]:
                yield from rec(i + 1, crossings, free + w)
            else:
                yield from rec(i + 1, crossings + w, free)
            used[fam] -= w
        weights[i] = 0

    used_c = sum(w for w, f in zip(prefix, layout.is_free) if not f)
    used_f = sum(w for w, f in zip(prefix, layout.is_free) if f)
    if used_c <= max_crossings and used_f <= max_free and all(used[f] <= c for f, c in caps.items() if f in used):
        yield from rec(len(prefix), used_c, used_f)


def _trace(layout: _Layout, weights, labels_per_cell, matchings) -> Optional[NormalCurve]:
    """The curve given by one choice of matchings, or None if it is disconnected."""
    diagram = layout.diagram
    offsets = []
    total = 0
    start = None
    for c, labels in enumerate(labels_per_cell):
        off = {}
        for i, s in enumerate(labels):
            off.setdefault(s, i)
        offsets.append(off)
        total += len(labels)
        if start is None and labels:
            start = (c, 0)
    transits = []
    c, e = start
    while True:
        labels = labels_per_cell[c]
        x = matchings[c][e]
        se, sx = labels[e], labels[x]
        pe, px = e - offsets[c][se], x - offsets[c][sx]
        transits.append(Transit(c, se, pe, sx, px))
        c2, s2 = diagram.partner(c, sx)
        n = weights[layout.edge_of[(c, sx)]]
        c, e = c2, offsets[c2][s2] + (n - 1 - px)
        if (c, e) == start:
            break
    if 2 * len(transits) != total:
        return None
    return NormalCurve(tuple(transits)).canonical()


def _curves_for(layout: _Layout, weights) -> Iterator[NormalCurve]:
    labels = [layout.labels(c, weights) for c in range(len(layout.diagram.cells))]
    options = [cell_matchings(l) for l in labels]
    for choice in itertools.product(*options):
        curve = _trace(layout, weights, labels, choice)
        if curve is not None:
            yield curve


def _generate(diagram, max_crossings, max_free, essential, limits=None, prefix=()) -> Iterator[NormalCurve]:
    layout = _Layout(diagram)
    for weights in _weight_vectors(layout, max_crossings, max_free, limits, prefix):
        for curve in _curves_for(layout, weights):
            if essential and not is_essential(curve, diagram):
                continue
            yield curve


def _worker(args) -> list[NormalCurve]:
    manifold, prefix, max_crossings, max_free, essential, limits = args
    d = build_standard_diagram(manifold)
    return list(_generate(d, max_crossings, max_free, essential, limits, prefix))


def enumerate_curves(
    diagram: StandardDiagram,
    max_crossings: int,
    max_free: int = DEFAULT_MAX_FREE,
    essential: bool = True,
    jobs: int = 1,
    limits: Optional[Mapping[str, int]] = None,
) -> Iterator[NormalCurve]:
    """Yield every simple closed normal curve within the crossing budgets.

    Each curve is yielded once, in its :meth:`NormalCurve.canonical` form.
    The order is fixed by the diagram and the budgets.  With ``jobs > 1``
    the work is split by the weight of the first edge and the pieces are
    concatenated in that order, so the output matches the serial run.  With
    ``essential`` set, curves bounding a disk in the surface are skipped.
    ``limits`` optionally caps the crossings with individual curve families,
    keyed by ``"d"``, ``"e"``, ``"D'"``, ``"E'"`` or ``"free"``.
    """
    if max_crossings < 0:
        raise ValueError("max_crossings must be non-negative")
    if jobs <= 1:
        yield from _generate(diagram, max_crossings, max_free, essential, limits)
        return
    layout = _Layout(diagram)
    top = max_free if layout.is_free[0] else max_crossings
    limits = dict(limits) if limits else None
    tasks = [(diagram.manifold, (w,), max_crossings, max_free, essential, limits) for w in range(top + 1)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for batch in pool.map(_worker, tasks):
            yield from batch


def search_gof(
    diagram: StandardDiagram,
    max_crossings: int,
    max_free: int = DEFAULT_MAX_FREE,
    jobs: int = 1,
    limit: Optional[int] = None,
    limits: Optional[Mapping[str, int]] = None,
) -> list[NormalCurve]:
    """Curves within the budget whose words on both sides are commutators.

    The essential-curve filter is skipped here: a curve bounding a disk
    reads the trivial word, which is never a commutator.  ``limit`` stops
    after that many hits; without it the search is exhaustive.
    """
    hits = []
    for curve in enumerate_curves(diagram, max_crossings, max_free, False, jobs, limits):
        if is_gof(curve, diagram):
            hits.append(curve)
            if limit is not None and len(hits) >= limit:
                break
    return hits
