"""Simple closed curves on a standard diagram, recorded cell by cell.

A curve is a cyclic sequence of transits.  A transit is a chord inside one
cell, entering through one side and leaving through a different side; the
``slot`` of an endpoint is its position along that side, counted
counterclockwise around the cell.  When the curve leaves cell ``c`` through
side ``s`` at slot ``i`` it enters the partner side at slot ``n - 1 - i``,
where ``n`` is the number of times the curve crosses that edge.

Given only the sequence of ``(cell, entry side, exit side)`` passages, the
slots of a simple curve are forced: two strands crossing the same side are
ordered by the first place where they stop running parallel.
:meth:`NormalCurve.from_passages` computes them that way and then checks the
result is embedded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from gofknots.diagrams.complex import FREE, V, W, StandardDiagram
from gofknots.words import CyclicWord, Letter, is_commutator_class

__all__ = [
    "Transit",
    "NormalCurve",
    "InvalidCurve",
    "read_word",
    "is_gof",
    "GofVerdict",
    "in_minimal_position",
    "complement_euler_characteristics",
    "is_essential",
]


class InvalidCurve(ValueError):
    pass


class Transit(NamedTuple):
    cell: int
    entry: int
    entry_slot: int
    exit: int
    exit_slot: int


Passage = tuple[int, int, int]


def _walk_key(diagram: StandardDiagram, passages: Sequence[Passage], k: int, forward: bool) -> tuple:
    n = len(passages)
    key = []
    for j in range(n):
        c, a, b = passages[(k + j) % n] if forward else passages[(k - j) % n]
        m = len(diagram.cells[c])
        d = (b - a) % m if forward else (a - b) % m
        key.append(-d)
    return tuple(key)


def _compute_slots(diagram: StandardDiagram, passages: Sequence[Passage]) -> tuple[Transit, ...]:
    n = len(passages)
    # points on each side, seen from the cell owning the side
    points: dict[tuple[int, int], list] = {}
    for k, (c, a, b) in enumerate(passages):
        points.setdefault((c, b), []).append(("exit", k))
        points.setdefault((c, a), []).append(("entry", k))
    exit_slot = [0] * n
    entry_slot = [0] * n
    done = set()
    for side, pts in sorted(points.items()):
        if side in done:
            continue
        partner = diagram.partner(*side)
        done.add(side)
        done.add(partner)
        keyed = []
        for kind, k in pts:
            if kind == "exit":
                keyed.append((_walk_key(diagram, passages, k, forward=False), kind, k))
            else:
                keyed.append((_walk_key(diagram, passages, k, forward=True), kind, k))
        keyed.sort()
        for i in range(len(keyed) - 1):
            if keyed[i][0] == keyed[i + 1][0]:
                raise InvalidCurve("passage sequence is a proper power or not embeddable")
        total = len(keyed)
        for pos, (_, kind, k) in enumerate(keyed):
            if kind == "exit":
                exit_slot[k] = pos
                entry_slot[(k + 1) % n] = total - 1 - pos
            else:
                entry_slot[k] = pos
                exit_slot[(k - 1) % n] = total - 1 - pos
    return tuple(
        Transit(c, a, entry_slot[k], b, exit_slot[k]) for k, (c, a, b) in enumerate(passages)
    )


def _chords_interleave(chords: list[tuple[int, int]]) -> bool:
    events = []
    for idx, (u, v) in enumerate(chords):
        events.append((u, idx))
        events.append((v, idx))
    events.sort()
    stack: list[int] = []
    seen = set()
    for _, idx in events:
        if idx in seen:
            if not stack or stack[-1] != idx:
                return True
            stack.pop()
        else:
            seen.add(idx)
            stack.append(idx)
    return False


@dataclass(frozen=True)
class NormalCurve:
    transits: tuple[Transit, ...]

    def __len__(self) -> int:
        return len(self.transits)

    @classmethod
    def from_passages(cls, diagram: StandardDiagram, passages: Iterable) -> "NormalCurve":
        passages = tuple(tuple(p) for p in passages)
        if not passages:
            raise InvalidCurve("a curve needs at least one transit")
        cls._check_passages(diagram, passages)
        curve = cls(_compute_slots(diagram, passages))
        curve.validate(diagram)
        return curve

    @staticmethod
    def _check_passages(diagram: StandardDiagram, passages) -> None:
        n = len(passages)
        for k, (c, a, b) in enumerate(passages):
            if not 0 <= c < len(diagram.cells):
                raise InvalidCurve(f"transit {k}: no cell {c}")
            m = len(diagram.cells[c])
            if not (0 <= a < m and 0 <= b < m):
                raise InvalidCurve(f"transit {k}: side out of range")
            if a == b:
                raise InvalidCurve(f"transit {k}: enters and leaves through side {a}")
            c2, a2, _ = passages[(k + 1) % n]
            if diagram.partner(c, b) != (c2, a2):
                raise InvalidCurve(f"transit {k} does not connect to transit {(k + 1) % n}")

    @property
    def passages(self) -> tuple[Passage, ...]:
        return tuple((t.cell, t.entry, t.exit) for t in self.transits)

    def side_counts(self) -> dict[tuple[int, int], int]:
        counts: dict[tuple[int, int], int] = {}
        for t in self.transits:
            counts[(t.cell, t.exit)] = counts.get((t.cell, t.exit), 0) + 1
            counts[(t.cell, t.entry)] = counts.get((t.cell, t.entry), 0) + 1
        return counts

    def validate(self, diagram: StandardDiagram) -> None:
        """Check closure, slot consistency across every edge, and embeddedness."""
        ts = self.transits
        n = len(ts)
        self._check_passages(diagram, self.passages)
        counts = self.side_counts()
        used: dict[tuple[int, int], set] = {}
        for k, t in enumerate(ts):
            nxt = ts[(k + 1) % n]
            total = counts[(t.cell, t.exit)]
            if counts.get(diagram.partner(t.cell, t.exit)) != total:
                raise InvalidCurve(f"edge crossing counts disagree at transit {k}")
            if nxt.entry_slot != total - 1 - t.exit_slot:
                raise InvalidCurve(f"slot mismatch between transit {k} and {(k + 1) % n}")
            for side, slot in (((t.cell, t.exit), t.exit_slot), ((t.cell, t.entry), t.entry_slot)):
                bucket = used.setdefault(side, set())
                if slot in bucket or not 0 <= slot < counts[side]:
                    raise InvalidCurve(f"bad slot {slot} on side {side}")
                bucket.add(slot)
        for c, cell in enumerate(diagram.cells):
            offsets = []
            acc = 0
            for s in range(len(cell)):
                offsets.append(acc)
                acc += counts.get((c, s), 0)
            chords = [
                (offsets[t.entry] + t.entry_slot, offsets[t.exit] + t.exit_slot)
                for t in ts
                if t.cell == c
            ]
            if _chords_interleave(chords):
                raise InvalidCurve(f"curve crosses itself in cell {cell.name}")

    def reversed(self) -> "NormalCurve":
        return NormalCurve(
            tuple(Transit(t.cell, t.exit, t.exit_slot, t.entry, t.entry_slot) for t in reversed(self.transits))
        )

    def canonical(self) -> "NormalCurve":
        """Same curve, started and oriented so its transit tuple is smallest."""
        best = self.transits
        for seq in (self.transits, self.reversed().transits):
            for i in range(len(seq)):
                cand = seq[i:] + seq[:i]
                if cand < best:
                    best = cand
        return NormalCurve(best)

    def crossings(self, diagram: StandardDiagram, include_free: bool = False) -> int:
        total = 0
        for t in self.transits:
            side = diagram.side(t.cell, t.exit)
            if side.carrier != FREE or include_free:
                total += 1
        return total

    def free_crossings(self, diagram: StandardDiagram) -> int:
        return sum(1 for t in self.transits if diagram.side(t.cell, t.exit).carrier == FREE)


def read_word(
    curve: NormalCurve,
    diagram: StandardDiagram,
    system: str = V,
    flips: tuple[int, int] = (1, 1),
    reverse: bool = False,
) -> CyclicWord:
    """Word of the curve in the letters of one disk system.

    ``system`` is ``"V"`` (letters ``x``, ``y`` for ``D``, ``E``) or ``"W"``
    (``x'``, ``y'`` for ``D'``, ``E'``).  ``flips`` reverses the orientation
    of either disk boundary; ``reverse`` traverses the curve backwards.
    """
    if system not in (V, W):
        raise ValueError(f"unknown disk system {system!r}")
    letters = []
    for t in curve.transits:
        side = diagram.side(t.cell, t.exit)
        if side.system == system:
            letters.append(Letter(side.gen, side.sign * flips[side.gen]))
    word = CyclicWord(letters)
    return word.inverse() if reverse else word


@dataclass(frozen=True)
class GofVerdict:
    gof: bool
    v_word: CyclicWord
    w_word: CyclicWord

    def __bool__(self) -> bool:
        return self.gof


def is_gof(curve: NormalCurve, diagram: StandardDiagram) -> GofVerdict:
    v = read_word(curve, diagram, V)
    w = read_word(curve, diagram, W)
    return GofVerdict(is_commutator_class(v) and is_commutator_class(w), v, w)


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, u):
        parent = self.parent
        parent.setdefault(u, u)
        root = u
        while parent[root] != root:
            root = parent[root]
        while parent[u] != root:
            parent[u], u = root, parent[u]
        return root

    def union(self, u, v):
        ru, rv = self.find(u), self.find(v)
        if ru != rv:
            self.parent[ru] = rv


class _Cut:
    """The surface cut along some chords of a curve and along some sides.

    Segments ``(cell, side, i)`` are the pieces of a side between consecutive
    kept points.  ``pieces`` groups segments inside each cell; ``comps``
    additionally glues across the sides accepted by ``glue``.
    """

    def __init__(self, diagram: StandardDiagram, curve: NormalCurve, keep: Sequence[int], glue):
        self.diagram = diagram
        ts = curve.transits
        raw: dict[tuple[int, int], list[int]] = {}
        for k in keep:
            t = ts[k]
            raw.setdefault((t.cell, t.entry), []).append(t.entry_slot)
            raw.setdefault((t.cell, t.exit), []).append(t.exit_slot)
        # re-index kept points densely along each side
        self.rank = {side: {slot: i for i, slot in enumerate(sorted(slots))} for side, slots in raw.items()}
        self.count = {side: len(slots) for side, slots in raw.items()}
        pieces = _UnionFind()
        endpoint = set()
        for k in keep:
            t = ts[k]
            i = self.rank[(t.cell, t.entry)][t.entry_slot]
            j = self.rank[(t.cell, t.exit)][t.exit_slot]
            s, u = t.entry, t.exit
            pieces.union((t.cell, s, i), (t.cell, u, j + 1))
            pieces.union((t.cell, u, j), (t.cell, s, i + 1))
            endpoint.add((t.cell, s, i))
            endpoint.add((t.cell, u, j))
        for c, cell in enumerate(diagram.cells):
            m = len(cell)
            for s in range(m):
                n = self.count.get((c, s), 0)
                pieces.find((c, s, 0))
                pieces.union((c, s, n), (c, (s + 1) % m, 0))
                for i in range(n):
                    if (c, s, i) not in endpoint:
                        pieces.union((c, s, i), (c, s, i + 1))
        self.pieces = pieces
        comps = _UnionFind()
        for seg in list(pieces.parent):
            comps.union(seg, pieces.find(seg))
        for (c, s), (c2, s2) in diagram.edges():
            if glue(diagram.side(c, s)):
                n = self.count.get((c, s), 0)
                for i in range(n + 1):
                    comps.union((c, s, i), (c2, s2, n - i))
        self.comps = comps

    def segments(self):
        return list(self.pieces.parent)


def in_minimal_position(curve: NormalCurve, diagram: StandardDiagram, system: str = V) -> bool:
    """True if the curve has no bigon with the disk boundaries of ``system``.

    Between consecutive crossings with the disk boundaries the curve is an
    arc in a four-holed sphere.  An arc returning to the hole it left from
    cuts that sphere in two; if one side contains none of the other three
    holes, the arc and the hole boundary co-bound a disk and the curve is not
    in minimal position.
    """
    ts = curve.transits
    n = len(ts)
    hits = [k for k, t in enumerate(ts) if diagram.side(t.cell, t.exit).system == system]
    if not hits:
        return True
    labels_all = {
        diagram.side(c, s).boundary_label for c, s in diagram.sides() if diagram.side(c, s).system == system
    }
    for idx, k in enumerate(hits):
        nxt = hits[(idx + 1) % len(hits)]
        first = (k + 1) % n
        arc = [(first + j) % n for j in range((nxt - k) % n or n)]
        start = ts[first]
        start_label = diagram.side(start.cell, start.entry).boundary_label
        end_label = diagram.side(ts[nxt].cell, ts[nxt].exit).boundary_label
        if start_label != end_label:
            continue
        cut = _Cut(diagram, curve, arc, lambda side: side.system != system)
        touched: dict = {}
        for seg in cut.segments():
            c, s, _ = seg
            side = diagram.side(c, s)
            if side.system == system:
                touched.setdefault(cut.comps.find(seg), set()).add(side.boundary_label)
        side_key = (start.cell, start.entry)
        i = cut.rank[side_key][start.entry_slot]
        for seg in ((start.cell, start.entry, i), (start.cell, start.entry, i + 1)):
            others = touched.get(cut.comps.find(seg), set()) - {start_label}
            if not others & (labels_all - {start_label}):
                return False
    return True


def complement_euler_characteristics(curve: NormalCurve, diagram: StandardDiagram) -> list[int]:
    """Euler characteristics of the components of the surface cut along the curve."""
    cut = _Cut(diagram, curve, range(len(curve.transits)), lambda side: True)
    comp = cut.comps.find
    chi: dict = {}

    def add(seg, value):
        root = comp(seg)
        chi[root] = chi.get(root, 0) + value

    piece_roots = {}
    for seg in cut.segments():
        piece_roots.setdefault(cut.pieces.find(seg), seg)
    for seg in piece_roots.values():
        add(seg, 1)  # faces
    for (c, s), _ in diagram.edges():
        n = cut.count.get((c, s), 0)
        for i in range(n + 1):
            add((c, s, i), -1)  # glued segment pairs
        for i in range(n):
            # each crossing point splits into one vertex on either side of the curve
            add((c, s, i), 1)
            add((c, s, i + 1), 1)
    for t in curve.transits:
        # a chord becomes a boundary edge on each of its sides
        i = cut.rank[(t.cell, t.entry)][t.entry_slot]
        add((t.cell, t.entry, i), -1)
        add((t.cell, t.entry, i + 1), -1)
    for cls in diagram.vertex_classes():
        c, s = next(iter(cls))
        add((c, s, 0), 1)
    return sorted(chi.values())


def is_essential(curve: NormalCurve, diagram: StandardDiagram) -> bool:
    """False when the curve bounds a disk in the surface."""
    return 1 not in complement_euler_characteristics(curve, diagram)
