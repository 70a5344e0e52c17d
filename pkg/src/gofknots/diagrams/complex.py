"""Standard genus two Heegaard diagrams as glued polygons.

Each genus one summand is a torus carrying a meridian (boundary of ``D`` or
``E``, on the V side) and a second curve (boundary of ``D'`` or ``E'``, on
the W side) meeting it ``p`` times.  Cutting the torus along the meridian
gives an annulus whose two boundary circles are the ``d+``/``d-`` sides; the
``p`` arcs of ``D'`` cut that annulus into ``p`` rectangles, and the ``d+``
side of rectangle ``i`` is glued to the ``d-`` side of rectangle
``i + q mod p``.  For ``p = 0`` (an ``S2xS1`` summand) the W curve is a
parallel copy of the meridian and one free arc across the annulus makes the
two halves into rectangles.

The two tori are joined by removing a disk from rectangle 0 of each and
gluing along the circle; the resulting cell is cut open along one free arc
so that it is a 10-gon.  That circle is the reducing curve of the splitting.

Rectangle side order (counterclockwise) is bottom, right, top, left.
Exiting a cell through a side crosses the corresponding curve; the side's
``sign`` is the exponent of the letter recorded for that crossing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from gofknots.manifolds.spaces import S2xS1, S3, Lens, Manifold3, Sum

__all__ = [
    "Side",
    "Cell",
    "StandardDiagram",
    "build_standard_diagram",
    "diagram_summands",
    "V",
    "W",
    "FREE",
]

V = "V"
W = "W"
FREE = "free"

# carrier names per generator
_V_NAMES = ("d", "e")
_W_NAMES = ("D'", "E'")


@dataclass(frozen=True)
class Side:
    carrier: str  # d+, d-, e+, e-, D', E', free
    sign: int  # exponent of the letter read when exiting through this side; 0 for free

    @property
    def system(self) -> Optional[str]:
        if self.carrier == FREE:
            return None
        return V if self.carrier[0] in "de" else W

    @property
    def gen(self) -> Optional[int]:
        if self.carrier == FREE:
            return None
        return 0 if self.carrier[0] in "dD" else 1

    @property
    def boundary_label(self) -> tuple:
        """Which boundary circle of the surface cut along this side's system."""
        return (self.system, self.gen, self.sign)


@dataclass(frozen=True)
class Cell:
    name: str
    sides: tuple[Side, ...]

    def __len__(self) -> int:
        return len(self.sides)


@dataclass(frozen=True)
class StandardDiagram:
    """A closed surface given by polygons with side pairings.

    ``pairing`` maps ``(cell, side)`` to ``(cell, side)``; every pair is glued
    orientation-reversingly, so the surface is orientable by construction.
    """

    manifold: Manifold3
    cells: tuple[Cell, ...]
    pairing: dict = field(compare=False)
    summands: tuple[tuple[int, int], tuple[int, int]]  # (p, q) of the D and E tori

    def __post_init__(self):
        self.validate()

    def partner(self, cell: int, side: int) -> tuple[int, int]:
        return self.pairing[(cell, side)]

    def side(self, cell: int, side: int) -> Side:
        return self.cells[cell].sides[side]

    def sides(self):
        for c, cell in enumerate(self.cells):
            for s in range(len(cell)):
                yield c, s

    def edges(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        out = []
        for cs in self.sides():
            other = self.pairing[cs]
            if cs < other:
                out.append((cs, other))
        return out

    def vertex_classes(self) -> list[set]:
        parent = {(c, j): (c, j) for c, s in self.sides() for j in [s]}

        def find(u):
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        def union(u, v):
            parent[find(u)] = find(v)

        for (c, s), (c2, s2) in self.edges():
            n, n2 = len(self.cells[c]), len(self.cells[c2])
            # side s runs corner s -> corner s+1; its partner runs the other way
            union((c, s), (c2, (s2 + 1) % n2))
            union((c, (s + 1) % n), (c2, s2))
        classes: dict = {}
        for u in parent:
            classes.setdefault(find(u), set()).add(u)
        return list(classes.values())

    def euler_characteristic(self) -> int:
        return len(self.vertex_classes()) - len(self.edges()) + len(self.cells)

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            c = stack.pop()
            for s in range(len(self.cells[c])):
                c2, _ = self.pairing[(c, s)]
                if c2 not in seen:
                    seen.add(c2)
                    stack.append(c2)
        return len(seen) == len(self.cells)

    def validate(self) -> None:
        keys = set(self.sides())
        if set(self.pairing) != keys:
            raise ValueError("pairing must cover every side exactly once")
        for cs, other in self.pairing.items():
            if other == cs:
                raise ValueError(f"side {cs} is paired with itself")
            if self.pairing.get(other) != cs:
                raise ValueError(f"pairing is not an involution at {cs}")
            a, b = self.side(*cs), self.side(*other)
            if a.system != b.system or a.gen != b.gen or a.sign != -b.sign:
                raise ValueError(f"sides {cs} and {other} carry incompatible labels")
        if not self.is_connected():
            raise ValueError("diagram is not connected")
        chi = self.euler_characteristic()
        if chi != -2:
            raise ValueError(f"Euler characteristic {chi}, expected -2 for genus two")

    def cells_of_summand(self, gen: int) -> list[int]:
        """Cells that meet the meridian of the given summand."""
        names = _V_NAMES[gen]
        return [
            c
            for c, cell in enumerate(self.cells)
            if any(s.carrier in (names + "+", names + "-") for s in cell.sides)
        ]

    def meridian_cut_regions(self, gen: int) -> int:
        """Number of regions the W curve of one summand cuts its annulus into.

        The annulus is the summand torus cut along its meridian; this counts
        rectangles without the connected-sum gluing, so it equals ``p`` for a
        lens summand (and 2 for an ``S2xS1`` summand).
        """
        return len(self.cells_of_summand(gen))

    def gluing_offset(self, gen: int) -> int:
        """Offset ``q`` with which the meridian sides of the summand are glued."""
        return self.summands[gen][1]


def _torus_cells(gen: int, p: int, q: int):
    """Rectangles of one summand torus: list of side lists, and pairings."""
    d = _V_NAMES[gen]
    dw = _W_NAMES[gen]
    if p == 0:
        lower = [Side(d + "+", 1), Side(FREE, 0), Side(dw, -1), Side(FREE, 0)]
        upper = [Side(dw, 1), Side(FREE, 0), Side(d + "-", -1), Side(FREE, 0)]
        pairs = [((0, 0), (1, 2)), ((0, 2), (1, 0)), ((0, 1), (0, 3)), ((1, 1), (1, 3))]
        return [lower, upper], pairs
    cells = []
    pairs = []
    for i in range(p):
        cells.append([Side(d + "+", 1), Side(dw, 1), Side(d + "-", -1), Side(dw, -1)])
        pairs.append(((i, 1), ((i + 1) % p, 3)))
        pairs.append(((i, 0), ((i + q) % p, 2)))
    return cells, pairs


def _summand_params(piece) -> tuple[int, int]:
    if piece == S3:
        return (1, 0)
    if piece == S2xS1:
        return (0, 1)
    if isinstance(piece, Lens):
        return (piece.p, piece.q)
    raise ValueError(f"{piece} is not a genus one piece")


def diagram_summands(m: Manifold3):
    """Split a manifold into the two genus one pieces its standard diagram uses."""
    if isinstance(m, Sum):
        if m.first == S2xS1 and isinstance(m.second, Lens):
            return m.second, m.first
        return m.first, m.second
    if m == S3:
        return S3, S3
    if m == S2xS1:
        return S3, S2xS1
    if isinstance(m, Lens):
        return m, S3
    raise ValueError(f"{m} has no standard genus two diagram here")


def build_standard_diagram(m: Manifold3) -> StandardDiagram:
    """Standard diagram of ``m`` viewed as a connected sum of two genus one pieces.

    ``S3`` is ``S3#S3``, ``S2xS1`` is ``S3#S2xS1`` and ``L(p,q)`` is
    ``L(p,q)#S3``.
    """
    first, second = diagram_summands(m)
    params = (_summand_params(first), _summand_params(second))
    all_cells: list[tuple[str, list[Side]]] = []
    index: dict[tuple[int, int], int] = {}
    raw_pairs = []
    for gen, (p, q) in enumerate(params):
        cells, pairs = _torus_cells(gen, p, q)
        prefix = "AB"[gen]
        for i, sides in enumerate(cells):
            index[(gen, i)] = len(all_cells)
            all_cells.append((f"{prefix}{i}", sides))
        for (i, s), (j, t) in pairs:
            raw_pairs.append(((gen, i, s), (gen, j, t)))

    # merge rectangle A0 and B0 into the hub: A0 sides, f, B0 sides, f'
    a0, b0 = index[(0, 0)], index[(1, 0)]
    a_sides, b_sides = all_cells[a0][1], all_cells[b0][1]
    hub_sides = a_sides + [Side(FREE, 0)] + b_sides + [Side(FREE, 0)]
    f_side, f_back = len(a_sides), len(a_sides) + 1 + len(b_sides)

    order = [c for c in range(len(all_cells)) if c not in (a0, b0)]
    new_index = {0: 0}
    cells = [Cell("H", tuple(hub_sides))]
    for c in order:
        new_index[c] = len(cells)
        cells.append(Cell(all_cells[c][0], tuple(all_cells[c][1])))

    def locate(gen: int, i: int, s: int) -> tuple[int, int]:
        c = index[(gen, i)]
        if c == a0:
            return (0, s)
        if c == b0:
            return (0, len(a_sides) + 1 + s)
        return (new_index[c], s)

    pairing = {}
    for (g1, i1, s1), (g2, i2, s2) in raw_pairs:
        u, v = locate(g1, i1, s1), locate(g2, i2, s2)
        pairing[u] = v
        pairing[v] = u
    pairing[(0, f_side)] = (0, f_back)
    pairing[(0, f_back)] = (0, f_side)
    return StandardDiagram(m, tuple(cells), pairing, params)
