"""Census of genus one fibered knots in manifolds with reducible genus two splittings.

Each entry is either a plumbing of two fibered annuli (monodromy computed
from the twists) or an explicit curve tagged by the shipped fixture it
matches.  The totals encode the classification; distinctness of entries inside
one manifold is checkable through their monodromies (see
:func:`entries_pairwise_distinct`), while completeness is taken as given.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Union

from gofknots.gl2z import MatZ2, NotConjugate, classify_type, is_conjugate_gl2z
from gofknots.manifolds.families import Family, lens_family
from gofknots.manifolds.spaces import S2xS1, S3, Lens, Manifold3, Sum
from gofknots.plumbing import PlumbingRecipe, plumb_monodromy

__all__ = [
    "ExplicitCurve",
    "CensusEntry",
    "gof_census",
    "gof_count",
    "format_census",
    "entries_pairwise_distinct",
    "THIRD_KNOT_MONODROMY",
]

# monodromy of the non-plumbing knot in L(4,1), supplied as data
THIRD_KNOT_MONODROMY = MatZ2(-2, 3, -3, 4)


@dataclass(frozen=True)
class ExplicitCurve:
    figure: int
    witness: Optional[tuple[int, int]] = None

    def __str__(self) -> str:
        w = " (a,b)=({},{})".format(*self.witness) if self.witness else ""
        return f"curve fig{self.figure}{w}"


@dataclass(frozen=True)
class CensusEntry:
    descriptor: Union[PlumbingRecipe, ExplicitCurve]
    monodromy: Optional[MatZ2] = None
    figure: Optional[int] = None

    def __post_init__(self):
        if self.monodromy is not None and self.monodromy.det != 1:
            raise ValueError("monodromy must have determinant +1")

    @property
    def dynamics(self) -> Optional[str]:
        return None if self.monodromy is None else str(classify_type(self.monodromy))

    def record(self) -> dict:
        return {
            "descriptor": str(self.descriptor),
            "matrix": None if self.monodromy is None else self.monodromy.rows(),
            "type": self.dynamics,
            "trace": None if self.monodromy is None else self.monodromy.trace,
            "figure": self.figure,
        }


def _signed_twist(m: Lens) -> int:
    # orientation of L(p,+-1) fixes the sign of its Hopf band
    return m.p if m.q == 1 else -m.p


def _plumbed(k1: int, k2: int, figure: Optional[int]) -> CensusEntry:
    r = PlumbingRecipe.of(k1, k2)
    return CensusEntry(r, plumb_monodromy(r), figure)


def _has_annulus(m: Lens) -> bool:
    return m.q in (1, m.p - 1)


def gof_census(m: Manifold3) -> list[CensusEntry]:
    if m == S3:
        # trefoil (finite order) and figure eight (anosov)
        return [_plumbed(1, -1, 35), _plumbed(1, 1, 35)]
    if m == S2xS1:
        return [_plumbed(1, 0, 31)]
    if isinstance(m, Lens):
        tag = lens_family(m.p, m.q)
        if tag.family is Family.NONE:
            return []
        if tag.family is Family.II:
            return [CensusEntry(ExplicitCurve(46, tag.witness), None, 46)]
        if tag.family is Family.III:
            return [CensusEntry(ExplicitCurve(47, tag.witness), None, 47)]
        k = _signed_twist(m) if _has_annulus(m) else m.p
        entries = [_plumbed(k, 1, None), _plumbed(k, -1, None)]
        if tag.family is Family.IV:
            entries.append(CensusEntry(ExplicitCurve(46, (1, 1)), THIRD_KNOT_MONODROMY, 48))
        return entries
    if isinstance(m, Sum):
        a, b = m.pieces
        if a == S2xS1 and b == S2xS1:
            return [_plumbed(0, 0, 10)]
        if a == S2xS1 or b == S2xS1:
            lp = b if a == S2xS1 else a
            if not _has_annulus(lp):
                return []
            return [_plumbed(_signed_twist(lp), 0, 16)]
        if not (_has_annulus(a) and _has_annulus(b)):
            return []
        if b.p == 2 and a.p != 2:
            a, b = b, a
        # now a.p == 2 whenever any summand is L(2,1)
        if a.p == 2:
            return [_plumbed(_signed_twist(b), 2, 27), _plumbed(_signed_twist(b), -2, 27)]
        return [_plumbed(_signed_twist(a), _signed_twist(b), 27)]
    raise ValueError(f"{m} is outside the census")


def gof_count(m: Manifold3) -> int:
    return len(gof_census(m))


def entries_pairwise_distinct(entries: list[CensusEntry]) -> bool:
    """True if every two entries with monodromies are provably non-conjugate."""
    mats = [e.monodromy for e in entries if e.monodromy is not None]
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if not isinstance(is_conjugate_gl2z(mats[i], mats[j]), NotConjugate):
                return False
    return True


def format_census(m: Manifold3, fmt: str = "table") -> str:
    entries = gof_census(m)
    if fmt == "records":
        lines = [json.dumps({"manifold": str(m), **e.record()}, sort_keys=True) for e in entries]
        lines.append(json.dumps({"manifold": str(m), "total": len(entries)}, sort_keys=True))
        return "\n".join(lines) + "\n"
    lines = [f"GOF-knots in {m}"]
    for i, e in enumerate(entries, 1):
        mat = str(e.monodromy) if e.monodromy is not None else "-"
        typ = e.dynamics or "-"
        fig = f"fig{e.figure}" if e.figure is not None else "-"
        lines.append(f"  {i}. {e.descriptor!s:<24} {mat:<18} {typ:<13} {fig}")
    lines.append(f"total: {len(entries)}")
    return "\n".join(lines) + "\n"
