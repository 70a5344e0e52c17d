"""Which lens spaces carry genus one fibered knots, and how many.

A lens space with a GOF-knot is homeomorphic to one of

    (i)   L(p, 1), p != 4
    (ii)  L(2ab+a+b, 2a+1), (a, b) != (1, 1)
    (iii) L(2ab+a+b+1, 2a+1)
    (iv)  L(4, 1)

with ``a, b >= 1``.  The families are disjoint up to homeomorphism.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from gofknots.manifolds.spaces import q_inverse

__all__ = ["Family", "FamilyTag", "lens_family", "family_witnesses"]


class Family(enum.Enum):
    I = "i"
    II = "ii"
    III = "iii"
    IV = "iv"
    NONE = "none"

    def __str__(self) -> str:
        return f"({self.value})" if self is not Family.NONE else "none"


@dataclass(frozen=True)
class FamilyTag:
    family: Family
    witness: Optional[tuple[int, int]] = None

    def __str__(self) -> str:
        if self.witness is None:
            return str(self.family)
        return "{} (a,b)=({},{})".format(self.family, *self.witness)


def _matches(p: int, q: int, r: int) -> bool:
    # q = +-r^{+-1} mod p
    r %= p
    ri = q_inverse(p, r)
    return q % p in {r, (-r) % p, ri, (-ri) % p}


def family_witnesses(p: int, q: int) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """All ``(a, b)`` realizing ``L(p,q)`` in family (ii) and in family (iii).

    Family (ii) witnesses include ``(1, 1)``; the exclusion is applied by
    :func:`lens_family`.
    """
    fam2, fam3 = [], []
    for a in range(1, p):
        # 2ab + a + b >= 3a + 1 for b >= 1
        if 3 * a + 1 > p:
            break
        for b in range(1, p):
            n = 2 * a * b + a + b
            if n > p:
                break
            if n == p and _matches(p, q, 2 * a + 1):
                fam2.append((a, b))
            if n + 1 == p and _matches(p, q, 2 * a + 1):
                fam3.append((a, b))
    return fam2, fam3


def lens_family(p: int, q: int) -> FamilyTag:
    if p < 2:
        raise ValueError(f"lens_family needs p >= 2, got {p}")
    q %= p
    if q == 0:
        raise ValueError(f"gcd({p},{q}) != 1")
    q_inverse(p, q)  # validates coprimality
    if p == 4:
        return FamilyTag(Family.IV)
    if q in (1, p - 1):
        return FamilyTag(Family.I)
    fam2, fam3 = family_witnesses(p, q)
    fam2 = [w for w in fam2 if w != (1, 1)]
    if fam2:
        return FamilyTag(Family.II, fam2[0])
    if fam3:
        return FamilyTag(Family.III, fam3[0])
    return FamilyTag(Family.NONE)
