"""Closed 3-manifolds with genus <= 2 reducible Heegaard splittings.

Only the pieces that occur as summands of a genus two reducible splitting
are modelled: ``S3``, ``S2xS1``, lens spaces ``L(p,q)`` and connected sums of
two such pieces.  Lens spaces keep their orientation: ``L(p,q)`` stores
``q mod p``, and the mirror image is ``L(p,-q)``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

__all__ = [
    "LensParams",
    "S3",
    "S2xS1",
    "Lens",
    "Sum",
    "Manifold3",
    "Piece",
    "q_inverse",
    "lens",
    "connected_sum",
    "parse_manifold",
    "is_homeomorphic",
    "mirror",
    "canonical_lens_q",
]


def q_inverse(p: int, q: int) -> int:
    """Least non-negative ``q'`` with ``q q' = 1 mod p``."""
    if p < 2:
        raise ValueError(f"q_inverse needs p >= 2, got p={p}")
    if math.gcd(p, q) != 1:
        raise ValueError(f"gcd({p},{q}) != 1")
    return pow(q, -1, p)


def canonical_lens_q(p: int, q: int) -> int:
    """Representative of ``L(p,q)`` up to (possibly orientation reversing) homeomorphism."""
    q %= p
    qi = q_inverse(p, q)
    return min(q, p - q, qi, p - qi)


@dataclass(frozen=True)
class LensParams:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0:
            raise ValueError("p must be non-negative")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"gcd({self.p},{self.q}) != 1")


@dataclass(frozen=True, order=True)
class _S3:
    def __str__(self) -> str:
        return "S3"


@dataclass(frozen=True, order=True)
class _S2xS1:
    def __str__(self) -> str:
        return "S2xS1"


S3 = _S3()
S2xS1 = _S2xS1()


@dataclass(frozen=True)
class Lens:
    """``L(p,q)`` with ``p >= 2`` and ``0 < q < p`` (oriented)."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or not 0 < self.q < self.p or math.gcd(self.p, self.q) != 1:
            raise ValueError(f"L({self.p},{self.q}) is not normalized")

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"

    @property
    def params(self) -> LensParams:
        return LensParams(self.p, self.q)


Piece = Union[_S2xS1, Lens]


def _piece_key(m) -> tuple:
    if isinstance(m, _S2xS1):
        return (0, 0, 0)
    return (1, m.p, canonical_lens_q(m.p, m.q), m.q)


@dataclass(frozen=True)
class Sum:
    """Connected sum of two prime pieces, stored in canonical order."""

    first: Piece
    second: Piece

    def __post_init__(self):
        for piece in (self.first, self.second):
            if not isinstance(piece, (_S2xS1, Lens)):
                raise ValueError(f"{piece} cannot be a connected summand here")
        if _piece_key(self.first) > _piece_key(self.second):
            a, b = self.second, self.first
            object.__setattr__(self, "first", a)
            object.__setattr__(self, "second", b)

    def __str__(self) -> str:
        return f"{self.first}#{self.second}"

    @property
    def pieces(self) -> tuple[Piece, Piece]:
        return (self.first, self.second)


Manifold3 = Union[_S3, _S2xS1, Lens, Sum]


def lens(p: int, q: int) -> Manifold3:
    """Normalize a genus one manifold given by a ``(p,q)`` curve."""
    p = abs(p)
    if math.gcd(p, q) != 1:
        raise ValueError(f"gcd({p},{q}) != 1")
    if p == 1:
        return S3
    if p == 0:
        return S2xS1
    return Lens(p, q % p)


def connected_sum(m1: Manifold3, m2: Manifold3) -> Manifold3:
    pieces = [m for m in (m1, m2) if m != S3]
    if len(pieces) == 0:
        return S3
    if len(pieces) == 1:
        return pieces[0]
    if isinstance(m1, Sum) or isinstance(m2, Sum):
        raise ValueError("connected sums of more than two prime pieces are out of scope")
    return Sum(pieces[0], pieces[1])


def mirror(m: Manifold3) -> Manifold3:
    if isinstance(m, Lens):
        return Lens(m.p, (-m.q) % m.p)
    if isinstance(m, Sum):
        return Sum(mirror(m.first), mirror(m.second))
    return m


_LENS_RE = re.compile(r"^L\((-?\d+),(-?\d+)\)$")


def _parse_piece(text: str) -> Manifold3:
    t = text.strip().replace(" ", "").replace("×", "x").replace("−", "-")
    if t in ("S3", "S^3"):
        return S3
    if t in ("S2xS1", "S^2xS^1", "S1xS2"):
        return S2xS1
    m = _LENS_RE.match(t)
    if m:
        return lens(int(m.group(1)), int(m.group(2)))
    raise ValueError(f"cannot parse manifold {text!r}; expected S3, S2xS1, L(p,q) or A#B")


def parse_manifold(text: str) -> Manifold3:
    parts = text.split("#")
    if len(parts) > 2:
        raise ValueError("connected sums of more than two pieces are out of scope")
    pieces = [_parse_piece(p) for p in parts]
    if len(pieces) == 1:
        return pieces[0]
    return connected_sum(pieces[0], pieces[1])


def _lens_oriented_equal(a: Lens, b: Lens) -> bool:
    if a.p != b.p:
        return False
    return b.q in (a.q, q_inverse(a.p, a.q))


def _piece_oriented_equal(a, b) -> bool:
    if isinstance(a, Lens) and isinstance(b, Lens):
        return _lens_oriented_equal(a, b)
    return a == b


def _oriented(m1: Manifold3, m2: Manifold3) -> bool:
    if isinstance(m1, Sum) and isinstance(m2, Sum):
        a1, a2 = m1.pieces
        b1, b2 = m2.pieces
        return (_piece_oriented_equal(a1, b1) and _piece_oriented_equal(a2, b2)) or (
            _piece_oriented_equal(a1, b2) and _piece_oriented_equal(a2, b1)
        )
    if isinstance(m1, Sum) or isinstance(m2, Sum):
        return False
    return _piece_oriented_equal(m1, m2)


def is_homeomorphic(m1: Manifold3, m2: Manifold3, oriented: bool = False) -> bool:
    """Homeomorphism test for the manifolds of this module.

    Oriented: lens spaces agree iff ``q2 = q1^{+-1} mod p`` and sums agree
    summand by summand.  Unoriented additionally allows mirroring the whole
    manifold, i.e. both summands of a sum at once.
    """
    if _oriented(m1, m2):
        return True
    return not oriented and _oriented(m1, mirror(m2))
