"""Fibered annuli and the monodromy of their plumbing.

An annulus fiber is determined by its monodromy, ``k`` Dehn twists about the
core.  Plumbing two of them gives a once-punctured torus fiber whose
monodromy, written in the basis of the two core curves, is

    [[1, k1], [k2, 1 + k1*k2]]

with determinant 1 and trace ``2 + k1*k2``.
"""

from __future__ import annotations

from dataclasses import dataclass

from gofknots.gl2z import MatZ2
from gofknots.manifolds.spaces import (
    S2xS1,
    S3,
    Lens,
    Manifold3,
    connected_sum,
    lens,
)

__all__ = ["FiberedAnnulus", "PlumbingRecipe", "annuli_in", "plumb_monodromy", "plumb_ambient"]


@dataclass(frozen=True, order=True)
class FiberedAnnulus:
    twist: int

    @property
    def ambient(self) -> Manifold3:
        k = self.twist
        if k == 0:
            return S2xS1
        if abs(k) == 1:
            return S3
        return lens(abs(k), 1 if k > 0 else -1)

    def __str__(self) -> str:
        return f"{self.twist:+d}-Hopf" if self.twist else "0-annulus"


@dataclass(frozen=True)
class PlumbingRecipe:
    first: FiberedAnnulus
    second: FiberedAnnulus

    @classmethod
    def of(cls, k1: int, k2: int) -> "PlumbingRecipe":
        return cls(FiberedAnnulus(k1), FiberedAnnulus(k2))

    @property
    def twists(self) -> tuple[int, int]:
        return (self.first.twist, self.second.twist)

    def __str__(self) -> str:
        return f"plumb({self.first.twist},{self.second.twist})"


def annuli_in(m: Manifold3) -> frozenset[FiberedAnnulus]:
    """Fibered annuli of a genus one manifold, up to orientation preserving homeomorphism.

    Returns the empty set when the manifold carries none (``L(p,q)`` with
    ``q != +-1 mod p``, or anything that is not genus one).
    """
    if m == S3:
        return frozenset({FiberedAnnulus(1), FiberedAnnulus(-1)})
    if m == S2xS1:
        return frozenset({FiberedAnnulus(0)})
    if isinstance(m, Lens):
        if m.p == 2:
            return frozenset({FiberedAnnulus(2), FiberedAnnulus(-2)})
        if m.q == 1:
            return frozenset({FiberedAnnulus(m.p)})
        if m.q == m.p - 1:
            return frozenset({FiberedAnnulus(-m.p)})
    return frozenset()


def plumb_monodromy(r: PlumbingRecipe) -> MatZ2:
    k1, k2 = r.twists
    return MatZ2(1, k1, k2, 1 + k1 * k2)


def plumb_ambient(r: PlumbingRecipe) -> Manifold3:
    return connected_sum(r.first.ambient, r.second.ambient)
