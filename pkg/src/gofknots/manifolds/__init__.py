"""Lens-space normalization, the lens-space families, and the GOF-knot census."""

from gofknots.manifolds.spaces import (
    Lens,
    LensParams,
    Manifold3,
    S2xS1,
    S3,
    Sum,
    canonical_lens_q,
    connected_sum,
    is_homeomorphic,
    lens,
    mirror,
    parse_manifold,
    q_inverse,
)
from gofknots.manifolds.families import Family, FamilyTag, family_witnesses, lens_family

# the census depends on the plumbing module, which itself needs the spaces
# above; loading it on first use keeps either import order working
_CENSUS_NAMES = {
    "THIRD_KNOT_MONODROMY",
    "CensusEntry",
    "ExplicitCurve",
    "entries_pairwise_distinct",
    "format_census",
    "gof_census",
    "gof_count",
}


def __getattr__(name):
    if name in _CENSUS_NAMES:
        from gofknots.manifolds import census

        return getattr(census, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


__all__ = [
    "Lens",
    "LensParams",
    "Manifold3",
    "S2xS1",
    "S3",
    "Sum",
    "canonical_lens_q",
    "connected_sum",
    "is_homeomorphic",
    "lens",
    "mirror",
    "parse_manifold",
    "q_inverse",
    "Family",
    "FamilyTag",
    "family_witnesses",
    "lens_family",
    *sorted(_CENSUS_NAMES),
]
