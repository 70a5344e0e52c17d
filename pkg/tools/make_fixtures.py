"""Regenerate the curve fixtures under src/gofknots/data/fixtures.

Each fixture is the first curve, in enumeration order, that satisfies a
stated selection rule within a stated search budget.  Run from the
repository root:

    python tools/make_fixtures.py [--only fig47]

The slow entries (fig46, fig47) take a few minutes each.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from gofknots.diagrams import V, W, build_standard_diagram, enumerate_curves, is_gof, read_word, save_curve
from gofknots.diagrams.curves import NormalCurve
from gofknots.manifolds import parse_manifold
from gofknots.words import cyclic_reduce

OUT = Path(__file__).resolve().parents[1] / "src" / "gofknots" / "data" / "fixtures"


def both_reduced(curve, d) -> bool:
    return all(len(read_word(curve, d, s)) == 4 for s in (V, W))


def lens_run_ok(p: int, q: int):
    def rule(curve, d) -> bool:
        if not both_reduced(curve, d):
            return False
        runs = read_word(curve, d, W).runs(0)
        return any(length % p in (q % p, (p - q) % p) for _, length in runs)

    return rule


def unreduced_length8(system):
    def rule(curve, d) -> bool:
        w = read_word(curve, d, system)
        return len(w) == 8 and len(cyclic_reduce(w)) == 4

    return rule


def either_unreduced_length8(curve, d) -> bool:
    return unreduced_length8(V)(curve, d) or unreduced_length8(W)(curve, d)


# name -> (manifold, max_crossings, max_free, family caps, rule, description)
GOF_FIXTURES = {
    "fig10": ("S2xS1#S2xS1", 8, 2, None, both_reduced, "GOF curve, both words reduced commutators"),
    "fig16": ("L(3,1)#S2xS1", 12, 2, None, lens_run_ok(3, 1), "GOF curve; W-word has an x' run of length +-q mod p"),
    "fig27": ("L(3,1)#L(2,1)", 8, 2, None, both_reduced, "GOF curve, both words reduced commutators"),
    "fig31": ("S2xS1", 8, 2, None, both_reduced, "GOF curve, both words reduced commutators"),
    "fig35": ("S3", 8, 2, None, both_reduced, "GOF curve, both words reduced commutators"),
    "fig46": (
        "L(4,3)",
        12,
        4,
        {"d": 6, "e": 2},
        either_unreduced_length8,
        "GOF curve with (a,b)=(1,1): one word has the shape x^m x^-n y x^-m x^n y^-1",
    ),
    "fig47": (
        "L(5,3)",
        16,
        4,
        {"d": 6, "e": 2, "E'": 2, "D'": 6},
        unreduced_length8(V),
        "GOF curve with (a,b)=(1,1): V-word has the shape x^m x^-n y x^-m x^n y^-1",
    ),
}

REDUCING = ["S3", "S2xS1", "S2xS1#S2xS1", "L(3,1)#S2xS1", "L(3,1)#L(2,1)", "L(4,3)", "L(5,3)"]


def _slug(name: str) -> str:
    return name.replace("#", "+").replace("(", "").replace(")", "").replace(",", "-")


def make_gof(name: str) -> None:
    manifold, bound, max_free, caps, rule, text = GOF_FIXTURES[name]
    d = build_standard_diagram(parse_manifold(manifold))
    for curve in enumerate_curves(d, bound, max_free=max_free, essential=False, limits=caps):
        if is_gof(curve, d) and rule(curve, d):
            save_curve(
                OUT / f"{name}.json",
                curve,
                d,
                figure=int(name[3:]),
                kind="gof",
                description=text,
                search={"max_crossings": bound, "max_free": max_free, "limits": caps},
            )
            print(f"{name}: {len(curve)} transits", file=sys.stderr)
            return
    raise SystemExit(f"{name}: no curve found within the budget")


def make_reducing(manifold: str) -> None:
    d = build_standard_diagram(parse_manifold(manifold))
    # the hub chord joining the two copies of the connected-sum circle
    assert d.partner(0, 4) == (0, 9)
    curve = NormalCurve.from_passages(d, [(0, 4, 9)]).canonical()
    save_curve(OUT / f"reducing-{_slug(manifold)}.json", curve, d, kind="reducing", description="reducing curve")


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--only", action="append", default=None)
    args = ap.parse_args()
    OUT.mkdir(parents=True, exist_ok=True)
    names = args.only or list(GOF_FIXTURES) + ["reducing"]
    for name in names:
        if name == "reducing":
            for m in REDUCING:
                make_reducing(m)
        else:
            make_gof(name)


if __name__ == "__main__":
    main()
