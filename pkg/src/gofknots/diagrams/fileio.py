"""JSON files for diagrams and curves, and the shipped fixture curves.

Both formats carry a ``format`` tag and a ``version`` number.  A curve file
names the manifold whose standard diagram it lives on and lists its
transits, either as ``[cell, entry, exit]`` (slots are then recomputed) or
as ``[cell, entry, entry_slot, exit, exit_slot]``.

Fixtures live in ``gofknots/data/fixtures``; set ``GOFKNOTS_FIXTURES`` to
read them from another directory.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from gofknots.diagrams.complex import Cell, Side, StandardDiagram, build_standard_diagram
from gofknots.diagrams.curves import InvalidCurve, NormalCurve, Transit
from gofknots.manifolds.spaces import parse_manifold

__all__ = [
    "FORMAT_VERSION",
    "diagram_to_json",
    "diagram_from_json",
    "curve_to_json",
    "curve_from_json",
    "load_diagram",
    "load_curve",
    "save_curve",
    "CurveRecord",
    "fixture_dir",
    "list_fixtures",
    "load_fixture",
]

FORMAT_VERSION = 1
DIAGRAM_FORMAT = "gofknots-diagram"
CURVE_FORMAT = "gofknots-curve"

PathLike = Union[str, os.PathLike]


def _check_header(data: dict, fmt: str) -> None:
    if not isinstance(data, dict) or data.get("format") != fmt:
        raise ValueError(f"not a {fmt} file")
    if data.get("version") != FORMAT_VERSION:
        raise ValueError(f"unsupported {fmt} version {data.get('version')!r}")


def diagram_to_json(d: StandardDiagram) -> dict:
    return {
        "format": DIAGRAM_FORMAT,
        "version": FORMAT_VERSION,
        "manifold": str(d.manifold),
        "summands": [list(s) for s in d.summands],
        "cells": [
            {"name": cell.name, "sides": [{"carrier": s.carrier, "sign": s.sign} for s in cell.sides]}
            for cell in d.cells
        ],
        "pairings": [[list(u), list(v)] for u, v in d.edges()],
    }


def diagram_from_json(data: dict) -> StandardDiagram:
    _check_header(data, DIAGRAM_FORMAT)
    try:
        cells = tuple(
            Cell(c["name"], tuple(Side(s["carrier"], int(s["sign"])) for s in c["sides"])) for c in data["cells"]
        )
        pairing = {}
        for u, v in data["pairings"]:
            u, v = tuple(u), tuple(v)
            if u in pairing or v in pairing:
                raise ValueError(f"side paired twice: {u} or {v}")
            pairing[u] = v
            pairing[v] = u
        summands = tuple(tuple(s) for s in data["summands"])
        manifold = parse_manifold(data["manifold"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed diagram file: {exc}") from exc
    return StandardDiagram(manifold, cells, pairing, summands)


def load_diagram(source: PathLike) -> StandardDiagram:
    """Read a diagram file, or build the standard diagram of a manifold name."""
    path = Path(source)
    if path.is_file():
        return diagram_from_json(json.loads(path.read_text()))
    try:
        m = parse_manifold(str(source))
    except ValueError:
        raise ValueError(f"{source!s} is neither a diagram file nor a manifold") from None
    return build_standard_diagram(m)


@dataclass(frozen=True)
class CurveRecord:
    diagram: StandardDiagram
    curve: NormalCurve
    meta: dict = field(default_factory=dict, compare=False)


def curve_to_json(curve: NormalCurve, diagram: StandardDiagram, **meta) -> dict:
    out = {"format": CURVE_FORMAT, "version": FORMAT_VERSION, "manifold": str(diagram.manifold)}
    out.update(meta)
    out["transits"] = [list(t) for t in curve.transits]
    return out


def curve_from_json(data: dict, diagram: Optional[StandardDiagram] = None) -> CurveRecord:
    _check_header(data, CURVE_FORMAT)
    if diagram is None:
        diagram = build_standard_diagram(parse_manifold(data["manifold"]))
    rows = data.get("transits")
    if not rows:
        raise ValueError("curve file has no transits")
    if all(len(r) == 3 for r in rows):
        curve = NormalCurve.from_passages(diagram, rows)
    elif all(len(r) == 5 for r in rows):
        curve = NormalCurve(tuple(Transit(*map(int, r)) for r in rows))
        curve.validate(diagram)
    else:
        raise InvalidCurve("transits must all have 3 or all have 5 entries")
    meta = {k: v for k, v in data.items() if k not in ("format", "version", "transits")}
    return CurveRecord(diagram, curve, meta)


def load_curve(path: PathLike, diagram: Optional[StandardDiagram] = None) -> CurveRecord:
    return curve_from_json(json.loads(Path(path).read_text()), diagram)


def save_curve(path: PathLike, curve: NormalCurve, diagram: StandardDiagram, **meta) -> None:
    data = curve_to_json(curve, diagram, **meta)
    rows = data.pop("transits")
    head = json.dumps(data, indent=1, sort_keys=False)[:-2]
    body = ",\n".join("  " + json.dumps(r) for r in rows)
    Path(path).write_text(f'{head},\n "transits": [\n{body}\n ]\n}}\n')


def fixture_dir() -> Path:
    override = os.environ.get("GOFKNOTS_FIXTURES")
    if override:
        return Path(override)
    return Path(str(resources.files("gofknots") / "data" / "fixtures"))


def list_fixtures() -> list[str]:
    return sorted(p.stem for p in fixture_dir().glob("*.json"))


def load_fixture(name: str) -> CurveRecord:
    """Load a fixture by file stem, e.g. ``"fig16"`` or ``"reducing-S3"``."""
    path = fixture_dir() / f"{name}.json"
    if not path.is_file():
        raise FileNotFoundError(f"no fixture {name!r} in {fixture_dir()}")
    return load_curve(path)
