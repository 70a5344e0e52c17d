"""Command line front end: ``gofknots <command> ...``.

Exit status is 0 on success, 1 when the input is well formed but cannot be
processed (bad manifold, invalid curve, unreadable file), and 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from gofknots.gl2z import DEFAULT_SEARCH_BOUND, Conjugate, MatZ2, classify_type, is_conjugate_gl2z
from gofknots.manifolds import S3, format_census, is_homeomorphic, parse_manifold
from gofknots.plumbing import PlumbingRecipe, plumb_ambient, plumb_monodromy
from gofknots.words import CyclicWord, cyclic_reduce, is_commutator_class

__all__ = ["main", "build_parser"]


def _cmd_census(args) -> str:
    return format_census(parse_manifold(args.manifold), args.format)


def _cmd_homeo(args) -> str:
    m1, m2 = parse_manifold(args.m1), parse_manifold(args.m2)
    return "true\n" if is_homeomorphic(m1, m2, oriented=args.oriented) else "false\n"


def _cmd_conjugate(args) -> str:
    A, B = MatZ2.parse(args.A), MatZ2.parse(args.B)
    verdict = is_conjugate_gl2z(A, B, args.bound)
    out = f"{verdict}\n"
    if isinstance(verdict, Conjugate):
        out += f"check: P*A*P^-1 = {verdict.witness @ A @ verdict.witness.inverse()}\n"
    return out


def _cmd_plumb(args) -> str:
    r = PlumbingRecipe.of(args.k1, args.k2)
    mat = plumb_monodromy(r)
    # keep the summands in the order the twists were given
    pieces = [str(a.ambient) for a in (r.first, r.second) if a.ambient != S3]
    ambient = "#".join(pieces) if pieces else str(plumb_ambient(r))
    return f"{ambient}  {mat}  {classify_type(mat)}\n"


def _cmd_word(args) -> str:
    w = CyclicWord.parse(args.word)
    if args.action == "reduce":
        r = cyclic_reduce(w)
        return (r.render() or "1") + "\n"
    return "true\n" if is_commutator_class(w) else "false\n"


def _curve_words(verdict) -> str:
    v = verdict.v_word.render() or "1"
    return f"V-word: {v}\nW-word: {_primed(verdict.w_word)}\n"


def _primed(word: CyclicWord) -> str:
    if not len(word):
        return "1"
    parts = []
    for let in word:
        name = "xy"[let.gen] + "'"
        parts.append(name if let.sign > 0 else name + "^-1")
    return " ".join(parts)


def _cmd_gof_check(args) -> str:
    from gofknots.diagrams import is_gof, load_curve, load_diagram

    diagram = load_diagram(args.diagram)
    rec = load_curve(args.curve, diagram)
    verdict = is_gof(rec.curve, diagram)
    return f"gof: {'true' if verdict.gof else 'false'}\n" + _curve_words(verdict)


def _cmd_search(args) -> str:
    from gofknots.diagrams import build_standard_diagram, is_gof, search_gof

    m = parse_manifold(args.manifold)
    d = build_standard_diagram(m)
    hits = search_gof(d, args.max_crossings, max_free=args.max_free, jobs=args.jobs, limit=args.limit)
    lines = [f"search {m} max-crossings={args.max_crossings} max-free={args.max_free}"]
    for i, curve in enumerate(hits, 1):
        v = is_gof(curve, d)
        lines.append(
            f"{i}. V={v.v_word.render() or '1'} W={_primed(v.w_word).replace(' ', '')} "
            f"transits={json.dumps([list(t) for t in curve.passages], separators=(',', ':'))}"
        )
    lines.append(f"found: {len(hits)}")
    if args.save_dir:
        from gofknots.diagrams import save_curve

        out = Path(args.save_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, curve in enumerate(hits, 1):
            save_curve(out / f"hit{i:04d}.json", curve, d)
    return "\n".join(lines) + "\n"


def _cmd_render(args) -> str:
    from gofknots.diagrams import load_curve, load_diagram, render_svg

    diagram = load_diagram(args.diagram)
    curve = load_curve(args.curve, diagram).curve if args.curve else None
    svg = render_svg(diagram, curve)
    if args.output == "-":
        return svg
    Path(args.output).write_text(svg)
    return f"wrote {args.output}\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gofknots", description="Genus one fibered knots in reducible genus two splittings.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("census", help="list the GOF-knots of a manifold")
    c.add_argument("manifold", help="e.g. S3, S2xS1, L(7,3), L(3,1)#S2xS1")
    c.add_argument("--format", choices=["table", "records"], default="table")
    c.set_defaults(func=_cmd_census)

    h = sub.add_parser("homeo", help="test two manifolds for homeomorphism")
    h.add_argument("m1")
    h.add_argument("m2")
    h.add_argument("--oriented", action="store_true", help="require an orientation preserving map")
    h.set_defaults(func=_cmd_homeo)

    cj = sub.add_parser("conjugate", help="conjugacy of two matrices in GL(2,Z)")
    cj.add_argument("A", help="matrix as [[a,b],[c,d]]")
    cj.add_argument("B")
    cj.add_argument("--bound", type=int, default=DEFAULT_SEARCH_BOUND)
    cj.set_defaults(func=_cmd_conjugate)

    pl = sub.add_parser("plumb", help="plumb two fibered annuli")
    pl.add_argument("k1", type=int)
    pl.add_argument("k2", type=int)
    pl.set_defaults(func=_cmd_plumb)

    w = sub.add_parser("word", help="cyclic word utilities (X, Y denote inverses)")
    w.add_argument("action", choices=["reduce", "commutator"])
    w.add_argument("word")
    w.set_defaults(func=_cmd_word)

    g = sub.add_parser("gof-check", help="test a curve for the GOF property")
    g.add_argument("--diagram", required=True, help="diagram file or manifold name")
    g.add_argument("--curve", required=True, help="curve file")
    g.set_defaults(func=_cmd_gof_check)

    s = sub.add_parser("search", help="bounded search for GOF curves")
    s.add_argument("--manifold", required=True)
    s.add_argument("--max-crossings", type=int, required=True)
    s.add_argument("--max-free", type=int, default=None, help="cap on crossings with free sides")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--limit", type=int, default=None, help="stop after this many hits")
    s.add_argument("--save-dir", default=None, help="write each hit as a curve file here")
    s.set_defaults(func=_cmd_search)

    r = sub.add_parser("render", help="draw a diagram (and a curve) as SVG")
    r.add_argument("--diagram", required=True, help="diagram file or manifold name")
    r.add_argument("--curve", default=None)
    r.add_argument("-o", "--output", required=True, help="output file, or - for stdout")
    r.set_defaults(func=_cmd_render)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_free", 0) is None:
        from gofknots.diagrams import DEFAULT_MAX_FREE

        args.max_free = DEFAULT_MAX_FREE
    for name in ("max_crossings", "jobs", "bound", "limit", "max_free"):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            parser.error(f"--{name.replace('_', '-')} must be non-negative")
    try:
        out = args.func(args)
    except (ValueError, OSError) as exc:
        print(f"gofknots: error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return 0
