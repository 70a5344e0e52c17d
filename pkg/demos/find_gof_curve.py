"""Search a standard diagram for GOF curves and draw the first one found.

    python demos/find_gof_curve.py [MANIFOLD] [BOUND]

Defaults to L(3,1)#S2xS1 at bound 8.  The picture is written to
gof_curve.svg in the current directory.
"""

import sys

from gofknots.diagrams import build_standard_diagram, is_gof, render_svg, search_gof
from gofknots.manifolds import parse_manifold

name = sys.argv[1] if len(sys.argv) > 1 else "L(3,1)#S2xS1"
bound = int(sys.argv[2]) if len(sys.argv) > 2 else 8

d = build_standard_diagram(parse_manifold(name))
print(f"{name}: {len(d.cells)} cells")
hits = search_gof(d, bound, limit=5)
if not hits:
    print(f"no GOF curve within {bound} crossings (a bounded search proves nothing here)")
    sys.exit(0)
for curve in hits:
    v = is_gof(curve, d)
    print(f"{len(curve):3d} transits  V-word {v.v_word.render():12s} W-word {v.w_word.render()}")
with open("gof_curve.svg", "w") as fh:
    fh.write(render_svg(d, hits[0], title=f"GOF curve on {name}"))
print("wrote gof_curve.svg")
