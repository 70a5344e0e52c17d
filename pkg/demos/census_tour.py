"""Walk through the census: which manifolds carry GOF knots, and how many.

    python demos/census_tour.py
"""

from gofknots.gl2z import is_conjugate_gl2z
from gofknots.manifolds import gof_census, lens_family, parse_manifold

NAMES = ["S3", "S2xS1", "S2xS1#S2xS1", "L(3,1)#S2xS1", "L(5,2)#S2xS1", "L(3,1)#L(2,1)", "L(4,1)", "L(7,3)", "L(9,2)"]

for name in NAMES:
    m = parse_manifold(name)
    entries = gof_census(m)
    print(f"{name}: {len(entries)} GOF knot(s)")
    for e in entries:
        mat = e.monodromy.rows() if e.monodromy else "-"
        print(f"    {e.descriptor}  monodromy {mat}  {e.dynamics or ''}")

# the lens spaces fall into four families
for p, q in [(6, 1), (7, 3), (5, 2), (4, 1), (9, 2)]:
    print(f"L({p},{q}) family {lens_family(p, q)}")

# distinct entries are told apart by their monodromies
a, b, c = (e.monodromy for e in gof_census(parse_manifold("L(4,1)")))
print("L(4,1) entries pairwise:", is_conjugate_gl2z(a, b), "|", is_conjugate_gl2z(a, c), "|", is_conjugate_gl2z(b, c))
