"""Unreduced words and how disk surgery shortens them.

Some GOF curves only read a commutator after cancelling letters.  The two
shipped lens-space fixtures read 8-letter words on one side; surgering the
disk along each cancelling arc brings them down to a literal commutator.

    python demos/surgery_descent.py
"""

from gofknots.diagrams import V, W, apply_disk_surgery_word, inverse_pair_positions, load_fixture, read_word

for name in ("fig46", "fig47"):
    rec = load_fixture(name)
    print(f"{name} on {rec.diagram.manifold}: {len(rec.curve)} transits")
    for system in (V, W):
        w = read_word(rec.curve, rec.diagram, system)
        steps = [w.render()]
        while inverse_pair_positions(w):
            w = apply_disk_surgery_word(w, inverse_pair_positions(w)[0])
            steps.append(w.render())
        print(f"    {system}: " + " -> ".join(steps))
