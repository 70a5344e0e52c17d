"""Independent reference implementations shared by the test modules.

``walk_curves`` enumerates curves by a depth-first walk over passage
sequences, a different method from the package's normal-coordinate
enumerator.  The lemma checks restate the word lemmas directly.
"""

from __future__ import annotations

import heapq

from gofknots.diagrams import FREE, InvalidCurve, NormalCurve, V, W, in_minimal_position, is_essential, read_word
from gofknots.words import count_adjacent_cancellations, cyclic_reduce


def _canonical_passages(passages):
    n = len(passages)
    back = tuple((c, b, a) for c, a, b in reversed(passages))
    return min(seq[i:] + seq[:i] for seq in (passages, back) for i in range(n))


def _periodic(seq) -> bool:
    n = len(seq)
    return any(n % k == 0 and seq == seq[k:] + seq[:k] for k in range(1, n // 2 + 1))


def _distance_home(diagram, home):
    # fewest disk-boundary crossings from each (cell, entry side) back to home
    reverse = {}
    for c, cell in enumerate(diagram.cells):
        for a in range(len(cell)):
            for b in range(len(cell)):
                if a != b:
                    w = 0 if cell.sides[b].carrier == FREE else 1
                    reverse.setdefault(diagram.partner(c, b), []).append(((c, a), w))
    dist = {home: 0}
    heap = [(0, home)]
    while heap:
        k, u = heapq.heappop(heap)
        if k > dist[u]:
            continue
        for v, w in reverse.get(u, ()):
            if k + w < dist.get(v, 1 << 30):
                dist[v] = k + w
                heapq.heappush(heap, (k + w, v))
    return dist


def _from_start(diagram, start, max_crossings, max_free):
    c0, a0, _ = start
    home = (c0, a0)
    dist = _distance_home(diagram, home)
    found = []
    seq = []
    used = [[] for _ in diagram.cells]

    def crosses(c, a, b):
        m = len(diagram.cells[c])
        span = (b - a) % m
        for u, v in used[c]:
            if u in (a, b) or v in (a, b):
                continue
            if (0 < (u - a) % m < span) != (0 < (v - a) % m < span):
                return True
        return False

    def cost(c, b):
        return (0, 1) if diagram.cells[c].sides[b].carrier == FREE else (1, 0)

    def extend(state, crossings, free):
        c, a = state
        for b in range(len(diagram.cells[c])):
            p = (c, a, b)
            if b == a or p < start:
                continue
            dc, df = cost(c, b)
            nc, nf = crossings + dc, free + df
            nxt = diagram.partner(c, b)
            if nf > max_free or nc + dist.get(nxt, 1 << 30) > max_crossings or crosses(c, a, b):
                continue
            seq.append(p)
            used[c].append((a, b))
            if nxt == home:
                t = tuple(seq)
                if not _periodic(t) and _canonical_passages(t) == t:
                    found.append(t)
            extend(nxt, nc, nf)
            used[c].pop()
            seq.pop()

    c, a, b = start
    dc, df = cost(c, b)
    if dc > max_crossings or df > max_free:
        return found
    seq.append(start)
    nxt = diagram.partner(c, b)
    if nxt == home and _canonical_passages((start,)) == (start,):
        found.append((start,))
    used[c].append((a, b))
    extend(nxt, dc, df)
    return found


def walk_curves(diagram, max_crossings, max_free=2, essential=True) -> set:
    """Canonical passage sequences of all simple closed curves in the budget."""
    out = set()
    for c, cell in enumerate(diagram.cells):
        for a in range(len(cell)):
            for b in range(len(cell)):
                if a == b:
                    continue
                for t in _from_start(diagram, (c, a, b), max_crossings, max_free):
                    try:
                        curve = NormalCurve.from_passages(diagram, t)
                    except InvalidCurve:
                        continue
                    if essential and not is_essential(curve, diagram):
                        continue
                    out.add(t)
    return out


def canonical_passages(curve) -> tuple:
    return _canonical_passages(curve.passages)


def has_sandwich(w) -> bool:
    """True if the cyclic word contains ``s t^n s^-1`` with ``n >= 1``."""
    letters = w.letters
    n = len(letters)
    if n < 3:
        return False
    for i in range(n):
        s = letters[i]
        j = (i + 1) % n
        t = letters[j]
        if t.gen == s.gen:
            continue
        k = 0
        while letters[j] == t and k < n:
            j = (j + 1) % n
            k += 1
        if 1 <= k <= n - 2 and letters[j] == s.inverse():
            return True
    return False


def lemma_violations(curve, diagram):
    """Word lemma failures for one curve, on either side.

    Only words that are unreduced and read from a position with no
    removable bigon are checked; elsewhere the lemmas make no claim.
    Returns ``(checked, failures)``.
    """
    checked, failures = 0, []
    for system in (V, W):
        w = read_word(curve, diagram, system)
        if len(cyclic_reduce(w)) == len(w) or not in_minimal_position(curve, diagram, system):
            continue
        checked += 1
        px, mx = count_adjacent_cancellations(w, 0)
        py, my = count_adjacent_cancellations(w, 1)
        if has_sandwich(w):
            failures.append(("sandwich", system, w.render()))
        if px + mx and py + my:
            failures.append(("both generators cancel", system, w.render()))
        if px != mx or py != my:
            failures.append(("unequal cancellation counts", system, w.render()))
    return checked, failures
