"""Word-level effect of trading a disk for one disjoint from a cancelling arc.

When a curve reads ``g g^-1`` at some position, the arc between the two
crossings runs from one side of a disk to the same side again.  Surgering
the disk along a neighbouring arc removes both crossings; the remaining
letters are then rewritten in the new disk pair by a substitution rule.
"""

from __future__ import annotations

from typing import Optional

from gofknots.words import CyclicWord, SubstitutionRule, apply_substitution, cyclic_reduce

__all__ = ["inverse_pair_positions", "apply_disk_surgery_word", "surgery_fixpoint"]


def inverse_pair_positions(w: CyclicWord) -> list[int]:
    """Positions ``i`` where letters ``i`` and ``i+1`` (cyclically) cancel."""
    letters = w.letters
    n = len(letters)
    if n < 2:
        return []
    return [i for i in range(n) if letters[(i + 1) % n] == letters[i].inverse()]


def apply_disk_surgery_word(w: CyclicWord, occurrence: int, rule: Optional[SubstitutionRule] = None) -> CyclicWord:
    """Delete the cancelling pair at ``occurrence``, substitute, and reduce.

    ``occurrence`` indexes ``w.letters``.  Raises ``ValueError`` if the two
    letters there are not mutually inverse.
    """
    letters = w.letters
    n = len(letters)
    if n < 2 or not 0 <= occurrence < n:
        raise ValueError(f"no letter pair at position {occurrence}")
    j = (occurrence + 1) % n
    if letters[j] != letters[occurrence].inverse():
        raise ValueError(f"letters at {occurrence} and {j} do not cancel")
    rest = [let for k, let in enumerate(letters) if k not in (occurrence, j)]
    out = CyclicWord(rest)
    if rule is not None:
        out = apply_substitution(out, rule)
    return cyclic_reduce(out)


def surgery_fixpoint(w: CyclicWord, rule: Optional[SubstitutionRule] = None, max_steps: int = 10_000) -> CyclicWord:
    """Apply surgery at the first cancelling pair until none is left."""
    for _ in range(max_steps):
        spots = inverse_pair_positions(w)
        if not spots:
            return w
        w = apply_disk_surgery_word(w, spots[0], rule)
    raise RuntimeError("surgery did not terminate")
