"""Cyclic words in a rank-two free group.

A curve on the boundary of a genus two handlebody crosses the boundaries of
two meridian disks; recording the crossings in order gives a word in two
letters that is well defined up to rotation.  Words here are *not* reduced on
construction: cancellation is always an explicit step, because the
unreduced word carries information about how the curve sits on the surface.

Letters are written ``x X y Y`` with the capital standing for the inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

__all__ = [
    "Letter",
    "LinearWord",
    "CyclicWord",
    "SubstitutionRule",
    "free_reduce",
    "cyclic_reduce",
    "is_commutator_class",
    "apply_substitution",
    "count_adjacent_cancellations",
    "band_sum_rule",
    "parse_word",
    "X",
    "Y",
]


class Letter(NamedTuple):
    gen: int  # 0 or 1
    sign: int  # +1 or -1

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.sign)

    @property
    def order_key(self) -> int:
        # fixed letter order x < x^-1 < y < y^-1
        return 2 * self.gen + (0 if self.sign > 0 else 1)

    def render(self, names: str = "xy") -> str:
        ch = names[self.gen]
        return ch if self.sign > 0 else ch.upper()


X = Letter(0, 1)
Y = Letter(1, 1)


def _check_letters(letters: Iterable) -> tuple[Letter, ...]:
    out = []
    for let in letters:
        gen, sign = let
        if gen not in (0, 1) or sign not in (1, -1):
            raise ValueError(f"malformed letter {let!r}")
        out.append(Letter(gen, sign))
    return tuple(out)


def parse_word(text: str, names: str = "xy") -> tuple[Letter, ...]:
    """Parse ``xyXY``-style text into letters.

    ``names`` gives the two lowercase generator symbols; uppercase means
    inverse.  Whitespace and dots are ignored.
    """
    letters = []
    for ch in text:
        if ch in " .\t":
            continue
        low = ch.lower()
        if low not in names:
            raise ValueError(f"unexpected character {ch!r} in word {text!r}")
        letters.append(Letter(names.index(low), 1 if ch == low else -1))
    return tuple(letters)


@dataclass(frozen=True)
class LinearWord:
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _check_letters(self.letters))

    @classmethod
    def parse(cls, text: str, names: str = "xy") -> "LinearWord":
        return cls(parse_word(text, names))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "LinearWord") -> "LinearWord":
        return LinearWord(self.letters + other.letters)

    def inverse(self) -> "LinearWord":
        return LinearWord(tuple(let.inverse() for let in reversed(self.letters)))

    def render(self, names: str = "xy") -> str:
        return "".join(let.render(names) for let in self.letters)

    def __str__(self) -> str:
        return self.render() or "1"


def _min_rotation(letters: Sequence[Letter]) -> tuple[Letter, ...]:
    n = len(letters)
    if n == 0:
        return ()
    keys = [let.order_key for let in letters]
    best = min(range(n), key=lambda i: keys[i:] + keys[:i])
    return tuple(letters[best:]) + tuple(letters[:best])


@dataclass(frozen=True, init=False)
class CyclicWord:
    """A word up to rotation, stored as its lexicographically least rotation."""

    letters: tuple[Letter, ...]

    def __init__(self, letters: Iterable = ()):
        if isinstance(letters, (LinearWord, CyclicWord)):
            letters = letters.letters
        object.__setattr__(self, "letters", _min_rotation(_check_letters(letters)))

    @classmethod
    def parse(cls, text: str, names: str = "xy") -> "CyclicWord":
        return cls(parse_word(text, names))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def inverse(self) -> "CyclicWord":
        return CyclicWord(let.inverse() for let in reversed(self.letters))

    def linear(self) -> LinearWord:
        return LinearWord(self.letters)

    def render(self, names: str = "xy") -> str:
        return "".join(let.render(names) for let in self.letters)

    def __str__(self) -> str:
        return self.render() or "1"

    def exponent_sums(self) -> tuple[int, int]:
        sums = [0, 0]
        for let in self.letters:
            sums[let.gen] += let.sign
        return sums[0], sums[1]

    def max_run(self, letter: Letter) -> int:
        """Longest cyclic run of consecutive copies of ``letter``."""
        n = len(self.letters)
        if n == 0:
            return 0
        if all(let == letter for let in self.letters):
            return n
        best = run = 0
        for let in self.letters + self.letters:
            run = run + 1 if let == letter else 0
            best = max(best, run)
        return best

    def runs(self, gen: int) -> list[tuple[int, int]]:
        """Maximal cyclic runs of one generator as ``(sign, length)`` pairs."""
        n = len(self.letters)
        if n == 0:
            return []
        first = self.letters[0]
        if all(let == first for let in self.letters):
            return [(first.sign, n)] if first.gen == gen else []
        # rotate so that position 0 starts a run boundary
        start = next(
            i for i in range(n) if self.letters[i - 1] != self.letters[i]
        )
        seq = self.letters[start:] + self.letters[:start]
        out = []
        i = 0
        while i < n:
            j = i
            while j < n and seq[j] == seq[i]:
                j += 1
            if seq[i].gen == gen:
                out.append((seq[i].sign, j - i))
            i = j
        return out


def free_reduce(w: LinearWord) -> LinearWord:
    stack: list[Letter] = []
    for let in w.letters:
        if stack and stack[-1] == let.inverse():
            stack.pop()
        else:
            stack.append(let)
    return LinearWord(tuple(stack))


def cyclic_reduce(w: CyclicWord) -> CyclicWord:
    letters = free_reduce(LinearWord(w.letters)).letters
    i, j = 0, len(letters)
    while j - i >= 2 and letters[i] == letters[j - 1].inverse():
        i += 1
        j -= 1
    return CyclicWord(letters[i:j])


def is_commutator_class(w: CyclicWord) -> bool:
    """True when ``w`` cyclically reduces to ``s t s^-1 t^-1``.

    ``s`` and ``t`` range over letters on the two different generators, which
    covers every orientation choice for the two disk boundaries as well as
    reversing the curve.
    """
    r = cyclic_reduce(w).letters
    if len(r) != 4:
        return False
    s, t, u, v = r
    return s.gen != t.gen and u == s.inverse() and v == t.inverse()


@dataclass(frozen=True)
class SubstitutionRule:
    """A free-group homomorphism given by the images of ``x`` and ``y``.

    Images of inverse letters are the formal inverses, so the rule is a
    homomorphism by construction.
    """

    x_image: LinearWord
    y_image: LinearWord

    @classmethod
    def from_images(cls, images: Mapping[Letter, LinearWord]) -> "SubstitutionRule":
        """Build from images of all four letters, checking they are compatible."""
        rule = cls(images[X], images[Y])
        for let, img in images.items():
            if img != rule.image(let):
                raise ValueError(f"image of {let.render()} is not the inverse of its partner")
        return rule

    @classmethod
    def identity(cls) -> "SubstitutionRule":
        return cls(LinearWord((X,)), LinearWord((Y,)))

    def image(self, let: Letter) -> LinearWord:
        img = self.x_image if let.gen == 0 else self.y_image
        return img if let.sign > 0 else img.inverse()


def band_sum_rule(eps: int) -> SubstitutionRule:
    """``x -> z w``, ``y -> w^eps``: the letter change after swapping ``E`` for a band sum."""
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    return SubstitutionRule(LinearWord((X, Y)), LinearWord((Letter(1, eps),)))


def apply_substitution(w: CyclicWord, rule: SubstitutionRule) -> CyclicWord:
    out: list[Letter] = []
    for let in w.letters:
        out.extend(rule.image(let).letters)
    return CyclicWord(out)


def count_adjacent_cancellations(w: CyclicWord, gen: int) -> tuple[int, int]:
    """Count cyclic positions ``g g^-1`` and ``g^-1 g`` for generator ``gen``."""
    letters = w.letters
    n = len(letters)
    plus_minus = minus_plus = 0
    if n < 2:
        return 0, 0
    for i in range(n):
        a, b = letters[i], letters[(i + 1) % n]
        if a.gen == gen and b == a.inverse():
            if a.sign > 0:
                plus_minus += 1
            else:
                minus_plus += 1
    return plus_minus, minus_plus
