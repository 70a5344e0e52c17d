"""2x2 integer matrices of determinant +-1 and conjugacy in GL(2, Z)."""

from __future__ import annotations

import enum
import itertools
import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Union

__all__ = [
    "MatZ2",
    "Conjugate",
    "NotConjugate",
    "Unknown",
    "ConjugacyVerdict",
    "DynamicsType",
    "classify_type",
    "is_conjugate_gl2z",
    "brute_force_conjugacy_oracle",
    "DEFAULT_SEARCH_BOUND",
]

DEFAULT_SEARCH_BOUND = 16


@dataclass(frozen=True)
class MatZ2:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c not in (1, -1):
            raise ValueError(f"determinant of {self.rows()} is not +-1")

    @classmethod
    def from_rows(cls, rows) -> "MatZ2":
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    @classmethod
    def parse(cls, text: str) -> "MatZ2":
        """Parse ``[[a,b],[c,d]]``."""
        try:
            rows = json.loads(text.replace("−", "-"))
            if not (len(rows) == 2 and all(len(r) == 2 for r in rows)):
                raise ValueError
            if not all(isinstance(v, int) for r in rows for v in r):
                raise ValueError
        except (ValueError, TypeError):
            raise ValueError(f"malformed matrix {text!r}; expected [[a,b],[c,d]]") from None
        return cls.from_rows(rows)

    @classmethod
    def identity(cls) -> "MatZ2":
        return cls(1, 0, 0, 1)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"

    def __matmul__(self, other: "MatZ2") -> "MatZ2":
        return mul(self, other)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def inverse(self) -> "MatZ2":
        return inverse(self)

    def max_entry(self) -> int:
        return max(abs(self.a), abs(self.b), abs(self.c), abs(self.d))


def mul(A: MatZ2, B: MatZ2) -> MatZ2:
    return MatZ2(
        A.a * B.a + A.b * B.c,
        A.a * B.b + A.b * B.d,
        A.c * B.a + A.d * B.c,
        A.c * B.b + A.d * B.d,
    )


def inverse(A: MatZ2) -> MatZ2:
    det = A.det
    return MatZ2(A.d * det, -A.b * det, -A.c * det, A.a * det)


def trace(A: MatZ2) -> int:
    return A.trace


def det(A: MatZ2) -> int:
    return A.det


class DynamicsType(enum.Enum):
    FINITE_ORDER = "finite-order"
    PARABOLIC = "parabolic"
    ANOSOV = "anosov"

    def __str__(self) -> str:
        return self.value


def classify_type(A: MatZ2) -> DynamicsType:
    """Trichotomy of an orientation-preserving torus map by ``|trace|``."""
    if A.det != 1:
        raise ValueError("classify_type needs a determinant +1 matrix")
    t = abs(A.trace)
    if t < 2:
        return DynamicsType.FINITE_ORDER
    if t == 2:
        return DynamicsType.PARABOLIC
    return DynamicsType.ANOSOV


@dataclass(frozen=True)
class Conjugate:
    witness: MatZ2

    def __str__(self) -> str:
        return f"conjugate witness={self.witness}"


@dataclass(frozen=True)
class NotConjugate:
    invariant: str
    values: tuple[int, int]

    def __str__(self) -> str:
        return f"not conjugate ({self.invariant}: {self.values[0]} vs {self.values[1]})"


@dataclass(frozen=True)
class Unknown:
    bound: int

    def __str__(self) -> str:
        return f"unknown (no witness with entries <= {self.bound})"


ConjugacyVerdict = Union[Conjugate, NotConjugate, Unknown]


def _ordered_pairs(bound: int) -> Iterator[tuple[int, int]]:
    # shells of growing max-norm, so the first witness found is small
    yield (0, 0)
    for r in range(1, bound + 1):
        for u in range(-r, r + 1):
            for v in range(-r, r + 1):
                if max(abs(u), abs(v)) == r:
                    yield (u, v)


def _solve_second_row(A: MatZ2, B: MatZ2, p: int, q: int) -> Optional[tuple[int, int]]:
    # P A = B P, first row: (p,q) A = b11 (p,q) + b12 (r,s)
    num_r = p * A.a + q * A.c - B.a * p
    num_s = p * A.b + q * A.d - B.a * q
    if num_r % B.b or num_s % B.b:
        return None
    return num_r // B.b, num_s // B.b


def _search_upper(A: MatZ2, B: MatZ2, bound: int) -> Optional[MatZ2]:
    """Find P with P A = B P when ``B.b != 0``: the first row fixes the second."""
    for p, q in _ordered_pairs(bound):
        rs = _solve_second_row(A, B, p, q)
        if rs is None:
            continue
        r, s = rs
        if max(abs(r), abs(s)) > bound or p * s - q * r not in (1, -1):
            continue
        P = MatZ2(p, q, r, s)
        if P @ A == B @ P:
            return P
    return None


def _transpose(M: MatZ2) -> MatZ2:
    return MatZ2(M.a, M.c, M.b, M.d)


def _find_witness(A: MatZ2, B: MatZ2, bound: int) -> Optional[MatZ2]:
    if B.b != 0:
        return _search_upper(A, B, bound)
    if A.b != 0:
        # Q B = A Q  =>  P = Q^-1; inverse entries are a signed permutation of Q's
        Q = _search_upper(B, A, bound)
        return None if Q is None else Q.inverse()
    if A.c != 0 or B.c != 0:
        # P A = B P  <=>  R B^T = A^T R  with  R = P^T
        if A.c != 0:
            R = _search_upper(_transpose(B), _transpose(A), bound)
            return None if R is None else _transpose(R)
        R = _search_upper(_transpose(A), _transpose(B), bound)
        return None if R is None else _transpose(R.inverse())
    # both diagonal with +-1 entries
    if (A.a, A.d) == (B.a, B.d):
        return MatZ2.identity()
    if (A.a, A.d) == (B.d, B.a):
        return MatZ2(0, 1, 1, 0)
    return None


def _content(A: MatZ2, lam: int) -> int:
    return math.gcd(A.a - lam, A.b, A.c, A.d - lam)


def is_conjugate_gl2z(
    A: MatZ2, B: MatZ2, search_bound: int = DEFAULT_SEARCH_BOUND
) -> ConjugacyVerdict:
    """Decide whether ``P A P^-1 = B`` for some ``P`` in GL(2, Z).

    Determinant, trace and the gcd of the entries of ``A -+ I`` are
    checked first; if they agree, conjugators with
    entries bounded by ``search_bound`` are searched exhaustively (the first
    row of ``P`` determines the second, so the search is quadratic in the
    bound).  ``Unknown`` is returned when the invariants agree but no bounded
    witness exists.
    """
    if A.det != B.det:
        return NotConjugate("det", (A.det, B.det))
    if A.trace != B.trace:
        return NotConjugate("trace", (A.trace, B.trace))
    # P (A - lI) P^-1 = B - lI, and the gcd of the entries survives that
    for lam, name in ((1, "content(A-I)"), (-1, "content(A+I)")):
        ca, cb = _content(A, lam), _content(B, lam)
        if ca != cb:
            return NotConjugate(name, (ca, cb))
    P = _find_witness(A, B, search_bound)
    if P is not None:
        assert P @ A @ P.inverse() == B
        return Conjugate(P)
    return Unknown(search_bound)


@lru_cache(maxsize=8)
def _unimodular_box(entry_bound: int) -> tuple[tuple[int, int, int, int], ...]:
    rng = range(-entry_bound, entry_bound + 1)
    return tuple(e for e in itertools.product(rng, repeat=4) if e[0] * e[3] - e[1] * e[2] in (1, -1))


def brute_force_conjugacy_oracle(A: MatZ2, B: MatZ2, entry_bound: int) -> Optional[MatZ2]:
    """Enumerate every ``P`` with entries in ``[-entry_bound, entry_bound]``.

    Returns the first ``P`` (in lexicographic entry order) with determinant
    +-1 and ``P A = B P``, or ``None`` once the box is exhausted.
    """
    for p, q, r, s in _unimodular_box(entry_bound):
        # P A == B P, written out entrywise
        if (
            p * A.a + q * A.c == B.a * p + B.b * r
            and p * A.b + q * A.d == B.a * q + B.b * s
            and r * A.a + s * A.c == B.c * p + B.d * r
            and r * A.b + s * A.d == B.c * q + B.d * s
        ):
            return MatZ2(p, q, r, s)
    return None
