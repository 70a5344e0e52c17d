import itertools

import pytest
from hypothesis import given, strategies as st

from gofknots.gl2z import (
    Conjugate,
    DynamicsType,
    MatZ2,
    NotConjugate,
    Unknown,
    brute_force_conjugacy_oracle,
    classify_type,
    det,
    inverse,
    is_conjugate_gl2z,
    mul,
    trace,
)


def M(a, b, c, d) -> MatZ2:
    return MatZ2(a, b, c, d)


I = M(1, 0, 0, 1)

entries = st.integers(-4, 4)


@st.composite
def unimodular(draw):
    a, b, c, d = draw(entries), draw(entries), draw(entries), draw(entries)
    if a * d - b * c not in (1, -1):
        # fall back to a product of elementary matrices
        k, m = draw(entries), draw(entries)
        return mul(M(1, k, 0, 1), M(1, 0, m, 1))
    return M(a, b, c, d)


def test_rejects_non_unimodular():
    with pytest.raises(ValueError):
        M(2, 0, 0, 1)


def test_mul_by_hand():
    assert mul(M(1, 1, 0, 1), M(1, 0, 2, 1)) == M(3, 1, 2, 1)


def test_inverse_shear():
    assert inverse(M(1, 1, 0, 1)) == M(1, -1, 0, 1)


def test_trace_and_det():
    assert trace(M(-2, 3, -3, 4)) == 2
    assert det(M(0, 1, 1, 0)) == -1


def test_parse_roundtrip():
    A = MatZ2.parse("[[1,3],[2,7]]")
    assert A == M(1, 3, 2, 7)
    assert MatZ2.parse(str(A)) == A


@pytest.mark.parametrize(
    "A, kind",
    [
        (M(1, 1, 0, 1), DynamicsType.PARABOLIC),
        (M(1, 1, -1, 0), DynamicsType.FINITE_ORDER),
        (M(1, 4, 1, 5), DynamicsType.ANOSOV),
        (M(-1, 0, 0, -1), DynamicsType.PARABOLIC),
        (M(0, -1, 1, -1), DynamicsType.FINITE_ORDER),
    ],
)
def test_classify(A, kind):
    assert classify_type(A) is kind


def test_classify_rejects_orientation_reversing():
    with pytest.raises(ValueError):
        classify_type(M(0, 1, 1, 0))


def test_finite_order_sixth_power():
    A = M(1, 1, -1, 0)
    P = I
    for _ in range(6):
        P = P @ A
    assert P == I


@given(unimodular())
def test_inverse_is_two_sided(A):
    assert inverse(A) @ A == I == A @ inverse(A)


@given(unimodular(), unimodular())
def test_trace_det_are_conjugation_invariant(A, P):
    B = P @ A @ inverse(P)
    assert trace(B) == trace(A)
    assert det(B) == det(A)


class TestConjugacy:
    def test_shear_and_inverse_shear(self):
        verdict = is_conjugate_gl2z(M(1, 1, 0, 1), M(1, -1, 0, 1))
        assert isinstance(verdict, Conjugate)
        P = verdict.witness
        assert P @ M(1, 1, 0, 1) @ inverse(P) == M(1, -1, 0, 1)

    def test_trace_mismatch(self):
        v = is_conjugate_gl2z(M(1, 3, 2, 7), M(1, 3, -2, -5))
        assert v == NotConjugate("trace", (8, -4))

    def test_parabolic_vs_anosov(self):
        v = is_conjugate_gl2z(M(-2, 3, -3, 4), M(1, 4, 1, 5))
        assert v == NotConjugate("trace", (2, 6))

    def test_det_mismatch(self):
        v = is_conjugate_gl2z(M(0, 1, 1, 0), I)
        assert isinstance(v, NotConjugate) and v.invariant == "det"

    def test_same_trace_different_content(self):
        v = is_conjugate_gl2z(M(1, 1, 0, 1), M(1, 2, 0, 1))
        assert isinstance(v, NotConjugate)
        assert v.invariant == "content(A-I)"

    @given(unimodular())
    def test_self_conjugate(self, A):
        v = is_conjugate_gl2z(A, A)
        assert isinstance(v, Conjugate)
        assert v.witness @ A @ inverse(v.witness) == A

    @given(unimodular(), unimodular())
    def test_witness_verifies(self, A, P):
        B = P @ A @ inverse(P)
        v = is_conjugate_gl2z(A, B)
        assert not isinstance(v, NotConjugate)
        if isinstance(v, Conjugate):
            assert v.witness @ A @ inverse(v.witness) == B

    def test_unknown_when_bound_too_small(self):
        A = M(2, 1, 1, 1)
        P = M(5, 2, 2, 1)
        B = P @ A @ inverse(P)
        assert isinstance(is_conjugate_gl2z(A, B, search_bound=0), Unknown)
        assert isinstance(is_conjugate_gl2z(A, B), Conjugate)


class TestOracle:
    def test_finds_witness(self):
        P = brute_force_conjugacy_oracle(M(1, 1, 0, 1), M(1, -1, 0, 1), 1)
        assert P is not None
        assert P @ M(1, 1, 0, 1) == M(1, -1, 0, 1) @ P

    def test_identity_witness(self):
        A = M(2, 1, 1, 1)
        P = brute_force_conjugacy_oracle(A, A, 1)
        assert P is not None and P @ A == A @ P

    def test_exhausted(self):
        assert brute_force_conjugacy_oracle(M(2, 1, 1, 1), M(1, 1, 0, 1), 8) is None


def test_agrees_with_oracle_on_small_parabolics():
    # a quick slice of the full sweep run by the acceptance suite
    small = [M(*e) for e in itertools.product(range(-2, 3), repeat=4) if e[0] * e[3] - e[1] * e[2] == 1]
    small = [A for A in small if abs(A.trace) == 2]
    for A, B in itertools.product(small, repeat=2):
        v = is_conjugate_gl2z(A, B)
        assert not isinstance(v, Unknown)
        found = brute_force_conjugacy_oracle(A, B, 3)
        if found is not None:
            assert isinstance(v, Conjugate)
