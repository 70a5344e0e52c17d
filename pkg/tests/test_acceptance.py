"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL`` line (visible with
``pytest -s`` or in the terminal summary) before asserting.
"""

import itertools
import math
import subprocess
import sys
import time

import pytest

from gofknots.diagrams import W, build_standard_diagram, enumerate_curves, is_gof, list_fixtures, load_fixture, read_word, search_gof
from gofknots.diagrams.fileio import fixture_dir
from gofknots.gl2z import Conjugate, MatZ2, NotConjugate, Unknown, brute_force_conjugacy_oracle, is_conjugate_gl2z
from gofknots.manifolds import S2xS1, connected_sum, gof_census, gof_count, lens, parse_manifold
from gofknots.plumbing import PlumbingRecipe, plumb_monodromy

from helpers import lemma_violations


@pytest.fixture
def report(capsys):
    def emit(n: int, ok: bool, detail: str = "") -> None:
        with capsys.disabled():
            print(f"\ncriterion {n}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip())
        assert ok, detail

    return emit


def coprime(p):
    return [q for q in range(1, p) if math.gcd(p, q) == 1]


def lens_class(p, q):
    """All q' with L(p,q') homeomorphic to L(p,q), straight from the definition."""
    inv = pow(q, -1, p)
    return {q % p, (-q) % p, inv, (-inv) % p}


def expected_lens_count(p, q):
    cls = lens_class(p, q)
    if p == 4:
        return 3
    if 1 in cls:
        return 2
    for a in range(1, p):
        for b in range(1, p):
            n = 2 * a * b + a + b
            if (2 * a + 1) % p not in cls:
                continue
            if n == p and (a, b) != (1, 1):
                return 1
            if n + 1 == p:
                return 1
    return 0


def test_criterion_1_lens_census(report):
    start = time.perf_counter()
    bad = []
    for p in range(2, 61):
        for q in coprime(p):
            got, want = gof_count(lens(p, q)), expected_lens_count(p, q)
            if got != want:
                bad.append((p, q, got, want))
    spots = {(4, 1): 3, (5, 1): 2, (7, 3): 1, (5, 2): 1, (9, 2): 0}
    bad += [(p, q, gof_count(lens(p, q)), n) for (p, q), n in spots.items() if gof_count(lens(p, q)) != n]
    elapsed = time.perf_counter() - start
    report(1, not bad and elapsed < 5, f"{len(bad)} mismatches, {elapsed:.2f}s")


def test_criterion_2_connected_sums(report):
    start = time.perf_counter()
    pieces = [(p, q) for p in range(2, 31) for q in coprime(p)]
    pm1 = lambda p, q: q % p in (1, p - 1)
    bad = []
    for (p1, q1), (p2, q2) in itertools.combinations_with_replacement(pieces, 2):
        m = connected_sum(lens(p1, q1), lens(p2, q2))
        if pm1(p1, q1) and pm1(p2, q2):
            want = 2 if 2 in (p1, p2) else 1
        else:
            want = 0
        if gof_count(m) != want:
            bad.append(str(m))
    for p, q in pieces:
        want = 1 if pm1(p, q) else 0
        if gof_count(connected_sum(lens(p, q), S2xS1)) != want:
            bad.append(f"L({p},{q})#S2xS1")
    if gof_count(parse_manifold("S2xS1#S2xS1")) != 1:
        bad.append("S2xS1#S2xS1")
    elapsed = time.perf_counter() - start
    report(2, not bad and elapsed < 5, f"{len(bad)} mismatches, {elapsed:.2f}s")


def test_criterion_3_plumbing_matrices(report):
    bad = []
    for p in range(2, 21):
        table = {
            (p, 2): [[1, p], [2, 1 + 2 * p]],
            (p, -2): [[1, p], [-2, 1 - 2 * p]],
            (p, 1): [[1, p], [1, 1 + p]],
            (p, -1): [[1, p], [-1, 1 - p]],
        }
        for (k1, k2), rows in table.items():
            if plumb_monodromy(PlumbingRecipe.of(k1, k2)).rows() != rows:
                bad.append((k1, k2))
    for s in (1, -1):
        if plumb_monodromy(PlumbingRecipe.of(s, 0)).rows() != [[1, s], [0, 1]]:
            bad.append((s, 0))
    report(3, not bad, f"{len(bad)} mismatches")


def test_criterion_4_conjugacy(report):
    problems = []
    A, B = MatZ2(1, 1, 0, 1), MatZ2(1, -1, 0, 1)
    v = is_conjugate_gl2z(A, B)
    if not (isinstance(v, Conjugate) and v.witness @ A @ v.witness.inverse() == B):
        problems.append("shear pair")

    def expect_trace(m1, m2, t1, t2):
        v = is_conjugate_gl2z(m1, m2)
        if v != NotConjugate("trace", (t1, t2)):
            problems.append(f"{m1} vs {m2}: {v}")

    for p in range(2, 21):
        pl = lambda k1, k2: plumb_monodromy(PlumbingRecipe.of(k1, k2))
        expect_trace(pl(p, 2), pl(p, -2), 2 + 2 * p, 2 - 2 * p)
        expect_trace(pl(p, 1), pl(p, -1), 2 + p, 2 - p)
    l41 = [e.monodromy for e in gof_census(lens(4, 1))]
    if sorted(m.trace for m in l41) != [-2, 2, 6]:
        problems.append("L(4,1) traces")
    for m1, m2 in itertools.combinations(l41, 2):
        if not isinstance(is_conjugate_gl2z(m1, m2), NotConjugate):
            problems.append(f"{m1} vs {m2}")
    report(4, not problems, "; ".join(problems[:3]) or "all verdicts definite")


def test_criterion_5_oracle_agreement(report):
    start = time.perf_counter()
    mats = [MatZ2(*e) for e in itertools.product(range(-2, 3), repeat=4) if e[0] * e[3] - e[1] * e[2] == 1]
    contradictions = unknown = 0
    for A, B in itertools.product(mats, repeat=2):
        v = is_conjugate_gl2z(A, B)
        witness = brute_force_conjugacy_oracle(A, B, 8)
        if isinstance(v, Unknown):
            unknown += 1
        if witness is not None and not isinstance(v, Conjugate):
            contradictions += 1
        if isinstance(v, NotConjugate) and witness is not None:
            contradictions += 1
    elapsed = time.perf_counter() - start
    detail = f"{len(mats)**2} pairs, {contradictions} contradictions, {unknown} unknown, {elapsed:.1f}s"
    report(5, contradictions == 0 and elapsed < 60, detail)


def test_criterion_6_lemma_suite(report):
    totals = []
    failures = []
    for name in ("S3", "L(2,1)#S2xS1"):
        d = build_standard_diagram(parse_manifold(name))
        curves = checked = 0
        for c in enumerate_curves(d, 10):
            curves += 1
            n, bad = lemma_violations(c, d)
            checked += n
            failures += [(name, c.passages, b) for b in bad]
        totals.append(f"{name}: {curves} curves, {checked} unreduced words checked")
    ok = not failures and all(" 0 curves" not in t for t in totals)
    report(6, ok, "; ".join(totals) + (f"; first failure {failures[0]}" if failures else ""))


def test_criterion_7_fixtures(report):
    problems = []
    names = list_fixtures()
    for fig in ("fig10", "fig16", "fig27", "fig31", "fig35", "fig46", "fig47"):
        if fig not in names:
            problems.append(f"{fig} missing")
            continue
        rec = load_fixture(fig)
        if not is_gof(rec.curve, rec.diagram):
            problems.append(f"{fig} not GOF")
    reducing = [n for n in names if n.startswith("reducing-")]
    for n in reducing:
        rec = load_fixture(n)
        if is_gof(rec.curve, rec.diagram):
            problems.append(f"{n} is GOF")
    rec = load_fixture("fig16")
    runs = read_word(rec.curve, rec.diagram, W).runs(0)
    if not any(k % 3 in (1, 2) for _, k in runs):
        problems.append("fig16 x' run")
    report(7, not problems and bool(reducing), "; ".join(problems) or f"{len(reducing)} reducing fixtures rejected")


def test_criterion_8_search(report):
    start = time.perf_counter()
    counts = {}
    for name in ("L(3,1)#S2xS1", "S2xS1#S2xS1", "L(5,2)#S2xS1"):
        counts[name] = len(search_gof(build_standard_diagram(parse_manifold(name)), 12))
    elapsed = time.perf_counter() - start
    ok = counts["L(3,1)#S2xS1"] > 0 and counts["S2xS1#S2xS1"] > 0 and counts["L(5,2)#S2xS1"] == 0 and elapsed < 600
    detail = ", ".join(f"{k}: {v}" for k, v in counts.items()) + f" (bound 12, {elapsed:.0f}s)"
    report(8, ok, detail)


def test_criterion_9_identities(report):
    bad = 0
    for a, b in itertools.product(range(1, 101), repeat=2):
        n = 2 * a * b + a + b
        prod = (2 * a + 1) * (2 * b + 1)
        bad += prod % n != 1
        bad += prod % (n + 1) != n
    variant = 0
    for p in range(2, 61):
        for q in coprime(p):
            counts = {gof_count(lens(p, r)) for r in lens_class(p, q)}
            variant += len(counts) != 1
    report(9, bad == 0 and variant == 0, f"{bad} identity failures, {variant} non-invariant classes")


def _cli(*argv) -> bytes:
    return subprocess.run([sys.executable, "-m", "gofknots", *argv], capture_output=True, check=True).stdout


def test_criterion_10_determinism(report):
    fig10 = str(fixture_dir() / "fig10.json")
    commands = [
        ("census", "L(4,1)"),
        ("census", "L(3,1)#L(2,1)", "--format", "records"),
        ("search", "--manifold", "S2xS1#S2xS1", "--max-crossings", "8"),
        ("render", "--diagram", "S2xS1#S2xS1", "--curve", fig10, "-o", "-"),
    ]
    differing = [c[0] for c in commands if _cli(*c) != _cli(*c)]
    serial = _cli("search", "--manifold", "S2xS1#S2xS1", "--max-crossings", "8")
    parallel = _cli("search", "--manifold", "S2xS1#S2xS1", "--max-crossings", "8", "--jobs", "2")
    if serial != parallel:
        differing.append("search --jobs 2")
    report(10, not differing, ", ".join(differing) or "census, search, render byte-identical")
