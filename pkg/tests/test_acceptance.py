"""Acceptance gate: thirteen exact-equality criteria, one line each.

Every comparison is exact rational equality (tolerance zero). Each test
prints a single [PASS]/[FAIL] line on the real stdout so the gate's
verdict survives pytest's capture, then asserts.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

import pytest

from mslab import (
    Subset,
    build_hyperspace,
    check_gamma_identities,
    diam_eps,
    distortion,
    gh_exact,
    gh_one_point,
    gh_simplex_simplex,
    gh_simplex_vs_delta_connected,
    gh_simplex_vs_finite,
    induced_correspondence,
    isometry_probe,
    nonexpansion_sweep,
    projection_lipschitz_check,
    random_space,
    simplex,
    subset_to_hyperspace_distance,
    verify_embedding_theorem,
)

from helpers import brute_force_min_distortion, chain


_PENDING: list[str] = []


def _record(num: int, label: str, ok: bool, started: float) -> None:
    verdict = "PASS" if ok else "FAIL"
    elapsed = time.monotonic() - started
    _PENDING.append(f"[{verdict}] criterion {num}: {label} ({elapsed:.1f}s)")


@pytest.fixture(autouse=True)
def _emit_verdict(capfd):
    """Print each criterion's verdict outside pytest's capture."""
    yield
    with capfd.disabled():
        while _PENDING:
            print(_PENDING.pop(0), flush=True)


def test_criterion_01_solver_matches_brute_force():
    started = time.monotonic()
    rng = random.Random("acceptance:1")
    failures = []
    for trial in range(200):
        nx = rng.randint(1, 3)
        ny = rng.randint(1, 3)
        x = random_space(nx, rng.randrange(10**9), 9)
        y = random_space(ny, rng.randrange(10**9), 9)
        expected = brute_force_min_distortion(x, y) / 2
        got = gh_exact(x, y)
        if got.status != "exact" or got.distance != expected:
            failures.append((trial, expected, got.distance))
    ok = not failures
    _record(1, "solver equals brute-force oracle on 200 pairs", ok, started)
    assert ok, failures[:5]


def test_criterion_02_simplex_simplex_closed_form():
    started = time.monotonic()
    grid = [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)]
    failures = []
    for p in range(1, 6):
        for q in range(1, 6):
            for t in grid:
                for s in grid:
                    closed = gh_simplex_simplex(t, p, s, q)
                    solved = gh_exact(simplex(p, t), simplex(q, s))
                    if (solved.status != "exact"
                            or solved.distance != closed):
                        failures.append((p, q, t, s, closed,
                                         solved.distance))
    ok = not failures
    _record(2, "simplex-simplex closed form on the full 5x5 grid",
            ok, started)
    assert ok, failures[:5]


def test_criterion_03_simplex_vs_finite_closed_form():
    started = time.monotonic()
    rng = random.Random("acceptance:3")
    grid = [Fraction(1, 2), Fraction(1), Fraction(2), Fraction(4)]
    failures = []
    for trial in range(200):
        n = rng.randint(2, 4)
        space = random_space(n, rng.randrange(10**9), 6)
        for m in (n, n + 1, n + 2):
            for t in grid:
                closed = gh_simplex_vs_finite(t, m, space)
                solved = gh_exact(simplex(m, t), space)
                if solved.status != "exact" or solved.distance != closed:
                    failures.append((trial, m, t, closed, solved.distance))
    ok = not failures
    _record(3, "simplex-vs-finite closed forms on 200 spaces", ok, started)
    assert ok, failures[:5]


def test_criterion_04_one_point_rule():
    started = time.monotonic()
    rng = random.Random("acceptance:4")
    point = simplex(1, Fraction(1))
    failures = []
    for trial in range(100):
        y = random_space(rng.randint(1, 5), rng.randrange(10**9), 9)
        expected = y.diam() / 2
        solved = gh_exact(point, y)
        if (solved.distance != expected
                or gh_one_point(y) != expected):
            failures.append((trial, expected, solved.distance))
    ok = not failures
    _record(4, "one-point rule: half the diameter on 100 spaces",
            ok, started)
    assert ok, failures[:5]


def test_criterion_05_embedding_theorem():
    started = time.monotonic()
    rng = random.Random("acceptance:5")
    failures = []
    for trial in range(500):
        n = rng.randint(2, 9)
        space = random_space(n, rng.randrange(10**9), 9)
        pool = rng.sample(range(n), rng.randint(2, n))
        cut = rng.randint(1, len(pool) - 1)
        x = Subset.from_indices(pool[:cut], n)
        y = Subset.from_indices(pool[cut:], n)
        lhs, rhs = verify_embedding_theorem(space, x, y)
        if lhs != rhs:
            failures.append((trial, lhs, rhs))
    ok = not failures
    _record(5, "subset-family distance equals subset distance, 500 cases",
            ok, started)
    assert ok, failures[:5]


def test_criterion_06_gamma_identities():
    started = time.monotonic()
    rng = random.Random("acceptance:6")
    failures = []
    for trial in range(500):
        n = rng.randint(2, 10)
        space = random_space(n, rng.randrange(10**9), 9)
        x = Subset.from_indices(
            rng.sample(range(n), rng.randint(1, min(n, 5))), n)
        y = Subset.from_indices(
            rng.sample(range(n), rng.randint(1, min(n, 5))), n)
        report = check_gamma_identities(space, x, y)
        via_enum, via_gamma = subset_to_hyperspace_distance(space, x, y)
        if not report.passed or via_enum != via_gamma:
            failures.append((trial, report.counterexample,
                             via_enum, via_gamma))
    ok = not failures
    _record(6, "nearest-point identities and both routes agree, 500 cases",
            ok, started)
    assert ok, failures[:5]


def test_criterion_07_nonexpansion():
    started = time.monotonic()
    report = nonexpansion_sweep(300, 3, 20260819, 9)
    sharp = nonexpansion_sweep(40, 3, 20260819, 9, pair_mode="one_point")
    all_exact = all(row.status == "exact" for row in report.rows)
    no_violation = (report.summary.violations == 0
                    and all(row.gap >= 0 for row in report.rows))
    sharp_ok = all(row.status == "exact" and row.gap == 0
                   for row in sharp.rows)
    ok = all_exact and no_violation and sharp_ok
    _record(7, "passing to subsets never expands distance, 300 pairs + "
            "40 sharp rows", ok, started)
    assert ok, (all_exact, report.summary, sharp_ok)


def test_criterion_08_induced_correspondence_distortion():
    started = time.monotonic()
    rng = random.Random("acceptance:8")
    failures = []
    for trial in range(100):
        nx = rng.randint(1, 4)
        ny = rng.randint(1, 4)
        x = random_space(nx, rng.randrange(10**9), 9)
        y = random_space(ny, rng.randrange(10**9), 9)
        witness = gh_exact(x, y).witness
        base = distortion(witness, x, y)
        hx = build_hyperspace(x)
        hy = build_hyperspace(y)
        lifted = induced_correspondence(witness, x, y)
        lifted_dis = distortion(lifted, hx.metric, hy.metric)
        if lifted_dis > base:
            failures.append((trial, base, lifted_dis))
    ok = not failures
    _record(8, "lifted witness never has larger distortion, 100 pairs",
            ok, started)
    assert ok, failures[:5]


def test_criterion_09_diam_eps_preserved():
    started = time.monotonic()
    failures = []
    for n in range(1, 7):
        for seed in (0, 1, 2):
            space = random_space(n, seed, 9)
            h = build_hyperspace(space)
            if diam_eps(h.metric) != diam_eps(space):
                failures.append((n, seed))
    ok = not failures
    _record(9, "diameter and least distance survive the subset lift",
            ok, started)
    assert ok, failures


def test_criterion_10_hyperspace_of_simplex():
    started = time.monotonic()
    failures = []
    for p in range(1, 6):
        for t in (Fraction(1), Fraction(3, 2)):
            h = build_hyperspace(simplex(p, t), cap=5)
            m = h.metric
            size_ok = m.n == 2**p - 1
            entries_ok = all(
                m.d[i][j] == t
                for i in range(m.n) for j in range(m.n) if i != j)
            if not (size_ok and entries_ok):
                failures.append((p, t))
    ok = not failures
    _record(10, "subset space of a p-point simplex is the "
            "(2^p-1)-point simplex", ok, started)
    assert ok, failures


def test_criterion_11_delta_connected_bracket():
    started = time.monotonic()
    failures = []
    for k in range(1, 7):
        for delta in (Fraction(1), Fraction(1, 2), Fraction(1, 4)):
            space = chain(k, delta)
            t = space.diam() + Fraction(1, 2)
            for p in (2, 3):
                doubled = 2 * gh_exact(simplex(p, t), space).distance
                if not (t - delta <= doubled <= t):
                    failures.append((k, delta, p, doubled))
                lo, hi = gh_simplex_vs_delta_connected(t, p, space, delta)
                if not (2 * lo == t - delta and 2 * hi == t):
                    failures.append((k, delta, p, "bounds", lo, hi))
    ok = not failures
    _record(11, "chain distances to simplexes land in [t-delta, t]",
            ok, started)
    assert ok, failures


def test_criterion_12_projection_lipschitz():
    started = time.monotonic()
    rng = random.Random("acceptance:12")
    failures = []
    for trial in range(500):
        n = rng.randint(1, 6)
        space = random_space(n, rng.randrange(10**9), 9)
        length = rng.randint(1, 4)
        a = tuple(rng.randrange(n) for _ in range(length))
        b = tuple(rng.randrange(n) for _ in range(length))
        lhs, rhs = projection_lipschitz_check(space, a, b)
        if lhs > rhs:
            failures.append((trial, a, b, lhs, rhs))
    ok = not failures
    _record(12, "coordinate sets never move farther than the tuples, "
            "500 cases", ok, started)
    assert ok, failures[:5]


def test_criterion_13_isometry_probe():
    started = time.monotonic()
    report = isometry_probe(120, 3, 20260819)
    enough = len(report.rows) >= 100
    min_gap = report.summary.min_gap
    nonnegative = min_gap is not None and min_gap >= 0
    ok = enough and nonnegative and report.summary.violations == 0
    _record(13, f"probe completed {len(report.rows)} general-position "
            f"pairs, min gap {min_gap}", ok, started)
    assert ok, (len(report.rows), report.summary)
