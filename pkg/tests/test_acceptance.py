"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line; the lines are printed in the
pytest terminal summary and also when this file is run as a script.
"""

from __future__ import annotations

import time

import pytest

from multipath.cohomology import BettiTable, multipath_betti
from multipath.families import alternating
from multipath.linalg import QQ
from multipath.linear import alternating_betti
from multipath.suites import (
    suite_algebra,
    suite_chi_table,
    suite_linear,
    suite_mv,
    suite_named,
    suite_properties,
    suite_shift,
    suite_structure,
    suite_wedges,
)

RESULTS: dict[int, str] = {}


def record(n: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {title}"
    if detail:
        line += f" ({detail})"
    RESULTS[n] = line
    print(line)


def _failures(*results) -> list[str]:
    return [f"{r.name}: {label} {detail}".strip() for r in results for label, ok, detail in r.checks
            if not ok]


def _summary(*results) -> str:
    return ", ".join(f"{r.name} {sum(ok for _, ok, _ in r.checks)}/{len(r.checks)}" for r in results)


def test_criterion_1_named_tables():
    t0 = time.perf_counter()
    res = suite_named(QQ)
    elapsed = time.perf_counter() - t0
    ok = res.ok and elapsed < 60
    record(1, "named cohomology tables", ok, f"{_summary(res)}, {elapsed:.2f}s < 60s")
    assert not _failures(res)
    assert elapsed < 60


def test_criterion_2_alternating_closed_form():
    t0 = time.perf_counter()
    bad = [n for n in range(13) if multipath_betti(alternating(n)) != alternating_betti(n)]
    elapsed = time.perf_counter() - t0
    # the closed form itself: one class in degree k iff n = 3(k-1)+2 or n = 3k
    shape = all(alternating_betti(n) == BettiTable(
        {k: 1 for k in range(n + 1) if n in (3 * (k - 1) + 2, 3 * k)}) for n in range(13))
    ok = not bad and shape and elapsed < 60
    record(2, "A_n equals the closed form for n <= 12", ok, f"mismatches {bad}, {elapsed:.2f}s < 60s")
    assert not bad and shape and elapsed < 60


def test_criterion_3_linear_classifier():
    t0 = time.perf_counter()
    res = suite_linear(10, QQ)
    elapsed = time.perf_counter() - t0
    record(3, "closed form = direct on all 2^n words, n <= 10", res.ok,
           f"{_summary(res)}, {elapsed:.1f}s")
    assert not _failures(res)


def test_criterion_4_simplicial_shift():
    res = suite_shift(count=200, seed=0, f=QQ)
    record(4, "multipath = shifted reduced simplicial cohomology", res.ok, _summary(res))
    assert not _failures(res)


def test_criterion_5_graded_euler():
    res = suite_chi_table()
    record(5, "graded Euler characteristics and generating series", res.ok, _summary(res))
    assert not _failures(res)


def test_criterion_6_algebra_coefficients():
    res = suite_algebra()
    record(6, "H(I_n; Q[x]/(x^2)) has rank 2 in degree 0 only, n <= 5", res.ok, _summary(res))
    assert not _failures(res)


def test_criterion_7_structure():
    results = (suite_structure(seed=0, f=QQ), suite_mv(QQ), suite_wedges(QQ))
    ok = all(r.ok for r in results)
    record(7, "decomposition, cone, gluing, suspension and wedges", ok, _summary(*results))
    assert not _failures(*results)


def test_criterion_8_properties():
    res = suite_properties(seed=0, f=QQ)
    record(8, "d^2 = 0, order and reversal invariance, union convolution", res.ok, _summary(res))
    assert not _failures(res)


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
