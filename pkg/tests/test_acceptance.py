"""One test per acceptance criterion; each prints its pass/fail line (see with -s)."""

import pytest

from crystal_bialgebra import selftest

LIMITS = {n: 10.0 for n in range(1, 9)}
LIMITS[9] = 60.0


@pytest.mark.parametrize("n", range(1, 10))
def test_criterion(n):
    r = getattr(selftest, f"c{n}")()
    print(r.line())
    assert r.seconds <= LIMITS[n]
    assert r.passed, r.detail


def test_criterion_10():
    r, results = selftest.c10()
    for sub in results:
        print(sub.line())
    print(r.line())
    assert r.seconds <= 180.0
    assert r.passed, r.detail
