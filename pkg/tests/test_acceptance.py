"""Acceptance table; run with ``pytest -s`` to see the PASS/FAIL lines."""

import pytest

from fsgraph.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("key", [k for k, _, _ in CRITERIA])
def test_criterion(key):
    r = run_criterion(key)
    print(r.line())
    assert r.passed, r.line()


@pytest.mark.slow
def test_criterion_9_slow():
    r = run_criterion("9", slow=True)
    print(r.line())
    assert r.passed, r.line()
