"""Acceptance criteria: one PASS/FAIL line per criterion.

Run directly (``python3 tests/test_acceptance.py``) for the plain report, or
through pytest, where each line is printed as the criterion finishes.
"""

import subprocess
import sys
import time

import pytest

from superschur import acceptance

SELFTEST_LIMIT_SECONDS = 60


def run_selftest():
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "superschur.cli", "--quiet", "selftest"],
                          capture_output=True, text=True)
    elapsed = time.perf_counter() - start
    passed = proc.returncode == 0 and elapsed < SELFTEST_LIMIT_SECONDS
    detail = f"exit {proc.returncode} in {elapsed:.1f}s"
    return acceptance.CriterionResult(10, "selftest exits 0 within the time limit", passed, 1, detail)


def report(result, capsys):
    with capsys.disabled():
        print("\n" + result.line())


@pytest.mark.parametrize("criterion", acceptance.CRITERIA, ids=lambda c: c.__name__)
def test_criterion(criterion, capsys):
    result = criterion()
    report(result, capsys)
    assert result.passed, result.detail


def test_criterion_10_selftest(capsys):
    result = run_selftest()
    report(result, capsys)
    assert result.passed, result.detail


if __name__ == "__main__":
    results = acceptance.run_all() + [run_selftest()]
    for r in results:
        print(r.line())
    sys.exit(0 if all(r.passed for r in results) else 1)
