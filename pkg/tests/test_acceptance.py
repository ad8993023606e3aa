"""Acceptance criteria, one test and one summary line per criterion.

The summary lines are printed at the end of the pytest run (see
conftest.py) and when this file is run as a script.
"""

import io
import time

import pytest

from wittlambda.acceptance import CRITERIA, run_criterion
from wittlambda.cli import run

SEED = 42
TIME_LIMITS = {1: 60.0, 7: 120.0}
RESULTS = {}


def _line(number, title, ok, note):
    return f"criterion {number:>2}  {'PASS' if ok else 'FAIL'}  {title}  ({note})"


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    start = time.perf_counter()
    title, rep = run_criterion(number, SEED)
    elapsed = time.perf_counter() - start
    limit = TIME_LIMITS.get(number)
    in_time = limit is None or elapsed <= limit
    failures = [f"{c.name}: {c.witness}" for c in rep.failures]
    if not in_time:
        failures.append(f"runtime {elapsed:.1f}s exceeds {limit:.0f}s")
    note = f"{len(rep.checks)} checks" + (f", {elapsed:.1f}s of {limit:.0f}s" if limit else "")
    RESULTS[number] = _line(number, title, not failures, note if not failures else failures[0])
    assert not failures, failures


def test_criterion_10_determinism():
    outputs = []
    for _ in range(2):
        out, err = io.StringIO(), io.StringIO()
        code = run(["verify-all", "--seed", str(SEED)], out, err)
        outputs.append((code, out.getvalue().encode("utf-8")))
    same = outputs[0] == outputs[1]
    RESULTS[10] = _line(10, "determinism of verify-all --seed 42", same,
                        f"{len(outputs[0][1])} bytes, exit {outputs[0][0]}")
    assert same
    assert outputs[0][0] == 0


def summary_lines():
    return [RESULTS[k] for k in sorted(RESULTS)]


if __name__ == "__main__":
    for n in sorted(CRITERIA):
        try:
            test_criterion(n)
        except AssertionError:
            pass
    try:
        test_criterion_10_determinism()
    except AssertionError:
        pass
    print("\n".join(summary_lines()))
