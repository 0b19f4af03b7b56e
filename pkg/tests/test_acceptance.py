"""Acceptance gate: runs every criterion of the verification suite and
prints one PASS/FAIL line per criterion.

Criteria 4 and 7 are expected to FAIL: each documents a divergence between
the classical claim and the exact computation (see the module docstring of
minvert.verify).  The test asserts that the failure is exactly the
documented one, so a silent regression in either direction is caught.
"""

import time

import pytest

from minvert.verify import CRITERIA

# criteria whose honest outcome is FAIL, with the marker that must appear
# in the reported detail
KNOWN_DIVERGENCES = {4: "known divergence", 7: "known divergence"}

# wall-clock bounds (seconds) imposed on individual criteria
TIME_BOUNDS = {1: 5.0, 2: 60.0, 3: 600.0}

_RESULTS = {}


def _run(num):
    if num not in _RESULTS:
        func = next(f for n, _, f in CRITERIA if n == num)
        t0 = time.monotonic()
        ok, detail = func()
        _RESULTS[num] = (ok, detail, time.monotonic() - t0)
    return _RESULTS[num]


@pytest.mark.parametrize("num,name", [(n, name) for n, name, _ in CRITERIA],
                         ids=[f"criterion-{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(num, name, capsys):
    ok, detail, elapsed = _run(num)
    status = "PASS" if ok else "FAIL"
    with capsys.disabled():
        print(f"\ncriterion {num:2d} [{status}] {name}: {detail}")
    if num in KNOWN_DIVERGENCES:
        assert not ok, (f"criterion {num} unexpectedly passed; the documented "
                        f"divergence would be resolved: {detail}")
        assert KNOWN_DIVERGENCES[num] in detail
    else:
        assert ok, f"criterion {num} ({name}) failed: {detail}"
    bound = TIME_BOUNDS.get(num)
    if bound is not None:
        assert elapsed < bound, f"criterion {num} took {elapsed:.1f}s (bound {bound}s)"
