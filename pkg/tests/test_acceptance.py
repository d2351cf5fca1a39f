"""Acceptance suite: one test per criterion, each printing a PASS/FAIL
line with the measured detail.  All comparisons are exact (tolerance 0).
"""

import pytest

from hdecomp.selftest import CRITERIA


@pytest.mark.parametrize("name,fn", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(name, fn, capsys):
    ok, detail = fn()
    line = f"{'PASS' if ok else 'FAIL'} criterion {name}: {detail}"
    with capsys.disabled():
        print(line, flush=True)
    assert ok, line
