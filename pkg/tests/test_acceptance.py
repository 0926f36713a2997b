"""Acceptance checklist: every criterion at full depth, exact tolerance.

Each criterion prints its own PASS/FAIL line (run pytest with -s or -v plus
-rA to see them), and the same checklist backs ``sigmaprime selftest``.
All comparisons in the criteria are exact integer or rational equality;
there is no floating point anywhere, so the tolerance is zero.
"""

import pytest

from sigmaprime.acceptance import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: c.name)
def test_criterion(criterion):
    result = criterion.run(False)
    line = ("PASS" if result.passed else "FAIL") + f" {result.name}: {result.detail}"
    print(line)
    assert result.passed, line


def test_checklist_is_complete():
    names = [criterion.name for criterion in CRITERIA]
    assert len(names) == len(set(names)) == 11
