"""The thirteen acceptance criteria, each at its full default size.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""
import pytest

from repstab import verify as vf

RESULTS: dict[int, bool] = {}


@pytest.mark.parametrize("k, title, target", [(k, t, g) for k, (t, g) in enumerate(vf.ACCEPTANCE, 1)],
                         ids=[g for _, g in vf.ACCEPTANCE])
def test_criterion(k, title, target):
    RESULTS[k] = False
    checks = vf.run_target(target)
    failed = [c.line(target) for c in checks if not c.ok]
    assert checks and not failed, "\n".join(failed)
    RESULTS[k] = True
