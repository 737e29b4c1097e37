"""The ten reproduction criteria, each at its stated runtime budget.

Every test prints one PASS/FAIL line (visible with ``pytest -s`` or in the
captured output of ``pytest -v``).
"""

import pytest

from hadwigerlab.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=[f"{c[0]:02d}-{c[2].__name__}" for c in CRITERIA])
def test_criterion(number, capsys):
    outcome = run_criterion(number)
    with capsys.disabled():
        print("\n" + outcome.line())
    assert outcome.passed, outcome.detail
    assert outcome.in_budget, f"{outcome.seconds:.1f}s exceeds {outcome.budget}s"
