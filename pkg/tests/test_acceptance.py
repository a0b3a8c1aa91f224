"""The twelve acceptance properties, each at its full sweep bound.

Every test prints one ``[PASS]`` or ``[FAIL]`` line (visible with ``pytest -s``
and in the terminal summary), then asserts the result.
"""
import pytest

from cambrianrep.checks import CRITERIA, run_criterion

LINES: list[str] = []


@pytest.mark.parametrize("number", [k for k, *_ in CRITERIA],
                         ids=[f"{k:02d}-{title.replace(' ', '_')}" for k, title, *_ in CRITERIA])
def test_criterion(number):
    result = run_criterion(number, n_max=None, jobs=1, oracle=True)
    line = result.line()
    LINES.append(line)
    print(line)
    assert result.ok, line


def test_bounds_are_the_stated_ones():
    bounds = {k: b for k, _, _, b in CRITERIA}
    assert bounds == {1: None, 2: None, 3: 6, 4: 5, 5: 5, 6: 6, 7: 5, 8: 4, 9: 5,
                      10: 4, 11: 4, 12: 4}
