"""The acceptance gate: every criterion runs at its exact tolerance and
prints one PASS/FAIL line."""

import pytest

from kanforge import acceptance as ac


@pytest.mark.parametrize("name,check", ac.CRITERIA, ids=[n for n, _ in ac.CRITERIA])
def test_criterion(name, check, capsys):
    ok, lines = check()
    with capsys.disabled():
        print("\n%s %s" % ("PASS" if ok else "FAIL", name))
        for line in lines:
            print(line)
    assert ok, "criterion %s failed:\n%s" % (name, "\n".join(lines))
