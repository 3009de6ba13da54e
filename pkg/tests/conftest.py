import json
import sys
from pathlib import Path

import pytest

from higher_nakayama import bqa

FROZEN = Path(__file__).parent / "oracles" / "frozen.json"


@pytest.fixture(scope="session")
def frozen():
    return json.loads(FROZEN.read_text())


@pytest.fixture(scope="session")
def a3_ab():
    """k A_3 / (ab): 0 -a-> 1 -b-> 2 with the length-two path killed."""
    q = bqa.Quiver(3, (("a", 0, 1), ("b", 1, 2)))
    return bqa.build_algebra(q, [bqa.Relation.monomial("a", "b")], 2)


@pytest.fixture(scope="session")
def kronecker():
    q = bqa.Quiver(2, (("x", 0, 1), ("y", 0, 1)))
    return bqa.build_algebra(q, [], 2)


def pytest_terminal_summary(terminalreporter):
    gate = sys.modules.get("test_acceptance")
    if gate is not None and gate.RESULTS:
        terminalreporter.section("acceptance criteria")
        for name, (ok, detail) in sorted(gate.RESULTS.items()):
            terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
