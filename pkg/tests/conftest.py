import pytest

from frachyp.coloring import FractionalColoring
from frachyp.hypergraph import gen_complete_uniform, gen_cycle, new_hypergraph

PENTAGON_TEXT = "5 2 5\n0 1\n1 2\n2 3\n3 4\n4 0\n"

# right-hand drawing of the pentagon: red=0 yellow=1 pink=2 blue=3 green=4,
# vertices clockwise from the top
PENTAGON_5_2 = [{0, 1}, {2, 3}, {1, 4}, {0, 2}, {3, 4}]
PENTAGON_3 = [0, 3, 0, 4, 3]  # left-hand drawing: red blue red green blue


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return new_hypergraph(10, 2, outer + spokes + inner)


@pytest.fixture
def pentagon():
    return gen_cycle(5)


@pytest.fixture
def pentagon_coloring():
    return FractionalColoring.from_sets(5, 2, PENTAGON_5_2)


def two_uniform_suite():
    cases = {f"C{k}": gen_cycle(k) for k in range(3, 10)}
    cases.update({f"K{k}": gen_complete_uniform(k, 2) for k in range(3, 7)})
    cases["Petersen"] = petersen()
    return cases


ACCEPTANCE_LINES: dict[int, str] = {}


def record_acceptance(number: int, ok: bool, detail: str) -> None:
    line = f"ACCEPTANCE {number:2d}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
