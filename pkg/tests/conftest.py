import pytest

from wordrep import Graph, Orientation, build_family, parse_word

# One line per acceptance criterion, printed after the run so the final
# log always carries an explicit pass/fail verdict for each.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

# 30-letter 3-uniform representant of the Petersen graph, kept verbatim.
PETERSEN_WORD = "1387296(10)7493541283(10)7685(10)194562"

# 2-uniform ladder words for n = 1..5, expected byte-exactly.
LADDER_ROWS = [
    "1 1' 1 1'",
    "1' 2 1 2' 2 1' 2' 1",
    "1 2' 1' 3 2 3' 3 2' 3' 1 2 1'",
    "1' 2 1 3' 2' 4 3 4' 4 3' 4' 2 3 1' 2' 1",
    "1 2' 1' 3 2 4' 3' 5 4 5' 5 4' 5' 3 4 2' 3' 1 2 1'",
]

# Concatenated-permutation words for the crown graphs, k = 1..4.
CROWN_ROWS = [
    "1 1' 1' 1",
    "1 2' 2 1' 2 1' 1 2'",
    "1 2 3' 3 2' 1' 1 3 2' 2 3' 1' 2 3 1' 1 3' 2'",
    "1 2 3 4' 4 3' 2' 1' 1 2 4 3' 3 4' 2' 1' 1 3 4 2' 2 4' 3' 1' 2 3 4 1' 1 4' 3' 2'",
]


@pytest.fixture(scope="session")
def petersen():
    return build_family("petersen", 10)


@pytest.fixture(scope="session")
def petersen_word():
    return parse_word(PETERSEN_WORD)


@pytest.fixture()
def shortcut_digraph():
    """Six-vertex acyclic digraph whose 1->...->6 chain shortcuts."""
    pairs = [
        ("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "6"),
        ("1", "6"), ("1", "3"), ("1", "5"), ("2", "4"), ("2", "5"),
        ("3", "5"), ("4", "6"),
    ]
    g = Graph([str(i) for i in range(1, 7)], pairs)
    return Orientation(g, pairs)
