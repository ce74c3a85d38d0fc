from pathlib import Path

import pytest

from cwham.kexpr import parse

FIXTURES = Path(__file__).parent / "fixtures"
FIG1 = ("(eta 1 3 (union (rho 3 2 (eta 2 3 (union (eta 1 2 (union (v 1 a) (v 2 b))) "
        "(eta 1 3 (union (v 3 c) (v 1 d)))))) (v 3 e)))")


@pytest.fixture
def c5_expr():
    return parse(FIG1)


def vertex_ids(g, names):
    return [g.names.index(x) for x in names]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num])
