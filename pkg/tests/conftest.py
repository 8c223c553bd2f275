from v4cordial.hypergraph import Hypergraph


def graph_path(n: int) -> Hypergraph:
    return Hypergraph.from_edges(n, [[i, i + 1] for i in range(n - 1)])


def partitions(n: int, largest: int):
    """Multisets of positive parts <= ``largest`` summing to ``n``, parts non-increasing."""
    if n == 0:
        yield []
        return
    for s in range(min(n, largest), 0, -1):
        for rest in partitions(n - s, s):
            yield [s, *rest]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
