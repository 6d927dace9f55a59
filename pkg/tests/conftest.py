import sys

import pytest

from bowbruhat.enumeration import enumerate_bcts
from bowbruhat.sweep import build_relation, margin_pairs


class DeskScale:
    """Every nonempty family with positive margins and total <= 7, built once."""

    def __init__(self, max_total=7):
        self.families = [f for f in (enumerate_bcts(p) for p in margin_pairs(max_total)) if len(f)]
        self._relations = {}

    def upto(self, total):
        return [f for f in self.families if f.margins.total <= total]

    def relations(self, kind):
        if kind not in self._relations:
            self._relations[kind] = [build_relation(kind, f) for f in self.families]
        return self._relations[kind]

    def pairs(self, kind_a, kind_b, total=7):
        for f, a, b in zip(self.families, self.relations(kind_a), self.relations(kind_b)):
            if f.margins.total <= total:
                yield f, a, b


@pytest.fixture(scope="session")
def desk():
    return DeskScale()


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    results = getattr(acceptance, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
