import sys
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from ffgj import Matrix  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


def int_matrices(min_n=1, max_n=5, min_m=None, max_m=None, lo=-9, hi=9, square=False):
    @st.composite
    def build(draw):
        n = draw(st.integers(min_n, max_n))
        m = n if square else draw(st.integers(min_m or 1, max_m or max_n + 2))
        rows = draw(st.lists(st.lists(st.integers(lo, hi), min_size=m, max_size=m), min_size=n, max_size=n))
        return Matrix.from_rows(rows)

    return build()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
