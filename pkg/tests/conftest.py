import pytest

from sylvester.corpus import default_corpus


def brute_count(parts, s):
    """Count solutions of sum d_i x_i = s by exhaustive recursion."""
    parts = list(parts)
    if not parts:
        return 1 if s == 0 else 0
    d, rest = parts[-1], parts[:-1]
    return sum(brute_count(rest, s - k * d) for k in range(s // d + 1))


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
