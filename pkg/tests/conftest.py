import pytest

RESULTS: dict = {}


@pytest.fixture
def criterion():
    """Record a pass/fail line for an acceptance criterion."""

    class Recorder:
        def __call__(self, number, title):
            self.key = (number, title)
            RESULTS[self.key] = "FAIL"
            return self

        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            RESULTS[self.key] = "PASS" if exc_type is None else "FAIL"
            line = f"criterion {self.key[0]}: {RESULTS[self.key]} - {self.key[1]}"
            print(line)
            return False

    return Recorder()


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), status in sorted(RESULTS.items()):
        terminalreporter.write_line(f"criterion {number}: {status} - {title}")
