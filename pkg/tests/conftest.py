import pytest

from limitlab import toyvm


@pytest.fixture(scope="session")
def table14():
    return toyvm.min_description_table(14)


@pytest.fixture(scope="session")
def table8():
    return toyvm.min_description_table(8)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(line)
