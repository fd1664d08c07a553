import pytest

from mixed_matroids import fixture, graphic_oriented_matroid, mixed_graphic_matroid


@pytest.fixture(params=["G1", "G2", "D2", "T3", "U3"])
def any_fixture(request):
    return fixture(request.param)


@pytest.fixture
def om_g1():
    return graphic_oriented_matroid(fixture("G1"))


@pytest.fixture
def m_g1():
    return mixed_graphic_matroid(fixture("G1"))


@pytest.fixture
def m_g2():
    return mixed_graphic_matroid(fixture("G2"))


@pytest.fixture
def om_t3():
    return graphic_oriented_matroid(fixture("T3"))


@pytest.fixture
def om_d2():
    return graphic_oriented_matroid(fixture("D2"))


_ACCEPTANCE: list[str] = []


@pytest.fixture
def criterion():
    """Record one acceptance line, print it, then fail if there were violations."""

    def report(number: int, title: str, checked: int, violations: list[str]) -> None:
        verdict = "PASS" if not violations else "FAIL"
        line = f"[{verdict}] criterion {number}: {title} ({checked} checks, {len(violations)} violations)"
        _ACCEPTANCE.append(line)
        print(line)
        assert not violations, "\n".join(violations[:10])

    return report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
