import pytest

from cyclicat import presheaf as ps


def cyclic_corpus(N: int = 2) -> dict:
    """Small cyclic sets used across the Reedy, lifting and CLI tests."""
    Z2 = ps.cyclic_group_table(2)
    Z3 = ps.cyclic_group_table(3)
    return {
        "point": ps.point(N),
        "constant2": ps.constant(2, N),
        "Lambda0": ps.representable_cyclic(0, N),
        "Lambda1": ps.representable_cyclic(1, N),
        "bar_Z2": ps.cyclic_nerve(Z2, N),
        "bar_Z3": ps.cyclic_nerve(Z3, N),
        "boundary1": ps.boundary_faces(1, N).source,
        "horn2_1": ps.cyclic_horn(2, 1, N).source,
    }


@pytest.fixture(scope="session")
def corpus():
    return cyclic_corpus(2)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
