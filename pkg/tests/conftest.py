import pytest
from hypothesis import HealthCheck, settings

from supercohom import build_algebra
from supercohom.algebra import BasisElement, StructureTable, Superalgebra

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def sle2():
    return build_algebra("SLe2", grade_max=10)


@pytest.fixture(scope="session")
def sle2_small():
    return build_algebra("SLe2", grade_max=4)


@pytest.fixture(scope="session")
def h2():
    return build_algebra("H2", grade_max=8)


def abelian_algebra(parities=(0, 1, 0, 1), grades=(-1, -1, 0, 0)):
    els = [BasisElement(i, p, g, f"{'OE'[p == 0]}_{i + 1}")
           for i, (p, g) in enumerate(zip(parities, grades))]
    return Superalgebra("ab", els, StructureTable({}, grades), min(grades), max(grades))


@pytest.fixture
def abelian():
    return abelian_algebra()


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        ok, detail = mod.RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
