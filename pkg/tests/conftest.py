from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from coring_lab import algebra as alg  # noqa: E402
from coring_lab import constructions as cons  # noqa: E402

from helpers import ACCEPTANCE  # noqa: E402


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n][1])


@pytest.fixture(scope="session")
def F4():
    return alg.finite_field(2, 2)


@pytest.fixture(scope="session")
def KC2():
    return alg.group_algebra(3, alg.cyclic_group(2))


@pytest.fixture(scope="session")
def sweedler_f4(F4):
    return cons.sweedler(F4, alg.prime_subring(F4))


@pytest.fixture(scope="session")
def frobenius_c2(F4):
    return alg.frobenius_action(F4, alg.cyclic_group(2))


@pytest.fixture(scope="session")
def dual_f4(frobenius_c2):
    return cons.dual_coring(frobenius_c2)


@pytest.fixture(scope="session")
def hopf_c2():
    return cons.hopf_group_algebra(3, alg.cyclic_group(2))


@pytest.fixture(scope="session")
def kc2_coring(hopf_c2):
    return cons.comodule_algebra_coring(cons.regular_comodule_algebra(hopf_c2))
