"""One test per acceptance criterion; each prints a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -s` to see the lines.
"""
import pytest

from ffclass import acceptance
from ffclass.cli import default_seed

SEED = default_seed()
RESULTS = []  # shown again by the terminal summary hook in conftest


def report(result):
    RESULTS.append(result)
    print()
    print(result.line())
    for f in result.failures[:10]:
        print("    " + f)
    assert result.passed, result.failures[:10]


def test_c1_example1_reproduction():
    report(acceptance.example1_reproduction())


def test_c2_composition_laws():
    report(acceptance.composition_laws())


def test_c3_improper_quotient():
    report(acceptance.improper_quotient())


def test_c4_genus_suite():
    report(acceptance.genus_suite(quick=False, seed=SEED))


def test_c5_elliptic_sweep():
    result = acceptance.elliptic_sweep(seed=SEED)
    report(result)
    assert result.seconds < 60


@pytest.mark.slow
def test_c6_oracle_crosscheck():
    report(acceptance.oracle_crosscheck(quick=False, seed=SEED))


def test_c7_property_suites():
    result = acceptance.property_suites(seed=SEED)
    report(result)
    assert acceptance.PROPERTY_CASES >= 1000
