from fractions import Fraction
from math import factorial
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"

# Published example metrics, S = 1, a = 0.75 m:
# m, a, B, Poisson, Phi_B, C, W, R, R_morph
TABLE3 = [
    (1, 0.75, 0.42857143, 0.42857143, 0.75000000, 0.75000000, 3.00000000, 4.000000, 4.000000),
    (2, 1.50, 0.31034483, 0.31034483, 0.64285714, 0.64285714, 1.28571429, 2.285714, 2.285714),
    (3, 2.25, 0.24720244, 0.24720244, 0.56775701, 0.56775701, 0.75700935, 1.757009, 1.729730),
    (4, 3.00, 0.20610687, 0.20610687, 0.50943396, 0.50943396, 0.50943396, 1.509434, 1.462857),
    (8, 6.00, 0.12187578, 0.12187578, 0.35698109, 0.35698109, 0.17849054, 1.178491, 1.111251),
    (16, 12.00, 0.06041259, 0.06041259, 0.20457386, 0.20457386, 0.05114346, 1.051143, 1.010124),
    (32, 24.00, 0.02209487, 0.02209487, 0.08288545, 0.08288545, 0.01036068, 1.010361, 1.000100),
]

RHO_GRID = [k / 100 for k in range(1, 100)]


def brute_erlang(m, a):
    """Erlang B and C straight from the factorial sums, in exact rationals."""
    a = Fraction(a)
    am = a**m / factorial(m)
    sk = sum(a**k / factorial(k) for k in range(m))
    rho = a / m
    b = am / (sk + am)
    c = am / ((1 - rho) * sk + am)
    return float(b), float(c)


@pytest.fixture
def table3():
    return TABLE3


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record a one-line PASS/FAIL verdict for an acceptance criterion."""
    label = request.node.get_closest_marker("criterion").args[0]
    state = {"detail": ""}
    yield state
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}  {state['detail']}".rstrip())


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
