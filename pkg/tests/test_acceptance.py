"""One test per acceptance criterion; each prints a single pass/fail line."""

import subprocess
import sys

import pytest

from adoknot import verify
from adoknot.verify import CheckResult

CHECKS = {
    1: ("theorem equals dense partial-trace oracle", lambda: verify.oracle_equivalence(count=50, colors=(2, 3, 4))),
    2: ("Markov invariance", lambda: verify.markov_invariance(count=20, colors=(2, 3))),
    3: ("N=2 recovers the Alexander polynomial", verify.alexander_recovery),
    4: ("unknot normalization", lambda: verify.unknot_normalization(colors=(2, 3, 4, 5))),
    5: ("root-of-unity block closure", lambda: verify.block_closure(colors=(2, 3, 4), max_strands=3)),
    6: ("structural suites", verify.structural_suites),
    7: ("partial trace is scalar", lambda: verify.scalar_endomorphism(count=10, colors=(2, 3))),
}


LINES = []


def report(number, name, passed, detail):
    line = CheckResult(number, name, passed, detail).line()
    LINES.append(line)
    print(line)
    assert passed, detail


@pytest.mark.parametrize("number", sorted(CHECKS))
def test_criterion(number):
    name, check = CHECKS[number]
    passed, detail = check()
    report(number, name, passed, detail)


def _run(*args):
    return subprocess.run([sys.executable, "-m", "adoknot", *args], capture_output=True)


def test_criterion_8_determinism():
    compute = ("compute", "--braid", "1 -2 1 -2", "--strands", "3", "--colors", "2..4", "--format", "json")
    runs = [_run(*compute) for _ in range(2)] + [_run("verify", "--quick") for _ in range(2)]
    same = runs[0].stdout == runs[1].stdout and runs[2].stdout == runs[3].stdout
    ok = same and all(r.returncode == 0 for r in runs)
    report(8, "deterministic output", ok, "verify --quick and compute, two subprocess runs each")
