"""Oracle and invariance checks used by ``adoknot verify`` and the test suite."""

from __future__ import annotations

from dataclasses import dataclass

from .ado import (
    DEFAULT_DENSE_BOUND,
    ado_invariant,
    alexander_to_spec,
    burau_alexander,
    dense_partial_trace,
    dense_partial_trace_oracle,
    is_scalar_matrix,
)
from .braid import BraidWord, markov_moves, random_knot_braids
from .rings import LaurentQS, SpecLaurent, quantum_binom
from .verma import ALL_CONVENTIONS, DEFAULT_CONVENTION, Convention, f_coeff, k_eigen, k_inverse_eigen
from .weightrep import enumerate_basis, generator_matrix, block_closure_defect

# t_Alex -> ALEXANDER_SIGN * t^ALEXANDER_POWER, fixed on the trefoil (CONVENTIONS.md)
ALEXANDER_POWER = 2
ALEXANDER_SIGN = 1

ALEXANDER_CORPUS = {
    "3_1": BraidWord(2, (1, 1, 1)),
    "4_1": BraidWord(3, (1, -2, 1, -2)),
    "5_1": BraidWord(2, (1, 1, 1, 1, 1)),
}

UNKNOTS = (BraidWord(1, ()), BraidWord(2, (1,)), BraidWord(3, (1, 2)))


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" -- {self.detail}" if self.detail else ""
        return f"[{status}] {self.number}. {self.name}{tail}"


# ---------------------------------------------------------------------------
# individual checks; each returns (passed, detail)
# ---------------------------------------------------------------------------

def oracle_equivalence(count=50, seed=0, colors=(2, 3, 4), max_length=6, conv=DEFAULT_CONVENTION,
                       bound=DEFAULT_DENSE_BOUND):
    braids = random_knot_braids(count, seed, max_strands=3, max_length=max_length)
    for N in colors:
        for b in braids:
            fast = ado_invariant(b, N, conv=conv).polynomial
            slow = dense_partial_trace_oracle(b, N, conv=conv, bound=bound)
            if fast != slow:
                return False, f"{b} N={N}: theorem {fast.render()} != dense {slow.render()}"
    return True, f"{count} braids x N in {list(colors)}"


def markov_invariance(count=20, seed=0, colors=(2, 3), conv=DEFAULT_CONVENTION):
    braids = random_knot_braids(count, seed + 1, max_strands=3, max_length=6)
    checked = 0
    for N in colors:
        for j, b in enumerate(braids):
            base = ado_invariant(b, N, conv=conv).polynomial
            for moved in markov_moves(b, seed=seed + j):
                other = ado_invariant(moved, N, conv=conv).polynomial
                checked += 1
                if other != base:
                    return False, f"{b} -> {moved} N={N}: {base.render()} != {other.render()}"
    return True, f"{checked} moves on {count} braids"


def alexander_matches(b: BraidWord, power=ALEXANDER_POWER, sign=ALEXANDER_SIGN, conv=DEFAULT_CONVENTION) -> bool:
    phi2 = ado_invariant(b, 2, conv=conv).polynomial
    alex = alexander_to_spec(burau_alexander(b), 2, power, sign)
    return phi2.equal_up_to_unit(alex)


def alexander_substitutions(b: BraidWord, conv=DEFAULT_CONVENTION) -> list[tuple[int, int]]:
    """All candidate substitutions (power, sign) under which Phi_2 matches Delta."""
    return [
        (power, sign)
        for power in (1, 2)
        for sign in (1, -1)
        if alexander_matches(b, power, sign, conv)
    ]


def alexander_recovery(conv=DEFAULT_CONVENTION):
    bad = [name for name, b in ALEXANDER_CORPUS.items() if not alexander_matches(b, conv=conv)]
    if bad:
        return False, f"mismatch for {', '.join(bad)}"
    return True, f"{', '.join(ALEXANDER_CORPUS)} under t_Alex -> {'-' if ALEXANDER_SIGN < 0 else ''}t^{ALEXANDER_POWER}"


def unknot_normalization(colors=(2, 3, 4, 5), conv=DEFAULT_CONVENTION):
    for N in colors:
        for b in UNKNOTS:
            value = ado_invariant(b, N, conv=conv).polynomial
            if value != SpecLaurent.one(N):
                return False, f"{b} N={N} gives {value.render()}"
    return True, f"{len(UNKNOTS)} representatives x N in {list(colors)}"


def block_closure(colors=(2, 3, 4), max_strands=3, conv=DEFAULT_CONVENTION):
    count = 0
    for N in colors:
        for n in range(2, max_strands + 1):
            for m in range(n * (N - 1) + 1):
                for i in range(1, n):
                    for sign in (1, -1):
                        defects = block_closure_defect(n, m, N, i, sign, conv)
                        count += 1
                        if defects:
                            e, f, c = defects[0]
                            return False, f"n={n} m={m} N={N} i={i} sign={sign}: {e}->{f} = {c.render()}"
    return True, f"{count} generator blocks"


def braid_relations(n, m, conv=DEFAULT_CONVENTION, N=None) -> str | None:
    """First failing braid relation on the (n, m) weight space, or None."""
    gens = {
        (i, s): generator_matrix(n, m, i, s, N, conv)
        for i in range(1, n)
        for s in (1, -1)
    }
    for i in range(1, n):
        if not (gens[i, 1] @ gens[i, -1]).is_identity():
            return f"sigma_{i} sigma_{i}^-1 != 1 on (n={n}, m={m})"
        if not (gens[i, -1] @ gens[i, 1]).is_identity():
            return f"sigma_{i}^-1 sigma_{i} != 1 on (n={n}, m={m})"
    for i in range(1, n - 1):
        a, b = gens[i, 1], gens[i + 1, 1]
        if a @ b @ a != b @ a @ b:
            return f"braid relation for ({i}, {i + 1}) fails on (n={n}, m={m})"
    for i in range(1, n):
        for j in range(i + 2, n):
            if gens[i, 1] @ gens[j, 1] != gens[j, 1] @ gens[i, 1]:
                return f"far commutation ({i}, {j}) fails on (n={n}, m={m})"
    return None


def quantum_group_relations(max_index=6) -> str | None:
    """Coefficient-level relations of the Verma action, or the first failure."""
    q = LaurentQS.q
    for i in range(max_index + 1):
        for n in range(1, max_index + 1):
            # K F^{(n)} = q^{-2n} F^{(n)} K
            if k_eigen(i + n) != q(-2 * n) * k_eigen(i):
                return f"K F^({n}) on v_{i}"
            for m in range(1, max_index + 1):
                lhs = f_coeff(m, i) * f_coeff(n, i + m)
                rhs = quantum_binom(n + m, n) * f_coeff(n + m, i)
                if lhs != rhs:
                    return f"F^({n}) F^({m}) on v_{i}"
        for n in range(max_index + 1):
            # [E, F^{(n+1)}] v_i = F^{(n)} (q^{-n} K - q^n K^{-1}) v_i
            lhs = f_coeff(n + 1, i) - (f_coeff(n + 1, i - 1) if i > 0 else 0)
            rhs = f_coeff(n, i) * (q(-n) * k_eigen(i) - q(n) * k_inverse_eigen(i))
            if lhs != rhs:
                return f"[E, F^({n + 1})] on v_{i}"
    return None


def dimension_identity(max_strands=5, max_color=4) -> str | None:
    for n in range(1, max_strands + 1):
        for N in range(2, max_color + 1):
            total = sum(len(enumerate_basis(n, m, N)) for m in range(n * (N - 1) + 1))
            if total != N**n:
                return f"sum of |E^{N}_{n},m| = {total} != {N}^{n}"
    return None


def binomial_vanishing(max_color=6) -> str | None:
    for N in range(2, max_color + 1):
        for b in range(1, N):
            for n in range(1, N):
                if b + n >= N and not quantum_binom(n + b, b, N).is_zero():
                    return f"[{n + b} choose {b}] at xi_{N} is nonzero"
    return None


def structural_suites(conv=DEFAULT_CONVENTION):
    for m in range(5):
        err = braid_relations(3, m, conv)
        if err:
            return False, err
        err = braid_relations(2, m, conv)
        if err:
            return False, err
    for err in (quantum_group_relations(6), dimension_identity(5, 4), binomial_vanishing(6)):
        if err:
            return False, err
    return True, "Yang-Baxter, inverses, q-group relations, dimensions, binomial vanishing"


def scalar_endomorphism(count=10, seed=0, colors=(2, 3), conv=DEFAULT_CONVENTION, bound=DEFAULT_DENSE_BOUND):
    braids = random_knot_braids(count, seed + 2, max_strands=3, max_length=6)
    for N in colors:
        for b in braids:
            if not is_scalar_matrix(dense_partial_trace(b, N, conv, bound)):
                return False, f"{b} N={N}: partial trace is not scalar"
    return True, f"{count} braids x N in {list(colors)}"


# ---------------------------------------------------------------------------
# convention pinning
# ---------------------------------------------------------------------------

def convention_passes(conv: Convention, seed=0) -> tuple[bool, str]:
    """Run the three pinning stages in order for one convention."""
    for m in range(5):
        if braid_relations(3, m, conv):
            return False, "Yang-Baxter"
    try:
        if not alexander_substitutions(ALEXANDER_CORPUS["3_1"], conv):
            return False, "trefoil Alexander"
        ok, _ = markov_invariance(count=8, seed=seed, colors=(2, 3), conv=conv)
    except Exception as exc:  # a wrong convention may break closure at roots of unity
        return False, f"error: {exc}"
    if not ok:
        return False, "Markov invariance"
    return True, "all stages"


def pin_conventions(seed=0) -> list[tuple[Convention, bool, str]]:
    return [(conv, *convention_passes(conv, seed)) for conv in ALL_CONVENTIONS]


# ---------------------------------------------------------------------------
# the full report
# ---------------------------------------------------------------------------

def run_checks(quick=True, seed=0, conv=DEFAULT_CONVENTION, bound=DEFAULT_DENSE_BOUND) -> list[CheckResult]:
    scale = 1 if quick else 2
    checks = [
        (1, "theorem equals dense partial-trace oracle",
         lambda: oracle_equivalence(50 * scale, seed, conv=conv, bound=bound)),
        (2, "Markov invariance",
         lambda: markov_invariance(20 * scale, seed, conv=conv)),
        (3, "N=2 recovers the Alexander polynomial",
         lambda: alexander_recovery(conv)),
        (4, "unknot normalization",
         lambda: unknot_normalization(conv=conv)),
        (5, "root-of-unity block closure",
         lambda: block_closure(conv=conv)),
        (6, "structural suites",
         lambda: structural_suites(conv)),
        (7, "partial trace is scalar",
         lambda: scalar_endomorphism(10 * scale, seed, conv=conv, bound=bound)),
    ]
    results = []
    for number, name, fn in checks:
        passed, detail = fn()
        results.append(CheckResult(number, name, passed, detail))
    return results


def determinism(run_report, run_compute) -> CheckResult:
    """Criterion 8: two runs of each producer give byte-identical output."""
    a, b = run_report(), run_report()
    c, d = run_compute(), run_compute()
    passed = a == b and c == d
    detail = "verify and compute outputs byte-identical" if passed else "outputs differ between runs"
    return CheckResult(8, "deterministic output", passed, detail)
