import cmath
import itertools

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from adoknot.rings import (
    CycInt,
    LaurentQS,
    LaurentXD,
    SpecializationParams,
    SpecLaurent,
    cyc_normalize,
    cyclotomic_poly,
    laurent_q_divmod,
    quantum_binom,
    quantum_factorial,
    quantum_int,
    specialize_eta,
    specialize_gamma,
    specialize_psi,
)


def xi(N):
    return cmath.exp(1j * cmath.pi / N)


# --- cyclotomic integers ----------------------------------------------------

@pytest.mark.parametrize("n", range(1, 25))
def test_cyclotomic_matches_sympy(n):
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_poly(n)) == [int(c) for c in expected]


def test_cyc_normalize_examples():
    assert cyc_normalize([0, 0, 1], 2) == CycInt(2, [-1, 0])
    assert cyc_normalize([0, 1, 0, 1], 2).is_zero()
    assert cyc_normalize([0, 0, 1], 3) == CycInt(3, [-1, 1])


@pytest.mark.parametrize("N", [2, 3, 4, 5, 6])
def test_root_of_unity_orders(N):
    assert CycInt.xi_power(2 * N, N) == CycInt.one(N)
    assert CycInt.xi_power(N, N) == -CycInt.one(N)
    assert CycInt.xi_power(-1, N) * CycInt.xi_power(1, N) == 1


@pytest.mark.parametrize("N", [2, 3, 5, 6])
def test_cycint_reduction_agrees_with_complex_value(N):
    raw = [3, -1, 4, 1, -5, 9, 2, -6, 5, 3, -5]
    expected = sum(c * xi(N) ** k for k, c in enumerate(raw))
    assert abs(cyc_normalize(raw, N).to_complex() - expected) < 1e-9


def test_cycint_rejects_wrong_length_and_mixed_rings():
    with pytest.raises(ValueError):
        CycInt(3, [1, 2, 3])
    with pytest.raises(ValueError):
        CycInt.one(2) + CycInt.one(3)


def test_specialization_params():
    p = SpecializationParams(3)
    assert p.order == 6
    assert p.phi == (1, -1, 1)
    assert p.degree == 2
    with pytest.raises(ValueError):
        SpecializationParams(1)


# --- quantum integers and binomials ----------------------------------------

def test_quantum_int_examples():
    assert quantum_int(2) == LaurentQS({(1, 0): 1, (-1, 0): 1})
    assert quantum_int(0).is_zero()
    assert quantum_int(-3) == -quantum_int(3)
    assert quantum_int(3, 2) == -1


@pytest.mark.parametrize("N", range(2, 9))
def test_quantum_int_vanishes_at_N(N):
    assert quantum_int(N, N).is_zero()


def test_quantum_binom_examples():
    assert quantum_binom(2, 1) == quantum_int(2)
    assert quantum_binom(2, 1, 2).is_zero()
    assert quantum_binom(3, 1) == LaurentQS({(2, 0): 1, (0, 0): 1, (-2, 0): 1})


def gaussian_binomial_by_subsets(n, j):
    """q^{-j(n-j)} sum over j-subsets of q^{2 inv}: an independent oracle."""
    out = {}
    for subset in itertools.combinations(range(n), j):
        inv = sum(1 for a in subset for b in range(n) if b not in subset and b < a)
        e = 2 * inv - j * (n - j)
        out[(e, 0)] = out.get((e, 0), 0) + 1
    return LaurentQS(out)


@pytest.mark.parametrize("n", range(0, 10))
def test_quantum_binom_against_subset_oracle(n):
    for j in range(n + 1):
        assert quantum_binom(n, j) == gaussian_binomial_by_subsets(n, j)


def test_quantum_binom_division_is_exact():
    for n in range(13):
        for j in range(n + 1):
            _, rem = laurent_q_divmod(quantum_factorial(n), quantum_factorial(n - j) * quantum_factorial(j))
            assert rem.is_zero()


def test_quantum_binom_rejects_bad_range():
    with pytest.raises(ValueError):
        quantum_binom(3, 4)
    with pytest.raises(ValueError):
        quantum_binom(3, -1)


@pytest.mark.parametrize("N", range(2, 7))
def test_root_of_unity_binomial_vanishing(N):
    for b in range(1, N):
        for n in range(1, N):
            value = quantum_binom(n + b, b, N)
            if n + b >= N:
                assert value.is_zero(), (n, b)


# --- specialisations --------------------------------------------------------

def test_eta_examples():
    q, s = LaurentQS.q, LaurentQS.s
    assert specialize_eta(q(2) + s(), 2) == SpecLaurent(2, {0: -1, 1: 1})
    assert specialize_eta(s(-1), 2) == SpecLaurent.monomial(-1, 2)
    assert specialize_eta((s() - s(-1)) * (s() - s(-1)), 3) == SpecLaurent(3, {2: 1, 0: -2, -2: 1})


def test_psi_examples():
    x, d = LaurentXD.x, LaurentXD.d
    assert specialize_psi(x() * d(), 2) == SpecLaurent.monomial(2, 2, -1)
    assert specialize_psi(LaurentXD.const(1), 4) == SpecLaurent.one(4)
    for N in range(2, 7):
        assert specialize_psi(d(N), N) == SpecLaurent.one(N)


def test_gamma_examples():
    x, d = LaurentXD.x, LaurentXD.d
    assert specialize_gamma(x()) == LaurentQS.s(2)
    assert specialize_gamma(d(2)) == LaurentQS.q(-4)
    assert specialize_gamma(x() * d(-1)) == LaurentQS({(2, 2): 1})


def test_evaluate_matches_direct_substitution():
    p = SpecLaurent(3, {2: CycInt(3, [1, -2]), -1: CycInt(3, [0, 1])})
    lam = 0.37 + 0.2j
    t = xi(3) ** lam
    expected = (1 - 2 * xi(3)) * t**2 + xi(3) / t
    assert abs(p.evaluate(lam) - expected) < 1e-9


def test_render_and_terms_roundtrip():
    p = SpecLaurent(3, {2: CycInt(3, [1, -2]), 0: 1, -1: CycInt(3, [0, 1])})
    assert p.render() == "[1,-2]*t^2 + 1 + [0,1]*t^-1"
    assert SpecLaurent.from_terms(3, p.to_terms()) == p
    assert [t["t_power"] for t in p.to_terms()] == [2, 0, -1]
    assert SpecLaurent.zero(3).render() == "0"


def test_equal_up_to_unit():
    p = SpecLaurent(2, {1: 1, 0: -1})
    assert p.equal_up_to_unit((-p).shift(5))
    assert not p.equal_up_to_unit(p.scale(CycInt.xi_power(1, 2)))
    assert p.equal_up_to_unit(p.scale(CycInt.xi_power(1, 2)), xi_units=True)


# --- ring axioms on random elements ----------------------------------------

small = st.integers(-3, 3)
exps = st.integers(-4, 4)
qs = st.dictionaries(st.tuples(exps, exps), small, max_size=4).map(LaurentQS)
xds = st.dictionaries(st.tuples(exps, exps), small, max_size=4).map(LaurentXD)


def cycs(N):
    deg = len(cyclotomic_poly(2 * N)) - 1
    return st.lists(small, min_size=deg, max_size=deg).map(lambda c: CycInt(N, c))


def specs(N):
    return st.dictionaries(exps, cycs(N), max_size=3).map(lambda d: SpecLaurent(N, d))


def check_axioms(a, b, c, one):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a * one == a
    assert (a - a).is_zero()


@settings(max_examples=60, deadline=None)
@given(qs, qs, qs)
def test_laurent_qs_axioms(a, b, c):
    check_axioms(a, b, c, LaurentQS.const(1))


@settings(max_examples=60, deadline=None)
@given(xds, xds, xds)
def test_laurent_xd_axioms(a, b, c):
    check_axioms(a, b, c, LaurentXD.const(1))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 6]).flatmap(lambda N: st.tuples(cycs(N), cycs(N), cycs(N))))
def test_cycint_axioms(triple):
    a, b, c = triple
    check_axioms(a, b, c, CycInt.one(a.N))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 4]).flatmap(lambda N: st.tuples(specs(N), specs(N), specs(N))))
def test_spec_laurent_axioms(triple):
    a, b, c = triple
    check_axioms(a, b, c, SpecLaurent.one(a.N))


@settings(max_examples=60, deadline=None)
@given(xds, xds, st.integers(2, 6))
def test_eta_after_gamma_is_psi(a, b, N):
    assert specialize_eta(specialize_gamma(a), N) == specialize_psi(a, N)
    # both sides are ring homomorphisms
    assert specialize_psi(a * b, N) == specialize_psi(a, N) * specialize_psi(b, N)
    assert specialize_gamma(a * b) == specialize_gamma(a) * specialize_gamma(b)


@settings(max_examples=60, deadline=None)
@given(qs, qs, st.integers(2, 6))
def test_eta_is_a_homomorphism(a, b, N):
    assert specialize_eta(a * b, N) == specialize_eta(a, N) * specialize_eta(b, N)
    assert specialize_eta(a + b, N) == specialize_eta(a, N) + specialize_eta(b, N)


def test_monomial_inverse():
    m = LaurentQS({(3, -2): -1})
    assert m * m**-1 == 1
    with pytest.raises(ValueError):
        (LaurentQS.q() + 1) ** -1
