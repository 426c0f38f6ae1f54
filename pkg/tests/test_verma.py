import pytest

from adoknot.rings import LaurentQS, SpecLaurent, quantum_int
from adoknot.verma import (
    ALL_CONVENTIONS,
    DEFAULT_CONVENTION,
    Convention,
    braiding_on_pair,
    f_coeff,
    k_eigen,
)
from adoknot.verify import braid_relations, pin_conventions, quantum_group_relations

q, s = LaurentQS.q, LaurentQS.s


def test_k_eigen():
    assert k_eigen(0) == s()
    assert k_eigen(1) == s() * q(-2)
    assert k_eigen(2) == s() * q(-4)


def test_f_coeff_examples():
    assert f_coeff(1, 0) == s() - s(-1)
    assert f_coeff(2, 1) == quantum_int(3) * (s() * q(-1) - s(-1) * q()) * (s() * q(-2) - s(-1) * q(2))
    assert f_coeff(1, 1) == quantum_int(2) * (s() * q(-1) - s(-1) * q())
    assert f_coeff(0, 4) == 1


def test_quantum_group_relations_up_to_six():
    assert quantum_group_relations(6) is None


def test_braiding_trivial_pair():
    terms = braiding_on_pair(0, 0, 1)
    assert [(t.target, t.coeff) for t in terms] == [((0, 0), LaurentQS.const(1))]


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_out_of_range_term_dropped(N):
    terms = braiding_on_pair(1, N - 1, 1, N)
    assert all(max(t.target) < N for t in terms)
    generic = braiding_on_pair(1, N - 1, 1)
    assert any(t.target == (N, 0) for t in generic)


def apply(vec, sign, N=None):
    out = {}
    for (a, b), c in vec.items():
        for t in braiding_on_pair(a, b, sign, N):
            out[t.target] = out.get(t.target, 0) + c * t.coeff
    return {k: v for k, v in out.items() if v}


@pytest.mark.parametrize("a", range(4))
@pytest.mark.parametrize("b", range(4))
def test_braiding_then_inverse_is_identity(a, b):
    one = LaurentQS.const(1)
    assert apply(apply({(a, b): one}, 1), -1) == {(a, b): one}
    assert apply(apply({(a, b): one}, -1), 1) == {(a, b): one}


def test_weight_preservation():
    for a in range(5):
        for b in range(5):
            for sign in (1, -1):
                for t in braiding_on_pair(a, b, sign):
                    assert sum(t.target) == a + b


@pytest.mark.parametrize("m", range(5))
def test_yang_baxter_on_generic_weight_spaces(m):
    assert braid_relations(3, m) is None


@pytest.mark.parametrize("m", range(5))
def test_inverse_on_two_strand_weight_spaces(m):
    assert braid_relations(2, m) is None


@pytest.mark.parametrize("N", [2, 3, 4])
def test_root_of_unity_closure(N):
    # raises ConventionError if a dropped term were nonzero
    for a in range(N):
        for b in range(N):
            for sign in (1, -1):
                for t in braiding_on_pair(a, b, sign, N):
                    assert isinstance(t.coeff, SpecLaurent)
                    assert max(t.target) < N


def test_specialised_index_guard():
    with pytest.raises(ValueError):
        braiding_on_pair(2, 0, 1, 2)


def test_pinned_conventions():
    results = {conv: (ok, why) for conv, ok, why in pin_conventions()}
    passing = [conv for conv in ALL_CONVENTIONS if results[conv][0]]
    # both placements of the diagonal factor survive; the default is the first
    assert passing == [Convention(-1, True, 1), Convention(-1, False, 1)]
    assert DEFAULT_CONVENTION == passing[0]
    assert results[Convention(1, True, 1)][1] == "Yang-Baxter"
    assert results[Convention(-1, True, -1)][1] == "Markov invariance"
