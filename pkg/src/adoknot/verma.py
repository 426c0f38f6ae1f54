"""Coefficients of the generic Verma module and of its braiding.

The module has basis v_0, v_1, ... over Z[q^{+-1}, s^{+-1}] with

    K v_i       = s q^{-2i} v_i
    E v_i       = v_{i-1}
    F^{(n)} v_i = [n+i choose i]_q prod_{k=0}^{n-1} (s q^{-k-i} - s^{-1} q^{k+i}) v_{i+n}

The braiding is R = swap o Theta o D (or swap o D o Theta) where

    Theta = sum_k q^{k(k-1)/2} E^k (x) F^{(k)}
    D(v_i (x) v_j) = s^{d_sign (i+j)} q^{2ij} v_i (x) v_j

and the inverse uses Theta^{-1} = sum_k (-1)^k q^{-k(k-1)/2} E^k (x) F^{(k)}.
The constant q^{lambda^2/2} of the Cartan factor is dropped; the writhe
prefactor of the invariant accounts for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .rings import LaurentQS, quantum_binom, specialize_eta


class ConventionError(RuntimeError):
    """A coefficient that must vanish at a root of unity did not."""


@dataclass(frozen=True)
class Convention:
    """The residual choices left open by the structural form of the braiding.

    d_sign    -- sign of the s-exponent in D (-1: s^{-(i+j)}).
    d_after   -- True: R = swap o D o Theta; False: R = swap o Theta o D.
    unit      -- global sign multiplying R (and its inverse).
    """

    d_sign: int = -1
    d_after: bool = True
    unit: int = 1

    def tag(self) -> str:
        return f"d{'-' if self.d_sign < 0 else '+'}{'A' if self.d_after else 'B'}u{'-' if self.unit < 0 else '+'}"


# Frozen by the pinning procedure, see CONVENTIONS.md.
DEFAULT_CONVENTION = Convention()

ALL_CONVENTIONS = tuple(
    Convention(d_sign, d_after, unit)
    for d_sign in (-1, 1)
    for d_after in (True, False)
    for unit in (1, -1)
)


class BraidingTerm(NamedTuple):
    source: tuple[int, int]
    target: tuple[int, int]
    coeff: object  # LaurentQS or SpecLaurent


def k_eigen(i: int) -> LaurentQS:
    """Eigenvalue of K on v_i: s q^{-2i}."""
    if i < 0:
        raise ValueError("basis index must be nonnegative")
    return LaurentQS({(-2 * i, 1): 1})


def k_inverse_eigen(i: int) -> LaurentQS:
    return LaurentQS({(2 * i, -1): 1})


@lru_cache(maxsize=None)
def f_coeff(n: int, i: int) -> LaurentQS:
    """Coefficient of v_{i+n} in F^{(n)} v_i. ``n = 0`` gives 1."""
    if n < 0 or i < 0:
        raise ValueError("f_coeff needs n >= 0 and i >= 0")
    out = LaurentQS.const(1) * quantum_binom(n + i, i)
    for k in range(n):
        out = out * LaurentQS({(-k - i, 1): 1, (k + i, -1): -1})
    return out


def _d_factor(i: int, j: int, conv: Convention) -> LaurentQS:
    return LaurentQS({(2 * i * j, conv.d_sign * (i + j)): 1})


def _theta_power(k: int, sign: int) -> LaurentQS:
    e = k * (k - 1) // 2
    return LaurentQS({(sign * e, 0): (-1) ** k if sign < 0 else 1})


@lru_cache(maxsize=None)
def _generic_terms(a: int, b: int, sign: int, conv: Convention) -> tuple[BraidingTerm, ...]:
    terms = []
    if sign > 0:
        # swap o [D] o Theta o [D] applied to v_a (x) v_b
        for k in range(a + 1):
            left, right = a - k, b + k
            c = _theta_power(k, 1) * f_coeff(k, b)
            c = c * (_d_factor(left, right, conv) if conv.d_after else _d_factor(a, b, conv))
            c = c * conv.unit
            terms.append(BraidingTerm((a, b), (right, left), c))
    else:
        # inverse: [D^-1] o Theta^-1 o [D^-1] o swap applied to v_a (x) v_b
        for k in range(b + 1):
            left, right = b - k, a + k
            c = _theta_power(k, -1) * f_coeff(k, a)
            if conv.d_after:
                c = c * _d_factor(b, a, conv) ** -1
            else:
                c = c * _d_factor(left, right, conv) ** -1
            c = c * conv.unit
            terms.append(BraidingTerm((a, b), (left, right), c))
    return tuple(t for t in terms if t.coeff)


@lru_cache(maxsize=None)
def _specialized_terms(a: int, b: int, sign: int, N: int, conv: Convention) -> tuple[BraidingTerm, ...]:
    if a > N - 1 or b > N - 1:
        raise ValueError(f"indices ({a}, {b}) exceed N-1 = {N - 1}")
    out = []
    for term in _generic_terms(a, b, sign, conv):
        c = specialize_eta(term.coeff, N)
        if max(term.target) >= N:
            if c:
                raise ConventionError(
                    f"nonzero coefficient {c.render()} for {term.source} -> {term.target} at N={N}"
                )
            continue
        if c:
            out.append(BraidingTerm(term.source, term.target, c))
    return tuple(out)


def braiding_on_pair(
    a: int,
    b: int,
    sign: int = 1,
    N: int | None = None,
    conv: Convention = DEFAULT_CONVENTION,
) -> tuple[BraidingTerm, ...]:
    """Expansion of R^{sign}(v_a (x) v_b).

    With ``N=None`` the coefficients are ``LaurentQS``; otherwise they are
    specialised through q -> xi_N, s -> t, terms leaving {0..N-1}^2 are
    checked to vanish and dropped.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if a < 0 or b < 0:
        raise ValueError("basis indices must be nonnegative")
    if N is None:
        return _generic_terms(a, b, sign, conv)
    return _specialized_terms(a, b, sign, N, conv)
