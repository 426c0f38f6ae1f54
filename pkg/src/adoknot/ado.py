"""The ADO invariant as a weighted sum of weight-zero partial traces.

For a knot presented as the closure of b in B_n and color N,

    Phi_N = t^{(N-1) w(b)} t^{(n-1)(1-N)}
            * sum_{m=0}^{(N-1)(n-1)} xi^{-2m(1-N)} hptr_0(rep(b, m, N))

with t = xi_N^lambda. ``dense_partial_trace_oracle`` computes the same
quantity from the action on the whole tensor power U^{(x)n}, and
``burau_alexander`` gives the classical Alexander polynomial for N = 2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import sympy

from .braid import BraidWord, closure_component_count, require_knot, writhe
from .rings import CycInt, SpecLaurent
from .verma import DEFAULT_CONVENTION, Convention, braiding_on_pair
from .weightrep import MatrixCache, SparseRepMatrix, WeightBasis, enumerate_basis, rep_matrix

DEFAULT_DENSE_BOUND = 4096


class DenseBoundError(MemoryError):
    """The dense oracle would exceed its configured size."""


@dataclass
class InvariantResult:
    knot: str
    braid: BraidWord
    N: int
    writhe: int
    traces: list[SpecLaurent] = field(repr=False)
    polynomial: SpecLaurent

    @property
    def n(self) -> int:
        return self.braid.n

    def to_record(self) -> dict:
        return {
            "knot": self.knot,
            "N": self.N,
            "strands": self.n,
            "writhe": self.writhe,
            "terms": self.polynomial.to_terms(),
        }


def hptr0(M: SparseRepMatrix, basis: WeightBasis) -> SpecLaurent:
    """Trace of M restricted to basis elements whose first entry is zero."""
    if M.dim != len(basis):
        raise ValueError(f"matrix of size {M.dim} on a basis of size {len(basis)}")
    out = M.one * 0
    for j in basis.leading_zero_positions():
        v = M.cols[j].get(j)
        if v is not None:
            out = out + v
    return out


def assemble(traces: list[SpecLaurent], n: int, N: int, w: int) -> SpecLaurent:
    """Combine per-weight traces (index m) with the prefactors."""
    total = SpecLaurent.zero(N)
    for m, tr in enumerate(traces):
        total = total + tr.scale(CycInt.xi_power(-2 * m * (1 - N), N))
    return total.shift((N - 1) * w + (n - 1) * (1 - N))


def ado_invariant(
    b: BraidWord,
    N: int,
    knot: str = "",
    conv: Convention = DEFAULT_CONVENTION,
    cache: MatrixCache | None = None,
) -> InvariantResult:
    """Phi_N of the closure of ``b`` from level-N weight-space matrices."""
    if N < 2:
        raise ValueError("color N must be >= 2")
    require_knot(b)
    traces = []
    for m in range((N - 1) * (b.n - 1) + 1):
        basis = enumerate_basis(b.n, m, N)
        traces.append(hptr0(rep_matrix(b, m, N, conv, cache), basis))
    w = writhe(b)
    return InvariantResult(
        knot=knot or b.to_text(),
        braid=b,
        N=N,
        writhe=w,
        traces=traces,
        polynomial=assemble(traces, b.n, N, w),
    )


# ---------------------------------------------------------------------------
# dense oracle on U^{(x)n}
# ---------------------------------------------------------------------------

def dense_action(
    b: BraidWord,
    N: int,
    conv: Convention = DEFAULT_CONVENTION,
    bound: int = DEFAULT_DENSE_BOUND,
) -> tuple[list[tuple[int, ...]], dict[tuple[int, ...], dict[tuple[int, ...], SpecLaurent]]]:
    """Action of ``b`` on every tensor monomial of U^{(x)n}.

    Returns the monomials (all tuples in {0..N-1}^n) and, for each monomial,
    its image as a sparse vector keyed by monomial.
    """
    dim = N ** b.n
    if dim > bound:
        raise DenseBoundError(f"dense space has dimension {dim} > bound {bound}")
    monomials = list(itertools.product(range(N), repeat=b.n))
    images = {}
    for mono in monomials:
        vec = {mono: SpecLaurent.one(N)}
        for k in b.letters:
            i = abs(k) - 1
            sign = 1 if k > 0 else -1
            nxt: dict = {}
            for src, c in vec.items():
                for term in braiding_on_pair(src[i], src[i + 1], sign, N, conv):
                    tgt = src[:i] + term.target + src[i + 2:]
                    v = c * term.coeff
                    nxt[tgt] = nxt[tgt] + v if tgt in nxt else v
            vec = {key: v for key, v in nxt.items() if v}
        images[mono] = vec
    return monomials, images


def dense_partial_trace(
    b: BraidWord,
    N: int,
    conv: Convention = DEFAULT_CONVENTION,
    bound: int = DEFAULT_DENSE_BOUND,
) -> list[list[SpecLaurent]]:
    """ptr over the last n-1 factors of (Id (x) K^{1-N} ...) o b, as an N x N matrix."""
    monomials, images = dense_action(b, N, conv, bound)
    out = [[SpecLaurent.zero(N) for _ in range(N)] for _ in range(N)]
    for mono in monomials:
        rest = mono[1:]
        # K^{1-N} on v_i is (t xi^{-2i})^{1-N}
        weight = sum(rest)
        k_factor = SpecLaurent.unit(len(rest) * (1 - N), -2 * weight * (1 - N), N)
        for tgt, c in images[mono].items():
            if tgt[1:] == rest:
                out[tgt[0]][mono[0]] = out[tgt[0]][mono[0]] + c * k_factor
    return out


def dense_partial_trace_oracle(
    b: BraidWord,
    N: int,
    conv: Convention = DEFAULT_CONVENTION,
    bound: int = DEFAULT_DENSE_BOUND,
) -> SpecLaurent:
    """Phi_N from the (v_0, v_0) entry of the dense partial trace."""
    require_knot(b)
    ptr = dense_partial_trace(b, N, conv, bound)
    return ptr[0][0].shift((N - 1) * writhe(b))


def is_scalar_matrix(mat: list[list[SpecLaurent]]) -> bool:
    d = mat[0][0]
    return all(
        (mat[i][j] == d) if i == j else mat[i][j].is_zero()
        for i in range(len(mat))
        for j in range(len(mat))
    )


# ---------------------------------------------------------------------------
# Alexander polynomial through the reduced Burau representation
# ---------------------------------------------------------------------------

_T = sympy.Symbol("t")


def reduced_burau_generator(n: int, i: int, t=_T) -> sympy.Matrix:
    """(n-1) x (n-1) reduced Burau matrix of sigma_i."""
    size = n - 1
    M = sympy.eye(size)
    j = i - 1
    M[j, j] = -t
    if j - 1 >= 0:
        M[j - 1, j] = t
    if j + 1 < size:
        M[j + 1, j] = 1
    return M


def burau_alexander(b: BraidWord) -> dict[int, int]:
    """Alexander polynomial of the closure, as {exponent: coefficient}.

    Computed as det(I - B(b)) (1 - t) / (1 - t^n) for the reduced Burau
    matrix B(b), then normalised to be symmetric under t -> 1/t with
    Delta(1) = 1.
    """
    if closure_component_count(b) != 1:
        raise ValueError("Alexander oracle only handles knots")
    if b.n == 1:
        return {0: 1}
    M = sympy.eye(b.n - 1)
    for k in b.letters:
        g = reduced_burau_generator(b.n, abs(k))
        M = M * (g if k > 0 else g.inv())
    det = sympy.cancel(sympy.together((sympy.eye(b.n - 1) - M).det()))
    delta = sympy.cancel(det * (1 - _T) / (1 - _T**b.n))
    num, den = sympy.fraction(sympy.together(delta))
    num_poly = sympy.Poly(sympy.expand(num), _T)
    den_poly = sympy.Poly(sympy.expand(den), _T)
    if den_poly.length() != 1:
        raise ArithmeticError(f"Alexander quotient is not a Laurent polynomial: {delta}")
    den_exp = den_poly.monoms()[0][0]
    den_coeff = den_poly.coeffs()[0]
    terms = {}
    for (e,), c in zip(num_poly.monoms(), num_poly.coeffs()):
        q, r = divmod(int(c), int(den_coeff))
        assert r == 0
        terms[e - den_exp] = q
    lo, hi = min(terms), max(terms)
    if (hi + lo) % 2:
        raise ArithmeticError("Alexander polynomial has odd span")
    mid = (hi + lo) // 2
    terms = {e - mid: c for e, c in terms.items()}
    if sum(terms.values()) < 0:
        terms = {e: -c for e, c in terms.items()}
    return dict(sorted(terms.items()))


def alexander_to_spec(alex: dict[int, int], N: int, power: int = 1, sign: int = 1) -> SpecLaurent:
    """Substitute t_Alex -> sign * t^power into an integer Laurent polynomial."""
    return SpecLaurent(N, {power * e: c * (sign if e % 2 else 1) for e, c in alex.items()})
