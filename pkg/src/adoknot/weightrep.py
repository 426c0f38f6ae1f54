"""Weight-space bases and the sparse braid representation matrices.

A partition e = (e_1, ..., e_n) of m labels both the tensor monomial
v_{e_1} (x) ... (x) v_{e_n} in the weight space and the normalised multiarc
F_e of the Lawrence representation; the two bases are identified term by
term, so the matrices below serve for both.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .braid import BraidWord
from .rings import LaurentQS, SpecLaurent, specialize_eta
from .verma import DEFAULT_CONVENTION, Convention, ConventionError, braiding_on_pair

CACHE_FORMAT_VERSION = 1
CACHE_ENV_VAR = "ADOKNOT_CACHE_DIR"


def _compositions(n: int, m: int, cap: int | None) -> Iterator[tuple[int, ...]]:
    if n == 1:
        if cap is None or m <= cap:
            yield (m,)
        return
    top = m if cap is None else min(m, cap)
    for first in range(top + 1):
        for rest in _compositions(n - 1, m - first, cap):
            yield (first,) + rest


@dataclass(frozen=True)
class WeightBasis:
    """Ordered basis E_{n,m} (``N=None``) or E^N_{n,m}, lexicographic."""

    n: int
    m: int
    N: int | None = None
    elements: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1 or self.m < 0:
            raise ValueError("need n >= 1 and m >= 0")
        cap = None if self.N is None else self.N - 1
        elements = tuple(_compositions(self.n, self.m, cap))
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "index", {e: i for i, e in enumerate(elements)})

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, e):
        return e in self.index

    def norm(self, e: tuple[int, ...]) -> int:
        return theta_label(e)[1]

    def leading_zero_positions(self) -> list[int]:
        return [i for i, e in enumerate(self.elements) if e[0] == 0]


@lru_cache(maxsize=None)
def enumerate_basis(n: int, m: int, cap: int | None = None) -> WeightBasis:
    """Partitions of m into n ordered parts, each part at most ``cap - 1``.

    ``cap`` is the color N (not the bound itself), matching E^N_{n,m}.
    """
    return WeightBasis(n, m, cap)


def theta_label(e: Iterable[int]) -> tuple[str, int]:
    """Multiarc name F_e and its normalisation exponent sum (i-1) e_i."""
    e = tuple(e)
    if any(x < 0 for x in e):
        raise ValueError("partition entries must be nonnegative")
    name = "F_(" + ",".join(str(x) for x in e) + ")"
    return name, sum(i * x for i, x in enumerate(e))


class SparseRepMatrix:
    """Square sparse matrix stored by columns: ``cols[j] = {row: value}``.

    Entries are ``LaurentQS`` or ``SpecLaurent``; zeros are never stored.
    """

    __slots__ = ("dim", "cols", "one")

    def __init__(self, dim: int, cols: list[dict], one):
        if len(cols) != dim:
            raise ValueError("column count does not match dimension")
        self.dim = dim
        self.cols = [{i: v for i, v in col.items() if v} for col in cols]
        self.one = one

    @classmethod
    def identity(cls, dim: int, one) -> "SparseRepMatrix":
        return cls(dim, [{j: one} for j in range(dim)], one)

    def entry(self, i: int, j: int):
        return self.cols[j].get(i, self.one * 0)

    def __matmul__(self, other: "SparseRepMatrix") -> "SparseRepMatrix":
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        out = []
        for col in other.cols:
            acc: dict = {}
            for k, b in col.items():
                for i, a in self.cols[k].items():
                    v = a * b
                    acc[i] = acc[i] + v if i in acc else v
            out.append(acc)
        return SparseRepMatrix(self.dim, out, self.one)

    def __eq__(self, other):
        if not isinstance(other, SparseRepMatrix):
            return NotImplemented
        return self.dim == other.dim and self.cols == other.cols

    def is_identity(self) -> bool:
        return all(col == {j: self.one} for j, col in enumerate(self.cols))

    def map(self, fn: Callable, one) -> "SparseRepMatrix":
        return SparseRepMatrix(self.dim, [{i: fn(v) for i, v in col.items()} for col in self.cols], one)

    def nnz(self) -> int:
        return sum(len(col) for col in self.cols)

    def to_dense(self) -> list[list]:
        zero = self.one * 0
        rows = [[zero] * self.dim for _ in range(self.dim)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                rows[i][j] = v
        return rows

    def to_json(self) -> dict:
        if not isinstance(self.one, SpecLaurent):
            raise TypeError("only specialised matrices are serialisable")
        return {
            "dim": self.dim,
            "N": self.one.N,
            "cols": [
                [[i, col[i].to_terms()] for i in sorted(col)]
                for col in self.cols
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SparseRepMatrix":
        N = data["N"]
        cols = [
            {i: SpecLaurent.from_terms(N, terms) for i, terms in col}
            for col in data["cols"]
        ]
        return cls(data["dim"], cols, SpecLaurent.one(N))


def _one_for(N: int | None):
    return LaurentQS.const(1) if N is None else SpecLaurent.one(N)


class MatrixCache:
    """On-disk JSON cache of level-N generator matrices.

    Files carry a format-version tag and the braiding convention; anything
    that does not match is ignored and rebuilt.
    """

    def __init__(self, directory: str | os.PathLike):
        self.directory = Path(directory)

    @classmethod
    def from_env(cls) -> "MatrixCache | None":
        path = os.environ.get(CACHE_ENV_VAR)
        return cls(path) if path else None

    def _path(self, n, m, N, i, sign, conv: Convention) -> Path:
        s = "p" if sign > 0 else "m"
        return self.directory / f"gen_n{n}_m{m}_N{N}_i{i}{s}_{conv.tag()}.json"

    def load(self, n, m, N, i, sign, conv) -> SparseRepMatrix | None:
        path = self._path(n, m, N, i, sign, conv)
        try:
            data = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        if data.get("format_version") != CACHE_FORMAT_VERSION or data.get("convention") != conv.tag():
            return None
        key = data.get("key")
        if key != [n, m, N, i, sign]:
            return None
        return SparseRepMatrix.from_json(data["matrix"])

    def store(self, n, m, N, i, sign, conv, mat: SparseRepMatrix) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        payload = {
            "format_version": CACHE_FORMAT_VERSION,
            "convention": conv.tag(),
            "key": [n, m, N, i, sign],
            "matrix": mat.to_json(),
        }
        path = self._path(n, m, N, i, sign, conv)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(payload, sort_keys=True))
        tmp.replace(path)


@lru_cache(maxsize=4096)
def _generator_matrix(n, m, i, sign, N, conv) -> SparseRepMatrix:
    basis = enumerate_basis(n, m, N)
    cols = []
    for e in basis.elements:
        col: dict = {}
        for term in braiding_on_pair(e[i - 1], e[i], sign, N, conv):
            target = e[: i - 1] + term.target + e[i + 1:]
            row = basis.index.get(target)
            if row is None:
                # braiding_on_pair drops the vanishing out-of-range terms
                raise ConventionError(f"target {target} outside E^{N}_{n},{m}")
            col[row] = col[row] + term.coeff if row in col else term.coeff
        cols.append(col)
    return SparseRepMatrix(len(basis), cols, _one_for(N))


def generator_matrix(
    n: int,
    m: int,
    i: int,
    sign: int,
    N: int | None = None,
    conv: Convention = DEFAULT_CONVENTION,
    cache: MatrixCache | None = None,
) -> SparseRepMatrix:
    """Matrix of sigma_i^{sign} on E_{n,m} (generic) or E^N_{n,m} (level N)."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for {n} strands")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if cache is not None and N is not None:
        mat = cache.load(n, m, N, i, sign, conv)
        if mat is None:
            mat = _generator_matrix(n, m, i, sign, N, conv)
            cache.store(n, m, N, i, sign, conv, mat)
        return mat
    return _generator_matrix(n, m, i, sign, N, conv)


def rep_matrix(
    b: BraidWord,
    m: int,
    N: int | None = None,
    conv: Convention = DEFAULT_CONVENTION,
    cache: MatrixCache | None = None,
) -> SparseRepMatrix:
    """Matrix of the braid word; letters act left letter first on columns."""
    basis = enumerate_basis(b.n, m, N)
    out = SparseRepMatrix.identity(len(basis), _one_for(N))
    for k in b.letters:
        g = generator_matrix(b.n, m, abs(k), 1 if k > 0 else -1, N, conv, cache)
        out = g @ out
    return out


def block_closure_defect(
    n: int, m: int, N: int, i: int, sign: int = 1, conv: Convention = DEFAULT_CONVENTION
) -> list[tuple[tuple[int, ...], tuple[int, ...], SpecLaurent]]:
    """Entries of the specialised generic matrix that leak out of E^N_{n,m}.

    Returns (column partition, row partition, value) for every nonzero entry
    in a column indexed by E^N_{n,m} and a row outside it.
    """
    generic = generator_matrix(n, m, i, sign, None, conv)
    basis = enumerate_basis(n, m)
    defects = []
    for j, e in enumerate(basis.elements):
        if max(e) > N - 1:
            continue
        for row, v in generic.cols[j].items():
            f = basis.elements[row]
            if max(f) > N - 1:
                c = specialize_eta(v, N)
                if c:
                    defects.append((e, f, c))
    return defects


def specialized_submatrix(generic: SparseRepMatrix, n: int, m: int, N: int) -> SparseRepMatrix:
    """Restrict a generic E_{n,m} matrix to E^N_{n,m} and specialise it."""
    full = enumerate_basis(n, m)
    small = enumerate_basis(n, m, N)
    cols = []
    for e in small.elements:
        col = {}
        for row, v in generic.cols[full.index[e]].items():
            f = full.elements[row]
            if f in small.index:
                c = specialize_eta(v, N)
                if c:
                    col[small.index[f]] = c
        cols.append(col)
    return SparseRepMatrix(len(small), cols, SpecLaurent.one(N))
