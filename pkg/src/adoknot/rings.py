"""Exact coefficient rings.

Four rings appear in the computation:

* ``CycInt``      -- cyclotomic integers Z[xi] with xi = exp(i*pi/N), stored in
                     the power basis of Z[x]/Phi_{2N}(x).
* ``LaurentQS``   -- Z[q^{+-1}, s^{+-1}], the ground ring of the quantum group.
* ``LaurentXD``   -- Z[x^{+-1}, d^{+-1}], the deck-group ring of the covering.
* ``SpecLaurent`` -- Z[xi][t^{+-1}], where t stands for xi^lambda.

plus the three specialisation maps connecting them (eta, psi, gamma).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

__all__ = [
    "SpecializationParams",
    "CycInt",
    "LaurentQS",
    "LaurentXD",
    "SpecLaurent",
    "cyclotomic_poly",
    "cyc_normalize",
    "quantum_int",
    "quantum_factorial",
    "quantum_binom",
    "laurent_q_divmod",
    "specialize_eta",
    "specialize_psi",
    "specialize_gamma",
]


# ---------------------------------------------------------------------------
# integer polynomials (lists, lowest degree first)
# ---------------------------------------------------------------------------

def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod_monic(num, den):
    """Divide integer polynomials; ``den`` must have leading coefficient +-1."""
    num = _trim(list(num))
    den = _trim(list(den))
    lead = den[-1]
    assert lead in (1, -1), "divisor must be monic up to sign"
    if len(num) < len(den):
        return [], num
    quot = [0] * (len(num) - len(den) + 1)
    rem = list(num)
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + len(den) - 1] * lead
        quot[k] = c
        if c:
            for j, d in enumerate(den):
                rem[k + j] -= c * d
    return _trim(quot), _trim(rem[: len(den) - 1])


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    if n < 1:
        raise ValueError("n must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod_monic(num, cyclotomic_poly(d))
            assert not rem
    return tuple(num)


@dataclass(frozen=True)
class SpecializationParams:
    """The color N together with the data of Z[x]/Phi_{2N}."""

    N: int

    def __post_init__(self):
        if not isinstance(self.N, int) or self.N < 2:
            raise ValueError(f"color N must be an integer >= 2, got {self.N!r}")

    @property
    def order(self) -> int:
        return 2 * self.N

    @property
    def phi(self) -> tuple[int, ...]:
        return cyclotomic_poly(2 * self.N)

    @property
    def degree(self) -> int:
        return len(self.phi) - 1


@lru_cache(maxsize=None)
def _power_table(N: int) -> tuple[tuple[int, ...], ...]:
    """x^k mod Phi_{2N} for k = 0 .. 2N-1 as coefficient tuples."""
    phi = cyclotomic_poly(2 * N)
    deg = len(phi) - 1
    table = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(2 * N):
        table.append(tuple(cur))
        # multiply by x and reduce the overflow using the monic relation
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(deg):
                cur[j] -= top * phi[j]
    return tuple(table)


def cyc_normalize(raw: Iterable[int], N: int) -> "CycInt":
    """Reduce an integer polynomial in x = xi_N modulo Phi_{2N}."""
    return CycInt.from_poly(raw, N)


# ---------------------------------------------------------------------------
# cyclotomic integers
# ---------------------------------------------------------------------------

class CycInt:
    """Element of Z[xi_N], xi_N = exp(i pi / N), in canonical reduced form."""

    __slots__ = ("N", "coeffs", "_hash")

    def __init__(self, N: int, coeffs: Iterable[int]):
        coeffs = tuple(int(c) for c in coeffs)
        deg = len(_power_table(N)[0])
        if len(coeffs) != deg:
            raise ValueError(f"expected {deg} coefficients for N={N}, got {len(coeffs)}")
        self.N = N
        self.coeffs = coeffs
        self._hash = None

    @classmethod
    def from_poly(cls, raw: Iterable[int], N: int) -> "CycInt":
        table = _power_table(N)
        deg = len(table[0])
        out = [0] * deg
        order = 2 * N
        for k, c in enumerate(raw):
            if c:
                row = table[k % order]
                for j in range(deg):
                    out[j] += c * row[j]
        return cls(N, out)

    @classmethod
    def zero(cls, N: int) -> "CycInt":
        return cls(N, [0] * len(_power_table(N)[0]))

    @classmethod
    def one(cls, N: int) -> "CycInt":
        return cls.from_int(1, N)

    @classmethod
    def from_int(cls, value: int, N: int) -> "CycInt":
        row = [0] * len(_power_table(N)[0])
        row[0] = value
        return cls(N, row)

    @classmethod
    def xi_power(cls, k: int, N: int) -> "CycInt":
        """xi_N^k for any integer k."""
        return cls(N, _power_table(N)[k % (2 * N)])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def _coerce(self, other):
        if isinstance(other, CycInt):
            if other.N != self.N:
                raise ValueError("cannot mix cyclotomic rings of different order")
            return other
        if isinstance(other, int):
            return CycInt.from_int(other, self.N)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.N, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.N, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.N, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.N, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt.from_poly(_poly_mul(self.coeffs, other.coeffs), self.N)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for units; use xi_power")
        result = CycInt.one(self.N)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycInt.from_int(other, self.N)
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.N == other.N and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.N, self.coeffs))
        return self._hash

    def to_complex(self) -> complex:
        xi = cmath.exp(1j * cmath.pi / self.N)
        return sum(c * xi**k for k, c in enumerate(self.coeffs))

    def render(self) -> str:
        """Integer for rational elements, otherwise the power-basis vector."""
        if not any(self.coeffs[1:]):
            return str(self.coeffs[0])
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    def __repr__(self):
        return f"CycInt(N={self.N}, {list(self.coeffs)})"


# ---------------------------------------------------------------------------
# two-variable Laurent polynomials
# ---------------------------------------------------------------------------

class _Laurent2:
    """Sparse Laurent polynomial in two variables with integer coefficients.

    Keys are exponent pairs, values nonzero ints. Subclasses only fix the
    variable names used for printing.
    """

    __slots__ = ("terms", "_hash")
    VARS = ("u", "v")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        if terms:
            for key, c in terms.items():
                if c:
                    clean[(int(key[0]), int(key[1]))] = int(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, coeff: int = 1):
        return cls({(a, b): coeff})

    @classmethod
    def const(cls, c: int):
        return cls({(0, 0): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return type(self).const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return type(self)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return type(self)(out)

    __rmul__ = __mul__

    def is_monomial(self) -> bool:
        return len(self.terms) == 1 and next(iter(self.terms.values())) in (1, -1)

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only unit monomials can be inverted")
            (a, b), c = next(iter(self.terms.items()))
            return type(self)({(a * k, b * k): c ** (-k)})
        result = type(self).const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = type(self).const(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        if not self.terms:
            return "0"
        u, v = self.VARS
        parts = []
        for (a, b), c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"{name}^{e}" if e != 1 else name
                for name, e in ((u, a), (v, b))
                if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


class LaurentQS(_Laurent2):
    """Element of Z[q^{+-1}, s^{+-1}]; keys are (power of q, power of s)."""

    __slots__ = ()
    VARS = ("q", "s")

    @classmethod
    def q(cls, k: int = 1) -> "LaurentQS":
        return cls({(k, 0): 1})

    @classmethod
    def s(cls, k: int = 1) -> "LaurentQS":
        return cls({(0, k): 1})


class LaurentXD(_Laurent2):
    """Element of Z[x^{+-1}, d^{+-1}]; keys are (power of x, power of d)."""

    __slots__ = ()
    VARS = ("x", "d")

    @classmethod
    def x(cls, k: int = 1) -> "LaurentXD":
        return cls({(k, 0): 1})

    @classmethod
    def d(cls, k: int = 1) -> "LaurentXD":
        return cls({(0, k): 1})


# ---------------------------------------------------------------------------
# the specialised ring Z[xi_N][t^{+-1}]
# ---------------------------------------------------------------------------

class SpecLaurent:
    """Laurent polynomial in t with coefficients in Z[xi_N]; t = xi_N^lambda."""

    __slots__ = ("N", "terms", "_hash")

    def __init__(self, N: int, terms: Mapping[int, CycInt] | None = None):
        self.N = N
        clean = {}
        if terms:
            for k, c in terms.items():
                if isinstance(c, int):
                    c = CycInt.from_int(c, N)
                elif c.N != N:
                    raise ValueError("coefficient ring does not match N")
                if not c.is_zero():
                    clean[int(k)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def zero(cls, N: int) -> "SpecLaurent":
        return cls(N)

    @classmethod
    def one(cls, N: int) -> "SpecLaurent":
        return cls(N, {0: CycInt.one(N)})

    @classmethod
    def const(cls, c: CycInt | int, N: int) -> "SpecLaurent":
        return cls(N, {0: c})

    @classmethod
    def monomial(cls, k: int, N: int, coeff: CycInt | int = 1) -> "SpecLaurent":
        """coeff * t^k."""
        return cls(N, {k: coeff})

    @classmethod
    def unit(cls, t_power: int, xi_power: int, N: int) -> "SpecLaurent":
        """xi^xi_power * t^t_power."""
        return cls(N, {t_power: CycInt.xi_power(xi_power, N)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, SpecLaurent):
            if other.N != self.N:
                raise ValueError("cannot mix specialised rings of different N")
            return other
        if isinstance(other, (int, CycInt)):
            return SpecLaurent.const(other, self.N)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return SpecLaurent(self.N, out)

    __radd__ = __add__

    def __neg__(self):
        return SpecLaurent(self.N, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        # accumulate raw polynomials in x per t-power, reduce once at the end
        raw: dict[int, list[int]] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                acc = raw.setdefault(k1 + k2, [0] * (2 * len(c1.coeffs)))
                for i, a in enumerate(c1.coeffs):
                    if a:
                        for j, b in enumerate(c2.coeffs):
                            acc[i + j] += a * b
        return SpecLaurent(self.N, {k: CycInt.from_poly(p, self.N) for k, p in raw.items()})

    __rmul__ = __mul__

    def shift(self, k: int) -> "SpecLaurent":
        """Multiply by t^k."""
        return SpecLaurent(self.N, {e + k: c for e, c in self.terms.items()})

    def scale(self, c: CycInt | int) -> "SpecLaurent":
        return SpecLaurent(self.N, {e: v * c for e, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, CycInt)):
            other = SpecLaurent.const(other, self.N)
        if not isinstance(other, SpecLaurent):
            return NotImplemented
        return self.N == other.N and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.N, frozenset(self.terms.items())))
        return self._hash

    def min_degree(self) -> int:
        return min(self.terms) if self.terms else 0

    def max_degree(self) -> int:
        return max(self.terms) if self.terms else 0

    def substitute_power(self, k: int) -> "SpecLaurent":
        """t -> t^k."""
        return SpecLaurent(self.N, {e * k: c for e, c in self.terms.items()})

    def equal_up_to_unit(self, other: "SpecLaurent", xi_units: bool = False) -> bool:
        """True if self = u * t^k * other for a unit u and some k.

        ``u`` ranges over +-1, or over all powers of xi when ``xi_units``.
        """
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        shift = self.min_degree() - other.min_degree()
        moved = other.shift(shift)
        powers = range(2 * self.N) if xi_units else (0, self.N)
        return any(self == moved.scale(CycInt.xi_power(p, self.N)) for p in powers)

    def evaluate(self, lam: complex) -> complex:
        """Numerical value at t = xi_N^lambda. Spot checks only."""
        xi = cmath.exp(1j * cmath.pi / self.N)
        t = xi**lam
        return sum(c.to_complex() * t**k for k, c in self.terms.items())

    def to_terms(self) -> list[dict]:
        """Serialisable form, t-exponents descending."""
        return [
            {"t_power": k, "cyc": list(self.terms[k].coeffs)}
            for k in sorted(self.terms, reverse=True)
        ]

    @classmethod
    def from_terms(cls, N: int, terms: Iterable[Mapping]) -> "SpecLaurent":
        return cls(N, {int(t["t_power"]): CycInt(N, t["cyc"]) for t in terms})

    def render(self) -> str:
        """Canonical text form; terms sorted by t-exponent descending."""
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            coeff = self.terms[k].render()
            parts.append(coeff if k == 0 else f"{coeff}*t^{k}")
        return " + ".join(parts)

    def __repr__(self):
        return f"SpecLaurent(N={self.N}, {self.render()})"


# ---------------------------------------------------------------------------
# quantum integers and binomials
# ---------------------------------------------------------------------------

def _q_poly_to_laurent(coeffs, shift) -> LaurentQS:
    return LaurentQS({(i + shift, 0): c for i, c in enumerate(coeffs)})


def _laurent_to_q_poly(p: LaurentQS):
    if any(b for (_, b) in p.terms):
        raise ValueError("expected a Laurent polynomial in q alone")
    if not p.terms:
        return [], 0
    lo = min(a for a, _ in p.terms)
    hi = max(a for a, _ in p.terms)
    coeffs = [0] * (hi - lo + 1)
    for (a, _), c in p.terms.items():
        coeffs[a - lo] = c
    return coeffs, lo


def laurent_q_divmod(num: LaurentQS, den: LaurentQS) -> tuple[LaurentQS, LaurentQS]:
    """Long division of Laurent polynomials in q whose divisor has unit leading
    coefficient. Returns (quotient, remainder); remainder zero means exact."""
    n_coeffs, n_lo = _laurent_to_q_poly(num)
    d_coeffs, d_lo = _laurent_to_q_poly(den)
    if not d_coeffs:
        raise ZeroDivisionError("division by zero polynomial")
    quot, rem = _poly_divmod_monic(n_coeffs, d_coeffs)
    return _q_poly_to_laurent(quot, n_lo - d_lo), _q_poly_to_laurent(rem, n_lo)


def _specialize_q(p: LaurentQS, N: int) -> CycInt:
    out = CycInt.zero(N)
    for (a, b), c in p.terms.items():
        if b:
            raise ValueError("expected a Laurent polynomial in q alone")
        out = out + CycInt.xi_power(a, N) * c
    return out


def quantum_int(k: int, N: int | None = None) -> LaurentQS | CycInt:
    """[k]_q = q^{k-1} + q^{k-3} + ... + q^{1-k}.

    Generic (``N is None``) returns a ``LaurentQS``; otherwise the value at
    q = xi_N as a ``CycInt``.
    """
    if k < 0:
        out = -_quantum_int_generic(-k)
    else:
        out = _quantum_int_generic(k)
    return out if N is None else _specialize_q(out, N)


@lru_cache(maxsize=None)
def _quantum_int_generic(k: int) -> LaurentQS:
    return LaurentQS({(k - 1 - 2 * j, 0): 1 for j in range(k)})


@lru_cache(maxsize=None)
def quantum_factorial(n: int) -> LaurentQS:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    out = LaurentQS.const(1)
    for k in range(1, n + 1):
        out = out * _quantum_int_generic(k)
    return out


@lru_cache(maxsize=None)
def _quantum_binom_generic(n: int, j: int) -> LaurentQS:
    num = quantum_factorial(n)
    den = quantum_factorial(n - j) * quantum_factorial(j)
    quot, rem = laurent_q_divmod(num, den)
    if rem:
        raise ArithmeticError(f"inexact quantum binomial division for ({n}, {j})")
    return quot


def quantum_binom(n: int, j: int, N: int | None = None) -> LaurentQS | CycInt:
    """Gaussian binomial [n]!/([n-j]! [j]!), generic or evaluated at q = xi_N."""
    if n < 0 or j < 0 or j > n:
        raise ValueError(f"quantum binomial needs 0 <= j <= n, got n={n}, j={j}")
    out = _quantum_binom_generic(n, j)
    return out if N is None else _specialize_q(out, N)


# ---------------------------------------------------------------------------
# specialisations
# ---------------------------------------------------------------------------

def _as_N(params) -> int:
    return params.N if isinstance(params, SpecializationParams) else int(params)


def specialize_eta(elem: LaurentQS, params: SpecializationParams | int) -> SpecLaurent:
    """q -> xi_N, s -> t."""
    N = _as_N(params)
    out: dict[int, CycInt] = {}
    for (a, b), c in elem.terms.items():
        term = CycInt.xi_power(a, N) * c
        out[b] = out[b] + term if b in out else term
    return SpecLaurent(N, out)


def specialize_psi(elem: LaurentXD, params: SpecializationParams | int) -> SpecLaurent:
    """x -> t^2, d -> xi_N^{-2}."""
    N = _as_N(params)
    out: dict[int, CycInt] = {}
    for (a, b), c in elem.terms.items():
        term = CycInt.xi_power(-2 * b, N) * c
        out[2 * a] = out[2 * a] + term if 2 * a in out else term
    return SpecLaurent(N, out)


def specialize_gamma(elem: LaurentXD) -> LaurentQS:
    """x -> s^2, d -> q^{-2}."""
    out: dict[tuple[int, int], int] = {}
    for (a, b), c in elem.terms.items():
        key = (-2 * b, 2 * a)
        out[key] = out.get(key, 0) + c
    return LaurentQS(out)
