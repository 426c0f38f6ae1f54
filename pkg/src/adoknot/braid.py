"""Braid words, closures and Markov moves.

Letters are 1-based signed integers: ``k`` is sigma_k, ``-k`` its inverse.
"""

from __future__ import annotations

import csv
import random
from dataclasses import dataclass
from typing import Iterable, Iterator


class BraidError(ValueError):
    """Raised for malformed braid words."""


class NotAKnotError(ValueError):
    """The braid closes up to a link with more than one component."""

    def __init__(self, components: int):
        super().__init__(f"closure has {components} components")
        self.components = components


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise BraidError(f"strand count must be >= 1, got {self.n!r}")
        object.__setattr__(self, "letters", tuple(int(k) for k in self.letters))
        for k in self.letters:
            if k == 0:
                raise BraidError("letter 0 is not a generator")
            if abs(k) > self.n - 1:
                raise BraidError(f"letter {k} out of range for {self.n} strands")

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.n != self.n:
            raise BraidError("cannot multiply braids on different strand counts")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-k for k in reversed(self.letters)))

    def to_text(self) -> str:
        return " ".join(str(k) for k in self.letters)

    def __str__(self):
        return f"B{self.n}[{self.to_text()}]"


def parse_braid(text: str, n: int) -> BraidWord:
    """Parse whitespace (or comma) separated signed integers."""
    letters = []
    for token in text.replace(",", " ").split():
        try:
            letters.append(int(token))
        except ValueError:
            raise BraidError(f"malformed token {token!r}") from None
    return BraidWord(n, tuple(letters))


def writhe(b: BraidWord) -> int:
    return sum(1 if k > 0 else -1 for k in b.letters)


def permutation(b: BraidWord) -> tuple[int, ...]:
    """Underlying permutation: position of each strand after the word, 0-based."""
    pos = list(range(b.n))
    for k in b.letters:
        i = abs(k) - 1
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    perm = [0] * b.n
    for slot, strand in enumerate(pos):
        perm[strand] = slot
    return tuple(perm)


def closure_component_count(b: BraidWord) -> int:
    perm = permutation(b)
    seen = [False] * b.n
    cycles = 0
    for start in range(b.n):
        if not seen[start]:
            cycles += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return cycles


def require_knot(b: BraidWord) -> None:
    count = closure_component_count(b)
    if count != 1:
        raise NotAKnotError(count)


def conjugate(b: BraidWord, u: BraidWord) -> BraidWord:
    """u b u^{-1}."""
    return u * b * u.inverse()


def stabilize(b: BraidWord, sign: int = 1) -> BraidWord:
    """b sigma_n^{+-1} in B_{n+1}."""
    if sign not in (1, -1):
        raise BraidError("stabilization sign must be +1 or -1")
    return BraidWord(b.n + 1, b.letters + (sign * b.n,))


def random_word(n: int, length: int, rng: random.Random) -> BraidWord:
    if n < 2:
        return BraidWord(n, ())
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


def markov_moves(b: BraidWord, seed: int = 0, conjugations: int = 3) -> list[BraidWord]:
    """Braids with the same closure as ``b``.

    Returns ``conjugations`` random conjugates u b u^{-1} (u of length 1..3,
    drawn from ``seed``) followed by the positive and negative stabilisation.
    """
    rng = random.Random(seed)
    out = []
    if b.n >= 2:
        for _ in range(conjugations):
            u = random_word(b.n, rng.randint(1, 3), rng)
            out.append(conjugate(b, u))
    out.append(stabilize(b, 1))
    out.append(stabilize(b, -1))
    return out


def random_knot_braids(
    count: int,
    seed: int,
    max_strands: int = 3,
    max_length: int = 6,
    min_strands: int = 1,
) -> list[BraidWord]:
    """Deterministic sample of distinct braid words whose closure is a knot."""
    rng = random.Random(seed)
    found: list[BraidWord] = []
    seen = set()
    attempts = 0
    while len(found) < count:
        attempts += 1
        if attempts > 1000 * count + 1000:
            raise RuntimeError("could not sample enough knot braids")
        n = rng.randint(min_strands, max_strands)
        length = rng.randint(0, max_length)
        b = random_word(n, length, rng)
        if b in seen or closure_component_count(b) != 1:
            continue
        seen.add(b)
        found.append(b)
    return found


def read_knot_table(lines: Iterable[str]) -> Iterator[tuple[str, BraidWord]]:
    """Rows of a ``name,strands,braid_word`` CSV; other columns are ignored."""
    reader = csv.DictReader(lines)
    missing = {"name", "strands", "braid_word"} - set(reader.fieldnames or ())
    if missing:
        raise BraidError(f"knot table is missing columns: {sorted(missing)}")
    for row in reader:
        yield row["name"], parse_braid(row["braid_word"] or "", int(row["strands"]))
