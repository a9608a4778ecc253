"""Mixed alphabets, sparse words, designs and the covering relation."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator


class IncomparableWords(ValueError):
    """Raised when two words are not valid over a common alphabet."""


class InvalidWord(ValueError):
    pass


@dataclass(frozen=True)
class MixedAlphabet:
    """Coordinate cardinalities of Z_{q_1} x ... x Z_{q_n}."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(q) for q in self.sizes)
        if any(q < 2 for q in sizes):
            raise ValueError(f"every coordinate size must be >= 2, got {list(sizes)}")
        object.__setattr__(self, "sizes", sizes)

    @classmethod
    def mixed(cls, n: int, k: int, l: int) -> "MixedAlphabet":
        """Z_2^n x Z_{k+1} x Z_{l+1}, non-binary coordinates at positions n and n+1."""
        return cls((2,) * n + (k + 1, l + 1))

    @property
    def n_total(self) -> int:
        return len(self.sizes)

    def __len__(self) -> int:
        return len(self.sizes)

    def __getitem__(self, i: int) -> int:
        return self.sizes[i]

    def shape(self) -> tuple[int, int, int] | None:
        """Return (n, k, l) if the alphabet is Z_2^n x Z_{k+1} x Z_{l+1}, else None."""
        if len(self.sizes) < 2:
            return None
        *head, a, b = self.sizes
        if any(q != 2 for q in head):
            return None
        return len(head), a - 1, b - 1

    def weight2_count(self) -> int:
        """Number of weight-2 words, sum over i<j of (q_i-1)(q_j-1)."""
        total = 0
        acc = 0
        for q in self.sizes:
            total += acc * (q - 1)
            acc += q - 1
        return total

    def volume(self) -> int:
        out = 1
        for q in self.sizes:
            out *= q
        return out


@dataclass(frozen=True, order=True)
class SparseWord:
    """A word stored as sorted (position, nonzero value) pairs."""

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        entries = tuple((int(p), int(v)) for p, v in self.entries)
        for (p, _), (p2, _) in zip(entries, entries[1:]):
            if p2 <= p:
                raise InvalidWord(f"positions must be strictly ascending: {entries}")
        for p, v in entries:
            if p < 0:
                raise InvalidWord(f"negative position {p}")
            if v < 1:
                raise InvalidWord(f"zero or negative value stored at position {p}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, pairs: Iterable[tuple[int, int]]) -> "SparseWord":
        """Build from (position, value) pairs in any order."""
        return cls(tuple(sorted((int(p), int(v)) for p, v in pairs)))

    @property
    def weight(self) -> int:
        return len(self.entries)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.entries)

    def value_at(self, pos: int) -> int:
        for p, v in self.entries:
            if p == pos:
                return v
        return 0

    def is_valid_for(self, alphabet: MixedAlphabet) -> bool:
        return all(p < alphabet.n_total and v <= alphabet[p] - 1 for p, v in self.entries)

    def check(self, alphabet: MixedAlphabet) -> None:
        for p, v in self.entries:
            if p >= alphabet.n_total:
                raise InvalidWord(f"position {p} outside alphabet of length {alphabet.n_total}")
            if v > alphabet[p] - 1:
                raise InvalidWord(f"value {v} at position {p} exceeds q-1 = {alphabet[p] - 1}")

    def remap(self, positions: dict[int, int]) -> "SparseWord":
        return SparseWord.of((positions[p], v) for p, v in self.entries)

    def to_list(self) -> list[list[int]]:
        return [[p, v] for p, v in self.entries]

    def __repr__(self) -> str:
        return "{" + ",".join(f"({p},{v})" for p, v in self.entries) + "}"


Codeword = SparseWord


def hamming_distance(u: SparseWord, v: SparseWord, alphabet: MixedAlphabet | None = None) -> int:
    """Number of coordinates where u and v differ; absent entries count as 0.

    When ``alphabet`` is given, both words must be valid over it.
    """
    if alphabet is not None and not (u.is_valid_for(alphabet) and v.is_valid_for(alphabet)):
        raise IncomparableWords(f"{u!r} and {v!r} are not both valid over {list(alphabet.sizes)}")
    du = dict(u.entries)
    dv = dict(v.entries)
    return sum(1 for p in du.keys() | dv.keys() if du.get(p, 0) != dv.get(p, 0))


def covers(c: SparseWord, x: SparseWord) -> bool:
    """True iff the weight-3 word c covers the weight-2 word x (d(x, c) = 1)."""
    if c.weight != 3 or x.weight != 2:
        raise ValueError(f"covers() needs weights (3, 2), got ({c.weight}, {x.weight})")
    return set(x.entries) <= set(c.entries)


def enumerate_weight2_words(alphabet: MixedAlphabet) -> Iterator[SparseWord]:
    sizes = alphabet.sizes
    for i, j in combinations(range(len(sizes)), 2):
        for a in range(1, sizes[i]):
            for b in range(1, sizes[j]):
                yield SparseWord(((i, a), (j, b)))


@dataclass(frozen=True)
class GridPoint:
    """Binary coordinate [row, col] of the Z_k x Z_l grid."""

    row: int
    col: int

    def flat(self, l: int, k: int | None = None) -> int:
        return flat_position(self, l, k)


def flat_position(p: GridPoint, l: int, k: int | None = None) -> int:
    if l < 1 or not 0 <= p.col < l or p.row < 0 or (k is not None and p.row >= k):
        raise ValueError(f"grid point [{p.row},{p.col}] out of range for k={k}, l={l}")
    return p.row * l + p.col


def grid_point(index: int, l: int, k: int | None = None) -> GridPoint:
    """Inverse of flat_position."""
    if index < 0 or (k is not None and index >= k * l):
        raise ValueError(f"flat index {index} out of range for k={k}, l={l}")
    return GridPoint(*divmod(index, l))


@dataclass(frozen=True)
class Design:
    """An alphabet plus a set of weight-3 codewords.

    Equality ignores ``meta``.
    """

    alphabet: MixedAlphabet
    codewords: frozenset[SparseWord]
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if not isinstance(self.codewords, frozenset):
            object.__setattr__(self, "codewords", frozenset(self.codewords))
        for c in self.codewords:
            if c.weight != 3:
                raise InvalidWord(f"codeword {c!r} has weight {c.weight}, expected 3")
            c.check(self.alphabet)

    @classmethod
    def from_words(cls, alphabet: MixedAlphabet, words: Iterable[SparseWord], meta: dict | None = None) -> "Design":
        """Build a design, rejecting duplicate codewords."""
        words = list(words)
        unique = frozenset(words)
        if len(unique) != len(words):
            raise ValueError(f"{len(words) - len(unique)} duplicate codeword(s)")
        return cls(alphabet, unique, dict(meta or {}))

    def __len__(self) -> int:
        return len(self.codewords)

    def __iter__(self) -> Iterator[SparseWord]:
        return iter(self.sorted_codewords())

    def __contains__(self, word) -> bool:
        return word in self.codewords

    def sorted_codewords(self) -> list[SparseWord]:
        return sorted(self.codewords)

    def with_codewords(self, codewords: Iterable[SparseWord]) -> "Design":
        return Design(self.alphabet, frozenset(codewords), dict(self.meta))
