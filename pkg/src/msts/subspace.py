"""Perfect mixed codes from a partition of F_2^N \\ {0} into two coordinate
subspaces plus singletons, and the triple system they contain."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import Design, MixedAlphabet, SparseWord

MAX_DIMENSION = 16
MAX_VOLUME = 2**20


class EnumerationTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class SubspacePartition:
    """Cells of F_2^N \\ {0}; vectors are ints, bit i is coordinate e_i.

    Cell order: the m singletons (ascending), then the span of e_0..e_{k'-1},
    then the span of e_{k'}..e_{N-1}.
    """

    kprime: int
    lprime: int

    def __post_init__(self):
        if self.kprime < 1 or self.lprime < 1 or self.kprime + self.lprime > MAX_DIMENSION:
            raise ValueError(
                f"need 1 <= k', 1 <= l', k'+l' <= {MAX_DIMENSION}; got ({self.kprime}, {self.lprime})"
            )

    @property
    def N(self) -> int:
        return self.kprime + self.lprime

    @property
    def low_mask(self) -> int:
        return (1 << self.kprime) - 1

    @property
    def high_mask(self) -> int:
        return ((1 << self.N) - 1) ^ self.low_mask

    @property
    def m(self) -> int:
        return (2**self.kprime - 1) * (2**self.lprime - 1)

    @property
    def singletons(self) -> list[int]:
        lo, hi = self.low_mask, self.high_mask
        return [v for v in range(1, 1 << self.N) if v & lo and v & hi]

    @property
    def alphabet(self) -> MixedAlphabet:
        return MixedAlphabet((2,) * self.m + (2**self.kprime, 2**self.lprime))

    def cells(self) -> list[list[int]]:
        lo = list(range(1, 1 << self.kprime))
        hi = [v << self.kprime for v in range(1, 1 << self.lprime)]
        return [[s] for s in self.singletons] + [lo, hi]

    def locate(self, v: int) -> tuple[int, int]:
        """(cell index, value) of a nonzero vector."""
        if v & self.low_mask and v & self.high_mask:
            return self._singleton_index()[v], 1
        if v & self.low_mask:
            return self.m, v
        return self.m + 1, v >> self.kprime

    def vector(self, cell: int, value: int) -> int:
        """Inverse of locate; value 0 gives the zero vector."""
        if value == 0:
            return 0
        if cell < self.m:
            return self.singletons[cell]
        if cell == self.m:
            return value
        return value << self.kprime

    def _singleton_index(self) -> dict[int, int]:
        cache = self.__dict__.get("_sidx")
        if cache is None:
            cache = {v: i for i, v in enumerate(self.singletons)}
            object.__setattr__(self, "_sidx", cache)
        return cache


def complementary_partition(kprime: int, lprime: int) -> SubspacePartition:
    return SubspacePartition(kprime, lprime)


def weight3_codewords(p: SubspacePartition) -> Design:
    """Triples of nonzero vectors from three distinct cells summing to zero."""
    top = 1 << p.N
    words = []
    for a in range(1, top):
        ca = p.locate(a)
        for b in range(a + 1, top):
            c = a ^ b
            if c <= b:
                continue
            cb, cc = p.locate(b), p.locate(c)
            if len({ca[0], cb[0], cc[0]}) == 3:
                words.append(SparseWord.of([ca, cb, cc]))
    return Design(
        p.alphabet,
        frozenset(words),
        {"construction": "subspace-partition", "kprime": p.kprime, "lprime": p.lprime},
    )


def full_perfect_code(p: SubspacePartition) -> set[tuple[int, ...]]:
    """Every dense codeword (one entry per cell) whose vectors XOR to zero."""
    volume = p.alphabet.volume()
    if volume > MAX_VOLUME:
        raise EnumerationTooLarge(f"|Q| = {volume} exceeds the enumeration budget {MAX_VOLUME}")
    singles = p.singletons
    code = set()
    for bits in product((0, 1), repeat=p.m):
        s = 0
        for bit, v in zip(bits, singles):
            if bit:
                s ^= v
        # s must be cancelled by a low part and a high part; complementarity makes them unique
        code.add(bits + (s & p.low_mask, (s & p.high_mask) >> p.kprime))
    return code


def dense_to_sparse(word: tuple[int, ...]) -> SparseWord:
    return SparseWord(tuple((i, v) for i, v in enumerate(word) if v))


def is_perfect(code: set[tuple[int, ...]], alphabet: MixedAlphabet) -> bool:
    """Every word of Q has exactly one codeword within distance 1."""
    sizes = alphabet.sizes
    for x in product(*(range(q) for q in sizes)):
        hits = x in code
        for i, q in enumerate(sizes):
            for a in range(q):
                if a != x[i] and x[:i] + (a,) + x[i + 1 :] in code:
                    hits += 1
                    if hits > 1:
                        return False
        if hits != 1:
            return False
    return True
