"""Shortest-length systems MS(2,3, Z_2^{kl} x Z_{k+1} x Z_{l+1}).

Binary coordinates are the grid Z_k x Z_l flattened row-major; coordinate
n = k*l carries Z_{k+1} and coordinate n+1 carries Z_{l+1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classical import (
    Factorization,
    TripleSystem,
    near_one_factorization,
    steiner_triple_system,
)
from .core import Design, GridPoint, MixedAlphabet, SparseWord, flat_position


class UnsupportedParameters(ValueError):
    pass


@dataclass(frozen=True)
class ShortestParams:
    k: int
    l: int

    def __post_init__(self):
        for name, x in (("k", self.k), ("l", self.l)):
            if x < 1 or x % 6 not in (1, 3):
                if x % 6 == 5:
                    raise UnsupportedParameters(
                        f"{name}={x} = 5 (mod 6) is unsupported by the general construction"
                    )
                raise UnsupportedParameters(f"{name}={x} must be 1 or 3 (mod 6)")

    @property
    def n(self) -> int:
        return self.k * self.l

    @property
    def alphabet(self) -> MixedAlphabet:
        return MixedAlphabet.mixed(self.n, self.k, self.l)


def _grid_word(p: ShortestParams, points, extra=()) -> SparseWord:
    entries = [(flat_position(GridPoint(x, y), p.l, p.k), 1) for x, y in points]
    return SparseWord.of([*entries, *extra])


def build_c1(p: ShortestParams) -> frozenset[SparseWord]:
    n = p.n
    return frozenset(
        _grid_word(p, [(i - 1, j - 1)], [(n, i), (n + 1, j)])
        for i in range(1, p.k + 1)
        for j in range(1, p.l + 1)
    )


def _check_near(f: Factorization, v: int) -> None:
    if f.kind != "near-one-factorization" or f.v != v:
        raise ValueError(f"need a near-one-factorization of Z_{v}, got {f.kind} of Z_{f.v}")


def build_c2(p: ShortestParams, f: Factorization | None = None) -> frozenset[SparseWord]:
    """Column pairs {[x,j],[y,j]} with the Z_{k+1} value i, for {x,y} in F_{i-1}."""
    f = f or near_one_factorization(p.k)
    _check_near(f, p.k)
    return frozenset(
        _grid_word(p, [(x, j), (y, j)], [(p.n, i)])
        for i in range(1, p.k + 1)
        for j in range(p.l)
        for x, y in f[i - 1]
    )


def build_c3(p: ShortestParams, g: Factorization | None = None) -> frozenset[SparseWord]:
    """Row pairs {[i,x],[i,y]} with the Z_{l+1} value j, for {x,y} in G_{j-1}."""
    g = g or near_one_factorization(p.l)
    _check_near(g, p.l)
    return frozenset(
        _grid_word(p, [(i, x), (i, y)], [(p.n + 1, j)])
        for j in range(1, p.l + 1)
        for i in range(p.k)
        for x, y in g[j - 1]
    )


def build_c4(
    p: ShortestParams, s1: TripleSystem | None = None, s2: TripleSystem | None = None
) -> frozenset[SparseWord]:
    """Six grid triples per pair of triples from STS(k) x STS(l)."""
    s1 = s1 or steiner_triple_system(p.k)
    s2 = s2 or steiner_triple_system(p.l)
    if s1.v != p.k or s2.v != p.l or not (s1.is_valid() and s2.is_valid()):
        raise ValueError("build_c4 needs valid STS(k) and STS(l)")
    out = set()
    for i1, i2, i3 in s1.triples:
        for j1, j2, j3 in s2.triples:
            for a, b, c in (
                (j1, j2, j3),
                (j1, j3, j2),
                (j2, j1, j3),
                (j2, j3, j1),
                (j3, j1, j2),
                (j3, j2, j1),
            ):
                out.add(_grid_word(p, [(i1, a), (i2, b), (i3, c)]))
    return frozenset(out)


def construct_shortest(k: int, l: int) -> Design:
    p = ShortestParams(k, l)
    parts = [build_c1(p), build_c2(p), build_c3(p), build_c4(p)]
    words = frozenset().union(*parts)
    if len(words) != sum(map(len, parts)):
        raise AssertionError("construction parts overlap")
    return Design(p.alphabet, words, {"construction": "shortest", "k": k, "l": l})


# k=5, l=3 replacement for the grid-triple part, as [row, col] points.
C4_PRIME_5_3 = (
    ((0, 0), (1, 1), (2, 2)), ((0, 0), (3, 1), (4, 2)), ((0, 0), (1, 2), (2, 1)), ((0, 0), (3, 2), (4, 1)),
    ((0, 1), (1, 2), (3, 0)), ((0, 1), (2, 0), (4, 2)), ((0, 1), (1, 0), (3, 2)), ((0, 1), (2, 2), (4, 0)),
    ((0, 2), (1, 1), (4, 0)), ((0, 2), (2, 0), (3, 1)), ((0, 2), (1, 0), (4, 1)), ((0, 2), (2, 1), (3, 0)),
    ((1, 0), (2, 1), (4, 2)), ((1, 0), (2, 2), (3, 1)), ((1, 1), (2, 0), (3, 2)), ((1, 1), (3, 0), (4, 2)),
    ((1, 2), (2, 0), (4, 1)), ((1, 2), (3, 1), (4, 0)), ((2, 1), (3, 2), (4, 0)), ((2, 2), (3, 0), (4, 1)),
)


def example_5_3_parts() -> tuple[frozenset[SparseWord], ...]:
    """(C1, C2, C3, C4') for k=5, l=3."""
    p = object.__new__(ShortestParams)  # k=5 fails the general-construction check
    object.__setattr__(p, "k", 5)
    object.__setattr__(p, "l", 3)
    c4 = frozenset(_grid_word(p, t) for t in C4_PRIME_5_3)
    return build_c1(p), build_c2(p), build_c3(p), c4


def embedded_example_5_3() -> Design:
    parts = example_5_3_parts()
    words = frozenset().union(*parts)
    return Design(MixedAlphabet.mixed(15, 5, 3), words, {"construction": "shortest", "k": 5, "l": 3, "c4": "example"})
