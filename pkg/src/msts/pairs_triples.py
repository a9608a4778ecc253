"""Pairs-triples designs and their equivalence with GDDs of type 1^m r^1."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .classical import one_factorization, steiner_triple_system
from .core import Design, MixedAlphabet, SparseWord
from .verifier import verify_msts, verify_ptd


class InvalidDesign(ValueError):
    pass


@dataclass(frozen=True)
class PairsTriplesDesign:
    """r disjoint one-factors T_1..T_r of K_m plus triples covering the leave.

    ``factors[i-1]`` is T_i.
    """

    m: int
    r: int
    factors: tuple[tuple[tuple[int, int], ...], ...]
    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "factors", tuple(tuple(sorted(tuple(sorted(p)) for p in f)) for f in self.factors)
        )
        object.__setattr__(self, "triples", tuple(sorted(tuple(sorted(t)) for t in self.triples)))

    def is_valid(self) -> bool:
        return verify_ptd(self).accepted


def _require_valid(d: PairsTriplesDesign) -> None:
    report = verify_ptd(d)
    if not report.accepted:
        raise InvalidDesign(f"invalid ({d.m},{d.r})-pairs-triples design: {report.to_json()}")


def ptd_to_gdd(d: PairsTriplesDesign) -> Design:
    _require_valid(d)
    m = d.m
    words = [SparseWord(((x, 1), (y, 1), (m, i))) for i, f in enumerate(d.factors, start=1) for x, y in f]
    words += [SparseWord(tuple((x, 1) for x in t)) for t in d.triples]
    return Design.from_words(MixedAlphabet((2,) * m + (d.r + 1,)), words, {"construction": "ptd", "m": m, "r": d.r})


def gdd_to_ptd(g: Design) -> PairsTriplesDesign:
    sizes = g.alphabet.sizes
    if len(sizes) < 2 or any(q != 2 for q in sizes[:-1]):
        raise InvalidDesign(f"expected alphabet Z_2^m x Z_(r+1), got {list(sizes)}")
    if not verify_msts(g).accepted:
        raise InvalidDesign("input design fails verification")
    m, r = len(sizes) - 1, sizes[-1] - 1
    factors: list[list[tuple[int, int]]] = [[] for _ in range(r)]
    triples = []
    for c in g.sorted_codewords():
        (p1, _), (p2, _), (p3, v3) = c.entries
        if p3 == m:
            factors[v3 - 1].append((p1, p2))
        else:
            triples.append((p1, p2, p3))
    return PairsTriplesDesign(m, r, tuple(map(tuple, factors)), tuple(triples))


def ptd_from_one_factorization(m: int) -> PairsTriplesDesign:
    if m < 2 or m % 2:
        raise ValueError(f"m must be even and >= 2, got {m}")
    return PairsTriplesDesign(m, m - 1, one_factorization(m).factors, ())


def ptd_from_sts(m: int) -> PairsTriplesDesign:
    """r = 1: pairs through the point m of STS(m+1) form T_1."""
    if m < 2 or m % 2 or (m + 1) % 6 not in (1, 3):
        raise ValueError(f"need even m with m+1 = 1 or 3 (mod 6), got m={m}")
    sts = steiner_triple_system(m + 1)
    t1 = tuple((a, b) for a, b, c in sts.triples if c == m)
    rest = tuple(t for t in sts.triples if m not in t)
    return PairsTriplesDesign(m, 1, (t1,), rest)


def ptd_exists(m: int, r: int) -> bool:
    if m < 2 or m % 2 or r % 2 == 0 or not 1 <= r <= m - 1:
        return False
    return m % 6 == 0 or (m % 6 in (2, 4) and (r - (m - 1)) % 6 == 0)


class SearchExhausted(Exception):
    pass


def _algorithm_x(columns: dict, rows: dict, budget: int):
    """Knuth's Algorithm X over dict-of-sets; returns a list of row keys or None.

    Raises SearchExhausted once more than ``budget`` nodes have been expanded.
    """
    order = {c: i for i, c in enumerate(columns)}
    nodes = 0
    solution = []

    def select(r):
        removed = []
        for j in rows[r]:
            for i in columns[j]:
                for k in rows[i]:
                    if k != j:
                        columns[k].discard(i)
            removed.append(columns.pop(j))
        return removed

    def deselect(r, removed):
        for j in reversed(rows[r]):
            columns[j] = removed.pop()
            for i in columns[j]:
                for k in rows[i]:
                    if k != j:
                        columns[k].add(i)

    def solve():
        nonlocal nodes
        if not columns:
            return True
        c = min(columns, key=lambda col: (len(columns[col]), order[col]))
        for r in sorted(columns[c]):
            nodes += 1
            if nodes > budget:
                raise SearchExhausted(nodes)
            solution.append(r)
            removed = select(r)
            if solve():
                return True
            deselect(r, removed)
            solution.pop()
        return False

    return list(solution) if solve() else None


def ptd_search(m: int, r: int, budget: int = 200_000) -> PairsTriplesDesign | None:
    """Exact-cover search for an (m, r)-pairs-triples design.

    Returns None when the node budget runs out. Point labels are fixed so that
    T_f contains {0, f}; any solution can be relabelled into that form.
    """
    if not ptd_exists(m, r):
        raise ValueError(f"no ({m},{r})-pairs-triples design exists")
    pairs = list(combinations(range(m), 2))
    columns: dict = {("pair", p): set() for p in pairs}
    for x in range(m):
        for f in range(1, r + 1):
            columns[("slot", x, f)] = set()

    rows: dict = {}
    for a, b in pairs:
        for f in range(1, r + 1):
            if a == 0 and b != f:
                continue
            rows[(0, f, a, b)] = [("pair", (a, b)), ("slot", a, f), ("slot", b, f)]
    for t in combinations(range(m), 3):
        if t[0] == 0 and t[1] <= r:
            continue
        rows[(1, *t)] = [("pair", p) for p in combinations(t, 2)]
    for key, cols in rows.items():
        for c in cols:
            columns[c].add(key)

    try:
        chosen = _algorithm_x(columns, rows, budget)
    except SearchExhausted:
        return None
    if chosen is None:
        return None
    factors: list[list[tuple[int, int]]] = [[] for _ in range(r)]
    triples = []
    for key in chosen:
        if key[0] == 0:
            factors[key[1] - 1].append((key[2], key[3]))
        else:
            triples.append(key[1:])
    out = PairsTriplesDesign(m, r, tuple(map(tuple, factors)), tuple(triples))
    assert len(out.triples) == (comb(m, 2) - r * m // 2) // 3
    return out


def construct_ptd(m: int, r: int, budget: int = 200_000) -> PairsTriplesDesign | None:
    """Pick a route: full one-factorization, STS(m+1), or search."""
    if not ptd_exists(m, r):
        raise ValueError(f"no ({m},{r})-pairs-triples design exists")
    if r == m - 1:
        return ptd_from_one_factorization(m)
    if r == 1 and (m + 1) % 6 in (1, 3):
        return ptd_from_sts(m)
    return ptd_search(m, r, budget)
