"""Steiner triple systems, one-factorizations and near-one-factorizations."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Literal

Pair = tuple[int, int]
Triple = tuple[int, int, int]


def _pair(a: int, b: int) -> Pair:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class TripleSystem:
    v: int
    triples: tuple[Triple, ...]

    def __len__(self) -> int:
        return len(self.triples)

    def is_valid(self) -> bool:
        """Every pair of Z_v lies in exactly one triple."""
        seen: set[Pair] = set()
        for t in self.triples:
            if len(set(t)) != 3 or not all(0 <= x < self.v for x in t):
                return False
            for p in combinations(sorted(t), 2):
                if p in seen:
                    return False
                seen.add(p)
        return len(seen) == self.v * (self.v - 1) // 2


@dataclass(frozen=True)
class Factorization:
    """Ordered (near-)one-factors of K_v over Z_v.

    For a near-one-factorization, ``factors[i]`` isolates point i.
    """

    v: int
    factors: tuple[tuple[Pair, ...], ...]
    kind: Literal["one-factorization", "near-one-factorization"]

    def __len__(self) -> int:
        return len(self.factors)

    def __getitem__(self, i: int) -> tuple[Pair, ...]:
        return self.factors[i]

    def isolated(self, i: int) -> int | None:
        covered = {x for p in self.factors[i] for x in p}
        rest = set(range(self.v)) - covered
        return rest.pop() if len(rest) == 1 else None

    def is_valid(self) -> bool:
        v = self.v
        if self.kind == "one-factorization":
            if v % 2 or len(self.factors) != v - 1:
                return False
            want = v // 2
        else:
            if v % 2 == 0 or len(self.factors) != v:
                return False
            want = (v - 1) // 2
        seen: set[Pair] = set()
        for i, f in enumerate(self.factors):
            if len(f) != want:
                return False
            points = [x for p in f for x in p]
            if len(set(points)) != len(points) or not all(0 <= x < v for x in points):
                return False
            if self.kind == "near-one-factorization" and i in points:
                return False
            for a, b in f:
                p = _pair(a, b)
                if p in seen:
                    return False
                seen.add(p)
        return len(seen) == v * (v - 1) // 2


def near_one_factorization(v: int) -> Factorization:
    """Rotational near-one-factorization: F_i = {{i+j, i-j} : 1 <= j <= (v-1)/2}."""
    if v < 1 or v % 2 == 0:
        raise ValueError(f"near-one-factorization needs odd v >= 1, got {v}")
    factors = tuple(
        tuple(sorted(_pair((i + j) % v, (i - j) % v) for j in range(1, (v - 1) // 2 + 1)))
        for i in range(v)
    )
    return Factorization(v, factors, "near-one-factorization")


def one_factorization(v: int) -> Factorization:
    """Fix the point v-1 and rotate Z_{v-1}: factor i pairs v-1 with i."""
    if v < 2 or v % 2:
        raise ValueError(f"one-factorization needs even v >= 2, got {v}")
    inf = v - 1
    near = near_one_factorization(v - 1)
    factors = tuple(tuple(sorted(f + ((i, inf),))) for i, f in enumerate(near.factors))
    return Factorization(v, factors, "one-factorization")


def _bose(n: int) -> list[Triple]:
    # v = 3n, n odd; idempotent commutative quasigroup x.y = (x+y)(n+1)/2 mod n
    half = (n + 1) // 2

    def pt(x: int, i: int) -> int:
        return x + (i % 3) * n

    out = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(n)]
    for x, y in combinations(range(n), 2):
        z = (x + y) * half % n
        out.extend((pt(x, i), pt(y, i), pt(z, i + 1)) for i in range(3))
    return out


def _skolem(n: int) -> list[Triple]:
    # v = 3n+1, n even; half-idempotent commutative quasigroup from Z_n addition
    t = n // 2
    inf = 3 * n

    def pt(x: int, i: int) -> int:
        return x + (i % 3) * n

    def op(x: int, y: int) -> int:
        s = (x + y) % n
        return s // 2 if s % 2 == 0 else t + s // 2

    out = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(t)]
    out.extend((inf, pt(x + t, i), pt(x, i + 1)) for x in range(t) for i in range(3))
    for x, y in combinations(range(n), 2):
        z = op(x, y)
        out.extend((pt(x, i), pt(y, i), pt(z, i + 1)) for i in range(3))
    return out


def steiner_triple_system(v: int) -> TripleSystem:
    """STS(v) by Bose (v = 3 mod 6) or Skolem (v = 1 mod 6)."""
    if v < 1 or v % 6 not in (1, 3):
        raise ValueError(f"STS(v) requires v = 1 or 3 (mod 6); v={v} has v mod 6 = {v % 6}")
    if v == 1:
        return TripleSystem(1, ())
    raw = _bose(v // 3) if v % 6 == 3 else _skolem((v - 1) // 3)
    return TripleSystem(v, tuple(sorted(tuple(sorted(t)) for t in raw)))
