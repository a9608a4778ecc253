"""Brute-force checks for mixed Steiner triple systems and pairs-triples designs.

Nothing here looks at how a design was built; verdicts come from the
codeword set alone.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .core import Design, SparseWord, enumerate_weight2_words


@dataclass(frozen=True)
class ConditionReport:
    k: int
    l: int
    n: int
    conditions: tuple[bool, bool, bool, bool, bool]
    residues: frozenset[int]

    @property
    def overall(self) -> bool:
        return all(self.conditions)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "l": self.l,
            "n": self.n,
            "conditions": {str(i + 1): ok for i, ok in enumerate(self.conditions)},
            "residues_mod6": sorted(self.residues),
            "overall": self.overall,
        }


def _conditions(k: int, l: int, n: int) -> tuple[bool, bool, bool, bool, bool]:
    return (
        (n - k) % 2 == 0,
        (n - l) % 2 == 0,
        k % 2 == 1 and l % 2 == 1,
        n >= k * l,
        (k * l + (k + l) * n + comb(n, 2)) % 3 == 0,
    )


def admissible_n_residues(k: int, l: int) -> frozenset[int]:
    """Residues of n mod 6 allowed by the parity and divisibility conditions."""
    if k % 2 == 0 or l % 2 == 0:
        raise ValueError(f"k and l must be odd, got k={k}, l={l}")
    out = set()
    for rho in range(6):
        c1, c2, c3, _, c5 = _conditions(k, l, rho + 6)
        if c1 and c2 and c3 and c5:
            out.add(rho)
    return frozenset(out)


def check_necessary_conditions(k: int, l: int, n: int) -> ConditionReport:
    residues = admissible_n_residues(k, l) if k % 2 and l % 2 else frozenset()
    return ConditionReport(k, l, n, _conditions(k, l, n), residues)


def minimum_admissible_n(k: int, l: int) -> int | None:
    """Smallest n >= k*l whose residue mod 6 is admissible."""
    residues = admissible_n_residues(k, l)
    if not residues:
        return None
    n = k * l
    while n % 6 not in residues:
        n += 1
    return n


def expected_count(k: int, l: int, n: int) -> int:
    total = k * l + (k + l) * n + comb(n, 2)
    if total % 3:
        raise ValueError(
            f"condition (5) fails: k*l + (k+l)*n + C(n,2) = {total} is not divisible by 3"
        )
    return total // 3


def expected_count_for(alphabet) -> int | None:
    """Codeword count for recognised shapes Z_2^n, Z_2^n x Z_{r+1}, Z_2^n x Z_{k+1} x Z_{l+1}."""
    sizes = alphabet.sizes
    nonbinary = [i for i, q in enumerate(sizes) if q != 2]
    if nonbinary and nonbinary != list(range(len(sizes) - len(nonbinary), len(sizes))):
        return None
    if len(nonbinary) > 2:
        return None
    total = alphabet.weight2_count()
    if len(nonbinary) == 2:
        n, k, l = alphabet.shape()
        return expected_count(k, l, n) if total % 3 == 0 else None
    return total // 3 if total % 3 == 0 else None


@dataclass
class VerificationReport:
    coverage_ok: bool
    uncovered: list[SparseWord]
    multicovered: list[tuple[SparseWord, int]]
    min_distance: int | None
    distance_violations: list[tuple[SparseWord, SparseWord, int]]
    count_expected: int | None
    count_actual: int
    notes: list[str] = field(default_factory=list)

    @property
    def count_ok(self) -> bool:
        return self.count_expected is None or self.count_expected == self.count_actual

    @property
    def accepted(self) -> bool:
        return (
            self.coverage_ok
            and not self.distance_violations
            and (self.min_distance is None or self.min_distance >= 3)
            and self.count_ok
        )

    def to_json(self) -> dict:
        return {
            "accepted": self.accepted,
            "coverage_ok": self.coverage_ok,
            "uncovered": [w.to_list() for w in self.uncovered],
            "multicovered": [{"word": w.to_list(), "times": t} for w, t in self.multicovered],
            "min_distance": self.min_distance,
            "distance_violations": [
                {"u": u.to_list(), "v": v.to_list(), "distance": d} for u, v, d in self.distance_violations
            ],
            "count_expected": self.count_expected,
            "count_actual": self.count_actual,
            "notes": self.notes,
        }


def _min_distance(words: list[SparseWord]) -> tuple[int | None, list]:
    # early exit on the first pair closer than 3
    items = [frozenset(w.entries) for w in words]
    supports = [frozenset(w.support) for w in words]
    best = None
    for i, j in combinations(range(len(words)), 2):
        d = len(supports[i] | supports[j]) - len(items[i] & items[j])
        if d < 3:
            return d, [(words[i], words[j], d)]
        if best is None or d < best:
            best = d
    return best, []


def verify_msts(design: Design) -> VerificationReport:
    alphabet = design.alphabet
    words = design.sorted_codewords()
    notes = []
    invalid = 0

    counts: Counter[SparseWord] = Counter()
    for c in words:
        if c.weight != 3 or not c.is_valid_for(alphabet):
            notes.append(f"invalid codeword {c!r}")
            invalid += 1
            continue
        for a, b in combinations(c.entries, 2):
            counts[SparseWord((a, b))] += 1

    uncovered = []
    multicovered = []
    for x in enumerate_weight2_words(alphabet):
        t = counts.get(x, 0)
        if t == 0:
            uncovered.append(x)
        elif t > 1:
            multicovered.append((x, t))

    min_d, violations = _min_distance(words)
    expected = expected_count_for(alphabet)
    if expected is None:
        notes.append("count check skipped: alphabet shape not recognised")
    return VerificationReport(
        coverage_ok=not uncovered and not multicovered and not invalid,
        uncovered=uncovered,
        multicovered=multicovered,
        min_distance=min_d,
        distance_violations=violations,
        count_expected=expected,
        count_actual=len(words),
        notes=notes,
    )


@dataclass
class PTDReport:
    matchings_ok: bool
    disjoint_ok: bool
    coverage_ok: bool
    count_ok: bool
    bad_factors: list[int]
    duplicated_pairs: list[tuple[int, int]]
    missing_pairs: list[tuple[int, int]]
    bad_triples: list[tuple[int, ...]]
    notes: list[str] = field(default_factory=list)

    @property
    def accepted(self) -> bool:
        return self.matchings_ok and self.disjoint_ok and self.coverage_ok and self.count_ok and not self.notes

    def to_json(self) -> dict:
        return {
            "accepted": self.accepted,
            "matchings_ok": self.matchings_ok,
            "disjoint_ok": self.disjoint_ok,
            "coverage_ok": self.coverage_ok,
            "count_ok": self.count_ok,
            "bad_factors": self.bad_factors,
            "duplicated_pairs": [list(p) for p in self.duplicated_pairs],
            "missing_pairs": [list(p) for p in self.missing_pairs],
            "bad_triples": [list(t) for t in self.bad_triples],
            "notes": self.notes,
        }


def verify_ptd(ptd) -> PTDReport:
    m, r = ptd.m, ptd.r
    notes = []
    if m % 2:
        notes.append(f"m={m} is not even")
    if r % 2 == 0:
        notes.append(f"r={r} is not odd")
    if len(ptd.factors) != r:
        notes.append(f"{len(ptd.factors)} factors given, r={r}")

    bad_factors = []
    pair_uses: Counter[tuple[int, int]] = Counter()
    factor_pairs: Counter[tuple[int, int]] = Counter()
    for i, f in enumerate(ptd.factors, start=1):
        points = [x for p in f for x in p]
        if sorted(points) != list(range(m)):
            bad_factors.append(i)
        for a, b in f:
            if a == b:
                continue
            p = (min(a, b), max(a, b))
            pair_uses[p] += 1
            factor_pairs[p] += 1

    bad_triples = []
    for t in ptd.triples:
        if len(t) != 3 or len(set(t)) != 3 or not all(0 <= x < m for x in t):
            bad_triples.append(tuple(t))
            continue
        for p in combinations(sorted(t), 2):
            pair_uses[p] += 1

    all_pairs = list(combinations(range(m), 2))
    missing = [p for p in all_pairs if pair_uses.get(p, 0) == 0]
    duplicated = sorted(p for p, t in pair_uses.items() if t > 1)
    stray = [p for p in pair_uses if not (0 <= p[0] < p[1] < m)]
    if stray:
        notes.append(f"pairs outside Z_{m}: {sorted(stray)}")

    leave = comb(m, 2) - r * m // 2
    count_ok = leave % 3 == 0 and len(ptd.triples) == leave // 3
    return PTDReport(
        matchings_ok=not bad_factors,
        disjoint_ok=all(t == 1 for t in factor_pairs.values()),
        coverage_ok=not missing and not duplicated and not bad_triples,
        count_ok=count_ok,
        bad_factors=bad_factors,
        duplicated_pairs=duplicated,
        missing_pairs=missing,
        bad_triples=bad_triples,
        notes=notes,
    )
