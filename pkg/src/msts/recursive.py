"""Extend an MS(2,3, Z_2^n x Z_{k+1} x Z_{l+1}) by m binary coordinates."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Design, MixedAlphabet, SparseWord
from .pairs_triples import PairsTriplesDesign


@dataclass(frozen=True)
class ExtensionPlan:
    base: Design
    ptd: PairsTriplesDesign

    def __post_init__(self):
        shape = self.base.alphabet.shape()
        if shape is None:
            raise ValueError(f"base alphabet {list(self.base.alphabet.sizes)} is not Z_2^n x Z_(k+1) x Z_(l+1)")
        n, k, l = shape
        r, m = self.ptd.r, self.ptd.m
        if r != n + k + l:
            raise ValueError(f"PTD has r={r} factors but n+k+l = {n + k + l}")
        if n % 2 == 0 or k % 2 == 0 or l % 2 == 0:
            raise ValueError(f"n, k, l must be odd, got ({n}, {k}, {l})")
        if m % 2 or m <= n + k + l or len(self.ptd.factors) != r:
            raise ValueError(f"need even m > n+k+l = {n + k + l}, got m={m}")

    @property
    def shape(self) -> tuple[int, int, int]:
        return self.base.alphabet.shape()

    @property
    def offset(self) -> int:
        return self.shape[0] + 2


def extend(plan: ExtensionPlan) -> Design:
    """Base blocks zero-padded, plus the PTD threaded through coordinates n+2..n+m+1.

    T_{i+1} serves binary coordinate i, T_{n+j} value j of coordinate n and
    T_{n+k+j} value j of coordinate n+1.
    """
    n, k, l = plan.shape
    ptd = plan.ptd
    off = plan.offset

    def block(head, *points):
        entries = [(off + a, 1) for a in points]
        if head is not None:
            entries.append(head)
        return SparseWord.of(entries)

    words = list(plan.base.codewords)
    for i in range(n):
        words += [block((i, 1), a, b) for a, b in ptd.factors[i]]
    for j in range(1, k + 1):
        words += [block((n, j), a, b) for a, b in ptd.factors[n + j - 1]]
    for j in range(1, l + 1):
        words += [block((n + 1, j), a, b) for a, b in ptd.factors[n + k + j - 1]]
    words += [block(None, *t) for t in ptd.triples]

    alphabet = MixedAlphabet(plan.base.alphabet.sizes + (2,) * ptd.m)
    meta = {"construction": "recursive", "base": plan.base.meta, "m": ptd.m}
    return Design.from_words(alphabet, words, meta)


def canonicalize_alphabet(d: Design) -> Design:
    """Stable reorder putting every binary coordinate before the non-binary ones."""
    sizes = d.alphabet.sizes
    order = [i for i, q in enumerate(sizes) if q == 2] + [i for i, q in enumerate(sizes) if q != 2]
    where = {old: new for new, old in enumerate(order)}
    return Design(
        MixedAlphabet(tuple(sizes[i] for i in order)),
        frozenset(c.remap(where) for c in d.codewords),
        dict(d.meta),
    )
