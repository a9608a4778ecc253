"""Slow, obviously-correct reference checks used by the tests.

These deliberately avoid msts.verifier so they can cross-check it.
"""

from itertools import combinations, product


def dense(word, length):
    out = [0] * length
    for p, v in word.entries:
        out[p] = v
    return tuple(out)


def dense_distance(x, y):
    return sum(a != b for a, b in zip(x, y))


def all_words_of_weight(sizes, w):
    for support in combinations(range(len(sizes)), w):
        for values in product(*(range(1, sizes[i]) for i in support)):
            word = [0] * len(sizes)
            for i, v in zip(support, values):
                word[i] = v
            yield tuple(word)


def coverage_counts(design):
    """Map every dense weight-2 word to the number of codewords at distance 1."""
    sizes = design.alphabet.sizes
    code = [dense(c, len(sizes)) for c in design.codewords]
    return {x: sum(dense_distance(x, c) == 1 for c in code) for x in all_words_of_weight(sizes, 2)}


def is_msts(design):
    sizes = design.alphabet.sizes
    code = [dense(c, len(sizes)) for c in design.codewords]
    if any(sum(1 for v in c if v) != 3 for c in code):
        return False
    if any(t != 1 for t in coverage_counts(design).values()):
        return False
    return all(dense_distance(a, b) >= 3 for a, b in combinations(code, 2))


def pair_cover_counts(v, blocks):
    counts = {p: 0 for p in combinations(range(v), 2)}
    for b in blocks:
        for p in combinations(sorted(b), 2):
            counts[p] += 1
    return counts
