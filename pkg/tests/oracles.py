"""Independent reference implementations used only by the tests."""

from __future__ import annotations

from itertools import permutations, product
from math import factorial


def riordan_counts(n_max: int, end: int = 0) -> list[int]:
    """Paths of each length ending at height `end`, by a height-indexed DP."""
    out = []
    dist = {0: 1}
    for n in range(n_max + 1):
        out.append(dist.get(end, 0))
        nxt: dict[int, int] = {}
        for h, c in dist.items():
            for x in (1, 0, -1):
                if h + x < 0 or (x == 0 and h == 0):
                    continue
                nxt[h + x] = nxt.get(h + x, 0) + c
        dist = nxt
    return out


def brute_words(r: int, end: int) -> list[tuple[int, ...]]:
    """All words of length r over {1,0,-1} that are valid paths ending at `end`."""
    out = []
    for w in product((1, 0, -1), repeat=r):
        h, ok = 0, True
        for x in w:
            if x == 0 and h == 0:
                ok = False
                break
            h += x
            if h < 0:
                ok = False
                break
        if ok and h == end:
            out.append(w)
    return out


def hook_length(shape: tuple[int, ...]) -> int:
    n = sum(shape)
    conj = [sum(1 for p in shape if p > j) for j in range(shape[0])] if shape else []
    prod = 1
    for i, p in enumerate(shape):
        for j in range(p):
            prod *= (p - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // prod


def brute_syt(shape: tuple[int, ...]) -> list[list[list[int]]]:
    """SYT of the shape by filtering all permutations; only for tiny shapes."""
    n = sum(shape)
    out = []
    for perm in permutations(range(1, n + 1)):
        rows, k = [], 0
        for p in shape:
            rows.append(list(perm[k:k + p]))
            k += p
        if all(r[j] < r[j + 1] for r in rows for j in range(len(r) - 1)) and all(
            rows[i][j] < rows[i + 1][j] for i in range(len(rows) - 1) for j in range(len(rows[i + 1]))
        ):
            out.append(rows)
    return out


def brute_word_descents(w: tuple[int, ...]) -> set[int]:
    """Descents straight from the pair rule: a step down in 1 > 0 > -1, except a
    balanced (1,-1)."""
    rank = {1: 0, 0: 1, -1: 2}
    out = set()
    for j in range(1, len(w)):
        x, y = w[j - 1], w[j]
        if rank[x] < rank[y]:
            if (x, y) == (1, -1) and sum(w[: j - 1]) == 0:
                continue
            out.add(j)
    return out


def brute_syt_descents(rows: list[list[int]]) -> set[int]:
    row_of = {e: i for i, r in enumerate(rows) for e in r}
    return {j for j in row_of if j + 1 in row_of and row_of[j + 1] > row_of[j]}
