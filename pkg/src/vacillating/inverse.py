"""Vacillating word -> (Q, L), undoing the forward map step by step."""

from __future__ import annotations

from typing import Callable

from .core import (
    Partition,
    StandardYoungTableau,
    VacillatingWord,
    syt,
    syt_validate,
    word_validate,
)
from .errors import (
    RejectBelowAxis,
    RejectFlatOnAxis,
    RejectInvalidWord,
    RejectNoParityFix,
    RejectNotZero,
    RejectStripShape,
    RejectTripleShape,
    VacillatingError,
)
from .forward import LabeledWord, _Work
from .lr import OrthLRTableau, is_valid_lr


def _three_row(w: _Work, k: int) -> bool:
    level = w.level(k)
    if level >= 2:
        return True
    if level != 1:
        return False
    if k + 1 < len(w) and w.entries[k + 1] == 0:
        return False  # not the rightmost 0 of its run
    start = k
    while start > 0 and w.entries[start - 1] == 0:
        start -= 1
    return (k - start + 1) % 2 == 1


def is_three_row_position(w: LabeledWord, index: int) -> bool:
    """A 0 on level >= 2, or the rightmost 0 of an odd run of 0's on level 1."""
    if w.entries[index] != 0:
        raise RejectNotZero(f"position {index} holds {w.entries[index]}, not 0")
    return _three_row(_Work(list(w.labels), list(w.entries)), index)


def pad_word(w: VacillatingWord) -> tuple[VacillatingWord, bool, Partition]:
    m = sum(w.letters)
    letters = w.letters + (-1,) * m
    flag = len(letters) % 2 == 1
    if flag:
        letters += (1, 0, -1)
    return VacillatingWord(letters), flag, Partition((m,)) if m else Partition()


def _extract_third_row(w: _Work) -> tuple[int, int] | None:
    zeros = [k for k in range(len(w)) if w.entries[k] == 0 and _three_row(w, k)]
    if not zeros:
        return None
    p = zeros[0]
    if w.level(p) == 1 and p + 1 < len(w) and w.entries[p + 1] == 1:
        w.entries[p + 1] = 0
        c = p + 1
    else:
        w.entries[p] = -1
        c = p
    a = w.delete(w.next_right(c, -1))
    while True:
        if c >= len(w):
            raise RejectInvalidWord("third-row extraction ran off the right end")
        if w.entries[c] == -1 and w.level(c) == 0:  # undo separate
            w.entries[c] = w.entries[c + 1] = 0
        elif (
            c % 2 == 1
            and c + 1 < len(w)
            and w.entries[c] == 0
            and w.entries[c + 1] == 0
            and w.level(c) == 1
            and w.level(c + 1) == 1
        ):  # undo connect
            w.entries[c] = -1
            w.entries[c + 1] = 1
        if w.entries[c] == 0 and _three_row(w, c):
            w.entries[c] = -1
            b = w.delete(w.next_right(c, -1))
            return a, b
        c += 1


def _is_base(w: _Work) -> bool:
    return all(e == (1 if k % 2 == 0 else -1) for k, e in enumerate(w.entries))


def _extract_second_row(w: _Work) -> tuple[int, int]:
    k = next(k for k in range(len(w)) if w.entries[k] != 1 and w.level(k) != 0)
    if w.entries[k] == -1:
        one = next(j for j in range(len(w)) if w.entries[j] == 1 and w.level(j) == 1)
        w.entries[one] = -1
        new = one
    else:
        new = k + 1
        w.entries[new] = -1
    new_label = w.labels[new]
    a = w.delete(k)
    b = w.delete(w.next_right(w.index(new_label), -1))
    j = 0
    while j + 1 < len(w):
        if w.entries[j] == 0 and w.entries[j + 1] == 0 and w.level(j) == 0 and w.level(j + 1) == 0:
            w.entries[j], w.entries[j + 1] = 1, -1
            j += 2
        else:
            j += 1
    return a, b


def algo4_extract(
    v: VacillatingWord, trace: Callable[[str, LabeledWord], None] | None = None
) -> StandardYoungTableau:
    """Recover the even-rowed tableau from a word of weight 0 and even length."""
    try:
        word_validate(v.letters)
    except (RejectBelowAxis, RejectFlatOnAxis) as exc:
        raise RejectInvalidWord(str(exc)) from None
    if sum(v.letters) != 0 or len(v) % 2:
        raise RejectInvalidWord("need weight 0 and even length")
    w = _Work(list(range(1, len(v) + 1)), list(v.letters))
    rows: list[list[int]] = [[], [], []]
    try:
        while (pair := _extract_third_row(w)) is not None:
            rows[2].extend(pair)
            if trace:
                trace(f"row 3 pair {pair}", w.snapshot())
        while not _is_base(w):
            pair = _extract_second_row(w)
            rows[1].extend(pair)
            if trace:
                trace(f"row 2 pair {pair}", w.snapshot())
    except (VacillatingError, StopIteration) as exc:
        raise RejectInvalidWord(f"extraction failed: {exc}") from None
    rows[0] = list(w.labels)
    return syt_validate(sorted(r) for r in rows)


def strip_triple(q: StandardYoungTableau, flag: bool) -> StandardYoungTableau:
    if not flag:
        return q
    n = q.size
    if len(q.rows) != 3 or any(q.rows[i][-1] != n - 2 + i for i in range(3)):
        raise RejectTripleShape(f"{n - 2},{n - 1},{n} do not end rows 1,2,3")
    return syt(r[:-1] for r in q.rows)


def _check_strip(q: StandardYoungTableau, m: int) -> None:
    n = q.size
    cells = sorted((j, i, q.rows[i][j]) for i in range(len(q.rows)) for j in range(len(q.rows[i])) if q.rows[i][j] > n - m)
    if sum(1 for _, i, _ in cells if i == 0) > 1:
        raise RejectStripShape("more than one of the largest entries lies in row 1")
    if len({j for j, _, _ in cells}) != len(cells):
        raise RejectStripShape("the largest entries do not form a horizontal strip")
    if [e for _, _, e in cells] != sorted(e for _, _, e in cells):
        raise RejectStripShape("the largest entries do not increase from left to right")


def algo2_contract(
    qt: StandardYoungTableau, mu: Partition, info: dict | None = None
) -> tuple[OrthLRTableau, StandardYoungTableau]:
    """Split off the mu1 largest entries and rebuild the LR tableau.

    If ``info`` is given, info["parity_fixed"] records whether the final
    parity correction moved an entry.
    """
    m = mu.part(0)
    n = qt.size
    rows = [list(qt.rows[i]) if i < len(qt.rows) else [] for i in range(3)]
    if len({len(r) % 2 for r in rows}) > 1:
        raise RejectStripShape(f"rows of {qt.shape} do not share one parity")
    _check_strip(qt, m)
    q = syt([e for e in r if e <= n - m] for r in rows)

    # Columns after rotating: row 3 on the left, row 1 on the right. Each cell
    # is its number or None for an x; the list runs top to bottom.
    cols = [[k + 1 if e <= n - m else None for k, e in enumerate(rows[2 - i])] for i in range(3)]
    marked: list[set[int]] = [set(), set(), set()]

    def mark_from_bottom(i: int, count: int) -> None:
        for k in range(len(cols[i]) - 1, -1, -1):
            if count == 0:
                return
            if cols[i][k] is not None and k not in marked[i]:
                marked[i].add(k)
                count -= 1
        if count:
            raise RejectStripShape(f"column {i} has too few cells to mark")

    for i in range(3):
        xs = sum(1 for v in cols[i] if v is None)
        if xs % 2:
            free = [k for k in range(len(cols[i])) if cols[i][k] is not None and k not in marked[i]]
            if free:
                marked[i].add(free[-1])
            elif i + 1 < 3:
                mark_from_bottom(i + 1, 1)
            else:
                raise RejectStripShape("no cell to mark for an odd number of x's")
            xs -= 1
        if xs:
            if i + 1 >= 3:
                raise RejectStripShape("x's left over in the rightmost column")
            mark_from_bottom(i + 1, xs)

    keep = [[v for k, v in enumerate(cols[i]) if v is not None and k not in marked[i]] for i in range(3)]
    moved = sorted(cols[i][k] for i in range(3) for k in marked[i])
    left = tuple(sorted(keep[0] + moved))
    middle = tuple(keep[1])
    right = tuple(keep[2])
    lr = OrthLRTableau(left, middle, right, m)

    fixed = False
    if len(middle) % 2 == 1 and m != 0:
        for v in sorted(set(left) ^ set(middle)):
            if v in left:
                cand = OrthLRTableau(tuple(x for x in left if x != v), tuple(sorted(middle + (v,))), right, m)
            else:
                cand = OrthLRTableau(tuple(sorted(left + (v,))), tuple(x for x in middle if x != v), right, m)
            if is_valid_lr(cand):
                lr = cand
                fixed = True
                break
        else:
            raise RejectNoParityFix(f"no entry of {left} | {middle} can change columns")
    if info is not None:
        info["parity_fixed"] = fixed
    return lr, q


def inverse(
    v: VacillatingWord, trace: Callable[[str, LabeledWord], None] | None = None
) -> tuple[StandardYoungTableau, OrthLRTableau]:
    try:
        word_validate(v.letters)
    except (RejectBelowAxis, RejectFlatOnAxis) as exc:
        raise RejectInvalidWord(str(exc)) from None
    padded, flag, mu = pad_word(v)
    qt = strip_triple(algo4_extract(padded, trace), flag)
    lr, q = algo2_contract(qt, mu)
    return q, lr
