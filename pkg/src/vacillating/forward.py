"""(Q, L) -> vacillating word.

The map runs in four steps: expand Q by the mu1 cells that L encodes,
pad to even rows, insert the rows into a labeled word, then strip the
padding again from the word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .core import (
    Partition,
    StandardYoungTableau,
    VacillatingWord,
    syt,
    syt_validate,
)
from .errors import RejectRowParity, RejectShapeMismatch, RejectSuffixShape, VacillatingError
from .lr import LEFT, MIDDLE, RIGHT, OrthLRTableau, validate_lr


@dataclass(frozen=True)
class LabeledWord:
    positions: tuple[tuple[int, int], ...] = ()

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(lab for lab, _ in self.positions)

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.positions)

    def word(self) -> VacillatingWord:
        return VacillatingWord(self.entries)

    def __str__(self) -> str:
        return " ".join(f"{e:+d}@{lab}" if e else f"0@{lab}" for lab, e in self.positions)


@dataclass(frozen=True)
class ExpandedTableau:
    tableau: StandardYoungTableau
    mu: Partition
    added_parity_triple: bool = False
    parity_moved: bool = False


class _Work:
    """Mutable labeled word used while the algorithms run."""

    def __init__(self, labels: list[int], entries: list[int]) -> None:
        self.labels = labels
        self.entries = entries

    def __len__(self) -> int:
        return len(self.labels)

    def snapshot(self) -> LabeledWord:
        return LabeledWord(tuple(zip(self.labels, self.entries)))

    def index(self, label: int) -> int:
        return self.labels.index(label)

    def spot(self, label: int) -> int:
        """Index at which a position with this label would be inserted."""
        k = 0
        while k < len(self.labels) and self.labels[k] < label:
            k += 1
        return k

    def insert(self, label: int, entry: int) -> int:
        k = self.spot(label)
        self.labels.insert(k, label)
        self.entries.insert(k, entry)
        return k

    def delete(self, k: int) -> int:
        self.entries.pop(k)
        return self.labels.pop(k)

    def height_before(self, k: int) -> int:
        return sum(self.entries[:k])

    def level(self, k: int) -> int:
        before = self.height_before(k)
        return min(before, before + self.entries[k])

    def next_left(self, k: int, entry: int) -> int:
        j = k - 1
        while j >= 0 and self.entries[j] != entry:
            j -= 1
        if j < 0:
            raise VacillatingError(f"no {entry} to the left of index {k}")
        return j

    def next_right(self, k: int, entry: int) -> int:
        j = k + 1
        while j < len(self.entries) and self.entries[j] != entry:
            j += 1
        if j == len(self.entries):
            raise VacillatingError(f"no {entry} to the right of index {k}")
        return j


# ---------------------------------------------------------------- Algorithm 1


def algo1_x_cells(lr: OrthLRTableau, shape: Partition) -> tuple[list[list[str]], bool]:
    """Rows of the rotated LR tableau with 'n' for numbered and 'x' for added cells.

    Returns the rows after the parity adjustment and whether a cell moved.
    Only the shape of Q enters here, never its filling.
    """
    lam, mu = validate_lr(lr)
    if lam != shape:
        raise RejectShapeMismatch(f"LR tableau has shape {lam}, Q has shape {shape}")
    lines = lr.lines()
    home = (RIGHT, MIDDLE, LEFT)
    added = [0, 0, 0, 0]
    for i, line in enumerate(lines):
        added[i + 1] = sum(1 for col, _ in line if col != home[i])
    if added[3]:
        raise RejectShapeMismatch("line 3 leaves the left column")
    extra = mu.part(0) - added[1] - added[2]
    if extra < 0:
        raise RejectShapeMismatch(f"more than mu1 = {mu.part(0)} cells change lines")
    added[2] += extra
    rows = [["n"] * lam.part(i) + ["x"] * added[i] for i in range(3)]

    moved = False
    lengths = [len(r) for r in rows]
    if len({n % 2 for n in lengths}) > 1:
        want = 0 if sum(lengths) % 2 else 1  # parity of the two rows that get evened out
        pair = [i for i in range(3) if lengths[i] % 2 == want]
        src, dst = pair[1], pair[0]
        cell = rows[src].pop()
        if cell != "x":
            raise RejectShapeMismatch("parity adjustment would move a numbered cell")
        rows[dst].append(cell)
        moved = True
    return rows, moved


def algo1_expand(lr: OrthLRTableau, q: StandardYoungTableau) -> ExpandedTableau:
    rows, moved = algo1_x_cells(lr, q.shape)
    xs = sorted((j, i) for i, row in enumerate(rows) for j, kind in enumerate(row) if kind == "x")
    out = [list(q.rows[i]) if i < len(q.rows) else [] for i in range(3)]
    n = q.size
    for k, (j, i) in enumerate(xs, 1):
        if j != len(out[i]):
            raise RejectShapeMismatch("added cells are not at the row ends")
        out[i].append(n + k)
    return ExpandedTableau(syt_validate(out), lr.mu, False, moved)


def pad_parity(e: ExpandedTableau) -> ExpandedTableau:
    rows = [list(e.tableau.rows[i]) if i < len(e.tableau.rows) else [] for i in range(3)]
    if any(len(r) % 2 == 0 for r in rows):
        return e
    top = e.tableau.size
    for i in range(3):
        rows[i].append(top + 1 + i)
    return ExpandedTableau(syt(rows), e.mu, True, e.parity_moved)


# ---------------------------------------------------------------- Algorithm 3


def _insert_second_row(w: _Work, a: int, b: int) -> None:
    w.insert(b, -1)
    k = w.spot(a)
    if k < len(w) and w.entries[k] == -1 and w.labels[k] != b:
        k = w.insert(a, 0)
        w.entries[k + 1] = 0
    else:
        # an insertion spot at the far right has no right neighbour: also case 2
        k = w.insert(a, -1)
        w.entries[w.next_left(k, -1)] = 1
    ia, ib = w.index(a), w.index(b)
    j = ia + 1
    while j + 1 < ib:
        if w.entries[j] == 1 and w.entries[j + 1] == -1:
            w.entries[j] = w.entries[j + 1] = 0
            j += 2
        else:
            j += 1


def _insert_third_row(w: _Work, a: int, b: int) -> None:
    kb = w.insert(b, -1)
    j = w.next_left(kb, -1)
    w.entries[j] = 0
    b_tilde = w.labels[j]
    c = kb
    connected: set[int] = set()
    a_in = False
    while True:
        if c < 0:
            raise VacillatingError(f"third-row insertion of ({a},{b}) ran off the left end")
        if w.entries[c] == 1 and w.level(c) == 0:  # connect
            w.entries[c] = w.entries[c - 1] = 0
            connected.update((w.labels[c], w.labels[c - 1]))
        elif (
            c % 2 == 0
            and c >= 1
            and not a_in
            and w.entries[c] == 0
            and w.entries[c - 1] == 0
            and w.level(c) == 1
            and w.level(c - 1) == 1
        ):  # separate
            w.entries[c] = 1
            w.entries[c - 1] = -1
        if w.spot(a) == c and not a_in:
            w.insert(a, -1)
            a_in = True
            c += 1
        elif a_in:
            lab, e = w.labels[c], w.entries[c]
            if e == -1 and lab != a:
                w.entries[c] = 0
                return
            if e == 0 and lab not in connected and lab < b_tilde:
                w.entries[c] = 1
                return
        c -= 1


def algo3_insert(
    q: StandardYoungTableau, trace: Callable[[str, LabeledWord], None] | None = None
) -> VacillatingWord:
    """Insert an even-rowed tableau with at most 3 rows into a word of weight 0."""
    if len(q.rows) > 3 or any(len(r) % 2 for r in q.rows):
        raise RejectRowParity(f"need at most 3 rows of even length, got {q.shape}")
    rows = [list(q.rows[i]) if i < len(q.rows) else [] for i in range(3)]
    w = _Work(list(rows[0]), [1 if k % 2 == 0 else -1 for k in range(len(rows[0]))])
    if trace:
        trace("row 1", w.snapshot())
    for row_no, insert in ((2, _insert_second_row), (3, _insert_third_row)):
        row = rows[row_no - 1]
        for k in range(len(row) - 2, -1, -2):
            insert(w, row[k], row[k + 1])
            if trace:
                trace(f"row {row_no} pair ({row[k]},{row[k + 1]})", w.snapshot())
    return VacillatingWord(tuple(w.entries))


def strip_suffix(w: VacillatingWord, flag: bool, mu: Partition) -> VacillatingWord:
    letters = w.letters
    if flag:
        if letters[-3:] != (1, 0, -1):
            raise RejectSuffixShape(f"expected the word to end in 1,0,-1, got {letters[-3:]}")
        letters = letters[:-3]
    m = mu.part(0)
    if m:
        if len(letters) < m or any(x != -1 for x in letters[-m:]):
            raise RejectSuffixShape(f"expected {m} trailing -1's")
        letters = letters[:-m]
    return VacillatingWord(letters)


def forward(
    q: StandardYoungTableau,
    lr: OrthLRTableau,
    trace: Callable[[str, LabeledWord], None] | None = None,
) -> VacillatingWord:
    padded = pad_parity(algo1_expand(lr, q))
    full = algo3_insert(padded.tableau, trace)
    return strip_suffix(full, padded.added_parity_triple, padded.mu)
