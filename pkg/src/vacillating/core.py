"""Partitions, standard Young tableaux, vacillating words and descent sets.

All value types are frozen dataclasses over tuples. Constructors do not
validate (the algorithms build millions of intermediate values); the
``*_validate`` functions are the checked entry points.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    RejectBelowAxis,
    RejectEntries,
    RejectFlatOnAxis,
    RejectInvalidResult,
    RejectNonPositive,
    RejectNotDecreasing,
    RejectNotStandard,
    RejectShape,
    RejectShapeTooLong,
)

LETTERS = (1, 0, -1)


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (0-based), 0 past the end."""
        return self.parts[i] if i < len(self.parts) else 0

    def conjugate(self) -> Partition:
        if not self.parts:
            return Partition()
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "∅"


@dataclass(frozen=True)
class StandardYoungTableau:
    rows: tuple[tuple[int, ...], ...] = ()

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def row_of(self, entry: int) -> int:
        for i, row in enumerate(self.rows):
            if entry in row:
                return i
        raise KeyError(entry)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        return "/".join(",".join(map(str, r)) for r in self.rows) or "∅"


@dataclass(frozen=True)
class VacillatingWord:
    letters: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __add__(self, other: VacillatingWord) -> VacillatingWord:
        return VacillatingWord(self.letters + other.letters)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.letters)) + ")"


DescentSet = tuple[int, ...]
DescentMultiset = Counter


def syt(rows: Iterable[Iterable[int]]) -> StandardYoungTableau:
    """Unchecked constructor that drops empty rows."""
    return StandardYoungTableau(tuple(tuple(r) for r in rows if len(r) > 0))


def word(letters: Iterable[int]) -> VacillatingWord:
    return VacillatingWord(tuple(letters))


def partition_validate(parts: Sequence[int]) -> Partition:
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    for p in parts:
        if not isinstance(p, int) or p <= 0:
            raise RejectNonPositive(f"part {p!r} is not a positive integer")
    for x, y in zip(parts, parts[1:]):
        if y > x:
            raise RejectNotDecreasing(f"parts {tuple(parts)} are not weakly decreasing")
    return Partition(tuple(parts))


def syt_validate(rows: Iterable[Iterable[int]]) -> StandardYoungTableau:
    rows = [tuple(r) for r in rows]
    while rows and not rows[-1]:
        rows.pop()
    lengths = [len(r) for r in rows]
    if any(n == 0 for n in lengths) or any(y > x for x, y in zip(lengths, lengths[1:])):
        raise RejectShape(f"row lengths {lengths} do not form a partition")
    entries = sorted(e for r in rows for e in r)
    if entries != list(range(1, len(entries) + 1)):
        raise RejectEntries("entries must be exactly 1..n")
    for r in rows:
        if any(y <= x for x, y in zip(r, r[1:])):
            raise RejectNotStandard(f"row {r} is not increasing")
    for upper, lower in zip(rows, rows[1:]):
        if any(lower[j] <= upper[j] for j in range(len(lower))):
            raise RejectNotStandard("columns are not increasing")
    return StandardYoungTableau(tuple(rows))


def syt_descents(q: StandardYoungTableau) -> DescentSet:
    row = {}
    for i, r in enumerate(q.rows):
        for e in r:
            row[e] = i
    return tuple(j for j in range(1, q.size) if row[j + 1] > row[j])


def word_validate(letters: Iterable[int]) -> VacillatingWord:
    letters = tuple(letters)
    height = 0
    for pos, x in enumerate(letters, 1):
        if x not in LETTERS:
            raise RejectBelowAxis(f"letter {x!r} at position {pos} is not in {{1,0,-1}}")
        height += x
        if height < 0:
            raise RejectBelowAxis(f"prefix of length {pos} ends below the axis")
        if x == 0 and height == 0:
            raise RejectFlatOnAxis(f"flat step on the axis at position {pos}")
    return VacillatingWord(letters)


def is_valid_word(letters: Iterable[int]) -> bool:
    try:
        word_validate(letters)
    except (RejectBelowAxis, RejectFlatOnAxis):
        return False
    return True


def word_weight(w: VacillatingWord) -> Partition:
    h = sum(w.letters)
    return Partition((h,)) if h > 0 else Partition()


def word_descents(w: VacillatingWord) -> DescentSet:
    out = []
    prefix = 0  # sum of w_1..w_{j-1}
    letters = w.letters
    for j in range(1, len(letters)):
        x, y = letters[j - 1], letters[j]
        if (x, y) in ((1, 0), (0, -1)) or ((x, y) == (1, -1) and prefix != 0):
            out.append(j)
        prefix += x
    return tuple(out)


def enumerate_syt(shape: Partition) -> list[StandardYoungTableau]:
    """All SYT of the shape, sorted by row reading word."""
    lengths = list(shape.parts)
    n = sum(lengths)
    rows: list[list[int]] = [[] for _ in lengths]
    found = []

    def place(k: int) -> None:
        if k > n:
            found.append(syt(rows))
            return
        for i, target in enumerate(lengths):
            cur = len(rows[i])
            if cur < target and (i == 0 or len(rows[i - 1]) > cur):
                rows[i].append(k)
                place(k + 1)
                rows[i].pop()

    place(1)
    found.sort(key=lambda t: tuple(e for r in t.rows for e in r))
    return found


def partitions_of(n: int, max_len: int | None = None, max_part: int | None = None) -> list[Partition]:
    """Partitions of n in reverse lexicographic order."""
    out = []

    def rec(rest: int, cap: int, acc: list[int]) -> None:
        if rest == 0:
            out.append(Partition(tuple(acc)))
            return
        if max_len is not None and len(acc) == max_len:
            return
        for p in range(min(rest, cap), 0, -1):
            acc.append(p)
            rec(rest - p, p, acc)
            acc.pop()

    rec(n, n if max_part is None else max_part, [])
    return out


def enumerate_vacillating(r: int, shape: Partition) -> list[VacillatingWord]:
    if len(shape) > 1:
        raise RejectShapeTooLong(f"weight {shape} has more than one part")
    target = shape.part(0)
    out = []
    letters: list[int] = []

    def extend(height: int) -> None:
        left = r - len(letters)
        if left == 0:
            if height == target:
                out.append(VacillatingWord(tuple(letters)))
            return
        if abs(height - target) > left:
            return
        for x in (-1, 0, 1):
            h = height + x
            if h < 0 or (x == 0 and h == 0):
                continue
            letters.append(x)
            extend(h)
            letters.pop()

    extend(0)
    return out


def concat_syt(q1: StandardYoungTableau, q2: StandardYoungTableau) -> StandardYoungTableau:
    n = q1.size
    depth = max(len(q1.rows), len(q2.rows))
    rows = []
    for i in range(depth):
        a = q1.rows[i] if i < len(q1.rows) else ()
        b = tuple(e + n for e in q2.rows[i]) if i < len(q2.rows) else ()
        rows.append(a + b)
    try:
        return syt_validate(rows)
    except (RejectShape, RejectNotStandard) as exc:
        raise RejectNotStandard(f"concatenation is not standard: {exc}") from None


def concat_word(w1: VacillatingWord, w2: VacillatingWord) -> VacillatingWord:
    if sum(w1.letters) != 0:
        raise RejectInvalidResult("the first word must have weight ∅")
    try:
        return word_validate(w1.letters + w2.letters)
    except (RejectBelowAxis, RejectFlatOnAxis) as exc:
        raise RejectInvalidResult(str(exc)) from None


def evacuation(q: StandardYoungTableau) -> StandardYoungTableau:
    """Schützenberger evacuation: repeatedly delete the minimum and slide."""
    work = [list(r) for r in q.rows]
    out = [[0] * len(r) for r in q.rows]
    for k in range(q.size, 0, -1):
        i = j = 0
        while True:
            right = work[i][j + 1] if j + 1 < len(work[i]) else None
            down = work[i + 1][j] if i + 1 < len(work) and j < len(work[i + 1]) else None
            if right is None and down is None:
                break
            if down is None or (right is not None and right < down):
                work[i][j] = right
                j += 1
            else:
                work[i][j] = down
                i += 1
        work[i].pop()
        out[i][j] = k
    return syt(out)


def reverse_word(w: VacillatingWord) -> VacillatingWord:
    """The path read backwards: letters reversed and negated."""
    return VacillatingWord(tuple(-x for x in reversed(w.letters)))


def rows_parity(q: StandardYoungTableau, nrows: int = 3) -> set[int]:
    """Parities of the first nrows row lengths, empty rows counting as 0."""
    return {(len(q.rows[i]) if i < len(q.rows) else 0) % 2 for i in range(nrows)}
