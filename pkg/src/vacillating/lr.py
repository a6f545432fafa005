"""Explicit orthogonal Littlewood-Richardson tableaux for SO(3).

An LR tableau is stored as three columns: ``left`` (whose bottom ``mu1``
cells form the tail), ``middle`` and ``right``. Left and middle form a
two-column skew semistandard tableau; the right column is the single-column
factor. The lengths are

    len(middle) = b,  len(right) = c,  len(left) = b - a + mu1,

so ``a`` is the number of rows the middle column sticks out above the left
one. Nothing here uses crystal operators: validity is decided from the four
case descriptions and the gap rules alone, and the test suite compares the
result with the crystal definition.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterator

from .core import Partition
from .crystal import CrystalElement, TwoColumnSkew, residuum
from .errors import (
    RejectAmbiguous,
    RejectCaseConstraint,
    RejectGapRule,
    RejectNotLR,
    RejectSemistandard,
    RejectShapeTooLong,
    VacillatingError,
)

CASES = (1, 2, 3, 4)
LEFT, MIDDLE, RIGHT = 0, 1, 2


@dataclass(frozen=True)
class OrthLRTableau:
    left: tuple[int, ...]
    middle: tuple[int, ...]
    right: tuple[int, ...]
    mu1: int

    @property
    def b(self) -> int:
        return len(self.middle)

    @property
    def c(self) -> int:
        return len(self.right)

    @property
    def a(self) -> int:
        return self.b - (len(self.left) - self.mu1)

    @property
    def tail(self) -> tuple[int, ...]:
        return self.left[len(self.left) - self.mu1:]

    @property
    def columns(self) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        return (self.left, self.middle, self.right)

    @property
    def mu(self) -> Partition:
        return Partition((self.mu1,)) if self.mu1 else Partition()

    @cached_property
    def case(self) -> int:
        return classify_case(self)

    def skew(self) -> TwoColumnSkew:
        return TwoColumnSkew(self.left, self.middle, self.mu1)

    def lines(self) -> list[list[tuple[int, int]]]:
        """Line k lists (column, index in column) of the k-th occurrence of 1, 2, ...

        Occurrences are counted from the right column leftwards, so line 1
        starts in the right column whenever it is nonempty.
        """
        seen: Counter[int] = Counter()
        found: dict[tuple[int, int], tuple[int, int]] = {}
        for col in (RIGHT, MIDDLE, LEFT):
            for idx, v in enumerate(self.columns[col]):
                seen[v] += 1
                found[(seen[v], v)] = (col, idx)
        out = []
        for k in (1, 2, 3):
            line = []
            v = 1
            while (k, v) in found:
                line.append(found[(k, v)])
                v += 1
            if line:
                out.append(line)
        return out

    def line_cells(self) -> list[list[tuple[int, int]]]:
        """Like lines() but with (column, row) in the drawing coordinates of rows()."""
        rows = self.rows()
        return [[(col, rows[col][idx]) for col, idx in line] for line in self.lines()]

    def rows(self) -> tuple[list[int], list[int], list[int]]:
        """Row (1 = top) of every cell, drawn as in the four case pictures.

        The middle column's top is a rows above the left column's top; the
        right column is bottom-aligned with the middle one, except in Case 3
        where it ends one row higher.
        """
        b, c = self.b, self.c
        try:
            lift = 1 if self.case == 3 else 0
        except VacillatingError:
            lift = 0
        left = [self.a + 1 + i for i in range(len(self.left))]
        middle = [1 + i for i in range(b)]
        right = [b - lift - c + 1 + i for i in range(c)]
        top = min(left[:1] + middle[:1] + right[:1], default=1)
        shift = 1 - top
        return ([r + shift for r in left], [r + shift for r in middle], [r + shift for r in right])


def _content(t: OrthLRTableau) -> Counter[int]:
    return Counter(v for col in t.columns for v in col)


def _shape_from_content(t: OrthLRTableau) -> Partition:
    counts = _content(t)
    top = max(counts, default=0)
    conj = [counts.get(v, 0) for v in range(1, top + 1)]
    if any(y > x for x, y in zip(conj, conj[1:])) or (conj and conj[-1] == 0):
        raise RejectSemistandard(f"content {dict(sorted(counts.items()))} is not the conjugate of a partition")
    return Partition(tuple(conj)).conjugate()


def _check_geometry(t: OrthLRTableau) -> None:
    for name, col in zip(("left", "middle", "right"), t.columns):
        if any(v < 1 for v in col) or any(y <= x for x, y in zip(col, col[1:])):
            raise RejectSemistandard(f"{name} column {col} is not strictly increasing and positive")
    if not 0 <= t.mu1 <= len(t.left):
        raise RejectSemistandard(f"tail length {t.mu1} does not fit the left column")
    if t.a < 0:
        raise RejectSemistandard("the middle column is shorter than the non-tail part of the left column")
    if not t.skew().fits():
        raise RejectSemistandard("rows of the left and middle column are not weakly increasing")


def _case_matches(t: OrthLRTableau, lam: Partition) -> list[int]:
    a, b, c, mu1 = t.a, t.b, t.c, t.mu1
    res = residuum(t.skew())
    even = lambda x: x % 2 == 0  # noqa: E731
    found = []
    if even(a) and even(b) and even(c) and b <= c and res <= 1:
        found.append(1)
    if even(a) and even(b) and not even(c) and b < c and mu1 > 0 and lam.part(0) < c + mu1 and res <= 1:
        found.append(2)
    if even(a) and even(b) and not even(c) and res == 1 and lam.part(1) == b - 1 <= c and mu1 > 0 and a > 0:
        found.append(3)
    # Case 4 as drawn has line 1 filling the right column and line 2 the middle
    # one, so lambda_1 = c >= lambda_2 = b is part of the shape.
    if even(a) and not even(b) and not even(c) and mu1 == 0 and res == 0 and b <= c:
        found.append(4)
    return found


def _check_gaps(t: OrthLRTableau, case: int) -> None:
    a, b, c, mu1 = t.a, t.b, t.c, t.mu1
    if t.right != tuple(range(1, c + 1)):
        raise RejectGapRule(f"right column {t.right} has a gap")
    if case == 3:
        want = tuple(range(1, b)) + (c + 1,)
        if t.middle != want:
            raise RejectGapRule(f"Case 3 middle column must be {want}, got {t.middle}")
    elif t.middle != tuple(range(1, b + 1)):
        raise RejectGapRule(f"middle column {t.middle} has a gap")
    head = t.left[: len(t.left) - mu1]
    if head != tuple(range(1, b - a + 1)):
        raise RejectGapRule(f"left column above the tail must be 1..{b - a}, got {head}")
    tail = t.tail
    if case == 3:
        want = (b - a + 1,) + tuple(range(c + 2, c + mu1 + 1))
        if tail != want:
            raise RejectGapRule(f"Case 3 tail must be {want}, got {tail}")
        return
    tops = {col[-1] for col in (t.middle, t.right) if col}
    for j in tail:
        if j > 1 and j - 1 not in t.left and j - 1 not in tops:
            raise RejectGapRule(f"tail entry {j} is a gap but {j - 1} ends no column to the right")
    if case == 2 and tail[0] > c:
        raise RejectGapRule(f"Case 2 tail starts at {tail[0]} > c = {c}")


def classify_case(t: OrthLRTableau) -> int:
    """The case (1-4) whose numeric constraints the tableau satisfies."""
    _check_geometry(t)
    lam = _shape_from_content(t)
    found = _case_matches(t, lam)
    if not found:
        raise RejectCaseConstraint(
            f"a={t.a}, b={t.b}, c={t.c}, mu1={t.mu1}, residuum={residuum(t.skew())} match no case"
        )
    if len(found) > 1:
        raise RejectAmbiguous(f"constraints of cases {found} all hold")
    return found[0]


def validate_lr(t: OrthLRTableau) -> tuple[Partition, Partition]:
    """Check every constraint and return (lambda, mu)."""
    lam = _shape_from_content(t)
    if len(lam) > 3:
        raise RejectSemistandard(f"content gives lambda = {lam} with more than three parts")
    _check_gaps(t, classify_case(t))
    return lam, t.mu


def is_valid_lr(t: OrthLRTableau) -> bool:
    try:
        validate_lr(t)
    except VacillatingError:
        return False
    return True


def _candidates(lam: Partition, mu1: int) -> Iterator[OrthLRTableau]:
    conj = Counter({v: n for v, n in enumerate(lam.conjugate().parts, 1)})
    lam1 = lam.part(0)
    for c in range(lam1 + 1):
        right = tuple(range(1, c + 1))
        for b in range(lam1 + 1):
            middles = [tuple(range(1, b + 1))]
            if 1 <= b <= c < lam1:
                middles.append(tuple(range(1, b)) + (c + 1,))
            for middle in middles:
                rest = conj - Counter(right) - Counter(middle)
                if sum(rest.values()) + len(right) + len(middle) != lam.size:
                    continue  # right or middle uses a value more often than the content allows
                if any(n > 1 for n in rest.values()):
                    continue
                left = tuple(sorted(rest))
                if len(left) < mu1:
                    continue
                yield OrthLRTableau(left, middle, right, mu1)


def _sort_key(t: OrthLRTableau) -> tuple:
    return (t.case, t.a, t.b, t.c, t.left, t.middle)


def enumerate_lr(lam: Partition, mu: Partition) -> list[OrthLRTableau]:
    """All LR tableaux with shape lam and weight mu, ordered by case then shape.

    The right column and the middle column are determined by (c, b) and, in
    Case 3, the choice of the gap entry; the content then forces the left
    column, so the candidates are few and each is run through validate_lr.
    """
    if len(lam) > 3 or len(mu) > 1:
        raise RejectShapeTooLong(f"need l(lambda) <= 3 and l(mu) <= 1, got {lam}, {mu}")
    out = []
    for t in _candidates(lam, mu.part(0)):
        try:
            shape, _ = validate_lr(t)
        except VacillatingError:
            continue
        if shape == lam:
            out.append(t)
    out.sort(key=_sort_key)
    return out


def lr_to_crystal(t: OrthLRTableau) -> CrystalElement:
    try:
        validate_lr(t)
    except VacillatingError as exc:
        raise RejectNotLR(str(exc)) from None
    return CrystalElement(t.skew(), t.right)


def crystal_to_lr(e: CrystalElement) -> OrthLRTableau:
    t = OrthLRTableau(e.skew.left, e.skew.right, e.column, e.skew.offset)
    try:
        validate_lr(t)
    except VacillatingError as exc:
        raise RejectNotLR(str(exc)) from None
    return t


def lr_to_json(t: OrthLRTableau) -> dict[str, Any]:
    rows = t.rows()
    try:
        case: int | None = t.case
    except VacillatingError:
        case = None
    return {
        "a": t.a,
        "b": t.b,
        "c": t.c,
        "mu1": t.mu1,
        "case": case,
        "columns": [
            [{"entry": v, "row": r} for v, r in zip(col, rows[k])] for k, col in enumerate(t.columns)
        ],
    }


def lr_from_json(data: dict[str, Any]) -> OrthLRTableau:
    """Accepts the lr_to_json layout or the short form {left, middle, right, mu1}."""
    if "columns" in data:
        cols = [tuple(cell["entry"] for cell in col) for col in data["columns"]]
        left, middle, right = cols
    else:
        left, middle, right = (tuple(data.get(k, ())) for k in ("left", "middle", "right"))
    return OrthLRTableau(tuple(left), tuple(middle), tuple(right), int(data.get("mu1", 0)))


def render_lr(t: OrthLRTableau) -> str:
    """ASCII drawing: left and middle column side by side, right column apart."""
    rows = t.rows()
    height = max((r for col in rows for r in col), default=0)
    width = max((len(str(v)) for col in t.columns for v in col), default=1)
    grid = [[" " * width for _ in range(3)] for _ in range(height)]
    for k, col in enumerate(t.columns):
        for v, r in zip(col, rows[k]):
            grid[r - 1][k] = str(v).rjust(width)
    tail_start = len(t.left) - t.mu1
    tail_rows = set(rows[LEFT][tail_start:])
    lines = []
    for i, (l, m, r) in enumerate(grid, 1):
        mark = "*" if i in tail_rows else " "
        lines.append(f"{l}{mark}{m}   {r}".rstrip())
    return "\n".join(lines)
