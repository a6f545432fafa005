"""Word -> SYT without labeled-word surgery: the arc diagram and the four-counter fold.

``algo5`` builds the arc diagram step by step and is kept for validation and
for exporting diagrams; ``algo6`` is the production path, a single pass
carrying four counters.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any

from .core import (
    StandardYoungTableau,
    VacillatingWord,
    concat_syt,
    evacuation,
    reverse_word,
    syt,
    syt_validate,
    word_validate,
)
from .errors import RejectBelowAxis, RejectFlatOnAxis, RejectInvalidWord, RejectShape, VacillatingError

ORDINARY, DOUBLE, MARKED = "ordinary", "double", "marked"


def _checked(w: VacillatingWord) -> VacillatingWord:
    try:
        return word_validate(w.letters)
    except (RejectBelowAxis, RejectFlatOnAxis) as exc:
        raise RejectInvalidWord(str(exc)) from None


# ---------------------------------------------------------------- Algorithm 5


@dataclass
class ArcState:
    """Arc diagram under construction. Steps are numbered from 1."""

    rows: list[int] = field(default_factory=list)
    open_out: list[tuple[int, str, int]] = field(default_factory=list)  # (step, kind, entry)
    open_in: list[tuple[int, int]] = field(default_factory=list)  # (step, entry)
    closed: list[tuple[int, int, str]] = field(default_factory=list)  # (from, to, kind)

    @property
    def odm(self) -> int:
        return sum(1 for _, kind, _ in self.open_out if kind != ORDINARY)

    def admissible(self, incoming: tuple[int, int]) -> list[int]:
        """Indices into open_out that this incoming half-edge may connect to."""
        step, entry = incoming
        odm = self.odm
        out = []
        for k, (src, kind, src_entry) in enumerate(self.open_out):
            if src >= step:
                continue
            if src_entry == -1 and odm > 0:
                continue
            if entry == 0 and kind != ORDINARY:
                continue
            if entry == -1 and self.rows[step - 1] == 3 and kind == ORDINARY:
                continue  # a third-row -1 closes a double or marked edge
            out.append(k)
        return out

    def connect_all(self, rng: random.Random | None) -> None:
        while True:
            options = [(j, k) for j, inc in enumerate(self.open_in) for k in self.admissible(inc)]
            if not options:
                return
            if rng is None:
                j = options[0][0]
                k = min(k for jj, k in options if jj == j)
            else:
                j, k = rng.choice(options)
            step, _ = self.open_in.pop(j)
            src, kind, _ = self.open_out.pop(k)
            self.closed.append((src, step, kind))


def _active_count(letters: tuple[int, ...], start: int) -> int:
    """Number of 0's from index start up to the next 1 or the end."""
    n = 0
    for x in letters[start:]:
        if x == 1:
            break
        n += x == 0
    return n


def _algo5_state(w: VacillatingWord, rng: random.Random | None = None) -> ArcState:
    letters = _checked(w).letters
    st = ArcState()
    h = 0
    active_from: int | None = None  # index where the current active run began
    for i, x in enumerate(letters):
        step = i + 1
        odm, ce = st.odm, len(st.closed)
        kinds: list[str] = []  # outgoing half-edge kinds; "in" for incoming
        if x == 1:
            active_from = None
            row, kinds = 1, [ORDINARY]
        elif x == 0:
            level = h
            if odm + 1 < level:
                row, kinds = 2, ["in", DOUBLE]
            elif odm + 1 == level:
                if active_from is None:
                    active_from = i
                count = _active_count(letters, active_from)
                if level % 2 != ce % 2:
                    row, kinds = 2, (["in", DOUBLE] if count % 2 else ["in"])
                else:
                    row, kinds = 1, [MARKED if count % 2 else ORDINARY]
            else:
                row, kinds = 1, [ORDINARY]
        else:
            level = h - 1
            if odm > 0:
                row, kinds = 3, ["in"]
            elif level > 0 or ce % 2:
                row, kinds = 2, ["in"]
            else:
                row, kinds = 1, [ORDINARY]
        h += x
        st.rows.append(row)
        if "in" in kinds:
            st.open_in.append((step, x))
        for kind in kinds:
            if kind != "in":
                st.open_out.append((step, kind, x))
        st.connect_all(rng)
        if h == 0:
            assert st.odm == 0, f"open double or marked edge at level 0 after step {step}"
    return st


def _rows_to_syt(rows: list[int]) -> StandardYoungTableau:
    out: list[list[int]] = [[], [], []]
    for step, row in enumerate(rows, 1):
        out[row - 1].append(step)
    return syt(out)


def algo5(w: VacillatingWord, rng: random.Random | None = None) -> StandardYoungTableau:
    """Rows from the arc diagram; rng switches connections from FCFS to random."""
    return _rows_to_syt(_algo5_state(w, rng).rows)


def arc_diagram(w: VacillatingWord, rng: random.Random | None = None) -> dict[str, Any]:
    st = _algo5_state(w, rng)
    return {
        "word": list(w.letters),
        "steps": [{"step": i + 1, "entry": x, "row": r} for i, (x, r) in enumerate(zip(w.letters, st.rows))],
        "edges": [{"from": a, "to": b, "kind": k} for a, b, k in sorted(st.closed)],
        "open_outgoing": [{"from": a, "kind": k} for a, k, _ in st.open_out],
        "open_incoming": [{"to": a} for a, _ in st.open_in],
    }


# ---------------------------------------------------------------- Algorithm 6


@dataclass(frozen=True)
class AutomatonState:
    a0: int = 0
    odm: int = 0
    h: int = 0
    ce: int = 0


def step6(s: AutomatonState, x: int) -> tuple[AutomatonState, int]:
    """One letter of the fold; returns the new state and the row (1-3)."""
    a0, odm, h, ce = s.a0, s.odm, s.h, s.ce
    if x == 1:
        if a0 % 2:
            odm += 1
        return AutomatonState(0, odm, h + 1, ce), 1
    if x == 0:
        if odm < h - 1:
            return AutomatonState(a0, odm + 1, h, ce + 1), 2
        a0 += 1
        if odm == h - 1 and h % 2 != ce % 2:
            return AutomatonState(a0, odm, h, ce + 1), 2
        return AutomatonState(a0, odm, h, ce), 1
    h -= 1
    if a0 % 2 and h == 0:
        odm += 1
        a0 = 0
    if odm > 0:
        return AutomatonState(a0, odm - 1, h, ce + 1), 3
    if h > 0 or ce % 2:
        return AutomatonState(a0, odm, h, ce + 1), 2
    return AutomatonState(a0, odm, h, ce), 1


def algo6(w: VacillatingWord) -> StandardYoungTableau:
    s = AutomatonState()
    rows = []
    for x in _checked(w).letters:
        s, row = step6(s, x)
        rows.append(row)
    return _rows_to_syt(rows)


def algo6_prefixes(w: VacillatingWord) -> list[StandardYoungTableau]:
    """algo6 of every nonempty prefix, built in one pass."""
    s = AutomatonState()
    out: list[list[int]] = [[], [], []]
    result = []
    for step, x in enumerate(_checked(w).letters, 1):
        s, row = step6(s, x)
        out[row - 1].append(step)
        result.append(syt(out))
    return result


# ---------------------------------------------------------------- properties


def check_concatenation(w1: VacillatingWord, w2: VacillatingWord) -> bool:
    return algo6(w1 + w2) == concat_syt(algo6(w1), algo6(w2))


def _two_odd_rows(q: StandardYoungTableau) -> bool:
    return len(q.rows) == 2 and all(len(r) % 2 for r in q.rows)


def dyck_by_decomposition(q: StandardYoungTableau) -> bool:
    """True iff q is not Q1 ++ Q2 with Q1 and Q2 both having two odd rows."""
    n = q.size
    for k in range(1, n):
        try:
            low = syt_validate([e for e in r if e <= k] for r in q.rows)
            high = syt_validate([e - k for e in r if e > k] for r in q.rows)
        except VacillatingError:
            continue
        if _two_odd_rows(low) and _two_odd_rows(high):
            return False
    return True


def is_dyck_preimage(q: StandardYoungTableau) -> bool:
    """Whether the word of q has no 0 steps; q must have at most 2 even rows.

    The answer is read off the forward image and checked against the
    decomposition criterion.
    """
    from .forward import algo3_insert

    if len(q.rows) > 2 or any(len(r) % 2 for r in q.rows):
        raise RejectShape(f"need at most 2 rows of even length, got {q.shape}")
    direct = 0 not in algo3_insert(q).letters
    if direct != dyck_by_decomposition(q):
        raise AssertionError(f"Dyck criteria disagree on {q}")
    return direct


def word_of_syt(q: StandardYoungTableau) -> VacillatingWord:
    """Word of a tableau with at most 3 rows, all even or three odd ones."""
    from .forward import ExpandedTableau, algo3_insert, pad_parity, strip_suffix
    from .core import Partition

    e = pad_parity(ExpandedTableau(q, Partition()))
    return strip_suffix(algo3_insert(e.tableau), e.added_parity_triple, Partition())


def check_evacuation_conjecture(q: StandardYoungTableau) -> bool:
    """Whether word(evacuation(q)) is the reversed word of q (weight 0 only)."""
    lengths = [len(q.rows[i]) if i < len(q.rows) else 0 for i in range(3)]
    if len(q.rows) > 3 or len({n % 2 for n in lengths}) > 1:
        raise RejectShape(f"need at most 3 rows all even or all odd, got {q.shape}")
    return word_of_syt(evacuation(q)) == reverse_word(word_of_syt(q))
