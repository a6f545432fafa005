"""One-column crystals, the signature rule, and the crystals B^d(mu), T^d(mu).

Columns are plain tuples of strictly increasing positive integers. A tensor
product b1 ⊗ b2 ⊗ b3 is a tuple of columns read left to right; the elements of
B^d(mu) are the triples (left column, right column, single column).
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .core import Partition
from .errors import RejectShapeTooLong, VacillatingError

Column = tuple[int, ...]


def one_column_validate(entries: Iterable[int]) -> Column:
    col = tuple(entries)
    if any(e < 1 for e in col) or any(y <= x for x, y in zip(col, col[1:])):
        raise VacillatingError(f"{col} is not a strictly increasing column of positive integers")
    return col


def one_column_f(col: Column, i: int) -> Column | None:
    if i == 0:
        if 1 in col or 2 in col:
            return None
        return (1, 2) + col
    if i in col and i + 1 not in col:
        return tuple(i + 1 if e == i else e for e in col)
    return None


def one_column_e(col: Column, i: int) -> Column | None:
    if i == 0:
        if len(col) >= 2 and col[0] == 1 and col[1] == 2:
            return col[2:]
        return None
    if i + 1 in col and i not in col:
        return tuple(i if e == i + 1 else e for e in col)
    return None


def one_column_phi(col: Column, i: int) -> int:
    return 0 if one_column_f(col, i) is None else 1


def one_column_eps(col: Column, i: int) -> int:
    return 0 if one_column_e(col, i) is None else 1


def _reduced_signature(factors: Sequence[Column], i: int) -> list[tuple[str, int]]:
    """Signs (with owning factor) left after cancelling adjacent '-,+' pairs."""
    stack: list[tuple[str, int]] = []
    for k, col in enumerate(factors):
        signs = [("+", k)] * one_column_phi(col, i) + [("-", k)] * one_column_eps(col, i)
        for s in signs:
            if s[0] == "+" and stack and stack[-1][0] == "-":
                stack.pop()
            else:
                stack.append(s)
    return stack


def tensor_phi(factors: Sequence[Column], i: int) -> int:
    return sum(1 for s, _ in _reduced_signature(factors, i) if s == "+")


def tensor_eps(factors: Sequence[Column], i: int) -> int:
    return sum(1 for s, _ in _reduced_signature(factors, i) if s == "-")


def tensor_f(factors: Sequence[Column], i: int) -> tuple[int, tuple[Column, ...]] | None:
    """Act with f_i on the factor owning the rightmost surviving '+'."""
    plus = [k for s, k in _reduced_signature(factors, i) if s == "+"]
    if not plus:
        return None
    k = plus[-1]
    new = list(factors)
    new[k] = one_column_f(factors[k], i)
    return k, tuple(new)


def tensor_e(factors: Sequence[Column], i: int) -> tuple[int, tuple[Column, ...]] | None:
    """Act with e_i on the factor owning the leftmost surviving '-'."""
    minus = [k for s, k in _reduced_signature(factors, i) if s == "-"]
    if not minus:
        return None
    k = minus[0]
    new = list(factors)
    new[k] = one_column_e(factors[k], i)
    return k, tuple(new)


@dataclass(frozen=True)
class TwoColumnSkew:
    """Two columns of a skew tableau.

    ``offset`` is the number of cells of the left column lying below the
    bottom cell of the right column, i.e. the tail length. When the right
    column sits entirely above the left one it is taken to end directly above
    the left column's top cell.
    """

    left: Column
    right: Column
    offset: int

    @property
    def tail(self) -> int:
        return self.offset

    @property
    def top_gap(self) -> int:
        """Cells of the right column above the top of the left column."""
        return len(self.right) - (len(self.left) - self.offset)

    def fits(self, shift: int = 0) -> bool:
        """Is this a skew semistandard tableau after moving the right column down by shift?"""
        a = self.top_gap - shift
        if a < 0 or self.offset - shift < 0 or self.offset > len(self.left):
            return False
        left, right = self.left, self.right
        for j in range(max(a, 0), len(right)):
            row = j - a
            if row >= len(left):
                break
            if left[row] > right[j]:
                return False
        return True


def residuum(t: TwoColumnSkew) -> int:
    if not t.right:
        return 0
    best = 0
    for d in range(1, min(t.top_gap, t.offset) + 1):
        if t.fits(d):
            best = d
    return best


@dataclass(frozen=True)
class CrystalElement:
    skew: TwoColumnSkew
    column: Column

    @property
    def factors(self) -> tuple[Column, Column, Column]:
        return (self.skew.left, self.skew.right, self.column)

    def key(self) -> tuple:
        return (self.skew.left, self.skew.right, self.skew.offset, self.column)

    def entries(self) -> Iterable[int]:
        yield from self.skew.left
        yield from self.skew.right
        yield from self.column


def in_Bd(e: CrystalElement, mu1: int) -> bool:
    s = e.skew
    return s.offset == mu1 and s.fits() and residuum(s) <= 1


def highest_weights(mu: Partition) -> list[CrystalElement]:
    if len(mu) > 1:
        raise RejectShapeTooLong(f"{mu} has more than one part")
    m = mu.part(0)
    tail = tuple(range(1, m + 1))
    seeds = [CrystalElement(TwoColumnSkew(tail, (), m), ())]
    if m > 0:
        seeds.append(CrystalElement(TwoColumnSkew(tail, (), m), (1,)))
    else:
        seeds.append(CrystalElement(TwoColumnSkew((1,), (1,), 0), (1,)))
    return seeds


def apply_f(e: CrystalElement, i: int) -> CrystalElement | None:
    """f_i inside B^d(mu): the tensor action, or None if it leaves B^d(mu)."""
    res = tensor_f(e.factors, i)
    if res is None:
        return None
    left, right, col = res[1]
    out = CrystalElement(TwoColumnSkew(left, right, e.skew.offset), col)
    return out if in_Bd(out, e.skew.offset) else None


def apply_e(e: CrystalElement, i: int) -> CrystalElement | None:
    res = tensor_e(e.factors, i)
    if res is None:
        return None
    left, right, col = res[1]
    out = CrystalElement(TwoColumnSkew(left, right, e.skew.offset), col)
    return out if in_Bd(out, e.skew.offset) else None


def _bounded(e: CrystalElement, cap: int, max_cells: int | None) -> bool:
    if max_cells is not None and len(e.skew.left) + len(e.skew.right) + len(e.column) > max_cells:
        return False
    return all(x <= cap for x in e.entries())


def crystal_graph(
    mu: Partition, entry_cap: int, max_cells: int | None = None
) -> tuple[list[CrystalElement], list[tuple[int, int, int]]]:
    """Vertices (BFS order) and labelled edges (src, dst, i) of the truncated T^d(mu).

    Both truncations are closed downward along f-paths: the largest entry and
    the number of cells never decrease when an f_i is applied, so every
    retained element is reached through retained elements only.
    """
    if entry_cap < 1:
        raise VacillatingError("entry_cap must be at least 1")
    seeds = [s for s in highest_weights(mu) if _bounded(s, entry_cap, max_cells)]
    index: dict[tuple, int] = {}
    order: list[CrystalElement] = []
    edges: list[tuple[int, int, int]] = []
    queue = deque()
    for s in seeds:
        index[s.key()] = len(order)
        order.append(s)
        queue.append(s)
    while queue:
        cur = queue.popleft()
        src = index[cur.key()]
        for i in range(entry_cap):
            nxt = apply_f(cur, i)
            if nxt is None or not _bounded(nxt, entry_cap, max_cells):
                continue
            k = nxt.key()
            if k not in index:
                index[k] = len(order)
                order.append(nxt)
                queue.append(nxt)
            edges.append((src, index[k], i))
    return order, edges


def generate_Td(mu: Partition, entry_cap: int, max_cells: int | None = None) -> set[CrystalElement]:
    return set(crystal_graph(mu, entry_cap, max_cells)[0])


_TD_CACHE: dict[tuple[int, int, int], tuple[CrystalElement, ...]] = {}


def _mask_tuple(m: int, _cache: dict[int, Column] = {}) -> Column:
    col = _cache.get(m)
    if col is None:
        col = tuple(v + 1 for v in range(m.bit_length()) if m >> v & 1)
        _cache[m] = col
    return col


def _mask_closure(mu1: int, cap: int, max_cells: int | None) -> list[tuple[int, int, int]]:
    """Same vertex set as crystal_graph, over bitmask columns (bit v-1 <-> entry v).

    This is the hot loop of lr_crystal; crystal_graph stays the readable
    reference and the two are compared in the test suite.
    """
    mu = Partition((mu1,)) if mu1 else Partition()
    limit = max_cells if max_cells is not None else 3 * cap
    seen: set[tuple[int, int, int]] = set()
    queue: deque[tuple[int, int, int]] = deque()
    for e in highest_weights(mu):
        masks = tuple(sum(1 << (v - 1) for v in col) for col in e.factors)
        if max(masks).bit_length() <= cap and sum(m.bit_count() for m in masks) <= limit:
            seen.add(masks)
            queue.append(masks)
    while queue:
        cur = queue.popleft()
        for i in range(cap):
            if i == 0:
                signs = ["+" if not m & 3 else "-" if m & 3 == 3 else "" for m in cur]
            else:
                lo, hi = 1 << (i - 1), 1 << i
                signs = ["+" if m & lo and not m & hi else "-" if m & hi and not m & lo else "" for m in cur]
            stack: list[tuple[str, int]] = []
            for k, sg in enumerate(signs):
                if sg == "+" and stack and stack[-1][0] == "-":
                    stack.pop()
                elif sg:
                    stack.append((sg, k))
            plus = [k for sg, k in stack if sg == "+"]
            if not plus:
                continue
            k = plus[-1]
            new = list(cur)
            new[k] = cur[k] | 3 if i == 0 else cur[k] ^ (3 << (i - 1))
            nxt = (new[0], new[1], new[2])
            if nxt in seen or new[k].bit_length() > cap:
                continue
            if sum(m.bit_count() for m in nxt) > limit:
                continue
            skew = TwoColumnSkew(_mask_tuple(nxt[0]), _mask_tuple(nxt[1]), mu1)
            if not skew.fits() or residuum(skew) > 1:
                continue
            seen.add(nxt)
            queue.append(nxt)
    return list(seen)


def _td_cached(mu1: int, cap: int, cells: int) -> tuple[CrystalElement, ...]:
    key = (mu1, cap, cells)
    if key not in _TD_CACHE:
        _TD_CACHE[key] = tuple(
            CrystalElement(TwoColumnSkew(_mask_tuple(l), _mask_tuple(r), mu1), _mask_tuple(c))
            for l, r, c in _mask_closure(mu1, cap, cells)
        )
    return _TD_CACHE[key]


def content(e: CrystalElement) -> Partition:
    counts: dict[int, int] = {}
    for x in e.entries():
        counts[x] = counts.get(x, 0) + 1
    top = max(counts, default=0)
    return Partition(tuple(counts.get(v, 0) for v in range(1, top + 1)))


def is_lr_element(e: CrystalElement, lam: Partition) -> bool:
    if content(e) != lam.conjugate():
        return False
    return all(tensor_eps(e.factors, i) == 0 for i in range(1, lam.part(0) + 1))


def _lr_candidates(lam: Partition, mu1: int) -> Iterator[CrystalElement]:
    """Triples of columns with content lam' and every i-signature free of '-'."""
    counts = lam.conjugate().parts
    cols: list[list[int]] = [[], [], []]

    def place(v: int) -> Iterator[CrystalElement]:
        if v > len(counts):
            e = CrystalElement(TwoColumnSkew(tuple(cols[0]), tuple(cols[1]), mu1), tuple(cols[2]))
            if in_Bd(e, mu1) and all(tensor_eps(e.factors, i) == 0 for i in range(1, len(counts) + 1)):
                yield e
            return
        for where in combinations(range(3), counts[v - 1]):
            for k in where:
                cols[k].append(v)
            yield from place(v + 1)
            for k in where:
                cols[k].pop()

    yield from place(1)


def _raises_to_seed(e: CrystalElement, mu1: int, seeds: set[tuple]) -> bool:
    """Whether some chain of e-operators inside B^d(mu) reaches a seed.

    e_0 removes two cells and e_i (i >= 1) lowers an entry, so the search is
    finite. Reaching a seed this way is the same as being reached from it by f's.
    """
    seen = {e.key()}
    stack = [e]
    while stack:
        cur = stack.pop()
        if cur.key() in seeds:
            return True
        top = max(cur.entries(), default=0)
        for i in range(top + 1):
            nxt = apply_e(cur, i)
            if nxt is not None and nxt.key() not in seen:
                seen.add(nxt.key())
                stack.append(nxt)
    return False


def lr_crystal(lam: Partition, mu: Partition) -> set[CrystalElement]:
    """LR tableaux of T^d(mu) of content lam'.

    Candidates of the right content and ε are listed directly, then kept only if
    they lie in the connected part of B^d(mu) generated from its highest weights.
    """
    if len(lam) > 3 or len(mu) > 1:
        raise RejectShapeTooLong(f"need l(lambda) <= 3 and l(mu) <= 1, got {lam}, {mu}")
    mu1 = mu.part(0)
    seeds = {h.key() for h in highest_weights(mu)}
    return {e for e in _lr_candidates(lam, mu1) if _raises_to_seed(e, mu1, seeds)}


def lr_crystal_bfs(lam: Partition, mu: Partition) -> set[CrystalElement]:
    """Same set as lr_crystal, filtered out of the full truncated crystal."""
    if len(lam) > 3 or len(mu) > 1:
        raise RejectShapeTooLong(f"need l(lambda) <= 3 and l(mu) <= 1, got {lam}, {mu}")
    cap = max(lam.part(0), 1)
    return {e for e in _td_cached(mu.part(0), cap, lam.size) if is_lr_element(e, lam)}


def is_highest_weight(e: CrystalElement, cap: int) -> bool:
    return all(apply_e(e, i) is None for i in range(cap))


def export_dot(mu: Partition, entry_cap: int, lam: Partition | None = None) -> str:
    """Graphviz rendering of the truncated crystal; LR tableaux are filled."""
    order, edges = crystal_graph(mu, entry_cap)
    lines = ["digraph Td {", "  node [shape=box, fontname=monospace];"]
    for k, e in enumerate(order):
        s = e.skew
        label = f"{_fmt(s.left)} | {_fmt(s.right)} ⊗ {_fmt(e.column)}"
        hit = lam is not None and is_lr_element(e, lam)
        style = ', style=filled, fillcolor="lightblue"' if hit else ""
        lines.append(f'  n{k} [label="{label}"{style}];')
    for src, dst, i in edges:
        lines.append(f'  n{src} -> n{dst} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _fmt(col: Column) -> str:
    return "[" + ",".join(map(str, col)) + "]"
