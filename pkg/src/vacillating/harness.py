"""Verification suites, the descent-multiset identity and the small-r table."""

from __future__ import annotations

import json
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Iterable

from .arcs import (
    algo5,
    algo6,
    algo6_prefixes,
    check_concatenation,
    check_evacuation_conjecture,
    is_dyck_preimage,
)
from .core import (
    Partition,
    StandardYoungTableau,
    VacillatingWord,
    enumerate_syt,
    enumerate_vacillating,
    partitions_of,
    syt,
    syt_descents,
    word_descents,
)
from .crystal import lr_crystal
from .errors import RejectShapeTooLong
from .forward import algo1_expand, algo3_insert, forward
from .inverse import algo4_extract, inverse
from .lr import OrthLRTableau, enumerate_lr, lr_to_crystal, lr_to_json

SUITES = (
    "roundtrip",
    "descents",
    "cardinality",
    "equivalence",
    "concatenation",
    "dyck",
    "prefix",
    "suffix",
    "crystal-vs-explicit",
    "evacuation-report",
)


@dataclass
class VerificationReport:
    suite: str
    params: dict[str, Any]
    cases: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    duration: float = 0.0
    counts: dict[str, int] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    parts: list[VerificationReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and all(p.passed for p in self.parts)

    def to_json(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "params": self.params,
            "passed": self.passed,
            "cases": self.cases,
            "failures": self.failures,
            "duration": round(self.duration, 3),
            "counts": self.counts,
            "notes": self.notes,
            "parts": [p.to_json() for p in self.parts],
        }

    def summary(self) -> str:
        head = f"{self.suite}: {'PASS' if self.passed else 'FAIL'} ({self.cases} cases, {self.duration:.2f}s)"
        lines = [head] + [f"  {n}" for n in self.notes]
        lines += [f"  failure: {json.dumps(f)}" for f in self.failures[:5]]
        for p in self.parts:
            lines += ["  " + s for s in p.summary().splitlines()]
        return "\n".join(lines)


def _mu(m: int) -> Partition:
    return Partition((m,)) if m else Partition()


def _q(q: StandardYoungTableau) -> list[list[int]]:
    return q.to_lists()


def _pair_json(q: StandardYoungTableau, lr: OrthLRTableau) -> dict[str, Any]:
    return {"q": _q(q), "lr": lr_to_json(lr)}


def pairs(r: int, mu: Partition) -> list[tuple[StandardYoungTableau, OrthLRTableau]]:
    """All (Q, L) with |Q| = r and L of weight mu, in a fixed order."""
    return [
        (q, lr)
        for lam in sorted(partitions_of(r, 3), key=lambda p: p.parts)
        for lr in enumerate_lr(lam, mu)
        for q in enumerate_syt(lam)
    ]


def frobenius_descent_multisets(r: int, mu: Partition) -> tuple[Counter, Counter, bool]:
    if len(mu) > 1:
        raise RejectShapeTooLong(f"weight {mu} has more than one part")
    lhs = Counter(word_descents(w) for w in enumerate_vacillating(r, mu))
    rhs: Counter = Counter()
    for lam in partitions_of(r, 3):
        mult = len(enumerate_lr(lam, mu))
        if mult:
            for q in enumerate_syt(lam):
                rhs[syt_descents(q)] += mult
    return lhs, rhs, lhs == rhs


# ---------------------------------------------------------------- per-(r, mu) work units


def _roundtrip(r: int, m: int) -> tuple[int, list[dict]]:
    mu = _mu(m)
    fails: list[dict] = []
    words = enumerate_vacillating(r, mu)
    for w in words:
        try:
            q, lr = inverse(w)
            back = forward(q, lr)
        except Exception as exc:  # reported, not raised
            fails.append({"word": list(w), "error": repr(exc)})
            continue
        if back != w:
            fails.append({"word": list(w), "forward_of_inverse": list(back)})
    ps = pairs(r, mu)
    for q, lr in ps:
        try:
            back = inverse(forward(q, lr))
        except Exception as exc:
            fails.append({**_pair_json(q, lr), "error": repr(exc)})
            continue
        if back != (q, lr):
            fails.append({**_pair_json(q, lr), "inverse_of_forward": _pair_json(*back)})
    return len(words) + len(ps), fails


def _descents(r: int, m: int) -> tuple[int, list[dict]]:
    mu = _mu(m)
    fails: list[dict] = []
    ps = pairs(r, mu)
    for q, lr in ps:
        w = forward(q, lr)
        if word_descents(w) != syt_descents(q):
            fails.append({**_pair_json(q, lr), "word": list(w)})
    lhs, rhs, equal = frobenius_descent_multisets(r, mu)
    if not equal:
        fails.append({"r": r, "mu": list(mu), "words_only": sorted(map(list, lhs - rhs)), "pairs_only": sorted(map(list, rhs - lhs))})
    return len(ps) + 1, fails


def _cardinality(r: int, m: int) -> tuple[int, list[dict]]:
    mu = _mu(m)
    words = len(enumerate_vacillating(r, mu))
    total = sum(len(enumerate_lr(lam, mu)) * len(enumerate_syt(lam)) for lam in partitions_of(r, 3))
    return 1, ([] if words == total else [{"r": r, "mu": list(mu), "words": words, "pairs": total}])


def _equivalence(r: int, m: int) -> tuple[int, list[dict]]:
    if m or r % 2:
        return 0, []
    fails = []
    words = enumerate_vacillating(r, Partition())
    for w in words:
        q4, q5, q6 = algo4_extract(w), algo5(w), algo6(w)
        if not q4 == q5 == q6:
            fails.append({"word": list(w), "algo4": _q(q4), "algo5": _q(q5), "algo6": _q(q6)})
    return len(words), fails


def _prefix(r: int, m: int) -> tuple[int, list[dict]]:
    fails = []
    words = enumerate_vacillating(r, _mu(m))
    for w in words:
        pre = algo6_prefixes(w)
        for i, t in enumerate(pre):
            if t != algo6(VacillatingWord(w.letters[: i + 1])):
                fails.append({"word": list(w), "prefix": i + 1})
                break
            if i and pre[i - 1] != syt([e for e in row if e <= i] for row in t.rows):
                fails.append({"word": list(w), "drop_largest": i + 1})
                break
    return len(words), fails


def _crystal(r: int, m: int) -> tuple[int, list[dict]]:
    fails = []
    mu = _mu(m)
    n = 0
    for lam in partitions_of(r, 3):
        crystal = {e.key() for e in lr_crystal(lam, mu)}
        explicit = {lr_to_crystal(t).key() for t in enumerate_lr(lam, mu)}
        n += 1
        if crystal != explicit:
            fails.append(
                {
                    "lambda": list(lam),
                    "mu": list(mu),
                    "crystal_only": sorted(map(repr, crystal - explicit)),
                    "explicit_only": sorted(map(repr, explicit - crystal)),
                }
            )
    return n, fails


_UNITS: dict[str, Callable[[int, int], tuple[int, list[dict]]]] = {
    "roundtrip": _roundtrip,
    "descents": _descents,
    "cardinality": _cardinality,
    "equivalence": _equivalence,
    "prefix": _prefix,
}


def _run_unit(args: tuple[str, int, int]) -> tuple[int, list[dict]]:
    name, r, m = args
    return _UNITS[name](r, m)


# ---------------------------------------------------------------- suites


def even_rowed_syt(max_cells: int, max_rows: int = 3) -> Iterable[StandardYoungTableau]:
    for n in range(0, max_cells + 1, 2):
        for lam in partitions_of(n, max_rows):
            if all(p % 2 == 0 for p in lam.parts):
                yield from enumerate_syt(lam)


def _horizontal_strip_tail(q: StandardYoungTableau, m: int) -> bool:
    n = q.size
    cells = sorted((j, i, q.rows[i][j]) for i in range(len(q.rows)) for j in range(len(q.rows[i])) if q.rows[i][j] > n - m)
    if sum(1 for _, i, _ in cells if i == 0) > 1 or len({j for j, _, _ in cells}) != len(cells):
        return False
    entries = [e for _, _, e in cells]
    return entries == sorted(entries)


def _suffix_suite(max_r: int) -> tuple[int, list[dict], dict[str, int]]:
    """Both suffix characterisations on every even-rowed tableau with <= max_r cells."""
    fails = []
    n_cases = 0
    for q in even_rowed_syt(max_r):
        w = algo3_insert(q).letters
        n = q.size
        n_cases += 1
        triple = len(q.rows) == 3 and all(q.rows[i][-1] == n - 2 + i for i in range(3))
        if (w[-3:] == (1, 0, -1)) != triple:
            fails.append({"q": _q(q), "word": list(w), "claim": "ends in 1,0,-1"})
        for m in range(n + 1):
            tail = all(x == -1 for x in w[n - m:])
            if tail != _horizontal_strip_tail(q, m):
                fails.append({"q": _q(q), "word": list(w), "claim": f"last {m} letters are -1"})
    return n_cases, fails, {}


def _concatenation_suite(max_r: int) -> tuple[int, list[dict], dict[str, int]]:
    by_len = {r: enumerate_vacillating(r, Partition()) for r in range(max_r + 1)}
    fails, n = [], 0
    for r1 in range(max_r + 1):
        for r2 in range(max_r + 1 - r1):
            for w1, w2 in product(by_len[r1], by_len[r2]):
                n += 1
                if not check_concatenation(w1, w2):
                    fails.append({"w1": list(w1), "w2": list(w2)})
    return n, fails, {}


def _dyck_suite(max_r: int) -> tuple[int, list[dict], dict[str, int]]:
    fails, n, yes = [], 0, 0
    for q in even_rowed_syt(max_r, 2):
        n += 1
        try:
            yes += is_dyck_preimage(q)
        except AssertionError as exc:
            fails.append({"q": _q(q), "error": str(exc)})
    return n, fails, {"dyck_preimages": yes}


def _random_word(rng: random.Random, n: int) -> VacillatingWord:
    h, out = 0, []
    for _ in range(n):
        x = rng.choice([x for x in (1, 0, -1) if h + x >= 0 and not (x == 0 and h == 0)])
        out.append(x)
        h += x
    return VacillatingWord(tuple(out))


def random_connection_check(samples: int = 1000, max_len: int = 16, seed: int = 0) -> list[dict]:
    """algo5 with random admissible connections against FCFS on random words."""
    rng = random.Random(seed)
    fails = []
    for k in range(samples):
        w = _random_word(rng, rng.randint(0, max_len))
        if algo5(w, random.Random(seed * 100003 + k)) != algo5(w):
            fails.append({"word": list(w), "seed": seed * 100003 + k})
    return fails


def _evacuation_suite(max_r: int) -> tuple[int, list[dict], dict[str, int]]:
    n, ok, bad = 0, 0, []
    for size in range(max_r + 1):
        for lam in partitions_of(size, 3):
            lengths = [lam.part(i) for i in range(3)]
            if len({x % 2 for x in lengths}) > 1:
                continue
            for q in enumerate_syt(lam):
                n += 1
                if check_evacuation_conjecture(q):
                    ok += 1
                else:
                    bad.append(_q(q))
    return n, [], {"agree": ok, "disagree": len(bad), "counterexamples": bad[:20]}  # type: ignore[dict-item]


def verify_suite(name: str, max_r: int, workers: int | None = None, **opts: Any) -> VerificationReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    report = VerificationReport(name, {"max_r": max_r, **opts})
    start = time.perf_counter()
    if name in _UNITS:
        units = [(name, r, m) for r in range(max_r + 1) for m in range(r + 1)]
        if workers and workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_run_unit, units, chunksize=4))
        else:
            results = [_run_unit(u) for u in units]
        for (_, r, _), (n, fails) in zip(units, results):
            report.cases += n
            report.counts[f"r={r}"] = report.counts.get(f"r={r}", 0) + n
            report.failures.extend(fails)
        if name == "equivalence":
            samples = int(opts.get("random_words", 1000))
            report.failures.extend(random_connection_check(samples, int(opts.get("random_max_len", 16))))
            report.cases += samples
            report.notes.append(f"algo5 random connection order vs FCFS on {samples} seeded random words")
    elif name == "crystal-vs-explicit":
        mu_max = int(opts.get("mu_max", max_r))
        for r in range(max_r + 1):
            for m in range(mu_max + 1):
                n, fails = _crystal(r, m)
                report.cases += n
                report.failures.extend(fails)
    else:
        runner = {
            "suffix": _suffix_suite,
            "concatenation": _concatenation_suite,
            "dyck": _dyck_suite,
            "evacuation-report": _evacuation_suite,
        }[name]
        n, fails, counts = runner(max_r)
        report.cases, report.failures = n, fails
        report.counts.update({k: v for k, v in counts.items() if isinstance(v, int)})
        if name == "evacuation-report":
            agree = counts["agree"]
            report.notes.append(f"evacuation reverses the word for {agree}/{n} tableaux")
            for q in counts["counterexamples"]:  # type: ignore[union-attr]
                report.notes.append(f"counterexample: {json.dumps(q)}")
    report.duration = time.perf_counter() - start
    return report


def verify_all(max_r: int, suites: Iterable[str] = SUITES, workers: int | None = None) -> VerificationReport:
    names = list(suites)
    top = VerificationReport("all", {"max_r": max_r, "suites": names})
    start = time.perf_counter()
    for name in names:
        part = verify_suite(name, max_r, workers)
        top.parts.append(part)
        top.cases += part.cases
    top.duration = time.perf_counter() - start
    return top


# ---------------------------------------------------------------- table


def table_rows(r_max: int) -> list[dict[str, Any]]:
    """One row per (Q, L) with |Q| <= r_max, grouped by r, then lambda, mu, L, Q."""
    out = []
    for r in range(1, r_max + 1):
        for lam in sorted(partitions_of(r, 3), key=lambda p: p.parts):
            for m in range(r + 1):
                for lr in enumerate_lr(lam, _mu(m)):
                    for q in enumerate_syt(lam):
                        qt = algo1_expand(lr, q).tableau
                        out.append(
                            {
                                "r": r,
                                "lambda": list(lam),
                                "mu": list(_mu(m)),
                                "lr": lr,
                                "q": q,
                                "q_tilde": qt,
                                "word": forward(q, lr),
                            }
                        )
    return out


def _fmt_syt(q: StandardYoungTableau) -> str:
    return "/".join(",".join(map(str, r)) for r in q.rows) or "-"


def _fmt_lr(lr: OrthLRTableau) -> str:
    col = lambda c: ",".join(map(str, c)) or "-"  # noqa: E731
    return f"{col(lr.left)} | {col(lr.middle)} | {col(lr.right)}"


def _fmt_part(p: list[int]) -> str:
    return "(" + ",".join(map(str, p)) + ")" if p else "∅"


def emit_table(r_max: int, fmt: str = "text") -> str:
    rows = table_rows(r_max)
    if fmt == "json":
        return json.dumps(
            [
                {
                    "r": row["r"],
                    "lambda": row["lambda"],
                    "mu": row["mu"],
                    "lr": lr_to_json(row["lr"]),
                    "q": _q(row["q"]),
                    "q_tilde": _q(row["q_tilde"]),
                    "word": list(row["word"]),
                }
                for row in rows
            ],
            indent=1,
        )
    header = ["lambda", "mu", "L (left | middle | right)", "Q", "Q~", "V"]
    cells_by_r: dict[int, list[list[str]]] = {}
    for row in rows:
        cells_by_r.setdefault(row["r"], []).append(
            [
                _fmt_part(row["lambda"]),
                _fmt_part(row["mu"]),
                _fmt_lr(row["lr"]),
                _fmt_syt(row["q"]),
                _fmt_syt(row["q_tilde"]),
                ",".join(map(str, row["word"])) or "-",
            ]
        )
    widths = [len(h) for h in header]
    for block in cells_by_r.values():
        for cells in block:
            widths = [max(w, len(c)) for w, c in zip(widths, cells)]
    line = lambda cs: "  ".join(c.ljust(w) for c, w in zip(cs, widths)).rstrip()  # noqa: E731
    out = [line(header)]
    for r in range(1, r_max + 1):
        out.append(f"r={r}")
        out.extend(line(cs) for cs in cells_by_r.get(r, []))
    return "\n".join(out) + "\n"

