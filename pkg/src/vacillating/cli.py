"""Command line front end. Every subcommand reads JSON arguments and writes JSON or text."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .arcs import algo5, algo6, arc_diagram
from .core import (
    Partition,
    VacillatingWord,
    enumerate_syt,
    enumerate_vacillating,
    partition_validate,
    syt_descents,
    syt_validate,
    word_descents,
    word_validate,
)
from .crystal import export_dot
from .errors import VacillatingError
from .forward import LabeledWord, forward
from .harness import SUITES, emit_table, frobenius_descent_multisets, verify_all, verify_suite
from .inverse import algo4_extract, inverse
from .lr import enumerate_lr, lr_from_json, lr_to_json, render_lr


def _parts(text: str) -> Partition:
    text = text.strip()
    if text.startswith("["):
        return partition_validate(json.loads(text))
    if text in ("", "0", "-", "()"):
        return Partition()
    return partition_validate([int(x) for x in text.strip("()").split(",") if x.strip()])


def _mu(text: str) -> Partition:
    mu = _parts(text)
    if len(mu) > 1:
        raise VacillatingError(f"mu must have at most one part, got {mu}")
    return mu


def _word(text: str) -> VacillatingWord:
    return word_validate(json.loads(text))


def _emit(args: argparse.Namespace, data: Any, text: str | None = None) -> None:
    if args.format == "json" or text is None:
        print(json.dumps(data))
    else:
        print(text)


def _tracer(args: argparse.Namespace):
    if not args.trace:
        return None

    def trace(step: str, w: LabeledWord) -> None:
        print(f"[trace] {step}: {w}", file=sys.stderr)

    return trace


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.kind == "words":
        words = enumerate_vacillating(args.r, _mu(args.mu))
        _emit(args, [list(w) for w in words], "\n".join(" ".join(map(str, w)) for w in words))
    elif args.kind == "syt":
        tabs = enumerate_syt(_parts(args.shape))
        _emit(args, [t.to_lists() for t in tabs], "\n".join(map(str, tabs)))
    else:
        tabs = enumerate_lr(_parts(args.lam), _mu(args.mu))
        text = "\n\n".join(f"Case {t.case}  a={t.a} b={t.b} c={t.c}\n{render_lr(t)}" for t in tabs)
        _emit(args, [lr_to_json(t) for t in tabs], text)
    return 0


def cmd_map(args: argparse.Namespace) -> int:
    if args.direction == "forward":
        q = syt_validate(json.loads(args.q))
        lr = lr_from_json(json.loads(args.lr))
        w = forward(q, lr, _tracer(args))
        _emit(args, list(w), " ".join(map(str, w)))
    elif args.direction == "inverse":
        q, lr = inverse(_word(args.word), _tracer(args))
        _emit(args, {"q": q.to_lists(), "lr": lr_to_json(lr)}, f"Q = {q}\nL (Case {lr.case}):\n{render_lr(lr)}")
    else:
        w = _word(args.word)
        engine = {"algo4": algo4_extract, "algo5": algo5, "algo6": algo6}[args.engine]
        q = engine(w)
        _emit(args, q.to_lists(), str(q))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.suite == "all":
        report = verify_all(args.max_r, workers=args.workers)
    else:
        report = verify_suite(args.suite, args.max_r, args.workers)
    _emit(args, report.to_json(), report.summary())
    return 0 if report.passed else 1


def cmd_table(args: argparse.Namespace) -> int:
    fmt = "json" if args.format == "json" else "text"
    sys.stdout.write(emit_table(args.r_max, fmt) + ("\n" if fmt == "json" else ""))
    return 0


def cmd_crystal(args: argparse.Namespace) -> int:
    lam = _parts(args.lam) if args.lam else None
    sys.stdout.write(export_dot(_mu(args.mu), args.cap, lam))
    return 0


def cmd_frobenius(args: argparse.Namespace) -> int:
    lhs, rhs, equal = frobenius_descent_multisets(args.r, _mu(args.mu))
    enc = lambda c: [{"descents": list(d), "count": n} for d, n in sorted(c.items())]  # noqa: E731
    text = "\n".join(f"{{{','.join(map(str, d))}}}: {n}" for d, n in sorted(lhs.items()))
    text += f"\nequal: {equal}"
    _emit(args, {"words": enc(lhs), "pairs": enc(rhs), "equal": equal}, text)
    return 0 if equal else 1


def cmd_arcs(args: argparse.Namespace) -> int:
    data = arc_diagram(_word(args.word))
    text = "\n".join(f"{e['from']} -> {e['to']} ({e['kind']})" for e in data["edges"])
    _emit(args, data, text)
    return 0


def cmd_descents(args: argparse.Namespace) -> int:
    if args.word:
        d = word_descents(_word(args.word))
    else:
        d = syt_descents(syt_validate(json.loads(args.q)))
    _emit(args, list(d), "{" + ",".join(map(str, d)) + "}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "dot"), default="text")
    common.add_argument("--trace", action="store_true", help="print intermediate labeled words to stderr")

    p = argparse.ArgumentParser(prog="vacillating", description="SO(3) vacillating tableaux and their descent-preserving bijection")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", parents=[common], help="list words, SYT or LR tableaux")
    e.add_argument("kind", choices=("words", "syt", "lr"))
    e.add_argument("--r", type=int, default=0)
    e.add_argument("--mu", default="")
    e.add_argument("--shape", default="")
    e.add_argument("--lambda", dest="lam", default="")
    e.set_defaults(func=cmd_enumerate)

    lr = sub.add_parser("lr", parents=[common], help="LR tableaux (same as 'enumerate lr')")
    lr.add_argument("action", choices=("enumerate",))
    lr.add_argument("--lambda", dest="lam", required=True)
    lr.add_argument("--mu", default="")
    lr.set_defaults(func=cmd_enumerate, kind="lr")

    m = sub.add_parser("map", parents=[common], help="run the bijection")
    m.add_argument("direction", choices=("forward", "inverse", "word-to-syt"))
    m.add_argument("--q", help="SYT as JSON rows")
    m.add_argument("--lr", help="LR tableau as JSON")
    m.add_argument("--word", help="word as a JSON array")
    m.add_argument("--engine", choices=("algo4", "algo5", "algo6"), default="algo6")
    m.set_defaults(func=cmd_map)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--max-r", type=int, default=8)
    v.add_argument("--workers", type=int, default=None)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", parents=[common], help="all (Q, L) pairs for small r")
    t.add_argument("--r-max", type=int, default=3)
    t.set_defaults(func=cmd_table)

    c = sub.add_parser("crystal", parents=[common], help="crystal graphs")
    c.add_argument("action", choices=("export-dot",))
    c.add_argument("--mu", default="")
    c.add_argument("--cap", type=int, default=3)
    c.add_argument("--lambda", dest="lam", default="")
    c.set_defaults(func=cmd_crystal)

    f = sub.add_parser("frobenius", parents=[common], help="descent multisets of words and pairs")
    f.add_argument("--r", type=int, required=True)
    f.add_argument("--mu", default="")
    f.set_defaults(func=cmd_frobenius)

    a = sub.add_parser("arcs", parents=[common], help="arc diagrams")
    a.add_argument("action", choices=("export",))
    a.add_argument("--word", required=True)
    a.set_defaults(func=cmd_arcs)

    d = sub.add_parser("descents", parents=[common], help="descent set of a word or SYT")
    d.add_argument("--word")
    d.add_argument("--q")
    d.set_defaults(func=cmd_descents)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (VacillatingError, json.JSONDecodeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
