"""Command-line interface: ``bsafkit <command> ...``.

Exit status: 0 success, 1 violation under ``check --expect-holds``,
2 unreadable or malformed input, 3 bad flag combination, 4 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .aba import instantiate, parse_abaf
from .framework import BSAF, ParseError, SizeCapExceeded, edge_order, parse_bsaf
from .principles import FAMILIES, Principle, check_principle, parse_gen, random_abaf, random_bsaf
from .reducts import ReductVariant, reduct_by
from .semantics import ALL_SEMANTICS, extensions, normalize

EXIT_VIOLATION = 1
EXIT_PARSE = 2
EXIT_USAGE = 3
EXIT_CAP = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _hyphen(sem: str) -> str:
    return sem.replace("_", "-")


def load(path: str, fmt: str | None) -> BSAF:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    if fmt is None:
        fmt = "aba" if path.endswith(".aba") else "bsaf"
    if fmt == "aba":
        return instantiate(parse_abaf(text))
    return parse_bsaf(text)


def _sorted_names(F: BSAF, E: int) -> list[str]:
    return sorted(F.members(E))


def _ext_order(names: list[str]):
    return len(names), names


def _mask_of(F: BSAF, csv: str) -> int:
    names = [s.strip() for s in csv.split(",") if s.strip()]
    missing = [n for n in names if n not in F.index]
    if missing:
        raise UsageError(f"unknown argument(s): {', '.join(missing)}")
    return F.mask(*names)


# -- commands --------------------------------------------------------------


def cmd_solve(args) -> int:
    sem = normalize(args.semantics)
    if args.task != "enum" and args.query is None:
        raise UsageError(f"--task {args.task} needs --query")
    if args.task == "enum" and args.query is not None:
        raise UsageError("--query only applies to --task cred/skept")
    F = load(args.input, args.format)
    if args.query is not None and args.query not in F.index:
        raise UsageError(f"unknown argument {args.query!r}")
    F.check_size()
    exts = sorted((_sorted_names(F, E) for E in extensions(F, sem)), key=_ext_order)
    if args.task == "enum":
        if args.output == "json":
            print(json.dumps(exts))
        else:
            for names in exts:
                print("{" + ",".join(names) + "}")
        return 0
    q = args.query
    ok = any(q in e for e in exts) if args.task == "cred" else all(q in e for e in exts)
    if args.output == "json":
        print(json.dumps({"task": args.task, "query": q, "semantics": _hyphen(sem), "accepted": ok}))
    else:
        print("YES" if ok else "NO")
    return 0


def cmd_reduct(args) -> int:
    F = load(args.input, args.format)
    E = _mask_of(F, args.wrt)
    sys.stdout.write(reduct_by(F, E, ReductVariant(args.variant)).to_text())
    return 0


def cmd_instantiate(args) -> int:
    sys.stdout.write(load(args.input, "aba").to_text())
    return 0


def cmd_gen(args) -> int:
    params = parse_gen(args.params)
    if len(params) != 1:
        raise UsageError("gen takes a single seed")
    if args.format == "aba":
        sys.stdout.write(random_abaf(params[0]).to_text())
    else:
        sys.stdout.write(random_bsaf(params[0]).to_text())
    return 0


def cmd_check(args) -> int:
    if (args.input is None) == (args.gen is None):
        raise UsageError("check needs exactly one of an input file or --gen")
    principles = [p.strip() for p in ",".join(args.principle).split(",") if p.strip()]
    try:
        principles = [Principle(p) for p in principles]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.input is not None:
        frameworks = [load(args.input, args.format)]
    else:
        try:
            frameworks = [random_bsaf(p) for p in parse_gen(args.gen)]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    violated = False
    for F in frameworks:
        F.check_size()
        for p in principles:
            try:
                rep = check_principle(F, p, args.family)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            violated |= rep.violated
            print(rep.to_json())
    return EXIT_VIOLATION if violated and args.expect_holds else 0


def to_dot(F: BSAF) -> str:
    """Junction node per edge; attacks solid, supports dashed."""
    lines = ["digraph bsaf {", "  node [shape=circle];"]
    lines += [f'  "{name}";' for name in F.names]
    groups = [("r", "solid", F.attacks), ("s", "dashed", F.supports)]
    for prefix, style, edges in groups:
        for i, e in enumerate(sorted(edges, key=edge_order)):
            gid = f"{prefix}{i}"
            head = F.names[e.head]
            tail = F.members(e.tail)
            if len(tail) == 1:
                lines.append(f'  "{tail[0]}" -> "{head}" [style={style}, comment="{gid}"];')
                continue
            j = f"_{gid}"
            lines.append(f'  "{j}" [shape=point, xlabel="{gid}", comment="{gid}"];')
            for t in tail:
                lines.append(f'  "{t}" -> "{j}" [style={style}, dir=none, comment="{gid}"];')
            lines.append(f'  "{j}" -> "{head}" [style={style}, comment="{gid}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export_dot(args) -> int:
    sys.stdout.write(to_dot(load(args.input, args.format)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    sem_names = sorted(_hyphen(s) for s in ALL_SEMANTICS if s != "cf")
    p = _Parser(prog="bsafkit",
                description="Solve, reduce and principle-check BSAFs and ABA frameworks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(sp, optional=False):
        if optional:
            sp.add_argument("input", nargs="?")
        else:
            sp.add_argument("input")
        sp.add_argument("--format", choices=("aba", "bsaf"),
                        help="input format (default: by file extension)")

    s = sub.add_parser("solve", help="enumerate extensions or decide acceptance")
    with_input(s)
    s.add_argument("--semantics", required=True, metavar="NAME",
                   help="one of: " + ", ".join(sem_names))
    s.add_argument("--task", choices=("enum", "cred", "skept"), default="enum")
    s.add_argument("--query", metavar="ARG")
    s.add_argument("--output", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("reduct", help="print a reduct in BSAF format")
    with_input(s)
    s.add_argument("--wrt", default="", metavar="A,B,...")
    s.add_argument("--variant", choices=[v.value for v in ReductVariant], default="standard")
    s.set_defaults(func=cmd_reduct)

    s = sub.add_parser("check", help="evaluate principles, one JSON report per line")
    with_input(s, optional=True)
    s.add_argument("--gen", metavar="SPEC", help="e.g. n=4,att=4,sup=2,tail=2,seed=1..50")
    s.add_argument("--principle", action="append", required=True, metavar="P[,P...]")
    s.add_argument("--family", choices=FAMILIES, required=True)
    s.add_argument("--expect-holds", action="store_true",
                   help="exit 1 if any report is a violation")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("instantiate", help="print the BSAF of an ABA file")
    s.add_argument("input")
    s.set_defaults(func=cmd_instantiate)

    s = sub.add_parser("gen", help="print a seeded random framework")
    s.add_argument("--params", required=True, metavar="SPEC", help="e.g. n=5,att=6,sup=3,seed=42")
    s.add_argument("--format", choices=("aba", "bsaf"), default="bsaf")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("export-dot", help="print a Graphviz description")
    with_input(s)
    s.set_defaults(func=cmd_export_dot)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"bsafkit: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SizeCapExceeded as exc:
        print(f"bsafkit: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ValueError) as exc:
        print(f"bsafkit: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
