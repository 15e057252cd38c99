"""Command-line interface and the edge-list / coloring text formats.

Edge-list document::

    # map <old id> <new id>     (optional comment lines)
    n m
    u v                         (m lines, 0 <= u, v < n, u != v)

Exit codes: 0 success, 1 negative answer, 2 precondition or class
violation, 3 I/O or parse error, 4 size limit, 5 internal verification
failure.
"""
from __future__ import annotations

import argparse
import sys
from typing import Callable

from .colorings import (
    brute_force_oracle,
    color_addsink,
    color_locally_complete,
    color_p111,
    color_w3minus,
    color_w3minus_any,
    color_w3plus,
    constant_oracle,
    w3plus_oracle,
)
from .digraph import Digraph, find_cycle, induced
from .errors import (
    ClassViolation,
    DichromaticError,
    InvalidArgument,
    ParseError,
    PreconditionViolation,
    SizeLimitExceeded,
)
from .generators import GenConfig, named, random_in_class
from .oracle import Coloring, dichromatic_number, monochromatic_classes_with_cycle
from .patterns import ClassSpec, Pattern, class_violation, pattern_by_name

EXIT_OK = 0
EXIT_NO = 1
EXIT_PRECONDITION = 2
EXIT_IO = 3
EXIT_LIMIT = 4
EXIT_INTERNAL = 5


# ---------------------------------------------------------------- formats

def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _ints(line: str, lineno: int, what: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise ParseError(f"expected two integers for {what}, got {line!r}", lineno)
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"expected two integers for {what}, got {line!r}", lineno) from None
    return a, b


def parse(text: str) -> Digraph:
    """Parse an edge-list document into a digraph on 0..n-1."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("missing 'n m' header", 1)
    lineno, header = lines[0]
    n, m = _ints(header, lineno, "the 'n m' header")
    if n < 0 or m < 0:
        raise ParseError("negative count in header", lineno)
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else lineno)
        raise ParseError(f"header announces {m} arcs, found {len(body)}", where)
    arcs = set()
    for lineno, line in body:
        u, v = _ints(line, lineno, "an arc")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno)
        if (u, v) in arcs:
            raise ParseError(f"duplicate arc {u} {v}", lineno)
        arcs.add((u, v))
    return Digraph(range(n), arcs)


def densify(D: Digraph) -> tuple[Digraph, dict[int, int]]:
    """Relabel to 0..n-1 in id order; returns (digraph, old -> new)."""
    mapping = {v: i for i, v in enumerate(D.vertices)}
    return Digraph(range(len(D)), [(mapping[u], mapping[v]) for u, v in D.arcs()]), mapping


def serialize(D: Digraph) -> str:
    dense, mapping = densify(D)
    lines = []
    if any(old != new for old, new in mapping.items()):
        lines += [f"# map {old} {new}" for old, new in mapping.items()]
    lines.append(f"{len(dense)} {dense.num_arcs()}")
    lines += [f"{u} {v}" for u, v in dense.arcs()]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> dict[int, int]:
    colors: dict[int, int] = {}
    for lineno, line in _content_lines(text):
        v, c = _ints(line, lineno, "a 'vertex color' pair")
        if v in colors:
            raise ParseError(f"vertex {v} colored twice", lineno)
        if c < 1:
            raise ParseError("colors are positive integers", lineno)
        colors[v] = c
    return colors


def format_coloring(c: Coloring | dict[int, int]) -> str:
    items = c.items() if isinstance(c, Coloring) else sorted(c.items())
    return "".join(f"{v} {col}\n" for v, col in items)


# --------------------------------------------------------------- commands

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _class_from_args(args) -> ClassSpec:
    patterns: list[Pattern] = []
    if args.cls:
        patterns += list(ClassSpec.parse(args.cls).forbidden)
    for path in args.pattern_file or []:
        patterns.append(Pattern(path, parse(_read(path))))
    if not patterns:
        raise InvalidArgument("give --class and/or --pattern-file")
    return ClassSpec(tuple(patterns))


def cmd_check(args) -> int:
    D = parse(_read(args.file))
    spec = _class_from_args(args)
    found = class_violation(D, spec)
    if found is None:
        print("IN_CLASS")
        return EXIT_OK
    p, emb = found
    print(f"NOT_IN_CLASS {p.name}")
    print(" ".join(str(emb[v]) for v in sorted(emb)))
    return EXIT_NO


def _hero_oracle(args, default_hero: str, default_bound: int | None):
    name = args.hero or default_hero
    hero = pattern_by_name(name)
    if args.hero_bound is None:
        if name == "c3" and default_hero == "c3":
            return w3plus_oracle()
        if name == "tt2":
            return constant_oracle(hero)
        if name == default_hero and default_bound is not None:
            return brute_force_oracle(hero, default_bound)
        raise InvalidArgument(f"--hero-bound is required for hero {name}")
    return brute_force_oracle(hero, args.hero_bound)


def _parse_arc(text: str) -> tuple[int, int]:
    try:
        u, v = (int(t) for t in text.split(","))
    except ValueError:
        raise InvalidArgument(f"--arc expects 'u,v', got {text!r}") from None
    return u, v


def _alg_w3plus(D, args):
    if len(D) == 0:
        return Coloring({}, 2)
    anchor = args.anchor if args.anchor is not None else D.vertices[0]
    return color_w3plus(D, anchor)


def _alg_w3minus(D, args):
    if args.arc:
        return color_w3minus(D, _parse_arc(args.arc))
    return color_w3minus_any(D)


ALGORITHMS: dict[str, Callable[[Digraph, argparse.Namespace], Coloring]] = {
    "w3plus": _alg_w3plus,
    "w3minus": _alg_w3minus,
    "p111": lambda D, args: color_p111(D),
    "addsink": lambda D, args: color_addsink(D, _hero_oracle(args, "c3", 2)),
    "locally-complete": lambda D, args: color_locally_complete(D, _hero_oracle(args, "tt4", 3)),
}


def cmd_color(args) -> int:
    D = parse(_read(args.file))
    c = ALGORITHMS[args.algorithm](D, args)
    assignment = c.assignment if isinstance(c, Coloring) else dict(c)
    try:
        bad = monochromatic_classes_with_cycle(D, assignment)
    except InvalidArgument as exc:
        print(f"error: algorithm returned an unusable coloring: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if bad:
        print(f"error: algorithm returned a coloring with monochromatic cycles in colors {bad}", file=sys.stderr)
        return EXIT_INTERNAL
    sys.stdout.write(format_coloring(assignment))
    return EXIT_OK


def cmd_chi(args) -> int:
    D = parse(_read(args.file))
    res = dichromatic_number(D, args.limit)
    print(f"chi {res.chi}")
    sys.stdout.write(format_coloring(res.witness))
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.random:
        if args.n is None or not args.cls:
            raise InvalidArgument("--random needs --n and --class")
        cfg = GenConfig(args.n, args.p, args.seed, args.max_attempts)
        D = random_in_class(cfg, ClassSpec.parse(args.cls))
    elif args.name:
        D = named(args.name, args.k)
    else:
        raise InvalidArgument("give --name or --random")
    sys.stdout.write(serialize(D))
    return EXIT_OK


def cmd_verify(args) -> int:
    D = parse(_read(args.file))
    colors = parse_coloring(_read(args.coloring_file))
    try:
        bad = monochromatic_classes_with_cycle(D, colors)
    except InvalidArgument as exc:
        print(f"INVALID {exc}")
        return EXIT_NO
    if not bad:
        print("VALID")
        return EXIT_OK
    col = bad[0]
    cycle = find_cycle(induced(D, [v for v, c in colors.items() if c == col]))
    print(f"INVALID color {col} cycle {' '.join(map(str, cycle))}")
    return EXIT_NO


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_IO)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dichromatic", description="Acyclic colorings of digraphs with forbidden induced subdigraphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="test membership in Forb_ind(patterns)")
    p.add_argument("--class", dest="cls", help="comma-separated pattern names, e.g. digon,s2+,w3+")
    p.add_argument("--pattern-file", action="append", help="extra forbidden pattern as an edge-list document")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("color", help="run a coloring algorithm")
    p.add_argument("--algorithm", required=True, choices=sorted(ALGORITHMS))
    g = p.add_mutually_exclusive_group()
    g.add_argument("--anchor", type=int, help="anchor vertex for w3plus")
    g.add_argument("--arc", help="anchor arc 'u,v' for w3minus")
    p.add_argument("--hero", help="hero pattern for addsink (default c3) or locally-complete (default tt4)")
    p.add_argument("--hero-bound", type=int, help="palette bound C of the hero-free class")
    p.add_argument("file")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("chi", help="exact dichromatic number")
    p.add_argument("--limit", type=int, help="maximum vertex count (default 14 or $DICHROMATIC_CHI_LIMIT)")
    p.add_argument("file")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("gen", help="emit a named or random digraph")
    p.add_argument("--name")
    p.add_argument("--k", type=int)
    p.add_argument("--random", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-attempts", type=int, default=20)
    p.add_argument("--class", dest="cls")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a coloring document against a digraph")
    p.add_argument("file")
    p.add_argument("coloring_file")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ClassViolation as exc:
        print(f"class violation: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except SizeLimitExceeded as exc:
        print(f"size limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (PreconditionViolation, InvalidArgument) as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except DichromaticError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
