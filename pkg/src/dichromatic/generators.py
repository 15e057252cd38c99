"""Named digraphs and seeded random members of Forb_ind classes."""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction

from .digraph import Digraph
from .errors import InvalidArgument
from .patterns import ClassSpec, class_violation

NAMED = ("tt", "cycle", "s+", "s-", "w+", "w-", "p111", "k4s", "bioriented-complete", "c4-blowup")


def transitive_tournament(k: int) -> Digraph:
    return Digraph(range(k), [(i, j) for i in range(k) for j in range(i + 1, k)])


def directed_cycle(k: int) -> Digraph:
    return Digraph(range(k), [(i, (i + 1) % k) for i in range(k)])


def out_star(k: int) -> Digraph:
    return Digraph(range(k + 1), [(0, i) for i in range(1, k + 1)])


def in_star(k: int) -> Digraph:
    return Digraph(range(k + 1), [(i, 0) for i in range(1, k + 1)])


def _rim(k: int) -> list[tuple[int, int]]:
    return [(i, i % k + 1) for i in range(1, k + 1)]


def out_wheel(k: int) -> Digraph:
    """Hub 0 dominating a directed cycle on 1..k."""
    return Digraph(range(k + 1), [(0, i) for i in range(1, k + 1)] + _rim(k))


def in_wheel(k: int) -> Digraph:
    return Digraph(range(k + 1), [(i, 0) for i in range(1, k + 1)] + _rim(k))


def bioriented_complete(k: int) -> Digraph:
    return Digraph(range(k), [(i, j) for i in range(k) for j in range(k) if i != j])


def c4_blowup() -> Digraph:
    """Directed 4-cycle with each vertex replaced by a directed triangle.

    Triple ``T_i = {3i, 3i+1, 3i+2}`` sends all nine arcs to ``T_{i+1 mod 4}``.
    """
    arcs = []
    for i in range(4):
        a, b, c = 3 * i, 3 * i + 1, 3 * i + 2
        arcs += [(a, b), (b, c), (c, a)]
        nxt = 3 * ((i + 1) % 4)
        arcs += [(s, t) for s in (a, b, c) for t in range(nxt, nxt + 3)]
    return Digraph(range(12), arcs)


def named(name: str, k: int | None = None) -> Digraph:
    """Catalog digraph by name; ``k`` may also be given as a numeric suffix (``tt4``)."""
    key = name.strip().lower()
    if k is None:
        m = re.fullmatch(r"(tt|cycle|s[+-]|w[+-]|bioriented-complete)(\d+)", key)
        if m:
            key, k = m.group(1), int(m.group(2))
    if key == "p111":
        return Digraph(range(4), [(0, 1), (2, 1), (2, 3)])
    if key == "k4s":
        return Digraph(range(4), [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])
    if key == "c4-blowup":
        return c4_blowup()
    builders = {
        "tt": (transitive_tournament, 1),
        "cycle": (directed_cycle, 2),
        "s+": (out_star, 1),
        "s-": (in_star, 1),
        "w+": (out_wheel, 2),
        "w-": (in_wheel, 2),
        "bioriented-complete": (bioriented_complete, 1),
    }
    if key not in builders:
        raise InvalidArgument(f"unknown digraph name {name!r}; known: {', '.join(NAMED)}")
    build, least = builders[key]
    if k is None or k < least:
        raise InvalidArgument(f"{key} needs an integer parameter k >= {least}")
    return build(k)


@dataclass(frozen=True)
class GenConfig:
    n: int
    arc_probability: float | Fraction = 0.3
    seed: int = 0
    max_attempts: int = 20

    def __post_init__(self):
        if self.n < 0:
            raise InvalidArgument("n must be non-negative")
        if not 0 <= self.arc_probability <= 1:
            raise InvalidArgument("arc_probability must lie in [0, 1]")
        if self.max_attempts < 1:
            raise InvalidArgument("max_attempts must be >= 1")


def random_in_class(cfg: GenConfig, spec: ClassSpec) -> Digraph:
    """Grow a member of ``spec``'s class one vertex at a time.

    Each new vertex w draws an arc to every earlier vertex with probability
    ``arc_probability`` (direction by fair coin, never both).  While some
    forbidden pattern has an induced copy through w, the pairs between w
    and that copy are redrawn, up to ``max_attempts`` times.  After that w
    stays isolated, or is dropped if even the isolated vertex creates a
    forbidden copy (e.g. classes excluding two non-adjacent vertices).
    """
    rng = random.Random(cfg.seed)
    p = float(cfg.arc_probability)
    out: dict[int, set[int]] = {}
    arcs: set[tuple[int, int]] = set()

    def draw(w, u):
        arcs.discard((w, u))
        arcs.discard((u, w))
        if rng.random() < p:
            arcs.add((w, u) if rng.random() < 0.5 else (u, w))

    for w in range(cfg.n):
        out[w] = set()
        earlier = sorted(out)[:-1]
        for u in earlier:
            draw(w, u)
        accepted = False
        for _ in range(cfg.max_attempts):
            G = Digraph(out, arcs)
            bad = class_violation(G, spec, required=w)
            if bad is None:
                accepted = True
                break
            for u in sorted(bad[1].values()):
                if u != w:
                    draw(w, u)
        if not accepted:
            arcs = {(a, b) for a, b in arcs if w not in (a, b)}
            if class_violation(Digraph(out, arcs), spec, required=w) is not None:
                del out[w]
    return Digraph(out, arcs)
