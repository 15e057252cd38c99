"""Brute-force ground truth: coloring validity, exact dichromatic number,
naive induced-pattern counting.

Nothing here calls into :mod:`dichromatic.colorings` or the pattern matcher,
so these functions can serve as independent checks for both.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterable, Mapping

from .digraph import Digraph, induced, is_acyclic
from .errors import InvalidArgument, SizeLimitExceeded

DEFAULT_CHI_LIMIT = 14
LIMIT_ENV = "DICHROMATIC_CHI_LIMIT"


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> color in ``1..palette_size``."""

    assignment: Mapping[int, int]
    palette_size: int

    def __post_init__(self):
        object.__setattr__(self, "assignment", dict(self.assignment))
        for v, c in self.assignment.items():
            if not 1 <= c <= self.palette_size:
                raise InvalidArgument(f"color {c} of vertex {v} outside 1..{self.palette_size}")

    @classmethod
    def constant(cls, vertices: Iterable[int], color: int = 1, palette_size: int | None = None) -> Coloring:
        return cls({v: color for v in vertices}, palette_size or color)

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def __contains__(self, v: object) -> bool:
        return v in self.assignment

    def __len__(self) -> int:
        return len(self.assignment)

    def items(self):
        return sorted(self.assignment.items())

    def colors_used(self) -> set[int]:
        return set(self.assignment.values())

    def classes(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {}
        for v, c in self.assignment.items():
            out.setdefault(c, set()).add(v)
        return {c: frozenset(s) for c, s in out.items()}

    def permuted(self, mapping: Mapping[int, int]) -> Coloring:
        """Rename colors; colors missing from ``mapping`` stay put."""
        return Coloring({v: mapping.get(c, c) for v, c in self.assignment.items()}, self.palette_size)

    def shifted(self, offset: int, palette_size: int) -> Coloring:
        return Coloring({v: c + offset for v, c in self.assignment.items()}, palette_size)

    def restricted(self, vertices: Iterable[int]) -> Coloring:
        keep = set(vertices)
        return Coloring({v: c for v, c in self.assignment.items() if v in keep}, self.palette_size)

    def with_palette(self, palette_size: int) -> Coloring:
        return Coloring(self.assignment, palette_size)


def _require_total(D: Digraph, c: Coloring | Mapping[int, int]) -> Mapping[int, int]:
    assignment = c.assignment if isinstance(c, Coloring) else c
    missing = [v for v in D.vertices if v not in assignment]
    if missing:
        raise InvalidArgument(f"coloring misses vertices {missing}")
    extra = [v for v in assignment if v not in D]
    if extra:
        raise InvalidArgument(f"coloring names unknown vertices {sorted(extra)}")
    return assignment


def monochromatic_classes_with_cycle(D: Digraph, c: Coloring | Mapping[int, int]) -> list[int]:
    assignment = _require_total(D, c)
    by_color: dict[int, list[int]] = {}
    for v, col in assignment.items():
        by_color.setdefault(col, []).append(v)
    return sorted(col for col, vs in by_color.items() if not is_acyclic(induced(D, vs)))


def is_valid_acyclic_coloring(D: Digraph, c: Coloring | Mapping[int, int]) -> bool:
    """True iff every color class induces an acyclic subdigraph."""
    return not monochromatic_classes_with_cycle(D, c)


@dataclass(frozen=True)
class ChiResult:
    chi: int
    witness: Coloring


def chi_limit() -> int:
    raw = os.environ.get(LIMIT_ENV)
    return int(raw) if raw else DEFAULT_CHI_LIMIT


def _search_order(D: Digraph) -> list[int]:
    # greedily pick the vertex with most neighbours already placed, so partial
    # classes close cycles early; ties by degree then id
    remaining = set(D.vertices)
    placed: set[int] = set()
    order = []
    while remaining:
        v = min(remaining, key=lambda x: (-len(D.neighbors(x) & placed), -len(D.neighbors(x)), x))
        order.append(v)
        placed.add(v)
        remaining.discard(v)
    return order


def _k_colorable(order: list[int], out_mask: list[int], in_mask: list[int], k: int) -> list[int] | None:
    n = len(order)
    classes = [0] * k
    color = [0] * n

    def closes_cycle(i: int, members: int) -> bool:
        # does i reach itself inside members + {i}?
        frontier = out_mask[i] & members
        seen = frontier
        while frontier:
            if seen & in_mask[i]:
                return True
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= out_mask[low.bit_length() - 1]
                f ^= low
            frontier = nxt & members & ~seen
            seen |= frontier
        return bool(seen & in_mask[i])

    def place(i: int, used: int) -> bool:
        if i == n:
            return True
        # new colors only in increasing order; position 0 is always color 1
        for col in range(min(used + 1, k)):
            if closes_cycle(i, classes[col]):
                continue
            classes[col] |= 1 << i
            color[i] = col
            if place(i + 1, max(used, col + 1)):
                return True
            classes[col] &= ~(1 << i)
        return False

    return color if place(0, 0) else None


def dichromatic_number(D: Digraph, limit: int | None = None) -> ChiResult:
    """Exact dichromatic number by backtracking over k = 1, 2, ..."""
    if limit is None:
        limit = chi_limit()
    n = len(D)
    if n > limit:
        raise SizeLimitExceeded(f"{n} vertices exceeds the exact-chi limit {limit}")
    if n == 0:
        return ChiResult(0, Coloring({}, 0))
    order = _search_order(D)
    pos = {v: i for i, v in enumerate(order)}
    out_mask = [sum(1 << pos[w] for w in D.succ(v)) for v in order]
    in_mask = [sum(1 << pos[w] for w in D.pred(v)) for v in order]
    for k in range(1, n + 1):
        color = _k_colorable(order, out_mask, in_mask, k)
        if color is not None:
            return ChiResult(k, Coloring({order[i]: color[i] + 1 for i in range(n)}, k))
    raise AssertionError("unreachable: n colors always suffice")


def count_induced(D: Digraph, P: Digraph) -> int:
    """Number of induced embeddings of P in D by plain enumeration."""
    if hasattr(P, "graph"):
        P = P.graph
    pv = P.vertices
    pairs = [(a, b) for a in range(len(pv)) for b in range(len(pv)) if a != b]
    count = 0
    for tup in itertools.permutations(D.vertices, len(pv)):
        if all(D.has_arc(tup[a], tup[b]) == P.has_arc(pv[a], pv[b]) for a, b in pairs):
            count += 1
    return count
