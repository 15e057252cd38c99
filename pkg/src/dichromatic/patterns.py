"""Induced-pattern recognition and the out-module toolkit.

The matcher is an exhaustive backtracking search in pattern-vertex order
with host candidates tried in ascending id order, so the first embedding
found is the lexicographically smallest host tuple.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from . import debug
from .digraph import Digraph, induced, is_acyclic, out_neighbors
from .errors import (
    ClassViolation,
    InvalidArgument,
    NotTransitiveTournament,
    PreconditionViolation,
)


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: Digraph

    def __post_init__(self):
        if len(self.graph) == 0:
            raise InvalidArgument("pattern graph must be nonempty")

    def __len__(self) -> int:
        return len(self.graph)


def _pattern(name: str, n: int, arcs) -> Pattern:
    return Pattern(name, Digraph(range(n), arcs))


DIGON = _pattern("digon", 2, [(0, 1), (1, 0)])
EMPTY_PAIR = _pattern("k2bar", 2, [])
S2_PLUS = _pattern("s2+", 3, [(0, 1), (0, 2)])
S2_MINUS = _pattern("s2-", 3, [(1, 0), (2, 0)])
C3 = _pattern("c3", 3, [(0, 1), (1, 2), (2, 0)])
# hub 0 over the triangle 1 -> 2 -> 3 -> 1
W3_PLUS = _pattern("w3+", 4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)])
W3_MINUS = _pattern("w3-", 4, [(1, 0), (2, 0), (3, 0), (1, 2), (2, 3), (3, 1)])
P111 = _pattern("p111", 4, [(0, 1), (2, 1), (2, 3)])
K4_STRONG = _pattern("k4s", 4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])


def trans_tour(k: int) -> Pattern:
    if k < 1:
        raise InvalidArgument("transitive tournament order must be >= 1")
    return _pattern(f"tt{k}", k, [(i, j) for i in range(k) for j in range(i + 1, k)])


_CATALOG = {p.name: p for p in (DIGON, EMPTY_PAIR, S2_PLUS, S2_MINUS, C3, W3_PLUS, W3_MINUS, P111, K4_STRONG)}


def catalog_names() -> list[str]:
    return sorted(_CATALOG) + ["tt<k>"]


def pattern_by_name(name: str) -> Pattern:
    key = name.strip().lower()
    if key in _CATALOG:
        return _CATALOG[key]
    m = re.fullmatch(r"tt(\d+)", key)
    if m:
        return trans_tour(int(m.group(1)))
    raise InvalidArgument(f"unknown pattern {name!r}; known: {', '.join(catalog_names())}")


def add_dominated_sink(H: Digraph) -> Digraph:
    """H plus a new vertex receiving an arc from every vertex of H."""
    s = H.next_id
    return Digraph(list(H.vertices) + [s], H.arcs() + [(h, s) for h in H.vertices])


@dataclass(frozen=True)
class ClassSpec:
    """The class of digraphs with no induced copy of any ``forbidden`` pattern."""

    forbidden: tuple[Pattern, ...]

    def __post_init__(self):
        object.__setattr__(self, "forbidden", tuple(self.forbidden))
        if not self.forbidden:
            raise InvalidArgument("a class needs at least one forbidden pattern")

    @classmethod
    def of(cls, *patterns: Pattern | str) -> ClassSpec:
        return cls(tuple(pattern_by_name(p) if isinstance(p, str) else p for p in patterns))

    @classmethod
    def parse(cls, text: str) -> ClassSpec:
        """Comma-separated catalog names, e.g. ``"digon,s2+,w3+"``."""
        names = [t for t in (s.strip() for s in text.split(",")) if t]
        return cls.of(*names)

    def __add__(self, other: ClassSpec) -> ClassSpec:
        return ClassSpec(self.forbidden + other.forbidden)

    def names(self) -> list[str]:
        return [p.name for p in self.forbidden]

    def __str__(self) -> str:
        return ",".join(self.names())


W3PLUS_CLASS = ClassSpec((DIGON, S2_PLUS, W3_PLUS))
C3_CLASS = ClassSpec((DIGON, S2_PLUS, C3))
W3MINUS_CLASS = ClassSpec((DIGON, S2_PLUS, W3_MINUS))
P111_CLASS = ClassSpec((DIGON, trans_tour(3), P111))
K4S_CLASS = ClassSpec((DIGON, S2_PLUS, K4_STRONG))


def locally_complete_class(hero: Digraph, name: str = "hero") -> ClassSpec:
    return ClassSpec((DIGON, S2_PLUS, S2_MINUS, Pattern(name, hero)))


# ---------------------------------------------------------------- matching

def _embeddings(D: Digraph, P: Digraph, fixed: Mapping[int, int] | None = None) -> Iterator[tuple[int, ...]]:
    pv = P.vertices
    k = len(pv)
    if k > len(D):
        return
    pos = {v: i for i, v in enumerate(pv)}
    # for every position, the earlier positions it must have an arc to/from
    outs = [[pos[w] for w in P.succ(v)] for v in pv]
    ins = [[pos[w] for w in P.pred(v)] for v in pv]
    back_out = [sorted(j for j in ins[i] if j < i) for i in range(k)]   # arc j -> i
    back_in = [sorted(j for j in outs[i] if j < i) for i in range(k)]   # arc i -> j
    out_deg = [len(o) for o in outs]
    in_deg = [len(x) for x in ins]
    fixed = dict(fixed or {})
    host = list(D.vertices)
    image = [0] * k
    used: set[int] = set()

    def candidates(i):
        if i in fixed:
            return [fixed[i]]
        if back_out[i]:
            cand = set(D.succ(image[back_out[i][0]]))
        elif back_in[i]:
            cand = set(D.pred(image[back_in[i][0]]))
        else:
            return host
        for j in back_out[i]:
            cand &= D.succ(image[j])
        for j in back_in[i]:
            cand &= D.pred(image[j])
        return sorted(cand)

    def consistent(i, h):
        if h in used:
            return False
        if D.out_degree(h) < out_deg[i] or D.in_degree(h) < in_deg[i]:
            return False
        for j in range(i):
            g = image[j]
            if D.has_arc(g, h) != P.has_arc(pv[j], pv[i]):
                return False
            if D.has_arc(h, g) != P.has_arc(pv[i], pv[j]):
                return False
        return True

    # explicit stack of candidate iterators, one per filled position
    stack = [iter(candidates(0))]
    while stack:
        i = len(stack) - 1
        for h in stack[-1]:
            if consistent(i, h):
                image[i] = h
                used.add(h)
                if i + 1 == k:
                    yield tuple(image)
                    used.discard(h)
                    continue
                stack.append(iter(candidates(i + 1)))
                break
        else:
            stack.pop()
            if stack:
                used.discard(image[len(stack) - 1])


def find_induced(D: Digraph, p: Pattern | Digraph, required: int | None = None) -> dict[int, int] | None:
    """First induced embedding of ``p`` in ``D`` as {pattern vertex: host vertex}.

    With ``required`` set, only embeddings whose image contains that host
    vertex are considered; pattern positions are tried in order.
    """
    P = p.graph if isinstance(p, Pattern) else p
    if required is not None:
        if required not in D:
            raise InvalidArgument(f"unknown vertex {required}")
        for i in range(len(P)):
            for emb in _embeddings(D, P, {i: required}):
                return dict(zip(P.vertices, emb))
        return None
    for emb in _embeddings(D, P):
        return dict(zip(P.vertices, emb))
    return None


def class_violation(D: Digraph, spec: ClassSpec, required: int | None = None) -> tuple[Pattern, dict[int, int]] | None:
    """First (pattern, embedding) witnessing that D is outside the class."""
    if len(D) == 0:
        return None
    for p in spec.forbidden:
        emb = find_induced(D, p, required)
        if emb is not None:
            return p, emb
    return None


def in_class(D: Digraph, spec: ClassSpec) -> bool:
    return class_violation(D, spec) is None


def require_class(D: Digraph, spec: ClassSpec) -> None:
    found = class_violation(D, spec)
    if found is not None:
        p, emb = found
        hosts = [emb[v] for v in sorted(emb)]
        raise ClassViolation(f"induced {p.name} on vertices {hosts}", pattern=p.name, witness=emb)


# ---------------------------------------------------- tournaments and F(D)

def is_tournament(D: Digraph, T: Iterable[int]) -> bool:
    T = sorted(set(T))
    for i, a in enumerate(T):
        for b in T[i + 1:]:
            if D.has_arc(a, b) == D.has_arc(b, a):
                return False
    return True


def is_transitive_tournament(D: Digraph, T: Iterable[int]) -> bool:
    T = frozenset(T)
    if not T:
        return True
    return is_tournament(D, T) and is_acyclic(induced(D, T))


def transitive_source(D: Digraph, T: Iterable[int]) -> int:
    """The vertex of ``T`` beating every other vertex of ``T``."""
    T = frozenset(T)
    if not T:
        raise InvalidArgument("transitive_source of an empty set")
    if any(t not in D for t in T):
        raise InvalidArgument("unknown vertex in T")
    if not is_tournament(D, T):
        raise NotTransitiveTournament(f"{sorted(T)} does not induce a tournament")
    for t in sorted(T):
        if len(D.succ(t) & T) == len(T) - 1:
            if not is_acyclic(induced(D, T)):
                break
            return t
    raise NotTransitiveTournament(f"{sorted(T)} induces a tournament with a directed cycle")


def f_arc(D: Digraph, x: int) -> int | None:
    """Head of the F(D)-arc leaving ``x``; None for sinks."""
    out = D.succ(x)
    if not out:
        return None
    try:
        return transitive_source(D, out)
    except NotTransitiveTournament:
        raise ClassViolation(
            f"out-neighbourhood of {x} is not a transitive tournament", vertex=x
        ) from None


@dataclass(frozen=True)
class FunctionalOutGraph:
    """F(D): each non-sink mapped to the source of its out-neighbourhood."""

    f_arc: Mapping[int, int]

    def __getitem__(self, x: int) -> int:
        return self.f_arc[x]

    def get(self, x: int) -> int | None:
        return self.f_arc.get(x)

    def arcs(self) -> list[tuple[int, int]]:
        return sorted(self.f_arc.items())

    def walk(self, start: int) -> list[int]:
        """Follow F from ``start`` until a sink or a repeated vertex."""
        trace = [start]
        seen = {start}
        while trace[-1] in self.f_arc:
            nxt = self.f_arc[trace[-1]]
            if nxt in seen:
                break
            trace.append(nxt)
            seen.add(nxt)
        return trace

    def cycles(self) -> list[tuple[int, ...]]:
        """All directed cycles of F, each starting at its smallest vertex."""
        found = set()
        state: dict[int, int] = {}
        for s in sorted(self.f_arc):
            path = []
            x = s
            while x is not None and x not in state:
                state[x] = 1
                path.append(x)
                x = self.f_arc.get(x)
            if x is not None and state.get(x) == 1:
                cyc = path[path.index(x):]
                m = cyc.index(min(cyc))
                found.add(tuple(cyc[m:] + cyc[:m]))
            for y in path:
                state[y] = 2
        return sorted(found)


def build_F(D: Digraph) -> FunctionalOutGraph:
    return FunctionalOutGraph({x: f for x in D.vertices if (f := f_arc(D, x)) is not None})


# ------------------------------------------------------------ out-modules

def is_out_module(D: Digraph, M: Iterable[int]) -> bool:
    M = frozenset(M)
    if not M:
        raise InvalidArgument("out-module must be nonempty")
    if any(m not in D for m in M):
        raise InvalidArgument("unknown vertex in M")
    it = iter(M)
    ref = D.succ(next(it)) - M
    return all(D.succ(m) - M == ref for m in it)


def find_F_cycle(D: Digraph, S: Iterable[int], F: FunctionalOutGraph | Mapping[int, int] | None = None) -> list[int]:
    """A directed cycle of F(D) inside ``S``.

    Every vertex of ``S`` must have its F-arc inside ``S``.  The walk starts
    at the smallest id in ``S``.  ``F`` may be supplied when the caller has
    already computed the relevant arcs.
    """
    S = frozenset(S)
    if not S:
        raise InvalidArgument("find_F_cycle needs a nonempty set")
    if F is None:
        fmap = {s: f_arc(D, s) for s in S}
    else:
        fmap = {s: F.get(s) for s in S}
    bad = sorted(s for s, f in fmap.items() if f is None or f not in S)
    if bad:
        raise PreconditionViolation(f"vertices {bad} have no F-arc inside the set")
    trace = [min(S)]
    seen = {trace[0]: 0}
    while True:
        nxt = fmap[trace[-1]]
        if nxt in seen:
            return trace[seen[nxt]:]
        seen[nxt] = len(trace)
        trace.append(nxt)


def two_step_set(D: Digraph, M: Iterable[int], v: int) -> frozenset[int]:
    """Members of M reachable from v by a 2-arc path whose middle is outside M."""
    M = frozenset(M)
    if v in M:
        raise PreconditionViolation("v must lie outside M")
    if v not in D:
        raise InvalidArgument(f"unknown vertex {v}")
    if not is_out_module(D, M):
        raise PreconditionViolation(f"{sorted(M)} is not an out-module")
    T = set()
    for u in D.succ(v) - M:
        T |= D.succ(u) & M
    T = frozenset(T)
    if debug.enabled() and T and in_class(D, W3PLUS_CLASS):
        if not is_transitive_tournament(D, T):
            raise AssertionError(f"two-step set {sorted(T)} is not a transitive tournament")
    return T


def out_module_closure_ok(D: Digraph, M: Iterable[int], v: int) -> bool:
    """Certificate conditions: M inside N-(v), out-module, N+(M) inside N+(v)+v."""
    M = frozenset(M)
    return (
        bool(M)
        and M <= D.pred(v)
        and is_out_module(D, M)
        and out_neighbors(D, M) <= D.succ(v) | {v}
    )
