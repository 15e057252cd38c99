"""Immutable simple digraphs over non-negative integer vertex ids.

Digons are representable; orientedness is a class property checked by
:mod:`dichromatic.patterns`, not a structural invariant here.
"""
from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InvalidArgument

Arc = tuple[int, int]

_EMPTY: frozenset[int] = frozenset()


class Digraph:
    """A simple digraph: no loops, at most one arc per ordered pair.

    ``next_id`` is the id the next contraction will hand out.  It is carried
    through induced subdigraphs and deletions so repeated contractions in one
    lineage never reuse an id.
    """

    __slots__ = ("_vertices", "_out", "_in", "_next_id", "_hash")

    def __init__(
        self,
        vertices: Iterable[int] = (),
        arcs: Iterable[Arc] = (),
        next_id: int | None = None,
    ) -> None:
        vs = sorted(set(vertices))
        for v in vs:
            if not isinstance(v, int) or v < 0:
                raise InvalidArgument(f"vertex ids must be non-negative integers, got {v!r}")
        out: dict[int, set[int]] = {v: set() for v in vs}
        inc: dict[int, set[int]] = {v: set() for v in vs}
        for u, v in arcs:
            if u == v:
                raise InvalidArgument(f"loop at vertex {u}")
            if u not in out or v not in out:
                raise InvalidArgument(f"arc ({u}, {v}) has an endpoint outside the vertex set")
            out[u].add(v)
            inc[v].add(u)
        floor = vs[-1] + 1 if vs else 0
        if next_id is None:
            next_id = floor
        elif next_id < floor:
            raise InvalidArgument("next_id must exceed every vertex id")
        self._vertices = tuple(vs)
        self._out = {v: frozenset(s) for v, s in out.items()}
        self._in = {v: frozenset(s) for v, s in inc.items()}
        self._next_id = next_id
        self._hash = None

    @classmethod
    def from_arcs(cls, arcs: Iterable[Arc], vertices: Iterable[int] = ()) -> Digraph:
        """Build a digraph whose vertex set is ``vertices`` plus all arc endpoints."""
        arcs = list(arcs)
        vs = set(vertices)
        for u, v in arcs:
            vs.add(u)
            vs.add(v)
        return cls(vs, arcs)

    @classmethod
    def _raw(cls, vertices, out, inc, next_id) -> Digraph:
        # trusted constructor for already-consistent adjacency maps
        g = cls.__new__(cls)
        g._vertices = tuple(vertices)
        g._out = out
        g._in = inc
        g._next_id = next_id
        g._hash = None
        return g

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self._vertices)

    @property
    def next_id(self) -> int:
        return self._next_id

    def arcs(self) -> list[Arc]:
        """All arcs, sorted lexicographically."""
        return [(u, v) for u in self._vertices for v in sorted(self._out[u])]

    def num_arcs(self) -> int:
        return sum(len(s) for s in self._out.values())

    def succ(self, v: int) -> frozenset[int]:
        """Out-neighbours of a single vertex."""
        try:
            return self._out[v]
        except KeyError:
            raise InvalidArgument(f"unknown vertex {v}") from None

    def pred(self, v: int) -> frozenset[int]:
        """In-neighbours of a single vertex."""
        try:
            return self._in[v]
        except KeyError:
            raise InvalidArgument(f"unknown vertex {v}") from None

    def neighbors(self, v: int) -> frozenset[int]:
        return self.succ(v) | self.pred(v)

    def out_degree(self, v: int) -> int:
        return len(self.succ(v))

    def in_degree(self, v: int) -> int:
        return len(self.pred(v))

    def has_arc(self, u: int, v: int) -> bool:
        return v in self._out.get(u, _EMPTY)

    def adjacent(self, u: int, v: int) -> bool:
        return self.has_arc(u, v) or self.has_arc(v, u)

    def is_oriented(self) -> bool:
        return not any(self._out[u] & self._in[u] for u in self._vertices)

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._out

    def __iter__(self) -> Iterator[int]:
        return iter(self._vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._vertices == other._vertices and self._out == other._out

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, frozenset(self.arcs())))
        return self._hash

    def __repr__(self) -> str:
        return f"Digraph(vertices={list(self._vertices)}, arcs={self.arcs()})"


@dataclass(frozen=True)
class ContractionResult:
    result: Digraph
    representative: int
    contracted_set: frozenset[int]

    def id_map(self, v: int) -> int:
        """Image of an original vertex in the contracted digraph."""
        return self.representative if v in self.contracted_set else v


@dataclass(frozen=True)
class Dipath:
    trace: tuple[int, ...]

    @property
    def length(self) -> int:
        """Number of arcs."""
        return len(self.trace) - 1

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.trace)

    def __len__(self) -> int:
        return len(self.trace)

    def __iter__(self) -> Iterator[int]:
        return iter(self.trace)


def _checked(D: Digraph, X: Iterable[int]) -> frozenset[int]:
    X = frozenset(X)
    missing = [x for x in X if x not in D]
    if missing:
        raise InvalidArgument(f"unknown vertex ids {sorted(missing)}")
    return X


def out_neighbors(D: Digraph, X: Iterable[int]) -> frozenset[int]:
    """Vertices outside ``X`` that receive an arc from ``X``."""
    X = _checked(D, X)
    acc: set[int] = set()
    for x in X:
        acc |= D._out[x]
    return frozenset(acc - X)


def in_neighbors(D: Digraph, X: Iterable[int]) -> frozenset[int]:
    """Vertices outside ``X`` that send an arc into ``X``."""
    X = _checked(D, X)
    acc: set[int] = set()
    for x in X:
        acc |= D._in[x]
    return frozenset(acc - X)


def induced(D: Digraph, X: Iterable[int]) -> Digraph:
    X = _checked(D, X)
    if not X:
        raise InvalidArgument("induced subdigraph needs a nonempty vertex set")
    return _induced(D, X)


def _induced(D: Digraph, X: frozenset[int]) -> Digraph:
    vs = [v for v in D._vertices if v in X]
    out = {v: D._out[v] & X for v in vs}
    inc = {v: D._in[v] & X for v in vs}
    return Digraph._raw(vs, out, inc, D._next_id)


def delete(D: Digraph, X: Iterable[int]) -> Digraph:
    """``D - X``; deleting every vertex gives the empty digraph."""
    X = _checked(D, X)
    if not X:
        return D
    keep = D.vertex_set - X
    return _induced(D, keep)


def add_arc(D: Digraph, arc: Arc) -> Digraph:
    u, v = arc
    if u == v:
        raise InvalidArgument(f"loop at vertex {u}")
    _checked(D, (u, v))
    if D.has_arc(u, v):
        return D
    out = dict(D._out)
    inc = dict(D._in)
    out[u] = out[u] | {v}
    inc[v] = inc[v] | {u}
    return Digraph._raw(D._vertices, out, inc, D._next_id)


def add_arcs(D: Digraph, arcs: Iterable[Arc]) -> Digraph:
    for a in arcs:
        D = add_arc(D, a)
    return D


def contract(D: Digraph, U: Iterable[int]) -> ContractionResult:
    """Identify ``U`` into one fresh vertex inheriting U's external arcs."""
    U = _checked(D, U)
    if not U:
        raise InvalidArgument("cannot contract an empty set")
    x = D._next_id
    outside = out_neighbors(D, U)
    inside = in_neighbors(D, U)
    keep = [v for v in D._vertices if v not in U]
    keep_set = frozenset(keep)
    out = {v: D._out[v] & keep_set for v in keep}
    inc = {v: D._in[v] & keep_set for v in keep}
    for w in outside:
        inc[w] = inc[w] | {x}
    for w in inside:
        out[w] = out[w] | {x}
    out[x] = outside
    inc[x] = inside
    result = Digraph._raw(keep + [x], out, inc, x + 1)
    return ContractionResult(result, x, U)


def topological_order(D: Digraph) -> list[int] | None:
    """Kahn's algorithm with smallest-id tie breaking; None if D has a cycle."""
    indeg = {v: len(D._in[v]) for v in D._vertices}
    heap = [v for v in D._vertices if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in D._out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    return order if len(order) == len(D) else None


def is_acyclic(D: Digraph) -> bool:
    return topological_order(D) is not None


def strong_components(D: Digraph) -> list[frozenset[int]]:
    """Strong components in a topological order of the condensation.

    Iterative Tarjan; Tarjan emits sink components first, so the list is
    reversed at the end.
    """
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    comps: list[frozenset[int]] = []
    counter = 0
    for root in D._vertices:
        if root in index:
            continue
        work = [(root, iter(sorted(D._out[root])))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(sorted(D._out[w]))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == v:
                        break
                comps.append(frozenset(comp))
    comps.reverse()
    return comps


def is_strongly_connected(D: Digraph) -> bool:
    return len(D) > 0 and len(strong_components(D)) == 1


def shortest_dipath(D: Digraph, u: int, v: int) -> Dipath | None:
    """Breadth-first search; neighbours visited in ascending id order."""
    _checked(D, (u, v))
    if u == v:
        return Dipath((u,))
    parent = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in sorted(D._out[x]):
            if y in parent:
                continue
            parent[y] = x
            if y == v:
                trace = [v]
                while parent[trace[-1]] is not None:
                    trace.append(parent[trace[-1]])
                return Dipath(tuple(reversed(trace)))
            queue.append(y)
    return None


def is_dipath(D: Digraph, trace: Iterable[int]) -> bool:
    trace = list(trace)
    if not trace or len(set(trace)) != len(trace):
        return False
    if any(v not in D for v in trace):
        return False
    return all(D.has_arc(a, b) for a, b in zip(trace, trace[1:]))


def find_cycle(D: Digraph) -> list[int] | None:
    """Vertex trace of some directed cycle, or None if D is acyclic."""
    color: dict[int, int] = {}
    for root in D._vertices:
        if root in color:
            continue
        path = [root]
        color[root] = 1
        iters = [iter(sorted(D._out[root]))]
        while iters:
            for w in iters[-1]:
                c = color.get(w)
                if c == 1:
                    return path[path.index(w):]
                if c is None:
                    color[w] = 1
                    path.append(w)
                    iters.append(iter(sorted(D._out[w])))
                    break
            else:
                color[path.pop()] = 2
                iters.pop()
    return None
