"""Constructive acyclic colorings for forbidden-induced-subdigraph classes.

Each algorithm is a minimal-counterexample argument read forwards: the step
that would derive a contradiction becomes the combination step of a
recursion on strictly smaller digraphs.  Recursive steps are written as
generators that ``yield`` sub-problems; :func:`_drive` runs them on an
explicit stack, so depth is bounded by memory rather than the interpreter's
recursion limit, and checks that every sub-problem is smaller than its
parent.
"""
from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass
from typing import Callable, Generator, Iterable, NamedTuple, Sequence

from . import debug
from .digraph import (
    Digraph,
    Dipath,
    add_arc,
    contract,
    delete,
    in_neighbors,
    induced,
    is_acyclic,
    is_dipath,
    out_neighbors,
    shortest_dipath,
    strong_components,
)
from .errors import (
    InternalInconsistency,
    InvalidArgument,
    OracleMisbehavior,
    PreconditionViolation,
)
from .oracle import Coloring, dichromatic_number, is_valid_acyclic_coloring
from .patterns import (
    C3,
    DIGON,
    S2_PLUS,
    W3MINUS_CLASS,
    W3PLUS_CLASS,
    P111_CLASS,
    ClassSpec,
    Pattern,
    add_dominated_sink,
    f_arc,
    find_F_cycle,
    find_induced,
    is_out_module,
    locally_complete_class,
    out_module_closure_ok,
    require_class,
    trans_tour,
    transitive_source,
    two_step_set,
)

__all__ = [
    "Coloring",
    "HeroOracle",
    "LayerDecomposition",
    "OutModuleCertificate",
    "brute_force_oracle",
    "color_addsink",
    "color_locally_complete",
    "color_p111",
    "color_w3minus",
    "color_w3minus_any",
    "color_w3plus",
    "constant_oracle",
    "find_in_module",
    "layer_decompose",
    "p111_rounds",
    "shortpath_partition",
    "w3plus_oracle",
    "watch_recursion",
]

SWAP12 = {1: 2, 2: 1}


# ------------------------------------------------------------------ types

@dataclass(frozen=True)
class OutModuleCertificate:
    module: frozenset[int]
    anchor: int

    def holds(self, D: Digraph) -> bool:
        return out_module_closure_ok(D, self.module, self.anchor)


@dataclass(frozen=True)
class LayerDecomposition:
    root: int
    layers: tuple[frozenset[int], ...]

    def union(self) -> frozenset[int]:
        return frozenset().union(*self.layers)

    def __len__(self) -> int:
        return len(self.layers)


@dataclass(frozen=True)
class HeroOracle:
    """A coloring procedure for a hero-free class, with its palette bound.

    ``color_fn`` is trusted only as far as :meth:`color` can check it: every
    answer is verified to be total, acyclic and within ``bound``.
    """

    hero: Digraph
    bound: int
    color_fn: Callable[[Digraph], Coloring]
    name: str = "hero"

    def pattern(self) -> Pattern:
        return Pattern(self.name, self.hero)

    def color(self, D: Digraph) -> Coloring:
        if len(D) == 0:
            return Coloring({}, self.bound)
        c = self.color_fn(D)
        assignment = c.assignment if isinstance(c, Coloring) else dict(c)
        if set(assignment) != set(D.vertices):
            raise OracleMisbehavior(f"{self.name} oracle returned a coloring with the wrong domain")
        if any(not 1 <= col <= self.bound for col in assignment.values()):
            raise OracleMisbehavior(f"{self.name} oracle exceeded its bound {self.bound}")
        if not is_valid_acyclic_coloring(D, assignment):
            raise OracleMisbehavior(f"{self.name} oracle returned a coloring with a monochromatic cycle")
        return Coloring(assignment, self.bound)


def w3plus_oracle() -> HeroOracle:
    """Hero C3 with C = 2, answered by :func:`color_w3plus`."""
    return HeroOracle(C3.graph, 2, lambda G: color_w3plus(G, G.vertices[0], check=False), "c3")


def brute_force_oracle(hero: Digraph | Pattern, bound: int, limit: int | None = None) -> HeroOracle:
    """Optimal colorings from the exact oracle; ``bound`` is the class constant."""
    if isinstance(hero, Pattern):
        name, hero = hero.name, hero.graph
    else:
        name = "hero"
    return HeroOracle(hero, bound, lambda G: dichromatic_number(G, limit).witness, name)


def constant_oracle(hero: Digraph | Pattern | None = None) -> HeroOracle:
    """One color for everything; correct exactly on acyclic inputs (hero TT2)."""
    if hero is None:
        hero = trans_tour(2)
    name = hero.name if isinstance(hero, Pattern) else "hero"
    graph = hero.graph if isinstance(hero, Pattern) else hero
    return HeroOracle(graph, 1, lambda G: Coloring.constant(G.vertices), name)


# --------------------------------------------------------------- recursion

class _Call(NamedTuple):
    task: Callable[..., Generator]
    graph: Digraph
    args: tuple


Task = Generator[_Call, Coloring, Coloring]

_watchers: list[list] = []


@contextmanager
def watch_recursion():
    """Collect ``(task, parent_size, child_size)`` for every recursive step."""
    log: list[tuple[str, int, int]] = []
    _watchers.append(log)
    try:
        yield log
    finally:
        _watchers.remove(log)


def _drive(call: _Call) -> Coloring:
    stack = [(call, call.task(call.graph, *call.args))]
    result = None
    while stack:
        parent, gen = stack[-1]
        try:
            sub = gen.send(result)
        except StopIteration as stop:
            stack.pop()
            result = stop.value
            continue
        if len(sub.graph) >= len(parent.graph):
            raise InternalInconsistency(
                f"{sub.task.__name__} recursed on {len(sub.graph)} vertices from {len(parent.graph)}"
            )
        for log in _watchers:
            log.append((sub.task.__name__, len(parent.graph), len(sub.graph)))
        stack.append((sub, sub.task(sub.graph, *sub.args)))
        result = None
    if debug.enabled() and not is_valid_acyclic_coloring(call.graph, result):
        raise InternalInconsistency("recursion produced a coloring with a monochromatic cycle")
    return result


def _merge(*parts: Iterable[tuple[int, int]] | dict, palette: int) -> Coloring:
    out: dict[int, int] = {}
    for part in parts:
        out.update(part)
    return Coloring(out, palette)


# ------------------------------------------------ out-modules (in-neighbours)

def find_in_module(D: Digraph, v: int, check: bool = True) -> OutModuleCertificate:
    """An out-module M inside N-(v) whose out-neighbours lie in N+(v) + v.

    Either some in-neighbour's F-arc points at v (then it is a singleton
    module), or F restricted to N-(v) closes a cycle; that cycle is an
    out-module, gets contracted, and the search continues on the smaller
    digraph.  Contracted representatives are expanded back at the end.
    """
    if v not in D:
        raise InvalidArgument(f"unknown vertex {v}")
    if check:
        require_class(D, W3PLUS_CLASS)
    if not D.pred(v):
        raise PreconditionViolation(f"vertex {v} has no in-neighbours")
    G = D
    lifts: list[tuple[int, frozenset[int]]] = []
    while True:
        preds = sorted(G.pred(v))
        fmap = {w: f_arc(G, w) for w in preds}
        direct = [w for w in preds if fmap[w] == v]
        if direct:
            M = {direct[0]}
            break
        cycle = find_F_cycle(G, preds, fmap)
        if debug.enabled() and not is_out_module(G, cycle):
            raise AssertionError(f"F-cycle {cycle} is not an out-module")
        res = contract(G, cycle)
        lifts.append((res.representative, frozenset(cycle)))
        G = res.result
        if debug.enabled():
            require_class(G, W3PLUS_CLASS)
    for rep, N in reversed(lifts):
        if rep in M:
            M = (M - {rep}) | N
    cert = OutModuleCertificate(frozenset(M), v)
    if not cert.holds(D):
        raise InternalInconsistency(f"in-module certificate for {v} fails; input likely outside the class")
    return cert


# ---------------------------------------------- 2-coloring, W3+ excluded

def _w3plus_task(D: Digraph, v: int) -> Task:
    if debug.enabled():
        require_class(D, W3PLUS_CLASS)
    if len(D) == 1:
        return Coloring({v: 1}, 2)
    if not D.pred(v):
        rest = delete(D, {v})
        if not D.succ(v):
            c = yield _Call(_w3plus_task, rest, (rest.vertices[0],))
            return _merge(c.assignment, {v: 1}, palette=2)
        u = f_arc(D, v)
        c = yield _Call(_w3plus_task, rest, (u,))
        # N+(v) lies in N+(u) + u, all of which share u's color
        return _merge(c.assignment, {v: c[u]}, palette=2)

    M = find_in_module(D, v, check=False).module
    T = two_step_set(D, M, v)

    if is_acyclic(induced(D, M)):
        rest = delete(D, M)
        c = yield _Call(_w3plus_task, rest, (v,))
        if c[v] != 1:
            c = c.permuted(SWAP12)
        # every arc leaving M lands on color 1, so M can take color 2
        return _merge(c.assignment, {m: 2 for m in M}, palette=2)

    DM = induced(D, M)
    if T:
        t0 = transitive_source(D, T)
        cM = yield _Call(_w3plus_task, DM, (t0,))
        if cM[t0] != 2:
            cM = cM.permuted(SWAP12)
    else:
        cM = yield _Call(_w3plus_task, DM, (min(M),))

    res = contract(delete(D, T), M - T)
    x = res.representative
    star = res.result
    for u in sorted(star.succ(v)):
        if star.has_arc(x, u):
            continue
        star = add_arc(star, (x, u))
        if debug.enabled():
            require_class(star, W3PLUS_CLASS)
            if f_arc(star, x) != v:
                raise AssertionError("added arc moved the F-arc of the representative")
    cs = yield _Call(_w3plus_task, star, (x,))
    if cs[x] != 1:
        cs = cs.permuted(SWAP12)
    outside = {w: cs[w] for w in D.vertices if w not in M}
    return _merge(outside, cM.assignment, palette=2)


def color_w3plus(D: Digraph, v: int, check: bool = True) -> Coloring:
    """Acyclic 2-coloring of a {digon, S2+, W3+}-free digraph in which ``v``
    and all of its out-neighbours share a color."""
    if v not in D:
        raise InvalidArgument(f"unknown anchor vertex {v}")
    if check:
        require_class(D, W3PLUS_CLASS)
    return _drive(_Call(_w3plus_task, D, (v,)))


# ---------------------------------------------- 4-coloring, W3- excluded

def _w3minus_task(D: Digraph, u: int, v: int) -> Task:
    if debug.enabled():
        require_class(D, W3MINUS_CLASS)
    out_u, out_v, in_u = D.succ(u), D.succ(v), D.pred(u)
    A = out_u - (out_v | {v})
    B = in_u & out_v
    rest = delete(D, in_u | {u})

    if A:
        a = transitive_source(D, A)
        cp = yield _Call(_w3minus_task, rest, (a, v))
    elif rest.succ(v):
        cp = yield _Call(_w3minus_task, rest, (v, min(rest.succ(v))))
    else:
        # v is a sink of rest: any coloring works after forcing c(v) = 1
        arcs = rest.arcs()
        if arcs:
            cp = yield _Call(_w3minus_task, rest, arcs[0])
        else:
            cp = Coloring.constant(rest.vertices, 1, 4)
        cp = _merge(cp.assignment, {v: 1}, palette=4)

    colors = dict(cp.assignment)
    colors[u] = 1
    for b in B:
        colors[b] = 2
    low = in_u - B
    if low:
        cl = yield _Call(_w3plus_task, induced(D, low), (min(low),))
        for w in low:
            colors[w] = cl[w] + 2
    return Coloring(colors, 4)


def color_w3minus(D: Digraph, arc: tuple[int, int], check: bool = True) -> Coloring:
    """Acyclic 4-coloring of a {digon, S2+, W3-}-free digraph anchored at arc (u, v):
    c(u) = 1, color 1 on N+(u) - N+(v), colors {1, 2} on N+(v)."""
    u, v = arc
    if not D.has_arc(u, v):
        raise InvalidArgument(f"({u}, {v}) is not an arc")
    if check:
        require_class(D, W3MINUS_CLASS)
    return _drive(_Call(_w3minus_task, D, (u, v)))


def color_w3minus_any(D: Digraph, check: bool = True) -> Coloring:
    arcs = D.arcs()
    if not arcs:
        if check:
            require_class(D, W3MINUS_CLASS)
        return Coloring.constant(D.vertices, 1, 4)
    return color_w3minus(D, arcs[0], check)


# ------------------------------------------- shortest-path partition bound

def shortpath_partition(
    D: Digraph,
    P: Dipath | Sequence[int],
    C: int,
    sub: HeroOracle,
    check: bool = True,
) -> Coloring:
    """Color V(P) + N-(V(P)) with 3C + 2 colors.

    In-neighbour layers A_i (of the i-th path vertex, minus earlier layers)
    are grouped by i mod 3; no arc jumps three or more layers forward along a
    shortest path, so each group reuses one C-block.  Even and odd path
    vertices take the last two colors.
    """
    trace = tuple(P.trace if isinstance(P, Dipath) else P)
    if not is_dipath(D, trace):
        raise InvalidArgument(f"{list(trace)} is not a dipath")
    best = shortest_dipath(D, trace[0], trace[-1])
    if best.length != len(trace) - 1:
        raise InvalidArgument(f"{list(trace)} is not a shortest dipath")
    if sub.bound > C:
        raise InvalidArgument(f"oracle bound {sub.bound} exceeds C = {C}")
    if check:
        require_class(D, ClassSpec((DIGON, S2_PLUS)))
    claimed = set(trace)
    colors: dict[int, int] = {}
    for i, x in enumerate(trace):
        layer = D.pred(x) - claimed
        if not layer:
            continue
        claimed |= layer
        ci = sub.color(induced(D, layer))
        offset = (i % 3) * C
        for w in layer:
            colors[w] = ci[w] + offset
    for i, x in enumerate(trace):
        colors[x] = 3 * C + 1 + (i % 2)
    return Coloring(colors, 3 * C + 2)


# ------------------------------------------------- adding a dominating sink

def addsink_bound(hero_order: int, C: int) -> int:
    return hero_order * (C + 1) + 3 * C + 2


def color_addsink(D: Digraph, sub: HeroOracle, check: bool = True) -> Coloring:
    """Acyclic coloring of a {digon, S2+, H-}-free digraph, H- being the
    oracle's hero plus a dominated sink, within v(H)(C+1) + 3C + 2 colors."""
    H = sub.hero
    C = sub.bound
    h = len(H)
    bound = addsink_bound(h, C)
    if check:
        require_class(D, ClassSpec((DIGON, S2_PLUS, Pattern(f"{sub.name}-", add_dominated_sink(H)))))
    colors: dict[int, int] = {}
    for K in strong_components(D):
        DK = induced(D, K)
        emb = find_induced(DK, H)
        if emb is None:
            colors.update(sub.color(DK).assignment)
            continue
        Y = frozenset(emb.values())
        parts = strong_components(induced(DK, Y))
        path = None
        S = Y
        if len(parts) > 1:
            path = shortest_dipath(DK, min(parts[-1]), min(parts[0]))
            if path is None:
                raise InternalInconsistency("strong component without the expected dipath")
            S = Y | path.vertex_set
        Z = S | in_neighbors(DK, S)
        if Z != K:
            raise InternalInconsistency(
                f"closure of the hero copy {sorted(Y)} misses {sorted(K - Z)}; input outside the class"
            )
        part: dict[int, int] = {}
        for b, y in enumerate(sorted(Y)):
            offset = b * (C + 1)
            part.setdefault(y, offset + 1)
            pin = DK.pred(y)
            if pin:
                cy = sub.color(induced(DK, pin))
                for w in sorted(pin):
                    part.setdefault(w, offset + 1 + cy[w])
        if path is not None:
            cx = shortpath_partition(DK, path, C, sub, check=False)
            offset = h * (C + 1)
            for w, c in cx.items():
                part.setdefault(w, offset + c)
        colors.update(part)
    return Coloring(colors, bound)


# ----------------------------------------------- layers, P+(1,1,1) excluded

def layer_decompose(D: Digraph, x: int) -> LayerDecomposition:
    """Alternate out- and in-expansion from ``x`` until a layer comes up empty."""
    if x not in D:
        raise InvalidArgument(f"unknown vertex {x}")
    layers = [frozenset({x})]
    seen = {x}
    while True:
        prev = layers[-1]
        grow = out_neighbors(D, prev) if len(layers) % 2 == 1 else in_neighbors(D, prev)
        nxt = grow - seen
        if not nxt:
            break
        layers.append(frozenset(nxt))
        seen |= nxt
    return LayerDecomposition(x, tuple(layers))


def p111_rounds(D: Digraph):
    """Yield (remaining digraph, decomposition) for each peeling round."""
    G = D
    while len(G):
        dec = layer_decompose(G, G.vertices[0])
        yield G, dec
        G = delete(G, dec.union())


def color_p111(D: Digraph, check: bool = True) -> Coloring:
    """Acyclic 2-coloring of a {digon, TT3, P+(1,1,1)}-free digraph."""
    if check:
        require_class(D, P111_CLASS)
    colors: dict[int, int] = {}
    for G, dec in p111_rounds(D):
        for i, layer in enumerate(dec.layers):
            if debug.enabled() and G.num_arcs() and any(G.adjacent(a, b) for a in layer for b in layer):
                raise AssertionError(f"layer {i} from root {dec.root} is not independent")
            for w in layer:
                colors[w] = 1 if i % 2 == 0 else 2
    return Coloring(colors, 2)


# ------------------------------------------------- locally complete graphs

def color_locally_complete(D: Digraph, sub: HeroOracle, check: bool = True) -> Coloring:
    """Acyclic 2C-coloring of a {digon, S2+, S2-, H}-free digraph.

    ``sub`` colors H-free tournaments with at most C colors.  Each round
    takes the smallest remaining vertex v, colors v + N+(v) from the low
    block and N-(v) from the high block, and deletes the closed neighbourhood.
    """
    C = sub.bound
    if check:
        require_class(D, locally_complete_class(sub.hero, sub.name))
    colors: dict[int, int] = {}
    G = D
    while len(G):
        v = G.vertices[0]
        plus = G.succ(v) | {v}
        minus = G.pred(v)
        colors.update(sub.color(induced(G, plus)).assignment)
        if minus:
            cm = sub.color(induced(G, minus))
            for w in minus:
                colors[w] = cm[w] + C
        G = delete(G, plus | minus)
    return Coloring(colors, 2 * C)
