"""Per-instance checks of the structural facts about {digon, S2+, W3+}-free digraphs."""
from dichromatic.colorings import find_in_module
from dichromatic.digraph import add_arc, contract
from dichromatic.patterns import (
    W3PLUS_CLASS,
    build_F,
    find_F_cycle,
    in_class,
    is_out_module,
    is_transitive_tournament,
    two_step_set,
)


def structural_violations(D):
    bad = []
    F = build_F(D)

    for x, y in F.arcs():
        if not D.succ(x) <= D.succ(y) | {y}:
            bad.append(f"f-arc containment ({x},{y})")

    for x in F.f_arc:
        walk = F.walk(x)
        for k in range(2, len(walk) + 1):
            if not D.succ(walk[0]) - set(walk[1:k]) <= D.succ(walk[k - 1]):
                bad.append(f"f-path containment {walk[:k]}")

    modules = set()
    for cyc in F.cycles():
        found = find_F_cycle(D, cyc)
        if set(found) != set(cyc) or not is_out_module(D, cyc):
            bad.append(f"f-cycle not an out-module {cyc}")
        modules.add(frozenset(cyc))

    for v in D.vertices:
        if D.pred(v):
            cert = find_in_module(D, v, check=False)
            if not cert.holds(D):
                bad.append(f"in-module certificate v={v} M={sorted(cert.module)}")
            modules.add(cert.module)

    for U in modules:
        if not in_class(contract(D, U).result, W3PLUS_CLASS):
            bad.append(f"contraction leaves class U={sorted(U)}")
        for v in D.vertices:
            if v in U:
                continue
            T = two_step_set(D, U, v)
            if not is_transitive_tournament(D, T):
                bad.append(f"two-step set not transitive M={sorted(U)} v={v}")

    for x, y in F.arcs():
        for z in D.succ(y):
            if z != x and not D.adjacent(x, z):
                if not in_class(add_arc(D, (x, z)), W3PLUS_CLASS):
                    bad.append(f"arc addition leaves class x={x} y={y} z={z}")
    return bad
