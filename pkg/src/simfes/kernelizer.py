"""Polynomial-time preprocessing for Sim-FES.

``apply_rules`` runs the six reduction rules to a fixed point, restarting
from the first rule after every change:

1. k < 0: NO.
2. every color class is a forest: YES.
3. a self-loop must be deleted: drop it and decrement k.
4. drop isolated vertices.
5. strip color i from edges that lie on no cycle of color class i
   (edges whose color set empties are deleted).
6. a vertex with exactly two incident edges is suppressed; its two edges
   (which have equal color sets once rule 5 is exhausted) merge into one.

``signature_reduce`` then bounds the number of "degree-2 everywhere"
vertices: two non-adjacent such vertices whose incident edges lie on the
same maximal degree-2 paths are interchangeable, so one of them is removed
and its paths are shortcut.

Every kernel edge remembers the original edge ids it stands for, so a
solution of the kernel lifts back to the input graph.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from .ecg import EdgeColoredGraph, bridges, spanning_forest

YES, NO, REDUCED = "YES", "NO", "REDUCED"


@dataclass
class KEdge:
    u: int
    v: int
    colors: frozenset[int]
    origin: tuple[int, ...]


@dataclass
class KernelState:
    alpha: int
    k: int
    vertices: set[int]
    edges: dict[int, KEdge]
    next_id: int
    forced: list[int] = field(default_factory=list)
    trace: list[str] = field(default_factory=list)
    # filled by build_structure()
    forests: dict[int, list[int]] = field(default_factory=dict)
    X: dict[int, list[int]] = field(default_factory=dict)
    U: set[int] = field(default_factory=set)
    T: set[int] = field(default_factory=set)
    D: dict[int, set[int]] = field(default_factory=dict)
    paths: dict[int, list[tuple[int, ...]]] = field(default_factory=dict)

    @classmethod
    def from_graph(cls, G: EdgeColoredGraph, k: int) -> "KernelState":
        edges = {eid: KEdge(u, v, c, (eid,)) for eid, (u, v, c) in enumerate(G.edges, 1)}
        return cls(G.alpha, k, set(range(1, G.n + 1)), edges, G.m + 1)

    def color_edges(self, i: int) -> list[tuple[int, int, int]]:
        return [(eid, e.u, e.v) for eid, e in sorted(self.edges.items()) if i in e.colors]

    def incidence(self) -> dict[int, list[int]]:
        inc: dict[int, list[int]] = {v: [] for v in self.vertices}
        for eid, e in sorted(self.edges.items()):
            inc[e.u].append(eid)
            inc[e.v].append(eid)  # a loop appears twice, i.e. degree 2
        return inc

    def add_edge(self, u: int, v: int, colors: Iterable[int], origin: tuple[int, ...]) -> int:
        eid = self.next_id
        self.next_id += 1
        self.edges[eid] = KEdge(u, v, frozenset(colors), origin)
        return eid

    def remove_vertex(self, v: int) -> None:
        self.vertices.discard(v)
        for eid in [eid for eid, e in self.edges.items() if v in (e.u, e.v)]:
            del self.edges[eid]

    @property
    def X_all(self) -> set[int]:
        return {e for xs in self.X.values() for e in xs}

    @property
    def D_all(self) -> set[int]:
        return set().union(*self.D.values()) if self.D else set()

    def path_membership(self) -> dict[int, frozenset[int]]:
        """Edge id -> ids of the degree-2 paths containing it."""
        member: dict[int, set[int]] = {}
        pid = 0
        for i in sorted(self.paths):
            for path in self.paths[i]:
                for eid in path:
                    member.setdefault(eid, set()).add(pid)
                pid += 1
        return {e: frozenset(s) for e, s in member.items()}

    def to_graph(self) -> tuple[EdgeColoredGraph, list[int]]:
        """Compact copy with vertices renumbered; also returns kernel ids per edge."""
        relabel = {v: i for i, v in enumerate(sorted(self.vertices), 1)}
        ids = sorted(self.edges)
        edges = [(relabel[self.edges[e].u], relabel[self.edges[e].v], self.edges[e].colors)
                 for e in ids]
        return EdgeColoredGraph(len(relabel), self.alpha, tuple(edges)), ids


def _acyclic_everywhere(state: KernelState) -> bool:
    for i in range(1, state.alpha + 1):
        _, rest = spanning_forest(state.color_edges(i))
        if rest:
            return False
    return True


def _step(state: KernelState) -> str | None:
    """Apply the first applicable rule once. Returns a verdict, "changed", or None."""
    if state.k < 0:
        state.trace.append("rule1 k < 0: NO")
        return NO
    if _acyclic_everywhere(state):
        state.trace.append("rule2 all color classes acyclic: YES")
        return YES
    for eid, e in sorted(state.edges.items()):
        if e.u == e.v:
            del state.edges[eid]
            state.k -= 1
            state.forced.append(e.origin[0])
            state.trace.append(f"rule3 delete loop {eid} at vertex {e.u}, k -> {state.k}")
            return "changed"
    inc = state.incidence()
    for v in sorted(state.vertices):
        if not inc[v]:
            state.vertices.discard(v)
            state.trace.append(f"rule4 remove isolated vertex {v}")
            return "changed"
    for i in range(1, state.alpha + 1):
        dead = bridges(state.color_edges(i))
        if not dead:
            continue
        for eid in sorted(dead):
            e = state.edges[eid]
            e.colors = e.colors - {i}
            if not e.colors:
                del state.edges[eid]
        state.trace.append(f"rule5 strip color {i} from edges {sorted(dead)}")
        return "changed"
    for v in sorted(state.vertices):
        if len(inc[v]) != 2:
            continue
        a, b = (state.edges[x] for x in inc[v])
        if a.colors != b.colors:
            raise AssertionError(f"rule6 at vertex {v}: incident color sets differ")
        x = a.v if a.u == v else a.u
        y = b.v if b.u == v else b.u
        del state.edges[inc[v][0]], state.edges[inc[v][1]]
        state.vertices.discard(v)
        new = state.add_edge(x, y, a.colors, a.origin + b.origin)
        state.trace.append(f"rule6 suppress vertex {v}: edges {inc[v][0]},{inc[v][1]} -> {new} "
                           f"({x},{y}) colors {sorted(a.colors)}")
        return "changed"
    return None


def run_rules(state: KernelState) -> str:
    while True:
        r = _step(state)
        if r in (YES, NO):
            return r
        if r is None:
            return REDUCED


def apply_rules(G: EdgeColoredGraph, k: int) -> tuple[str, KernelState]:
    state = KernelState.from_graph(G, k)
    return run_rules(state), state


def build_structure(state: KernelState) -> None:
    """Spanning forests, excess edges X_i, and the degree-2 path systems."""
    alpha = state.alpha
    state.forests, state.X, state.D, state.paths = {}, {}, {}, {}
    deg = {i: {v: 0 for v in state.vertices} for i in range(1, alpha + 1)}
    adj = {i: {v: [] for v in state.vertices} for i in range(1, alpha + 1)}
    for i in range(1, alpha + 1):
        ce = state.color_edges(i)
        state.forests[i], state.X[i] = spanning_forest(ce)
        for eid, u, v in ce:
            deg[i][u] += 1
            deg[i][v] += 1
            adj[i][u].append((eid, v))
            adj[i][v].append((eid, u))
    state.U = {x for eid in state.X_all for x in (state.edges[eid].u, state.edges[eid].v)}
    state.T = {v for v in state.vertices
               if any(deg[i][v] == 1 or deg[i][v] >= 3 for i in range(1, alpha + 1))}
    for i in range(1, alpha + 1):
        Di = {v for v in state.vertices
              if v not in state.T and v not in state.U and deg[i][v] == 2}
        state.D[i] = Di
        seen: set[int] = set()
        found = []
        for start in sorted(Di):
            if start in seen:
                continue
            seen.add(start)
            halves = []
            for eid, nxt in adj[i][start]:
                half, cur, prev_e = [eid], nxt, eid
                while cur in Di and cur not in seen:
                    seen.add(cur)
                    e2, n2 = next((e, w) for e, w in adj[i][cur] if e != prev_e)
                    half.append(e2)
                    cur, prev_e = n2, e2
                halves.append(half)
            found.append(tuple(sorted(set(halves[0]) | set(halves[1]))))
        state.paths[i] = sorted(found)


def _find_collapse(state: KernelState):
    member = state.path_membership()
    inc = state.incidence()
    classes: dict[tuple, list[int]] = {}
    for v in sorted(state.D_all):
        sig = tuple(sorted(tuple(sorted(member.get(e, ()))) for e in inc[v]))
        classes.setdefault(sig, []).append(v)
    for sig, members in sorted(classes.items()):
        if len(members) < 3:
            continue
        for a_idx, u in enumerate(members):
            for v in members[a_idx + 1:]:
                nbrs = {state.edges[e].u for e in inc[v]} | {state.edges[e].v for e in inc[v]}
                if u not in nbrs:
                    return v, u
        state.trace.append(f"signature class of {members} has no non-adjacent pair; skipped")
    return None


def _collapse(state: KernelState, v: int, u: int) -> None:
    inc = state.incidence()
    added = []
    for i in range(1, state.alpha + 1):
        ends = [(eid, state.edges[eid]) for eid in inc[v] if i in state.edges[eid].colors]
        if not ends:
            continue
        assert len(ends) == 2, "collapsed vertex must have degree 0 or 2 per color"
        (e1, a), (_, b) = ends
        x = a.v if a.u == v else a.u
        y = b.v if b.u == v else b.u
        added.append((x, y, i, a.origin))
    state.remove_vertex(v)
    new = [state.add_edge(x, y, {i}, origin) for x, y, i, origin in added]
    state.trace.append(f"signature remove vertex {v} (twin of {u}), shortcut edges {new}")


def signature_reduce(state: KernelState) -> tuple[str, KernelState]:
    while True:
        verdict = run_rules(state)
        if verdict != REDUCED:
            return verdict, state
        build_structure(state)
        for i, xs in state.X.items():
            if len(xs) > state.k:
                state.trace.append(f"excess: |X_{i}| = {len(xs)} > k = {state.k}: NO")
                return NO, state
        pick = _find_collapse(state)
        if pick is None:
            return REDUCED, state
        _collapse(state, *pick)


@dataclass
class Kernel:
    verdict: str
    graph: EdgeColoredGraph
    k: int
    state: KernelState
    kernel_ids: list[int]

    @property
    def trace(self) -> list[str]:
        return self.state.trace

    def lift(self, witness: Iterable[int] | None) -> frozenset[int]:
        """Map kernel edge ids (1-based in ``graph``) to original edge ids."""
        out = set(self.state.forced)
        for e in witness or ():
            out.add(self.state.edges[self.kernel_ids[e - 1]].origin[0])
        return frozenset(out)

    def size_constant(self) -> float | None:
        """Measured c with |V| = (k alpha)^(c alpha); None when the base is degenerate."""
        base = self.k * self.state.alpha
        if base <= 1 or self.graph.n <= 1:
            return None
        return math.log(self.graph.n) / (self.state.alpha * math.log(base))


def kernelize(G: EdgeColoredGraph, k: int, signature: bool = True) -> Kernel:
    state = KernelState.from_graph(G, k)
    if signature:
        verdict, state = signature_reduce(state)
    else:
        verdict = run_rules(state)
    graph, ids = state.to_graph()
    return Kernel(verdict, graph, state.k, state, ids)
