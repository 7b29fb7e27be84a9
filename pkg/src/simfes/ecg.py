"""Edge-colored multigraphs, the ECG text format, and basic cycle computations.

Vertices are ``1..n``. Edge ids are 1-based positions in the edge list and
stay fixed through serialization, so witnesses can be reported as id sets.
Loops and parallel edges are allowed; a loop and a parallel pair both count
as cycles.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class ECGParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


@dataclass(frozen=True)
class EdgeColoredGraph:
    n: int
    alpha: int
    edges: tuple[tuple[int, int, frozenset[int]], ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "edges",
            tuple((int(u), int(v), frozenset(c)) for u, v, c in self.edges))
        if self.n < 0 or self.alpha < 0:
            raise ValueError("n and alpha must be non-negative")
        for u, v, c in self.edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u},{v}) has an endpoint out of range")
            if not c:
                raise ValueError(f"edge ({u},{v}) has an empty color set")
            if min(c) < 1 or max(c) > self.alpha:
                raise ValueError(f"edge ({u},{v}) has a color outside 1..{self.alpha}")

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_ids(self) -> range:
        return range(1, self.m + 1)

    def edge(self, eid: int) -> tuple[int, int, frozenset[int]]:
        if not 1 <= eid <= self.m:
            raise KeyError(f"unknown edge id {eid}")
        return self.edges[eid - 1]

    def colors(self, eid: int) -> frozenset[int]:
        return self.edge(eid)[2]

    def color_subgraph(self, i: int) -> "Multigraph":
        return color_subgraph(self, i)

    def without(self, removed: Iterable[int]) -> "EdgeColoredGraph":
        """Copy with the given edge ids deleted (remaining ids are renumbered)."""
        removed = set(removed)
        return EdgeColoredGraph(
            self.n, self.alpha,
            tuple(e for eid, e in enumerate(self.edges, 1) if eid not in removed))


@dataclass(frozen=True)
class Multigraph:
    """Uncolored multigraph; ``edges`` maps edge id -> (u, v)."""
    n: int
    edges: tuple[tuple[int, int, int], ...]  # (id, u, v)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_ids(self) -> list[int]:
        return [eid for eid, _, _ in self.edges]


def color_subgraph(G: EdgeColoredGraph, i: int) -> Multigraph:
    if not 1 <= i <= G.alpha:
        raise ValueError(f"color {i} out of range 1..{G.alpha}")
    return Multigraph(G.n, tuple(
        (eid, u, v) for eid, (u, v, c) in enumerate(G.edges, 1) if i in c))


class DisjointSet:
    def __init__(self, items: Iterable = ()):
        self.parent = {x: x for x in items}

    def find(self, x):
        parent = self.parent
        root = parent.setdefault(x, x)
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def components(H: Multigraph) -> int:
    ds = DisjointSet(range(1, H.n + 1))
    count = H.n
    for _, u, v in H.edges:
        if ds.union(u, v):
            count -= 1
    return count


def is_acyclic(H: Multigraph) -> bool:
    ds = DisjointSet(range(1, H.n + 1))
    return all(ds.union(u, v) for _, u, v in H.edges)


def excess(G: EdgeColoredGraph, i: int) -> int:
    """|E(G_i)| - n + (components of G_i): the fewest deletions making G_i a forest."""
    H = color_subgraph(G, i)
    return H.m - H.n + components(H)


def spanning_forest(edges: Sequence[tuple[int, int, int]]) -> tuple[list[int], list[int]]:
    """Split ``(id, u, v)`` edges into (forest ids, leftover ids), greedily in list order."""
    ds = DisjointSet()
    forest, rest = [], []
    for eid, u, v in edges:
        (forest if ds.union(u, v) else rest).append(eid)
    return forest, rest


def bridges(edges: Sequence[tuple[int, int, int]]) -> set[int]:
    """Ids of bridge edges. Loops are never bridges; nor is any edge of a parallel bundle."""
    adj: dict[int, list[tuple[int, int]]] = {}
    for eid, u, v in edges:
        if u == v:
            continue
        adj.setdefault(u, []).append((v, eid))
        adj.setdefault(v, []).append((u, eid))
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out: set[int] = set()
    t = 0
    for root in adj:
        if root in disc:
            continue
        disc[root] = low[root] = t
        t += 1
        # iterative DFS; the parent edge is skipped by id so parallels stay cycles
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            x, pe, it = stack[-1]
            advanced = False
            for y, eid in it:
                if eid == pe:
                    continue
                if y in disc:
                    low[x] = min(low[x], disc[y])
                else:
                    disc[y] = low[y] = t
                    t += 1
                    stack.append((y, eid, iter(adj[y])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[x])
                    if low[x] > disc[parent]:
                        out.add(pe)
    return out


def cycle_edges(H: Multigraph) -> set[int]:
    """Edges lying on at least one cycle: loops plus every non-bridge edge."""
    return set(H.edge_ids()) - bridges(H.edges)


def _check_ids(G: EdgeColoredGraph, F: Iterable[int]) -> set[int]:
    F = set(F)
    bad = [e for e in F if not 1 <= e <= G.m]
    if bad:
        raise KeyError(f"unknown edge id(s) {sorted(bad)}")
    return F


def verify_sfes(G: EdgeColoredGraph, F: Iterable[int]) -> bool:
    """True iff deleting ``F`` leaves every color class acyclic."""
    F = _check_ids(G, F)
    for i in range(1, G.alpha + 1):
        ds = DisjointSet()
        for eid, (u, v, c) in enumerate(G.edges, 1):
            if i in c and eid not in F and not ds.union(u, v):
                return False
    return True


def simultaneous_forest_check(G: EdgeColoredGraph, F: Iterable[int]) -> bool:
    """True iff the edges ``F`` induce a forest in every color class."""
    F = _check_ids(G, F)
    return verify_sfes(G, set(G.edge_ids()) - F)


# ---------------------------------------------------------------- text format

def parse_ecg(text: str) -> EdgeColoredGraph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if tok[0] == "c":
            continue
        if tok[0] == "p":
            if header is not None:
                raise ECGParseError(lineno, "duplicate header")
            if len(tok) != 5 or tok[1] != "ecg":
                raise ECGParseError(lineno, "malformed header, expected 'p ecg <n> <m> <alpha>'")
            try:
                n, m, alpha = (int(x) for x in tok[2:])
            except ValueError:
                raise ECGParseError(lineno, "non-integer header field") from None
            if min(n, m, alpha) < 0:
                raise ECGParseError(lineno, "negative header field")
            header = (n, m, alpha)
            continue
        if tok[0] == "e":
            if header is None:
                raise ECGParseError(lineno, "edge line before header")
            n, m, alpha = header
            if len(tok) != 4:
                raise ECGParseError(lineno, "malformed edge, expected 'e <u> <v> <c1,c2,...>'")
            try:
                u, v = int(tok[1]), int(tok[2])
            except ValueError:
                raise ECGParseError(lineno, "non-integer vertex") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ECGParseError(lineno, f"vertex out of range 1..{n}")
            try:
                cols = [int(x) for x in tok[3].split(",") if x != ""]
            except ValueError:
                raise ECGParseError(lineno, "non-integer color") from None
            if not cols:
                raise ECGParseError(lineno, "empty color list")
            if any(b <= a for a, b in zip(cols, cols[1:])):
                raise ECGParseError(lineno, "colors must be strictly ascending")
            if cols[0] < 1 or cols[-1] > alpha:
                raise ECGParseError(lineno, f"color outside 1..{alpha}")
            edges.append((u, v, frozenset(cols)))
            continue
        raise ECGParseError(lineno, f"unrecognized line type {tok[0]!r}")
    if header is None:
        raise ECGParseError(0, "missing header")
    n, m, alpha = header
    if len(edges) != m:
        raise ECGParseError(0, f"header announces {m} edges, found {len(edges)}")
    return EdgeColoredGraph(n, alpha, tuple(edges))


def write_ecg(G: EdgeColoredGraph, comments: Sequence[str] = ()) -> str:
    lines = [f"c {c}" if c else "c" for c in comments]
    if G.names:
        lines += [f"c v {i} {name}" for i, name in enumerate(G.names, 1)]
    lines.append(f"p ecg {G.n} {G.m} {G.alpha}")
    for u, v, c in G.edges:
        lines.append(f"e {u} {v} {','.join(str(x) for x in sorted(c))}")
    return "\n".join(lines) + "\n"


def parse_witness(text: str) -> list[int]:
    """Edge ids from ``d <id>`` lines; YES/NO and comment lines are skipped."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if not tok or tok[0] in ("YES", "NO", "c") or tok[0].startswith("#"):
            continue
        if tok[0] != "d" or len(tok) != 2 or not tok[1].isdigit():
            raise ECGParseError(lineno, "expected 'd <edge-id>'")
        out.append(int(tok[1]))
    return out


def format_answer(witness: Iterable[int] | None) -> str:
    if witness is None:
        return "NO\n"
    return "YES\n" + "".join(f"d {e}\n" for e in sorted(witness))
