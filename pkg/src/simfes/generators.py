"""Instance generators built from hardness reductions, with source-problem oracles.

* :func:`gen_vc3` - Vertex Cover on cubic graphs -> 3-colored Sim-FES.
* :func:`gen_hs` - Hitting Set -> Sim-FES with one color per set.
* :func:`gen_phs` - Partitioned Hitting Set -> Sim-FES with one color per family.
* :func:`gen_random` - seeded random multigraphs for fuzzing.

Each reduction preserves the answer at the stated budget, so the brute-force
oracles for the source problems certify the generated instances.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .ecg import EdgeColoredGraph


@dataclass(frozen=True)
class VCInstance:
    n: int
    edges: tuple[tuple[int, int], ...]
    k: int


@dataclass(frozen=True)
class HSInstance:
    universe: int  # elements are 1..universe
    sets: tuple[frozenset[int], ...]
    k: int


@dataclass(frozen=True)
class PHSInstance:
    universe: int
    families: tuple[tuple[frozenset[int], ...], ...]
    k: int


# ---------------------------------------------------------------- vertex cover

def gen_vc3(inst: VCInstance) -> tuple[EdgeColoredGraph, int]:
    """Subdivide every edge twice, 3-color the result into matchings, mirror it.

    Vertex ids: originals 1..n, then x_{v,u}, x_{u,v} per edge in edge order,
    then the starred copy of every vertex so far (offset by their count).
    """
    n, E = inst.n, [tuple(e) for e in inst.edges]
    deg = [0] * (n + 1)
    for u, v in E:
        if u == v or not (1 <= u <= n and 1 <= v <= n):
            raise ValueError("vertex cover input must be a loopless graph on 1..n")
        deg[u] += 1
        deg[v] += 1
    if any(d != 3 for d in deg[1:]):
        raise ValueError("input graph is not cubic")
    if not 0 <= inst.k <= n:
        raise ValueError("budget must satisfy 0 <= k <= |V|")

    base = n + 2 * len(E)
    names = [f"v{v}" for v in range(1, n + 1)]
    stubs: dict[int, list[tuple[int, int, int]]] = {v: [] for v in range(1, n + 1)}
    middles = []
    for t, (v, u) in enumerate(E):
        xvu, xuv = n + 2 * t + 1, n + 2 * t + 2
        names += [f"x{v}_{u}", f"x{u}_{v}"]
        stubs[v].append((u, t, xvu))
        stubs[u].append((v, t, xuv))
        middles.append((v, xvu, xuv, u))

    color: dict[tuple[int, int], int] = {}
    for v in range(1, n + 1):
        for c, (_, _, x) in enumerate(sorted(stubs[v]), 1):
            color[(v, x)] = c
    subdivided = []
    for v, xvu, xuv, u in middles:
        used = {color[(v, xvu)], color[(u, xuv)]}
        free = [c for c in (1, 2, 3) if c not in used]
        assert free, "no color left for a subdivision edge"
        color[(xvu, xuv)] = free[0]
        subdivided += [(v, xvu), (xvu, xuv), (u, xuv)]

    names += [s + "*" for s in names]
    edges = [(v, v + base, frozenset({1, 2, 3})) for v in range(1, base + 1)]
    for a, b in subdivided:
        c = frozenset({color[(a, b)]})
        edges.append((a, b, c))
        edges.append((a + base, b + base, c))
    G = EdgeColoredGraph(2 * base, 3, tuple(edges), tuple(names))
    return G, inst.k + len(E)


def brute_vc(n: int, edges: Sequence[tuple[int, int]], k: int) -> bool:
    for size in range(min(k, n) + 1):
        for S in combinations(range(1, n + 1), size):
            s = set(S)
            if all(u in s or v in s for u, v in edges):
                return True
    return False


# ---------------------------------------------------------------- hitting set

def _cycle_graph(universe: int, cycles: Sequence[tuple[int, Sequence[int]]],
                 alpha: int) -> EdgeColoredGraph:
    """Element edges v_i-w_i plus one colored cycle through each listed element set."""
    elem_colors: dict[int, set[int]] = {i: set() for i in range(1, universe + 1)}
    for t, members in cycles:
        for i in members:
            elem_colors[i].add(t)
    names = []
    for i in range(1, universe + 1):
        names += [f"v{i}", f"w{i}"]
    # element edges with no color are pruned: they lie on no cycle
    edges = [(2 * i - 1, 2 * i, frozenset(elem_colors[i]))
             for i in range(1, universe + 1) if elem_colors[i]]
    nxt = 2 * universe + 1
    for t, members in cycles:
        order = sorted(members)
        # consecutive pairs, then the closing pair from the largest back to the smallest
        for a, b in zip(order, order[1:] + order[:1]):
            names.append(f"s{a}_{b}_{t}")
            s = nxt
            nxt += 1
            edges.append((2 * a, s, frozenset({t})))
            edges.append((s, 2 * b - 1, frozenset({t})))
    return EdgeColoredGraph(nxt - 1, alpha, tuple(edges), tuple(names))


def _check_sets(universe: int, sets: Sequence[frozenset[int]]) -> None:
    for f in sets:
        if len(f) < 2:
            raise ValueError("set of size < 2 unsupported")
        if min(f) < 1 or max(f) > universe:
            raise ValueError("set element outside the universe")


def gen_hs(inst: HSInstance) -> tuple[EdgeColoredGraph, int]:
    _check_sets(inst.universe, inst.sets)
    cycles = [(t, sorted(f)) for t, f in enumerate(inst.sets, 1)]
    return _cycle_graph(inst.universe, cycles, len(inst.sets)), inst.k


def gen_phs(inst: PHSInstance) -> tuple[EdgeColoredGraph, int]:
    cycles = []
    for t, fam in enumerate(inst.families, 1):
        _check_sets(inst.universe, fam)
        for a, b in combinations(fam, 2):
            if a & b:
                raise ValueError(f"sets within family {t} overlap")
        cycles += [(t, sorted(f)) for f in fam]
    return _cycle_graph(inst.universe, cycles, len(inst.families)), inst.k


def brute_hs(universe: int, sets: Sequence[frozenset[int]], k: int) -> bool:
    for size in range(min(k, universe) + 1):
        for S in combinations(range(1, universe + 1), size):
            s = set(S)
            if all(s & f for f in sets):
                return True
    return False


def brute_phs(universe: int, families: Sequence[Sequence[frozenset[int]]], k: int) -> bool:
    return brute_hs(universe, [f for fam in families for f in fam], k)


# ---------------------------------------------------------------- fuzzing

def gen_random(n: int, m: int, alpha: int, seed: int) -> EdgeColoredGraph:
    """Uniform endpoints (loops allowed) and a uniform nonempty color set per edge."""
    if n < 1 and m > 0:
        raise ValueError("edges need at least one vertex")
    if alpha < 1 and m > 0:
        raise ValueError("edges need at least one color")
    rng = random.Random(seed)
    edges = []
    for _ in range(m):
        u, v = rng.randint(1, n), rng.randint(1, n)
        mask = rng.randint(1, 2 ** alpha - 1)
        edges.append((u, v, frozenset(i + 1 for i in range(alpha) if mask >> i & 1)))
    return EdgeColoredGraph(n, alpha, tuple(edges))


def random_cubic(n: int, seed: int, tries: int = 1000) -> VCInstance:
    """Simple cubic graph on n vertices by the pairing model with rejection."""
    if n % 2 or n < 4:
        raise ValueError("cubic graphs need an even n >= 4")
    rng = random.Random(seed)
    for _ in range(tries):
        points = [v for v in range(1, n + 1) for _ in range(3)]
        rng.shuffle(points)
        pairs = [tuple(sorted(points[i:i + 2])) for i in range(0, len(points), 2)]
        if all(u != v for u, v in pairs) and len(set(pairs)) == len(pairs):
            return VCInstance(n, tuple(sorted(pairs)), 0)
    raise RuntimeError("failed to sample a simple cubic graph")
