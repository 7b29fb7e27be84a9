"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest -v -s tests/test_acceptance.py`` (or execute this
file directly) to see the summary lines.

SIMFES_VC3_BUDGET (seconds, default 60) bounds each vertex-cover transport
instance; an instance that does not finish inside it counts as not attained.
"""
import json
import multiprocessing as mp
import os
import random
import subprocess
import sys
import time
from itertools import combinations
from math import comb

import pytest

from simfes.ecg import (EdgeColoredGraph, Multigraph, bridges, color_subgraph, components,
                        is_acyclic, simultaneous_forest_check, verify_sfes)
from simfes.ffield import PrimeField, standard_form
from simfes.generators import (HSInstance, PHSInstance, VCInstance, brute_hs, brute_phs,
                               brute_vc, gen_hs, gen_phs, gen_vc3)
from simfes.kernelizer import REDUCED, YES, kernelize
from simfes.matroids import LinearMatroid, cographic, elongation, is_independent
from simfes.maxsim_solver import solve_maxsim
from simfes.parity import brute_parity, solve_parity
from simfes.repfam import Member, representative
from simfes.simfes_solver import alpha1_threshold, brute_simfes, solve_simfes

from corpus import CUBIC, colored_corpus, near_forest, random_multigraph, random_parity, small_random
from matroid_classes import CLASS_COUNTS, bases_of, canonical

HERE = os.path.dirname(os.path.abspath(__file__))
CORPUS_SEEDS = range(500)
KS = range(5)
VC3_BUDGET = float(os.environ.get("SIMFES_VC3_BUDGET", "60"))


@pytest.fixture
def report(capsys):
    def emit(num, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}", flush=True)
        assert ok, detail
    return emit


@pytest.fixture(scope="module")
def corpus():
    # every simple graph with n <= 5, m <= 7 under 500 seeded colorings, plus 500
    # random multigraphs with loops and parallel edges
    return colored_corpus(500) + [small_random(seed) for seed in CORPUS_SEEDS]


@pytest.fixture(scope="module")
def oracle(corpus):
    return {(s, k): brute_simfes(G, k).answer for s, G in enumerate(corpus) for k in KS}


# 1 ----------------------------------------------------------------------------

def test_c01_simfes_oracle_equivalence(corpus, oracle, report):
    t0 = time.perf_counter()
    mismatches, bad_witness = [], []
    for s, G in enumerate(corpus):
        for k in KS:
            v = solve_simfes(G, k, seed=s)
            if v.answer != oracle[(s, k)]:
                mismatches.append((s, k))
            if v and not (len(v.witness) <= k and verify_sfes(G, v.witness)):
                bad_witness.append((s, k))
    secs = time.perf_counter() - t0
    ok = not mismatches and not bad_witness and secs < 600
    report(1, ok, f"{len(corpus) * len(KS)} instances, {len(mismatches)} mismatches, "
                  f"{len(bad_witness)} bad witnesses, {secs:.1f}s (limit 600s)")


# 2 ----------------------------------------------------------------------------

def test_c02_parity_oracle_equivalence(report):
    mismatches, bad = [], []
    for seed in range(500):
        inst = random_parity(seed)
        got, want = solve_parity(inst), brute_parity(inst)
        if (got is None) != (want is None):
            mismatches.append(seed)
        elif got is not None:
            union = [x for b in got for x in inst.blocks[b]]
            if len(got) != inst.q or not is_independent(inst.M, union):
                bad.append(seed)
    report(2, not mismatches and not bad,
           f"500 instances, {len(mismatches)} mismatches, {len(bad)} dependent witnesses")


# 3 ----------------------------------------------------------------------------

def test_c03_elongation_basis_law(report):
    F = PrimeField(2147483647)
    checked = unsound = pre_reseed = post_reseed = 0
    for seed in range(200):
        H = random_multigraph(10_000 + seed, nmax=6, mmax=8)
        M = cographic(H, F)
        for ell in range(M.rank, M.size + 1):
            E = elongation(M, ell, random.Random(seed * 100 + ell))
            for B in combinations(H.edge_ids(), ell):
                rest = Multigraph(H.n, tuple(e for e in H.edges if e[0] not in B))
                acyclic = is_acyclic(rest)
                basis = is_independent(E, B)
                checked += 1
                if basis and not acyclic:
                    unsound += 1
                if acyclic and not basis:
                    pre_reseed += 1
                    E2 = elongation(M, ell, random.Random(f"reseed:{seed}:{ell}"))
                    post_reseed += not is_independent(E2, B)
    report(3, unsound == 0 and pre_reseed == 0 and post_reseed == 0,
           f"{checked} sets B; basis but cyclic: {unsound}; acyclic but not basis: "
           f"{pre_reseed} before reseed, {post_reseed} after")


# 4 ----------------------------------------------------------------------------

def _serves(M, mem, B):
    return not (mem.S & B) and is_independent(M, mem.S | B)


def test_c04_representative_families(report):
    with open(os.path.join(HERE, "data", "matroids_gf7.json")) as fh:
        data = json.load(fh)
    F = PrimeField(data["p"])
    classes = {}
    for entry in data["matroids"]:
        n, rows = entry["n"], entry["rows"]
        r, B = bases_of(rows, n, F.p)
        classes.setdefault(n, set()).add(canonical(n, r, B))
    counts = tuple(len(classes.get(n, ())) for n in range(len(CLASS_COUNTS)))

    rng = random.Random(4)
    families = checks = violations = oversize = 0
    for entry in data["matroids"]:
        n, rows = entry["n"], entry["rows"]
        R, _ = standard_form(F.matrix(rows, n)) if rows else (F.zeros(0, n), [])
        M = LinearMatroid(F, R, tuple(range(n)))
        for s in range(M.rank + 1):
            sets = [frozenset(S) for S in combinations(range(n), s) if is_independent(M, S)]
            subfams = [sets] + [rng.sample(sets, rng.randint(1, len(sets))) for _ in range(2)]
            for fam in subfams:
                members = [Member(S, frozenset({i})) for i, S in enumerate(fam)]
                rep = representative(members, M)
                families += 1
                oversize += len(rep) > comb(M.rank, s)
                for size in range(M.rank - s + 1):
                    for B in combinations(range(n), size):
                        B = frozenset(B)
                        checks += 1
                        if any(_serves(M, m, B) for m in members) and \
                                not any(_serves(M, m, B) for m in rep):
                            violations += 1
    ok = counts == CLASS_COUNTS and violations == 0 and oversize == 0
    report(4, ok, f"{sum(counts)} matroids (classes per size {counts}, expected "
                  f"{CLASS_COUNTS}), {families} families, {checks} extension checks, "
                  f"{violations} violations, {oversize} oversize")


# 5 ----------------------------------------------------------------------------

def _vc3_child(n, E, k, queue):
    G, k2 = gen_vc3(VCInstance(n, E, k))
    v = solve_simfes(G, k2, use_kernel=True)
    queue.put(v.answer)


def _vc3_run(n, E, k, budget):
    ctx = mp.get_context("fork")
    queue = ctx.Queue()
    proc = ctx.Process(target=_vc3_child, args=(n, E, k, queue))
    t0 = time.perf_counter()
    proc.start()
    proc.join(budget)
    if proc.is_alive():
        proc.terminate()
        proc.join()
        return None, budget
    return queue.get(), time.perf_counter() - t0


def _set_systems(seed, partitioned):
    rng = random.Random(seed)
    u = rng.randint(2, 6)
    if not partitioned:
        sets = tuple(frozenset(rng.sample(range(1, u + 1), rng.randint(2, min(u, 4))))
                     for _ in range(rng.randint(1, 4)))
        return u, sets
    fams = []
    for _ in range(rng.randint(1, 4)):
        pool = list(range(1, u + 1))
        rng.shuffle(pool)
        fam = []
        while len(pool) >= 2 and (not fam or rng.random() < 0.6):
            size = rng.randint(2, min(3, len(pool)))
            fam.append(frozenset(pool[:size]))
            pool = pool[size:]
        fams.append(tuple(fam))
    return u, tuple(fams)


def test_c05_reduction_transport(report):
    lines, wrong, unattained = [], [], []
    for name in ("K4", "K33", "prism"):
        n, E = CUBIC[name]
        for k in range(n + 1):
            want = brute_vc(n, E, k)
            got, secs = _vc3_run(n, E, k, VC3_BUDGET)
            if got is None:
                unattained.append(f"{name}/k={k}")
            elif got != want:
                wrong.append(f"{name}/k={k}")
            lines.append(f"{name} k={k}: VC {'YES' if want else 'NO'}, "
                         f"solver {'timeout' if got is None else ('YES' if got else 'NO')} "
                         f"({secs:.1f}s)")
    hs_checked = hs_wrong = 0
    for seed in range(40):
        u, sets = _set_systems(seed, partitioned=False)
        G, _ = gen_hs(HSInstance(u, sets, 0))
        for k in range(u + 1):
            hs_checked += 1
            hs_wrong += solve_simfes(G, k, use_kernel=True).answer != brute_hs(u, sets, k)
        u, fams = _set_systems(seed, partitioned=True)
        G, _ = gen_phs(PHSInstance(u, fams, 0))
        for k in range(u + 1):
            hs_checked += 1
            hs_wrong += solve_simfes(G, k, use_kernel=True).answer != brute_phs(u, fams, k)
    print("\n  " + "\n  ".join(lines))
    ok = not wrong and not unattained and hs_wrong == 0
    report(5, ok, f"vc3: {len(lines)} instances, {len(wrong)} wrong, {len(unattained)} not "
                  f"finished within {VC3_BUDGET:.0f}s {unattained}; hs/phs: {hs_checked} "
                  f"instances, {hs_wrong} wrong")


# 6 ----------------------------------------------------------------------------

def _fixed_point_problems(K):
    G = K.graph
    deg = [0] * (G.n + 1)
    problems = []
    for u, v, _ in G.edges:
        if u == v:
            problems.append("self-loop")
        deg[u] += 1
        deg[v] += 1
    if any(d == 0 for d in deg[1:]):
        problems.append("isolated vertex")
    if any(d == 2 for d in deg[1:]):
        problems.append("degree-2 vertex")
    for i in range(1, G.alpha + 1):
        if bridges(color_subgraph(G, i).edges):
            problems.append(f"bridge in color {i}")
    return problems


def test_c06_kernel_safety(corpus, oracle, report):
    unsafe, not_fixed = [], []
    for s, G in enumerate(corpus):
        for k in KS:
            K = kernelize(G, k)
            got = brute_simfes(K.graph, K.k).answer if K.verdict == REDUCED else K.verdict == YES
            if got != oracle[(s, k)]:
                unsafe.append((s, k))
            if K.verdict == REDUCED and _fixed_point_problems(K):
                not_fixed.append((s, k, _fixed_point_problems(K)))
    report(6, not unsafe and not not_fixed,
           f"{len(corpus) * len(KS)} instances, {len(unsafe)} answer changes, "
           f"{len(not_fixed)} kernels off the fixed point")


# 7 ----------------------------------------------------------------------------

def test_c07_duality(corpus, oracle, report):
    mismatches = checked = 0
    for s, G in enumerate(corpus):
        for k in KS:
            if k > G.m:
                continue
            checked += 1
            v = solve_maxsim(G, G.m - k)
            if v:
                assert simultaneous_forest_check(G, v.witness)
            mismatches += v.answer != oracle[(s, k)]
    report(7, mismatches == 0, f"{checked} (G, k) pairs, {mismatches} disagreements")


# 8 ----------------------------------------------------------------------------

def test_c08_alpha_one_closed_form(corpus, report):
    graphs = [G for G in corpus if G.alpha == 1]
    graphs += [small_random(20_000 + s, alpha=1) for s in range(300)]
    mismatches = 0
    for G in graphs:
        H = color_subgraph(G, 1)
        threshold = H.m - H.n + components(H)
        assert threshold == alpha1_threshold(G)
        for k in KS:
            mismatches += solve_simfes(G, k).answer != (k >= threshold)
    report(8, mismatches == 0, f"{len(graphs)} single-color graphs, k in 0..4, "
                               f"{mismatches} mismatches")


# 9 ----------------------------------------------------------------------------

def _big_overlay(n, alpha, seed):
    rng = random.Random(seed)
    edges = []
    for i in range(1, alpha + 1):
        order = list(range(1, n + 1))
        rng.shuffle(order)
        edges += [(order[j], order[(j + 1) % n], {i}) for j in range(n)]
    return EdgeColoredGraph(n, alpha, tuple(edges))


def test_c09_performance(report):
    rng = random.Random(9)
    cases = []
    for s in range(20):
        a = rng.randint(1, 3)
        cases.append((f"near-forest#{s}",
                      near_forest(rng.randint(20, 50), a, [rng.randint(0, 4) for _ in range(a)], s),
                      rng.randint(0, 4)))
    for a in (1, 2, 3):
        for k in range(5):
            cases.append((f"overlay a={a}", _big_overlay(50, a, k), k))
    slow, worst, biggest = [], 0.0, 0
    for name, G, k in cases:
        t0 = time.perf_counter()
        v = solve_simfes(G, k, use_kernel=True)
        secs = time.perf_counter() - t0
        worst = max(worst, secs)
        biggest = max(biggest, v.diagnostics.get("max_family", 0))
        if secs >= 60:
            slow.append(f"{name} k={k} {secs:.1f}s")
        if v:
            assert verify_sfes(G, v.witness) and len(v.witness) <= k
    report(9, not slow, f"{len(cases)} instances (n <= 50, alpha <= 3, k <= 4), slowest "
                        f"{worst:.1f}s, largest family {biggest}, over 60s: {slow}")


# 10 ---------------------------------------------------------------------------

def _cli(*args, cwd):
    return subprocess.run([sys.executable, "-m", "simfes", *args], capture_output=True,
                          cwd=cwd).stdout


def test_c10_determinism(tmp_path, report):
    inst = tmp_path / "g.ecg"
    inst.write_bytes(_cli("gen", "random", "--n", "6", "--m", "9", "--alpha", "2",
                          "--seed", "5", cwd=tmp_path))
    runs = [
        ("gen", "random", "--n", "6", "--m", "9", "--alpha", "2", "--seed", "5"),
        ("gen", "vc3", "--n", "4", "--edges", "1-2,1-3,1-4,2-3,2-4,3-4", "--k", "3"),
        ("solve", str(inst), "--k", "2", "--seed", "3"),
        ("solve", str(inst), "--k", "3", "--no-kernel", "--seed", "3"),
        ("maxsim", str(inst)),
        ("kernelize", str(inst), "--k", "2"),
        ("bench", "--k", "2", "--count", "10", "--seed", "1"),
    ]
    differing = [" ".join(a[:2]) for a in runs if _cli(*a, cwd=tmp_path) != _cli(*a, cwd=tmp_path)]
    report(10, not differing, f"{len(runs)} commands run twice, byte-identical except: "
                              f"{differing}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", "-s"]))
