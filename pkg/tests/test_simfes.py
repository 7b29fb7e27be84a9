import random

import pytest

from simfes.ecg import EdgeColoredGraph, excess, verify_sfes
from simfes.ffield import PrimeField
from simfes.simfes_solver import (alpha1_threshold, brute_simfes, build_parity_instance, copies,
                                  fake_count, legal_guesses, min_sfes_size, solve_simfes)

from corpus import TRIANGLE, colored, small_random

TWO_TRIANGLES = EdgeColoredGraph(6, 2, tuple(
    [(u, v, {1}) for u, v in TRIANGLE] + [(u + 3, v + 3, {2}) for u, v in TRIANGLE]))


def test_copies_and_fakes():
    G = EdgeColoredGraph(2, 3, ((1, 2, {2}),))
    assert [c.kind for c in copies(G, 1)] == ["fake", "original", "fake"]
    assert fake_count(G) == 2


def test_build_instance_triangle():
    G = colored(3, 1, TRIANGLE)
    inst = build_parity_instance(G, 1, (1,), random.Random(0))
    assert inst.q == 1 and inst.M.rank == 1 and all(len(b) == 1 for b in inst.blocks)


def test_rank_is_alpha_k():
    for seed in range(40):
        G = small_random(seed)
        for k in range(1, 4):
            k = min(k, G.m)
            for t in legal_guesses(G, k):
                inst = build_parity_instance(G, k, t, random.Random(0))
                assert inst.M.rank == G.alpha * k


def test_fully_colored_has_one_guess():
    G = colored(3, 3, TRIANGLE + ((1, 2),), {1, 2, 3})
    assert fake_count(G) == 0
    assert legal_guesses(G, 2) == [(2, 2, 2)]


def test_examples():
    G = colored(3, 3, TRIANGLE, {1, 2, 3})
    for solver in (solve_simfes, brute_simfes):
        v = solver(G, 1)
        assert v and len(v.witness) == 1 and verify_sfes(G, v.witness)
        assert not solver(TWO_TRIANGLES, 1)
        assert solver(TWO_TRIANGLES, 2)


def test_excess_above_k_skips_parity():
    G = colored(3, 1, TRIANGLE + ((1, 2), (2, 3)))
    v = solve_simfes(G, 2)
    assert not v and v.diagnostics["guesses_tried"] == 0
    assert excess(G, 1) == 3


def test_negative_k():
    assert not solve_simfes(colored(1, 1, ()), -1)
    assert not brute_simfes(colored(1, 1, ()), -1)


def test_matches_brute_force():
    for seed in range(150):
        G = small_random(seed)
        for k in range(4):
            v, ref = solve_simfes(G, k, seed=seed), brute_simfes(G, k)
            assert v.answer == ref.answer, (seed, k)
            if v:
                assert len(v.witness) <= k and verify_sfes(G, v.witness)


def test_kernel_path_matches_brute_force():
    for seed in range(150, 250):
        G = small_random(seed)
        for k in range(4):
            v = solve_simfes(G, k, use_kernel=True)
            assert v.answer == brute_simfes(G, k).answer
            if v:
                assert len(v.witness) <= k and verify_sfes(G, v.witness)


def test_alpha_one_closed_form():
    for seed in range(100):
        G = small_random(seed, alpha=1)
        assert min_sfes_size(G) == alpha1_threshold(G)
        for k in range(4):
            assert solve_simfes(G, k).answer == (k >= alpha1_threshold(G))


def test_deterministic():
    G = small_random(42, nmax=5, mmax=7, alpha=2)
    a = solve_simfes(G, 2, seed=9)
    b = solve_simfes(G, 2, seed=9)
    assert a.answer == b.answer and a.witness == b.witness


def test_small_prime_still_sound():
    # over a tiny field false NOs are possible, false YESes never are
    for seed in range(60):
        G = small_random(seed)
        v = solve_simfes(G, 2, prime=11)
        if v:
            assert verify_sfes(G, v.witness) and brute_simfes(G, 2)


def test_oracle_guard():
    G = colored(30, 1, tuple((i, i % 30 + 1) for i in range(1, 31)) * 2)
    with pytest.raises(ValueError, match="too large"):
        brute_simfes(G, 10)
