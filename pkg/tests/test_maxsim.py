import pytest

from simfes.ecg import simultaneous_forest_check
from simfes.maxsim_solver import (brute_maxsim, forest_upper_bound, max_simultaneous_forest,
                                  solve_maxsim)
from simfes.simfes_solver import solve_simfes

from corpus import TRIANGLE, colored, small_random


def test_examples():
    assert solve_maxsim(colored(2, 1, ((1, 2),)), 1)
    tri = colored(3, 1, TRIANGLE)
    v = solve_maxsim(tri, 2)
    assert v and simultaneous_forest_check(tri, v.witness)
    assert not solve_maxsim(tri, 3)
    for seed in range(10):
        assert solve_maxsim(small_random(seed), 0).witness == frozenset()


def test_negative_q():
    with pytest.raises(ValueError):
        solve_maxsim(colored(2, 1, ((1, 2),)), -1)


def test_upper_bound_quick_no():
    G = colored(4, 2, ((1, 2), (2, 3), (1, 3), (3, 4), (1, 4)), {1, 2})
    assert forest_upper_bound(G) == 6
    assert not solve_maxsim(G, 7)


def test_matches_brute_force():
    for seed in range(200):
        G = small_random(seed, nmax=5, mmax=8)
        for q in range(G.m + 1):
            v, ref = solve_maxsim(G, q), brute_maxsim(G, q)
            assert v.answer == ref.answer, (seed, q)
            if v:
                assert len(v.witness) == q and simultaneous_forest_check(G, v.witness)


def test_maximum():
    for seed in range(60):
        G = small_random(seed)
        size, F = max_simultaneous_forest(G)
        assert len(F) == size and simultaneous_forest_check(G, F)
        if size < G.m:
            assert not brute_maxsim(G, size + 1)


def test_duality():
    for seed in range(100):
        G = small_random(seed)
        for k in range(G.m + 1):
            assert solve_simfes(G, k).answer == solve_maxsim(G, G.m - k).answer
