"""Acceptance criteria 1-7.

Each test records one PASS/FAIL line in ``RESULTS``; the lines are printed in
the terminal summary (see conftest.py) and when this file is run as a script.
"""
import time
from collections import Counter
from math import factorial

import numpy as np
import pytest

from matroid_ring import (
    SetChain,
    boundary_contraction,
    boundary_deletion,
    chain_product,
    combination,
    corank_one,
    cyclic_chain_lattice,
    cyclic_flats,
    decompose_to_nested,
    enumerate_nested,
    count_nested,
    eulerian,
    from_cyclic_flats,
    g_invariant,
    indicator,
    intersect,
    mask_of,
    nested_from_cyclic_chain,
    pairing_matrix,
    product,
    uniform,
    vanishes_corank_one,
    vanishes_nested,
    CyclicFlatList,
)
from matroid_ring.generators import all_matroids, random_matroids
from matroid_ring.linalg import bareiss_det, rational_nullspace
from matroid_ring.ring import TOP
from matroid_ring.verify import example_relation, invariants_agree, random_chain

from conftest import eight_element_matroid, two_pairs
from oracles import eulerian_brute, intersection_by_bases

RESULTS: dict[int, str] = {}


def record(k, ok, detail):
    RESULTS[k] = f"criterion {k}: {'PASS' if ok else 'FAIL'} ({detail})"
    return ok


def loopfree(n):
    return all_matroids(n, loopfree=True)


def set_chains(n, c, max_last):
    """All strictly increasing chains of c subsets of [n], the last of size <= max_last."""
    subsets = sorted(range(1 << n), key=lambda A: (bin(A).count("1"), A))
    subsets = [A for A in subsets if bin(A).count("1") <= max_last]

    def grow(chain):
        if len(chain) == c:
            yield SetChain(n, tuple(chain))
            return
        last = chain[-1] if chain else None
        for A in subsets:
            if last is None or (last & ~A == 0 and last != A):
                yield from grow(chain + [A])

    yield from grow([])


# -- 1 ----------------------------------------------------------------------------------


def test_criterion_1_decomposition():
    start = time.perf_counter()
    checked = bad = 0
    for n in range(1, 6):
        for M in loopfree(n):
            checked += 1
            bad += combination(decompose_to_nested(M)) != indicator(M)
    for n in (6, 7, 8):
        for M in random_matroids(n, 1000, seed=n):
            checked += 1
            bad += combination(decompose_to_nested(M)) != indicator(M)
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 300
    record(1, ok, f"{checked} matroids, {bad} mismatches, {elapsed:.1f}s")
    assert ok


# -- 2 ----------------------------------------------------------------------------------


def test_criterion_2_worked_examples():
    E4 = 0b1111
    lhs, rhs = example_relation()
    relation = combination(lhs) == combination(rhs)

    M = two_pairs()
    A = nested_from_cyclic_chain(4, [(0, 0), (mask_of([1, 4]), 1), (E4, 2)])
    B = nested_from_cyclic_chain(4, [(0, 0), (mask_of([2, 3]), 1), (E4, 2)])
    three = {N: c for c, N in decompose_to_nested(M)} == {A: 1, B: 1, uniform(2, 4): -1}

    F = eight_element_matroid()
    S1, S2, R, U1, U2, E = 0b11, 0b1100, 0b1111, 0b111111, 0b11001111, 0xFF
    expected = {frozenset({s, R, u}): -1 for s in (S1, S2) for u in (U1, U2)}
    expected.update({frozenset(T): 1 for T in ({R, U1}, {S1, R}, {S2, R}, {R, U2})})
    expected[frozenset({R})] = -1
    lat = cyclic_chain_lattice(F)
    mu_ok = lat.mu1[TOP] == 1 and all(
        v == expected.get(frozenset(T) - {0, E}, 0) for T, v in lat.mu1.items() if T != TOP)
    zeros = sum(1 for T, v in lat.mu1.items() if T != TOP and v == 0)
    terms = decompose_to_nested(F)
    nine = (len(terms) == 9 and combination(terms) == indicator(F) and all(
        c == -expected[frozenset(cyclic_flats(N).sets) - {0, E}] for c, N in terms))

    ginv = g_invariant(M).counts == {(0, 2, 2): 2}
    ok = relation and three and mu_ok and nine and ginv
    record(2, ok, f"relation={relation} three-term={three} mu1={mu_ok} ({zeros} zeros) "
                  f"nine-term={nine} G={ginv}")
    assert ok


# -- 3 ----------------------------------------------------------------------------------


def test_criterion_3_counting():
    start = time.perf_counter()
    bad = []
    for n in range(1, 8):
        for r in range(1, n + 1):
            a, b, c = len(enumerate_nested(r, n)), count_nested(r, n), eulerian(r - 1, n)
            if not a == b == c == eulerian_brute(r - 1, n):
                bad.append((r, n))
        if sum(count_nested(r, n) for r in range(1, n + 1)) != factorial(n):
            bad.append(("sum", n))
    for r in range(8):
        if eulerian(r, 8) != eulerian_brute(r, 8):
            bad.append((r, 8))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    record(3, ok, f"1 <= r <= n <= 7, oracle to n = 8, {len(bad)} mismatches, {elapsed:.1f}s")
    assert ok


# -- 4 ----------------------------------------------------------------------------------


def test_criterion_4_pairing():
    start = time.perf_counter()
    bad = []
    largest = 0
    for n in range(2, 7):
        for r in range(1, n + 1):
            P = pairing_matrix(r, n)
            size = eulerian(r - 1, n)
            largest = max(largest, P.shape[0])
            if P.shape != (size, size) or not np.isin(P, (0, 1)).all() or abs(bareiss_det(P)) != 1:
                bad.append((r, n))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 300
    record(4, ok, f"all 1 <= r <= n <= 6, largest {largest}x{largest}, "
                  f"{len(bad)} failures, {elapsed:.1f}s")
    assert ok


# -- 5 ----------------------------------------------------------------------------------


def test_criterion_5_vanishing():
    pairs = disagree = 0
    cp_cache = {}
    for n in range(2, 6):
        Gs = [G for G in range(1 << n) if bin(G).count("1") <= n - 2]
        chains = {c: list(set_chains(n, c, n - 2)) for c in range(1, n)}
        for M in loopfree(n):
            r = M.rank()
            if r < 2:
                continue
            for G in Gs:
                pairs += 1
                disagree += vanishes_corank_one(M, G) != (product(M, corank_one(n, G)) is None)
            for c in range(1, r):
                for C in chains[c]:
                    N = cp_cache.setdefault(C, chain_product(C))
                    pairs += 1
                    disagree += vanishes_nested(M, C) != (product(M, N) is None)
    sampled = 0
    rng = np.random.default_rng(2024)
    for n in (6, 7):
        for M in random_matroids(n, 1000, seed=100 + n):
            if M.rank() < 2:
                M = uniform(int(rng.integers(2, n + 1)), n)
            G = sum(1 << int(i) for i in rng.choice(n, size=int(rng.integers(0, n - 1)), replace=False))
            disagree += vanishes_corank_one(M, G) != (product(M, corank_one(n, G)) is None)
            C = random_chain(rng, n, int(rng.integers(1, M.rank())))
            disagree += vanishes_nested(M, C) != (product(M, chain_product(C)) is None)
            sampled += 2
    ok = disagree == 0
    record(5, ok, f"{pairs} exhaustive pairs at n <= 5, {sampled} samples at n = 6, 7, "
                  f"{disagree} disagreements")
    assert ok


# -- 6 ----------------------------------------------------------------------------------


def kernel_relations(n, r):
    """Integer relations among the indicator vectors of loopfree rank-r matroids on [n]."""
    ms = [M for M in loopfree(n) if M.rank() == r]
    chains = sorted({c for M in ms for c in indicator(M).coeffs})
    col = {c: j for j, c in enumerate(chains)}
    A = np.zeros((len(chains), len(ms)), dtype=np.int64)
    for j, M in enumerate(ms):
        for c in indicator(M).coeffs:
            A[col[c], j] = 1
    for vec in rational_nullspace(A):
        lhs = [(v, M) for v, M in zip(vec, ms) if v > 0]
        rhs = [(-v, M) for v, M in zip(vec, ms) if v < 0]
        yield lhs, rhs


def test_criterion_6_invariant_linearity():
    relations = failures = 0
    for n in range(2, 6):
        for r in range(1, n + 1):
            for lhs, rhs in kernel_relations(n, r):
                relations += 1
                failures += not (combination(lhs, n) == combination(rhs, n)
                                 and invariants_agree(lhs, rhs))
    lhs, rhs = example_relation()
    relations += 1
    failures += not invariants_agree(lhs, rhs)
    ok = failures == 0 and relations > 1
    record(6, ok, f"{relations} relations (kernel bases at n <= 5 plus the rank-2 example), "
                  f"{failures} failures")
    assert ok


# -- 7 ----------------------------------------------------------------------------------


def test_criterion_7_structural():
    counts = Counter()
    bad = Counter()
    for n in range(1, 6):
        everything = all_matroids(n)
        for M in everything:
            for N in everything:
                counts["intersect"] += 1
                bad["intersect"] += intersect(M, N) != intersection_by_bases(M, N)
            counts["cyclic"] += 1
            rebuilt = from_cyclic_flats(CyclicFlatList(n, cyclic_flats(M).records))
            bad["cyclic"] += rebuilt != M
        lf = loopfree(n)
        for M in lf:
            for N in lf:
                P = product(M, N)  # raises GradingViolation if the rank is off
                if P is not None:
                    counts["grading"] += 1
                    bad["grading"] += P.rank() != M.rank() + N.rank() - n
        for c in range(1, n):
            for C in set_chains(n, c, n - 2):
                acc = uniform(n, n)
                for G in C.sets:
                    acc = product(acc, corank_one(n, G))
                counts["chain product"] += 1
                bad["chain product"] += acc != chain_product(C)
    rng = np.random.default_rng(7)
    for trial in range(200):
        n = int(rng.integers(2, 7))
        x = [(int(rng.integers(-3, 4)), M) for M in random_matroids(n, 3, seed=trial)]
        for bd in (boundary_deletion, boundary_contraction):
            twice = bd(bd(x))
            by_rank = {}
            for N, c in twice.items():
                by_rank.setdefault(N.rank(), []).append((c, N))
            counts["boundary^2"] += 1
            bad["boundary^2"] += any(not combination(t).is_zero() for t in by_rank.values())
    ok = sum(bad.values()) == 0
    detail = ", ".join(f"{k} {bad[k]}/{counts[k]}" for k in sorted(counts))
    record(7, ok, f"failures/instances: {detail}")
    assert ok


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
