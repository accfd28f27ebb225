"""Property-suite driver behind ``matroid-ring verify``.

Each property is a function of one matroid returning ``True`` or raising
``AssertionError``; a few global properties run once per suite.  Failures are
collected with the smallest failing matroid as the counterexample.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .cyclic import CyclicFlatList, cyclic_flats, from_cyclic_flats
from .errors import GradingViolation, InfeasibleSpec
from .generators import all_matroids, random_matroids
from .invariants import g_invariant, invariant_profile, tutte
from .io import parse_matroid, serialize_matroid
from .matroid import Matroid, from_bases, uniform
from .nested import SetChain, chain_product, corank_one, count_nested, enumerate_nested, eulerian
from .ring import (
    boundary_contraction,
    boundary_deletion,
    combination,
    decompose_to_nested,
    indicator,
    intersect,
    product,
    product_flats_check,
    vanishes_corank_one,
    vanishes_nested,
)

EXHAUSTIVE_LIMIT = 5


def intersection_by_bases(M: Matroid, N: Matroid) -> Matroid:
    """Bases of M ^ N as the smallest pairwise intersections of bases."""
    I = np.bitwise_and.outer(M.basis_array, N.basis_array).ravel()
    sizes = np.bitwise_count(I)
    return Matroid(M.n, np.unique(I[sizes == sizes.min()]).tolist(), check=False)


def random_chain(rng, n: int, c: int) -> SetChain:
    sizes = np.sort(rng.choice(n - 1, size=c, replace=False))
    perm = rng.permutation(n)
    return SetChain(n, tuple(sum(1 << int(i) for i in perm[:s]) for s in sizes))


def example_relation() -> tuple[list, list]:
    """Four rank-2 matroids on [4] with M1 + M2 = M3 + M4 in the ring."""
    m1 = uniform(2, 4)
    m2 = from_bases(4, [[1, 2], [1, 3], [2, 4], [3, 4]])
    m3 = from_bases(4, [[1, 2], [1, 3], [2, 3], [2, 4], [3, 4]])
    m4 = from_bases(4, [[1, 2], [1, 3], [1, 4], [2, 4], [3, 4]])
    return [(1, m1), (1, m2)], [(1, m3), (1, m4)]


def _profile_of(terms) -> Counter:
    out: Counter = Counter()
    for c, M in terms:
        for k, v in invariant_profile(M).items():
            out[k] += c * v
    return Counter({k: v for k, v in out.items() if v})


def invariants_agree(lhs, rhs) -> bool:
    """G-invariant, Tutte polynomial and all chain and flat counts agree on both sides."""
    def gsum(terms):
        out = Counter()
        for c, M in terms:
            for a, v in g_invariant(M).counts.items():
                out[a] += c * v
        return {a: v for a, v in out.items() if v}

    def tsum(terms):
        out = Counter()
        for c, M in terms:
            for a, v in tutte(M).coeffs.items():
                out[a] += c * v
        return {a: v for a, v in out.items() if v}

    return (gsum(lhs) == gsum(rhs) and tsum(lhs) == tsum(rhs)
            and _profile_of(lhs) == _profile_of(rhs))


# -- per-matroid properties ------------------------------------------------------


def p_decomposition(M):
    terms = decompose_to_nested(M)
    assert combination(terms) == indicator(M), "indicator differs from nested sum"
    assert invariants_agree([(1, M)], terms), "invariants differ across decomposition"
    return True


def p_cyclic_roundtrip(M):
    L = cyclic_flats(M)
    assert from_cyclic_flats(CyclicFlatList(M.n, L.records)) == M, "cyclic flats do not rebuild M"
    return True


def p_serialize_roundtrip(M):
    line = serialize_matroid(M)
    assert parse_matroid(line) == M and serialize_matroid(parse_matroid(line)) == line
    return True


def p_tutte(M):
    t = tutte(M)
    assert t.evaluate(1, 1) == len(M.bases), "T(1,1) is not the basis count"
    assert t.evaluate(2, 2) == 2 ** M.n, "T(2,2) is not 2^n"
    assert tutte(M.dual()) == t.swap(), "duality fails"
    return True


def p_ginv_total(M):
    assert g_invariant(M).total() == len(indicator(M).coeffs)
    return True


def p_intersection(M, others):
    for N in others:
        P = intersect(M, N)
        assert P == intersection_by_bases(M, N), f"intersection oracle differs with {N!r}"
        Q = product(M, N)  # raises on a grading violation
        if Q is not None:
            assert Q.rank() == M.rank() + N.rank() - M.n
    return True


def p_vanish_corank_one(M):
    if M.rank() < 2:
        return True
    n = M.n
    for k in range(n - 1):
        for G in combinations(range(n), k):
            G = sum(1 << i for i in G)
            H = corank_one(n, G)
            P = product(M, H)
            assert vanishes_corank_one(M, G) == (P is None), f"G={G:#x}"
            if P is not None:
                assert product_flats_check(M, G) == P.flat_set, f"flats G={G:#x}"
    return True


def p_vanish_nested(M, rng, tries=20):
    r = M.rank()
    if r < 2:
        return True
    for _ in range(tries):
        c = int(rng.integers(1, r))
        C = random_chain(rng, M.n, c)
        P = product(M, chain_product(C))
        assert vanishes_nested(M, C) == (P is None), f"chain {C!r}"
    return True


def p_boundary(M):
    for bd in (boundary_deletion, boundary_contraction):
        once = bd({M: 1})
        twice = bd(once)
        by_grade: dict = {}
        for N, c in twice.items():
            by_grade.setdefault(N.rank(), []).append((c, N))
        for terms in by_grade.values():
            assert combination(terms).is_zero(), f"{bd.__name__} squared is nonzero"
    return True


# -- driver ----------------------------------------------------------------------------


@dataclass
class PropertyResult:
    id: str
    description: str
    instances: int = 0
    failures: int = 0
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass
class VerifyReport:
    n: int
    mode: str
    results: list[PropertyResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self) -> list[str]:
        out = [f"verify n={self.n} mode={self.mode}"]
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            out.append(f"{status} {r.id} {r.description}: {r.instances} instances, {r.failures} failures")
            if r.counterexample:
                out.append(f"  counterexample: {r.counterexample}")
        out.append("OK" if self.ok else "FAILED")
        return out


def _run(result: PropertyResult, fn, items):
    worst = None
    for M in items:
        result.instances += 1
        try:
            fn(M)
        except (AssertionError, GradingViolation) as exc:
            result.failures += 1
            if worst is None or (M.n, len(M.bases)) < (worst[0].n, len(worst[0].bases)):
                worst = (M, str(exc))
    if worst:
        result.counterexample = f"{serialize_matroid(worst[0])} ({worst[1]})"


def run_verify(n: int, mode: str = "sampled", samples: int = 100, seed: int = 0) -> VerifyReport:
    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "exhaustive" and n > EXHAUSTIVE_LIMIT:
        raise InfeasibleSpec(
            f"exhaustive verification is limited to n <= {EXHAUSTIVE_LIMIT}; "
            f"use --samples for n = {n}")
    if not 1 <= n <= 16:
        raise InfeasibleSpec(f"n = {n} outside 1..16")
    if mode == "exhaustive":
        matroids = all_matroids(n, loopfree=True)
    else:
        matroids = random_matroids(n, samples, seed)
    rng = np.random.default_rng(seed)
    if len(matroids) <= 40:
        partners = matroids
    else:
        partners = [matroids[i] for i in rng.choice(len(matroids), 40, replace=False)]
    small = n <= 7
    report = VerifyReport(n, mode)
    plan = [
        ("P01", "decomposition into nested matroids", p_decomposition, True),
        ("P02", "cyclic flats rebuild the matroid", p_cyclic_roundtrip, True),
        ("P03", "serialization roundtrip", p_serialize_roundtrip, True),
        ("P04", "Tutte evaluations and duality", p_tutte, True),
        ("P05", "G-invariant total equals chain count", p_ginv_total, True),
        ("P06", "intersection oracle and grading", lambda M: p_intersection(M, partners), small),
        ("P07", "corank-one vanishing and product flats", p_vanish_corank_one, small),
        ("P08", "chain-product vanishing", lambda M: p_vanish_nested(M, rng), small),
        ("P09", "boundary maps square to zero", p_boundary, n <= 6),
    ]
    for pid, desc, fn, enabled in plan:
        res = PropertyResult(pid, desc)
        if enabled:
            _run(res, fn, matroids)
        report.results.append(res)

    res = PropertyResult("P10", "example relation M1 + M2 = M3 + M4", instances=1)
    lhs, rhs = example_relation()
    if combination(lhs) != combination(rhs) or not invariants_agree(lhs, rhs):
        res.failures = 1
        res.counterexample = "example relation on [4]"
    report.results.append(res)

    res = PropertyResult("P11", "nested count equals Eulerian number")
    if n <= 8:
        for r in range(1, n + 1):
            res.instances += 1
            got = (len(enumerate_nested(r, n)) if n <= 7 else None, count_nested(r, n))
            if got[1] != eulerian(r - 1, n) or got[0] not in (None, got[1]):
                res.failures += 1
                res.counterexample = f"r={r}: {got} vs {eulerian(r - 1, n)}"
    report.results.append(res)
    report.results.sort(key=lambda r: r.id)
    return report
