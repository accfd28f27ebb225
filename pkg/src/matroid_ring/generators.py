"""Seeded random matroids and exhaustive enumeration of small matroids."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .cyclic import transversal
from .errors import ExchangeAxiomViolation, InfeasibleSpec
from .matroid import Matroid, _check_exchange, full_mask, popcount
from .nested import SetChain, chain_product

KINDS = ("transversal", "chain-product", "graphic", "uniform-minor")
MAX_TRIES = 200


@dataclass(frozen=True)
class RandomMatroidSpec:
    kind: str
    n: int
    rank: int
    seed: int


def _mask(items) -> int:
    m = 0
    for i in items:
        m |= 1 << int(i)
    return m


def _rank_sets(n: int, r: int) -> list[int]:
    return [_mask(c) for c in combinations(range(n), r)]


def _transversal(rng, n, r):
    for _ in range(MAX_TRIES):
        sets = []
        for _ in range(r):
            size = int(rng.integers(1, n + 1))
            sets.append(_mask(rng.choice(n, size=size, replace=False)))
        M = transversal(n, sets)
        if M.is_loopfree() and M.rank() == r:
            return M
    return None


def _chain_product(rng, n, r):
    k = n - r
    if k == 0:
        return chain_product(SetChain(n, ()))
    if k > n - 1:
        return None
    for _ in range(MAX_TRIES):
        sizes = np.sort(rng.choice(n - 1, size=k, replace=False))
        perm = rng.permutation(n)
        chain = SetChain(n, tuple(_mask(perm[:s]) for s in sizes))
        M = chain_product(chain)
        if M.is_loopfree():
            return M
    return None


def _graphic(rng, n, r):
    # cycle matroid of a connected multigraph on r + 1 vertices with n edges, no self-loops
    if not 1 <= r <= 4 or r > n:
        return None
    v = r + 1
    edges = []
    order = rng.permutation(v)
    for i in range(1, v):
        edges.append((int(order[i]), int(order[rng.integers(0, i)])))
    for _ in range(n - r):
        a, b = rng.choice(v, size=2, replace=False)
        edges.append((int(a), int(b)))
    edges = [edges[i] for i in rng.permutation(n)]

    def acyclic(S):
        parent = list(range(v))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i in range(n):
            if S >> i & 1:
                a, b = find(edges[i][0]), find(edges[i][1])
                if a == b:
                    return False
                parent[a] = b
        return True

    return Matroid(n, [S for S in _rank_sets(n, r) if acyclic(S)], check=False)


def _uniform_minor(rng, n, r):
    # U_{r,n} with a random family of circuit-hyperplanes relaxed away (sparse paving)
    if not 1 <= r <= n:
        return None
    bases = _rank_sets(n, r)
    if r < 2 or r == n:
        return Matroid(n, bases, check=False)
    removed: list[int] = []
    want = int(rng.integers(0, len(bases) // 2 + 1))
    for idx in rng.permutation(len(bases))[: 4 * want]:
        if len(removed) >= want:
            break
        S = bases[idx]
        if all(popcount(S & T) <= r - 2 for T in removed):
            removed.append(S)
    drop = set(removed)
    M = Matroid(n, [B for B in bases if B not in drop], check=False)
    return M if M.is_loopfree() else None


_BUILDERS = {
    "transversal": _transversal,
    "chain-product": _chain_product,
    "graphic": _graphic,
    "uniform-minor": _uniform_minor,
}


def random_matroid(spec: RandomMatroidSpec) -> Matroid:
    """A loopfree matroid of the requested kind, rank and size; deterministic in the seed."""
    if spec.kind not in _BUILDERS:
        raise InfeasibleSpec(f"unknown generator kind {spec.kind!r}; choose from {KINDS}")
    if not 1 <= spec.n <= 16 or not 1 <= spec.rank <= spec.n:
        raise InfeasibleSpec(f"no loopfree matroid of rank {spec.rank} on {spec.n} elements")
    rng = np.random.default_rng(spec.seed & (2**64 - 1))
    M = _BUILDERS[spec.kind](rng, spec.n, spec.rank)
    if M is None:
        raise InfeasibleSpec(f"{spec.kind} cannot produce rank {spec.rank} on {spec.n} elements")
    return M


def random_matroids(n: int, count: int, seed: int, kinds=KINDS) -> list[Matroid]:
    """``count`` random loopfree matroids on [n], cycling through kinds and feasible ranks."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        kind = kinds[len(out) % len(kinds)]
        r = int(rng.integers(1, n + 1))
        try:
            out.append(random_matroid(RandomMatroidSpec(kind, n, r, int(rng.integers(2**63)))))
        except InfeasibleSpec:
            continue
    return out


def all_matroids(n: int, loopfree: bool = False) -> list[Matroid]:
    """Every matroid on [n] (n <= 5), found by filtering basis families through the exchange axiom."""
    if not 1 <= n <= 5:
        raise InfeasibleSpec(f"exhaustive enumeration is limited to n <= 5, got {n}")
    ground = full_mask(n)
    out = []
    for r in range(n + 1):
        cands = _rank_sets(n, r)
        for pick in range(1, 1 << len(cands)):
            fam = [c for i, c in enumerate(cands) if pick >> i & 1]
            if loopfree:
                cover = 0
                for B in fam:
                    cover |= B
                if cover != ground:
                    continue
            try:
                _check_exchange(fam)
            except ExchangeAxiomViolation:
                continue
            out.append(Matroid(n, fam, check=False))
    return out
