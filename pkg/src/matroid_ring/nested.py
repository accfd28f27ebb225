"""Nested matroids as chain products of corank-one matroids, and their count."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .cyclic import CyclicFlat, CyclicFlatList, cyclic_flats, from_cyclic_flats
from .errors import (
    CoLoopSetTooLarge,
    HasLoops,
    InvalidChain,
    InvalidCyclicData,
    NotAChain,
    NotNested,
    RankOutOfRange,
)
from .matroid import Matroid, elements_of, full_mask, mask_of, popcount


@dataclass(frozen=True)
class SetChain:
    """A strictly increasing chain G_1 < ... < G_k of subsets of [n] with |G_k| <= n - 2.

    The empty chain is allowed; its chain product is the free matroid U_{n,n}.
    """

    n: int
    sets: tuple[int, ...]

    def __post_init__(self):
        sets = tuple(mask_of(G) for G in self.sets)
        object.__setattr__(self, "sets", sets)
        ground = full_mask(self.n)
        for G in sets:
            if G & ~ground:
                raise InvalidChain(f"{elements_of(G)} not inside [{self.n}]")
        for a, b in zip(sets, sets[1:]):
            if a & ~b or a == b:
                raise InvalidChain(f"{elements_of(a)} is not strictly inside {elements_of(b)}")
        if sets and popcount(sets[-1]) > self.n - 2:
            raise InvalidChain(f"last set has {popcount(sets[-1])} > n - 2 elements")

    @classmethod
    def of(cls, n, *sets) -> "SetChain":
        return cls(n, tuple(mask_of(G) for G in sets))

    def __len__(self):
        return len(self.sets)

    def __repr__(self):
        inner = ", ".join(str(set(elements_of(G)) or "{}") for G in self.sets)
        return f"SetChain(n={self.n}, [{inner}])"


def corank_one(n: int, G) -> Matroid:
    """The loopfree corank-one matroid whose coloops are exactly ``G``."""
    G = mask_of(G)
    if popcount(G) > n - 2:
        raise CoLoopSetTooLarge(f"|G| = {popcount(G)} exceeds n - 2 = {n - 2}")
    ground = full_mask(n)
    return Matroid(n, [ground & ~(1 << j) for j in range(n) if not G >> j & 1], check=False)


def chain_product(C: SetChain) -> Matroid:
    """Bases: the (n-k)-sets B with |G_i minus B| <= i - 1 for every i."""
    if not isinstance(C, SetChain):
        raise InvalidChain("expected a SetChain")
    n, k = C.n, len(C.sets)
    bases = []
    for combo in combinations(range(n), n - k):
        B = 0
        for i in combo:
            B |= 1 << i
        if all(popcount(G & ~B) <= i for i, G in enumerate(C.sets)):
            bases.append(B)
    return Matroid(n, bases, check=False)


def transversal_presentation(C: SetChain) -> list[int]:
    """Set system G_1^(|G_1|), G_2^(|G_2 - G_1| - 1), ..., E^(|G_k^c| - 1) presenting M_C."""
    ground = full_mask(C.n)
    if not C.sets:
        return [ground] * C.n
    out = [C.sets[0]] * popcount(C.sets[0])
    for prev, G in zip(C.sets, C.sets[1:]):
        out += [G] * (popcount(G & ~prev) - 1)
    out += [ground] * (popcount(ground & ~C.sets[-1]) - 1)
    return out


def chain_presentation(M: Matroid) -> SetChain:
    """A chain whose chain product is the loopfree nested matroid ``M``.

    Built from the cyclic flats ``0 = Z_0 < ... < Z_k``: the complement of
    ``Z_j`` goes to position ``c - null(Z_j) + 1`` (c the corank), and the
    positions in between are filled by adding the smallest available
    elements one at a time.  Other chains can give the same matroid.
    """
    if not M.is_loopfree():
        raise HasLoops("chain presentations exist only for loopfree matroids")
    L = cyclic_flats(M)
    if not L.is_chain():
        raise NotNested("cyclic flats are not a chain")
    n, c = M.n, M.corank()
    ground = full_mask(n)
    fixed = {}
    for Z, r in L.records[1:]:
        fixed[c - (popcount(Z) - r) + 1] = ground & ~Z
    sets = []
    prev = 0
    for i in range(1, c + 1):
        if i in fixed:
            G = fixed[i]
        else:
            nxt = min((j for j in fixed if j > i), default=None)
            pool = (fixed[nxt] if nxt is not None else ground) & ~prev
            bit = pool & -pool
            G = prev | bit
        sets.append(G)
        prev = G
    return SetChain(n, tuple(sets))


def nested_from_cyclic_chain(n: int, records, check: bool = True) -> Matroid:
    """The nested matroid with the given chain of cyclic flats (first record (0, 0))."""
    recs = [CyclicFlat(mask_of(s), int(r)) for s, r in records]
    L = CyclicFlatList(n, tuple(recs))
    if not L.is_chain():
        raise NotAChain("records are not totally ordered by inclusion")
    if check and (not L.records or L.records[0] != (0, 0)):
        raise InvalidCyclicData("first record must be (empty set, 0)")
    return from_cyclic_flats(L, check=check)


def nested_chains(r: int, n: int):
    """Yield the cyclic-flat chains of all loopfree nested matroids of rank r on [n]."""
    if not 1 <= r <= n:
        raise RankOutOfRange(f"rank {r} not in 1..{n}")
    corank = n - r
    ground = full_mask(n)

    def extend(chain):
        Z, rz = chain[-1]
        null = popcount(Z) - rz
        if null == corank:
            yield tuple(chain)
            return
        rest = ground & ~Z
        # every nonempty subset of the remaining elements, in increasing bitmask order
        sub = rest & -rest
        while sub:
            size = popcount(sub)
            for rr in range(rz + 1, rz + size):
                nz = popcount(Z) + size - rr
                if nz <= corank:
                    chain.append(CyclicFlat(Z | sub, rr))
                    yield from extend(chain)
                    chain.pop()
            sub = (sub - rest) & rest

    yield from extend([CyclicFlat(0, 0)])


def enumerate_nested(r: int, n: int) -> list[Matroid]:
    """Every loopfree nested matroid of rank ``r`` on [n], each exactly once."""
    return list(_enumerate_nested_cached(r, n))


@lru_cache(maxsize=64)
def _enumerate_nested_cached(r: int, n: int) -> tuple[Matroid, ...]:
    return tuple(from_cyclic_flats(CyclicFlatList(n, chain), check=False)
                 for chain in nested_chains(r, n))


@lru_cache(maxsize=None)
def count_nested(r: int, n: int) -> int:
    """Number of loopfree nested matroids of rank r on n labeled elements."""
    if not 1 <= r <= n:
        raise RankOutOfRange(f"rank {r} not in 1..{n}")
    if r == 1:
        return 1
    total = 1
    for k in range(1, r):
        for s in range(k + 1, k + n - r + 1):
            total += comb(n, s) * count_nested(r - k, n - s)
    return total


@lru_cache(maxsize=None)
def eulerian(r: int, n: int) -> int:
    """Permutations of [n] with exactly r ascents (0 outside 0 <= r < n)."""
    if n < 1 or r < 0 or r >= n:
        return 0
    if n == 1:
        return 1
    return (r + 1) * eulerian(r, n - 1) + (n - r) * eulerian(r - 1, n - 1)
