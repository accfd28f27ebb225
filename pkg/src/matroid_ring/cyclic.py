"""Cyclic flats: computing them, checking their axioms, and rebuilding a matroid from them."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

import numpy as np

from .errors import InvalidCyclicData, NotAFlat
from .matroid import Matroid, elements_of, full_mask, mask_of, popcount


class CyclicFlat(NamedTuple):
    set: int
    rank: int

    def __repr__(self):
        return f"({set(elements_of(self.set)) or '{}'}, {self.rank})"


@dataclass(frozen=True)
class CyclicFlatList:
    """Records ``(set, rank)`` on ground set [n], kept sorted by (rank, set)."""

    n: int
    records: tuple[CyclicFlat, ...]

    def __post_init__(self):
        recs = sorted({CyclicFlat(mask_of(s), int(r)) for s, r in self.records},
                      key=lambda c: (c.rank, c.set))
        object.__setattr__(self, "records", tuple(recs))

    @classmethod
    def from_pairs(cls, n, pairs) -> "CyclicFlatList":
        """Build from ``(elements, rank)`` pairs, elements given 1-based."""
        return cls(n, tuple((mask_of(s), r) for s, r in pairs))

    def __iter__(self):
        return iter(self.records)

    def __len__(self):
        return len(self.records)

    @property
    def sets(self) -> tuple[int, ...]:
        return tuple(c.set for c in self.records)

    def rank_of(self, Z: int) -> int:
        for c in self.records:
            if c.set == Z:
                return c.rank
        raise KeyError(Z)

    def is_chain(self) -> bool:
        sets = sorted(self.sets, key=popcount)
        return all(a & ~b == 0 for a, b in zip(sets, sets[1:]))


def cyclic_part(M: Matroid, F) -> int:
    """Union of the circuits of ``M`` inside the flat ``F``."""
    F = mask_of(F)
    if not M.is_flat(F):
        raise NotAFlat(f"{elements_of(F)} is not a flat")
    rF = M.rank(F)
    out = 0
    x = F
    while x:
        b = x & -x
        x ^= b
        if M.rank(F ^ b) == rF:
            out |= b
    return out


def free_part(M: Matroid, F) -> int:
    F = mask_of(F)
    return F & ~cyclic_part(M, F)


def free_rank(M: Matroid, F) -> int:
    """Size of the free part; also the number of coloops of the restriction to ``F``."""
    return popcount(free_part(M, F))


def _cyclic_mask(M: Matroid) -> np.ndarray:
    rk = M.rank_table
    subsets = np.arange(1 << M.n, dtype=np.int64)
    ok = np.ones(1 << M.n, dtype=bool)
    for i in range(M.n):
        bit = 1 << i
        has = (subsets & bit) != 0
        ok &= ~has | (rk[subsets ^ bit] == rk)
    return ok


def cyclic_flats(M: Matroid) -> CyclicFlatList:
    """The lattice Z(M) of cyclic flats together with their ranks."""
    cached = M.__dict__.get("_cyclic_flats")
    if cached is not None:
        return cached
    cyc = _cyclic_mask(M)
    flats = np.array(M.flats(), dtype=np.int64)
    keep = flats[cyc[flats]]
    out = CyclicFlatList(M.n, tuple(CyclicFlat(int(Z), int(M.rank_table[Z])) for Z in keep))
    M.__dict__["_cyclic_flats"] = out
    return out


def is_nested(M: Matroid) -> bool:
    return cyclic_flats(M).is_chain()


# -- Bonin–de Mier axioms ----------------------------------------------------


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    axiom: str | None = None
    witness: tuple = ()
    message: str = ""

    def __bool__(self):
        return self.ok


def _join_meet(sets):
    """Join/meet tables inside the family, or a failing pair."""
    idx = {Z: i for i, Z in enumerate(sets)}
    join, meet = {}, {}
    for X in sets:
        for Y in sets:
            ups = [Z for Z in sets if X | Y == (X | Y) & Z]
            lows = [Z for Z in sets if Z & ~(X & Y) == 0]
            minimal = [Z for Z in ups if not any(W != Z and W & ~Z == 0 for W in ups)]
            maximal = [Z for Z in lows if not any(W != Z and Z & ~W == 0 for W in lows)]
            if len(minimal) != 1:
                return None, None, ("join", X, Y)
            if len(maximal) != 1:
                return None, None, ("meet", X, Y)
            join[idx[X], idx[Y]] = minimal[0]
            meet[idx[X], idx[Y]] = maximal[0]
    return join, meet, None


def validate_cyclic_axioms(L: CyclicFlatList) -> AxiomReport:
    """Check (Z0)-(Z3); on failure the report names the axiom and a witness."""
    sets = list(L.sets)
    if len(set(sets)) != len(sets):
        return AxiomReport(False, "Z0", (), "a set appears with two different ranks")
    if not sets:
        return AxiomReport(False, "Z0", (), "empty family")
    top = full_mask(L.n)
    for Z in sets:
        if Z & ~top:
            return AxiomReport(False, "Z0", (Z,), f"{Z:#x} not inside [{L.n}]")
    r = {c.set: c.rank for c in L.records}
    join, meet, bad = _join_meet(sets)
    if bad is not None:
        kind, X, Y = bad
        return AxiomReport(False, "Z0", (X, Y),
                           f"no unique {kind} of {elements_of(X)} and {elements_of(Y)}")
    bottom = [Z for Z in sets if all(Z & ~W == 0 for W in sets)][0]
    if r[bottom] != 0:
        return AxiomReport(False, "Z1", (bottom,), "minimal element must have rank 0")
    for X in sets:
        for Y in sets:
            if X != Y and X & ~Y == 0:
                d = r[Y] - r[X]
                if not 0 < d < popcount(Y & ~X):
                    return AxiomReport(False, "Z2", (X, Y),
                                       f"0 < {d} < {popcount(Y & ~X)} fails")
    for i, X in enumerate(sets):
        for j, Y in enumerate(sets):
            J, Mt = join[i, j], meet[i, j]
            if r[X] + r[Y] < r[J] + r[Mt] + popcount((X & Y) & ~Mt):
                return AxiomReport(False, "Z3", (X, Y), "submodular inequality fails")
    return AxiomReport(True)


# -- reconstruction -----------------------------------------------------------


def flats_from_cyclic(L: CyclicFlatList) -> dict[int, int]:
    """All flats with their ranks, built stratum by stratum from (rank, free rank).

    Stratum (s, 0) holds the cyclic flats of rank s; stratum (s, m) collects
    the sets F + p with F in stratum (s-1, m-1) that are not inside a flat of
    rank s with smaller free rank.
    """
    n = L.n
    top_rank = max(c.rank for c in L.records)
    top_set = max(L.sets, key=popcount)
    rank = top_rank + n - popcount(top_set)
    ground = full_mask(n)
    strata: dict[tuple[int, int], list[int]] = {}
    for s in range(rank + 1):
        strata[s, 0] = [c.set for c in L.records if c.rank == s]
        for m in range(1, s + 1):
            lower = [G for mm in range(m) for G in strata[s, mm]]
            found = set()
            for F in strata.get((s - 1, m - 1), ()):
                rest = ground & ~F
                while rest:
                    p = rest & -rest
                    rest ^= p
                    cand = F | p
                    if cand in found:
                        continue
                    if any(cand & ~G == 0 for G in lower):
                        continue
                    found.add(cand)
            strata[s, m] = sorted(found)
    return {F: s for (s, _), Fs in strata.items() for F in Fs}


def from_cyclic_flats(L: CyclicFlatList, check: bool = True) -> Matroid:
    """The unique matroid whose cyclic flats (with ranks) are ``L``."""
    if check:
        report = validate_cyclic_axioms(L)
        if not report:
            raise InvalidCyclicData(f"({report.axiom}) {report.message}", report)
    flats = flats_from_cyclic(L)
    rank = max(flats.values())
    hyperplanes = [F for F, s in flats.items() if s == rank - 1]
    bases = []
    for combo in combinations(range(L.n), rank):
        B = 0
        for i in combo:
            B |= 1 << i
        if not any(B & ~H == 0 for H in hyperplanes):
            bases.append(B)
    M = Matroid(L.n, bases, check=False)
    M.__dict__["_cyclic_flats"] = L
    return M


# -- transversal matroids -------------------------------------------------------


def _matchable(S: int, adj: list[int]) -> bool:
    """Can every element of S be matched to a distinct presentation set? (Kuhn)"""
    owner: dict[int, int] = {}  # set index -> element bit

    def augment(e, seen):
        for j, A in enumerate(adj):
            if A & e and j not in seen:
                seen.add(j)
                if j not in owner or augment(owner[j], seen):
                    owner[j] = e
                    return True
        return False

    x = S
    while x:
        e = x & -x
        x ^= e
        if not augment(e, set()):
            return False
    return True


def transversal(n: int, presentation) -> Matroid:
    """Matroid whose independent sets are the partial transversals of ``presentation``."""
    adj = [mask_of(A) for A in presentation]
    adj = [A for A in adj if A]
    ground = full_mask(n)
    for A in adj:
        if A & ~ground:
            raise ValueError(f"presentation set {elements_of(A)} not inside [{n}]")
    for r in range(min(len(adj), n), -1, -1):
        bases = []
        for combo in combinations(range(n), r):
            S = 0
            for i in combo:
                S |= 1 << i
            if _matchable(S, adj):
                bases.append(S)
        if bases:
            return Matroid(n, bases, check=False)
    raise AssertionError("unreachable: the empty set is always a partial transversal")
