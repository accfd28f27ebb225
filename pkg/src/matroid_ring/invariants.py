"""Invariants that are additive over the ring: G-invariant, Tutte polynomial, chain and flat counts."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Mapping

import numpy as np

from .cyclic import free_rank
from .errors import BadRange, GradeMismatch, InputHasLoops
from .matroid import Matroid, popcount

Composition = tuple  # (a_0, ..., a_r), summing to n


@dataclass(frozen=True, eq=False)
class GInvariant:
    """Sparse map composition -> count; the empty map is the zero invariant."""

    n: int
    r: int | None
    counts: Mapping[Composition, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "counts", {tuple(a): int(v) for a, v in self.counts.items() if v})

    def __eq__(self, other):
        if not isinstance(other, GInvariant):
            return NotImplemented
        return self.n == other.n and self.counts == other.counts

    def __hash__(self):
        return hash((self.n, frozenset(self.counts.items())))

    def __add__(self, other: "GInvariant") -> "GInvariant":
        if self.n != other.n:
            raise GradeMismatch(f"ground sets of size {self.n} and {other.n}")
        out = Counter(self.counts)
        out.update(other.counts)
        return GInvariant(self.n, self.r if self.counts else other.r, out)

    def scale(self, c: int) -> "GInvariant":
        return GInvariant(self.n, self.r, {a: v * c for a, v in self.counts.items()})

    def total(self) -> int:
        return sum(self.counts.values())

    def lines(self) -> list[str]:
        return [f"{v} gamma({','.join(map(str, a))})" for a, v in sorted(self.counts.items())]

    def __str__(self):
        return " + ".join(self.lines()) or "0"


def g_invariant(M: Matroid) -> GInvariant:
    """Maximal chains of flats bucketed by the sizes of their successive differences."""
    if not M.is_loopfree():
        raise InputHasLoops("the G-invariant is taken over loopfree matroids")
    counts: Counter = Counter()
    for chain in M.maximal_chains:
        prev = M.closure(0)
        comp = [popcount(prev)]
        for F in chain:
            comp.append(popcount(F & ~prev))
            prev = F
        counts[tuple(comp)] += 1
    return GInvariant(M.n, M.rank(), counts)


def _terms(terms):
    items = list(terms.items()) if isinstance(terms, Mapping) else list(terms)
    if items and isinstance(items[0][0], Matroid):
        items = [(c, M) for M, c in items]
    return items


def g_invariant_of_combination(terms, n: int | None = None) -> GInvariant:
    items = _terms(terms)
    if not items:
        return GInvariant(n or 0, None, {})
    grades = {M.rank() for _, M in items}
    sizes = {M.n for _, M in items}
    if len(grades) > 1 or len(sizes) > 1:
        raise GradeMismatch(f"combination mixes degrees {sorted(grades)} or sizes {sorted(sizes)}")
    out = GInvariant(items[0][1].n, None, {})
    for c, M in items:
        out = out + g_invariant(M).scale(c)
    return out


@dataclass(frozen=True, eq=False)
class TuttePolynomial:
    """Sparse map (x-degree, y-degree) -> coefficient."""

    coeffs: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {k: int(v) for k, v in self.coeffs.items() if v})

    def __eq__(self, other):
        if not isinstance(other, TuttePolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = Counter(self.coeffs)
        out.update(other.coeffs)
        return TuttePolynomial(out)

    def scale(self, c: int) -> "TuttePolynomial":
        return TuttePolynomial({k: v * c for k, v in self.coeffs.items()})

    def evaluate(self, x, y):
        return sum(c * x ** a * y ** b for (a, b), c in self.coeffs.items())

    def swap(self) -> "TuttePolynomial":
        return TuttePolynomial({(b, a): c for (a, b), c in self.coeffs.items()})

    def lines(self) -> list[str]:
        order = sorted(self.coeffs, key=lambda k: (-k[0], -k[1]))
        return [f"{self.coeffs[k]}*x^{k[0]}*y^{k[1]}" for k in order]

    def __str__(self):
        return " + ".join(self.lines()) or "0"


def tutte(M: Matroid) -> TuttePolynomial:
    """Corank-nullity sum over all subsets, expanded into monomials."""
    rk = M.rank_table.astype(np.int64)
    sizes = np.bitwise_count(np.arange(1 << M.n, dtype=np.int64)).astype(np.int64)
    corank = M.rank() - rk
    null = sizes - rk
    grid = np.zeros((M.rank() + 1, M.n + 1), dtype=np.int64)
    np.add.at(grid, (corank, null), 1)
    out: Counter = Counter()
    for a, b in zip(*np.nonzero(grid)):
        w = int(grid[a, b])
        # (x-1)^a (y-1)^b
        for i in range(a + 1):
            for j in range(b + 1):
                out[i, j] += w * comb(a, i) * comb(b, j) * (-1) ** (a - i + b - j)
    return TuttePolynomial(out)


def tutte_of_combination(terms) -> TuttePolynomial:
    out = TuttePolynomial()
    for c, M in _terms(terms):
        out = out + tutte(M).scale(c)
    return out


def chain_count(M: Matroid, h: int, k: int, sizes) -> int:
    """Chains F_h < ... < F_k of flats with rank(F_i) = i and |F_i| = sizes[i - h]."""
    sizes = tuple(sizes)
    if not 0 <= h <= k <= M.rank() or len(sizes) != k - h + 1:
        raise BadRange(f"need 0 <= h <= k <= {M.rank()} and {k - h + 1} sizes, got h={h}, k={k}")
    ways = {F: 1 for F in M.flats_of_rank(h) if popcount(F) == sizes[0]}
    for i in range(h + 1, k + 1):
        nxt: Counter = Counter()
        for F, w in ways.items():
            for G in M.covers[F]:
                if popcount(G) == sizes[i - h]:
                    nxt[G] += w
        ways = nxt
    return sum(ways.values())


def flat_count(M: Matroid, k: int, s: int, c: int) -> int:
    """Rank-k flats of size s whose restriction has exactly c coloops."""
    if not 0 <= k <= M.rank():
        raise BadRange(f"rank {k} not in 0..{M.rank()}")
    return sum(1 for F in M.flats_of_rank(k) if popcount(F) == s and free_rank(M, F) == c)


def invariant_profile(M: Matroid) -> dict:
    """Every chain and flat count of M in one dictionary, keyed by arguments."""
    out: dict = {}
    for F in M.flats():
        k = M.rank(F)
        key = ("f", k, popcount(F), free_rank(M, F))
        out[key] = out.get(key, 0) + 1
    # F_{h,k} for every h <= k and every size pattern that occurs
    for chain in _all_flat_chains(M):
        for h in range(len(chain)):
            for k in range(h, len(chain)):
                key = ("F", h, k, tuple(popcount(F) for F in chain[h:k + 1]))
                out.setdefault(key, None)
    for key in list(out):
        if key[0] == "F":
            _, h, k, sz = key
            out[key] = chain_count(M, h, k, sz)
    return out


def _all_flat_chains(M: Matroid):
    bottom = M.closure(0)
    for chain in M.maximal_chains:
        yield (bottom, *chain)
