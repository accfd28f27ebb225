"""Matroids on the labeled ground set {1, ..., n}, stored by their bases.

Element sets are plain ``int`` bitmasks throughout the package: element ``i``
corresponds to bit ``i - 1``.  :func:`mask_of` and :func:`elements_of` convert
between bitmasks and sorted element tuples.
"""
from __future__ import annotations

from functools import cached_property
from itertools import combinations

import numpy as np

from .errors import (
    ElementOutOfRange,
    EmptyBases,
    ExchangeAxiomViolation,
    GroundSetMismatch,
    RankOutOfRange,
    RankZero,
    UnequalBasisSizes,
)

MAX_ELEMENTS = 16


def mask_of(elements) -> int:
    """Bitmask of an iterable of 1-based elements (ints pass through unchanged)."""
    if isinstance(elements, (int, np.integer)):
        return int(elements)
    m = 0
    for e in elements:
        m |= 1 << (int(e) - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return int(mask).bit_count()


def full_mask(n: int) -> int:
    return (1 << n) - 1


def compress(mask: int, keep: int) -> int:
    """Renumber the bits of ``mask`` that lie in ``keep`` onto 0, 1, 2, ... in order."""
    out = 0
    j = 0
    i = 0
    while keep >> i:
        if (keep >> i) & 1:
            if (mask >> i) & 1:
                out |= 1 << j
            j += 1
        i += 1
    return out


def _check_exchange(masks: list[int]) -> None:
    family = set(masks)
    for b1 in masks:
        for b2 in masks:
            d1 = b1 & ~b2
            if not d1:
                continue
            d2 = b2 & ~b1
            while d1:
                x = d1 & -d1
                d1 ^= x
                base = b1 ^ x
                ys = d2
                while ys:
                    y = ys & -ys
                    ys ^= y
                    if base | y in family:
                        break
                else:
                    raise ExchangeAxiomViolation(
                        f"no exchange for x={elements_of(x)[0]} between bases "
                        f"{elements_of(b1)} and {elements_of(b2)}",
                        witness=(b1, b2),
                    )


class Matroid:
    """A matroid on {1, ..., n} given by its family of bases.

    Instances are immutable; derived data (rank table, flats, chains) is
    computed lazily and cached.  Equality is structural: same ``n`` and the
    same basis family.

    ``check=False`` skips the basis-axiom validation and is meant for inner
    loops where the family is a matroid by construction.
    """

    def __init__(self, n: int, bases, check: bool = True):
        n = int(n)
        if not 1 <= n <= MAX_ELEMENTS:
            raise ElementOutOfRange(f"ground set size {n} outside 1..{MAX_ELEMENTS}")
        masks = sorted({mask_of(b) for b in bases})
        if check:
            if not masks:
                raise EmptyBases("a matroid needs at least one basis")
            top = full_mask(n)
            for b in masks:
                if b & ~top or b < 0:
                    raise ElementOutOfRange(f"basis {b:#x} not contained in [{n}]")
            sizes = {popcount(b) for b in masks}
            if len(sizes) != 1:
                raise UnequalBasisSizes(f"bases of sizes {sorted(sizes)}")
            _check_exchange(masks)
        self.n = n
        self.bases = tuple(masks)
        self._rank = popcount(masks[0])

    # -- basic structure -------------------------------------------------

    @property
    def ground(self) -> int:
        return full_mask(self.n)

    def rank(self, A: int | None = None) -> int:
        """Rank of ``A`` (of the whole matroid if ``A`` is omitted)."""
        if A is None:
            return self._rank
        A = mask_of(A)
        if A == self.ground:
            return self._rank
        if self.n <= 12 or "rank_table" in self.__dict__:
            return int(self.rank_table[A])
        return max(popcount(b & A) for b in self.bases)

    def corank(self, A: int | None = None) -> int:
        if A is None:
            return self.n - self._rank
        return self._rank - self.rank(A)

    def nullity(self, A: int) -> int:
        A = mask_of(A)
        return popcount(A) - self.rank(A)

    def is_independent(self, A) -> bool:
        A = mask_of(A)
        return self.rank(A) == popcount(A)

    def is_basis(self, A) -> bool:
        return mask_of(A) in self._basis_set

    @cached_property
    def _basis_set(self) -> frozenset:
        return frozenset(self.bases)

    @cached_property
    def basis_array(self) -> np.ndarray:
        return np.array(self.bases, dtype=np.int64)

    @cached_property
    def rank_table(self) -> np.ndarray:
        """``rank_table[A]`` is the rank of the subset with bitmask ``A``."""
        subsets = np.arange(1 << self.n, dtype=np.int64)
        best = np.zeros(1 << self.n, dtype=np.int8)
        B = self.basis_array
        step = max(1, (1 << 22) >> self.n)
        for start in range(0, len(B), step):
            chunk = B[start:start + step]
            c = np.bitwise_count(subsets[:, None] & chunk[None, :]).max(axis=1)
            np.maximum(best, c.astype(np.int8), out=best)
        best.flags.writeable = False
        return best

    @cached_property
    def closure_table(self) -> np.ndarray:
        rk = self.rank_table
        subsets = np.arange(1 << self.n, dtype=np.int64)
        cl = subsets.copy()
        for i in range(self.n):
            bit = 1 << i
            cl |= np.where(rk[subsets | bit] == rk, bit, 0)
        cl.flags.writeable = False
        return cl

    def closure(self, A) -> int:
        return int(self.closure_table[mask_of(A)])

    def is_flat(self, A) -> bool:
        A = mask_of(A)
        return self.closure(A) == A

    @cached_property
    def _flats(self) -> tuple[int, ...]:
        cl = self.closure_table
        idx = np.nonzero(cl == np.arange(1 << self.n))[0]
        rk = self.rank_table[idx]
        order = np.lexsort((idx, rk))
        return tuple(int(x) for x in idx[order])

    def flats(self) -> tuple[int, ...]:
        """All flats, sorted by (rank, bitmask)."""
        return self._flats

    def flats_of_rank(self, s: int) -> tuple[int, ...]:
        return tuple(F for F in self._flats if self.rank_table[F] == s)

    @cached_property
    def flat_set(self) -> frozenset:
        return frozenset(self._flats)

    def loops(self) -> int:
        union = 0
        for b in self.bases:
            union |= b
        return self.ground & ~union

    def coloops(self) -> int:
        inter = self.ground
        for b in self.bases:
            inter &= b
        return inter

    def is_loopfree(self) -> bool:
        return self.loops() == 0

    def circuits(self) -> tuple[int, ...]:
        """Minimal dependent sets."""
        rk = self.rank_table
        out = []
        for A in range(1, 1 << self.n):
            k = popcount(A)
            if rk[A] != k - 1:
                continue
            # dependent with every single-element deletion independent
            x = A
            ok = True
            while x:
                b = x & -x
                x ^= b
                if rk[A ^ b] != k - 1:
                    ok = False
                    break
            if ok:
                out.append(A)
        return tuple(out)

    @cached_property
    def covers(self) -> dict[int, tuple[int, ...]]:
        """Map each flat to the flats covering it."""
        cl = self.closure_table
        out = {}
        for F in self._flats:
            ups = set()
            rest = self.ground & ~F
            while rest:
                b = rest & -rest
                rest ^= b
                ups.add(int(cl[F | b]))
            out[F] = tuple(sorted(ups))
        return out

    @cached_property
    def maximal_chains(self) -> tuple[tuple[int, ...], ...]:
        """Maximal chains of flats ``F_1 < ... < F_r = E`` (the bottom flat is omitted)."""
        covers = self.covers
        top = self.ground
        out = []

        def walk(F, prefix):
            if F == top:
                out.append(tuple(prefix))
                return
            for G in covers[F]:
                prefix.append(G)
                walk(G, prefix)
                prefix.pop()

        walk(self.closure(0), [])
        return tuple(out)

    # -- derived matroids --------------------------------------------------

    def dual(self) -> "Matroid":
        top = self.ground
        return Matroid(self.n, [top & ~b for b in self.bases], check=False)

    def _check_element(self, e: int) -> None:
        if not 1 <= e <= self.n:
            raise ElementOutOfRange(f"element {e} not in [{self.n}]")

    def delete(self, e: int) -> "Matroid":
        """Deletion of ``e``; the remaining elements are renumbered 1..n-1 in order."""
        self._check_element(e)
        if self.n == 1:
            raise ElementOutOfRange("cannot delete the only element")
        bit = 1 << (e - 1)
        keep = self.ground & ~bit
        free = [b for b in self.bases if not b & bit]
        if not free:  # e is a coloop
            free = [b & ~bit for b in self.bases]
        return Matroid(self.n - 1, [compress(b, keep) for b in free], check=False)

    def contract(self, e: int) -> "Matroid":
        """Contraction of ``e``; the remaining elements are renumbered 1..n-1 in order."""
        self._check_element(e)
        if self.n == 1:
            raise ElementOutOfRange("cannot contract the only element")
        bit = 1 << (e - 1)
        keep = self.ground & ~bit
        having = [b & ~bit for b in self.bases if b & bit]
        if not having:  # e is a loop
            having = list(self.bases)
        return Matroid(self.n - 1, [compress(b, keep) for b in having], check=False)

    def restrict(self, T) -> "Matroid":
        """Restriction to ``T``, renumbered onto 1..|T| in order."""
        T = mask_of(T)
        if T & ~self.ground:
            raise ElementOutOfRange(f"{elements_of(T)} not contained in [{self.n}]")
        parts = {b & T for b in self.bases}
        r = max(popcount(p) for p in parts)
        return Matroid(popcount(T), [compress(p, T) for p in parts if popcount(p) == r],
                       check=False)

    def truncate(self) -> "Matroid":
        if self._rank == 0:
            raise RankZero("cannot truncate a rank-0 matroid")
        subs = set()
        for b in self.bases:
            x = b
            while x:
                bit = x & -x
                x ^= bit
                subs.add(b ^ bit)
        return Matroid(self.n, subs, check=False)

    def is_quotient(self, M: "Matroid") -> bool:
        """True iff every flat of ``self`` is a flat of ``M``."""
        if M.n != self.n:
            raise GroundSetMismatch(f"ground sets of size {self.n} and {M.n}")
        return self.flat_set <= M.flat_set

    # -- dunder --------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and self.bases == other.bases

    def __hash__(self):
        return hash((self.n, self.bases))

    def __lt__(self, other):
        return (self.n, self._rank, self.bases) < (other.n, other._rank, other.bases)

    def __repr__(self):
        if len(self.bases) <= 6:
            shown = ", ".join("".join(map(str, elements_of(b))) or "{}" for b in self.bases)
            return f"Matroid(n={self.n}, bases=[{shown}])"
        return f"Matroid(n={self.n}, rank={self._rank}, {len(self.bases)} bases)"

    def __getstate__(self):
        return (self.n, self.bases)

    def __setstate__(self, state):
        self.n, self.bases = state
        self._rank = popcount(self.bases[0])


def from_bases(n: int, bases) -> Matroid:
    """Validated matroid from a family of bases (element iterables or bitmasks)."""
    return Matroid(n, bases, check=True)


def uniform(r: int, n: int) -> Matroid:
    if not 0 <= r <= n:
        raise RankOutOfRange(f"rank {r} not in 0..{n}")
    return Matroid(n, [mask_of(c) for c in combinations(range(1, n + 1), r)], check=False)
