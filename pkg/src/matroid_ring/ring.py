"""The intersection ring of loopfree matroids on [n].

An element of the degree-r part is stored as a sparse integer vector indexed
by maximal chains ``F_1 < ... < F_r = E`` of subsets of [n] (the empty set is
implicit); a matroid maps to the indicator vector of its chains of flats.
Two combinations of matroids are equal in the ring exactly when their vectors
agree, so equality of :class:`RingElement` is plain dictionary equality.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

import numpy as np

from .cyclic import CyclicFlat, cyclic_flats
from .errors import (
    CoLoopSetTooLarge,
    GradeMismatch,
    GradingViolation,
    GroundSetMismatch,
    InputHasLoops,
    LatticeTooLarge,
    PreconditionViolated,
    ProductIsZero,
    RankOutOfRange,
    RankTooSmall,
)
from .linalg import bareiss_det
from .matroid import Matroid, elements_of, mask_of, popcount
from .nested import SetChain, corank_one, enumerate_nested, nested_from_cyclic_chain
from .poset import Poset

MAX_CYCLIC_FLATS = 24

FlatChain = tuple  # (F_1, ..., F_r) as bitmasks, F_r = E


def _same_ground(M: Matroid, N: Matroid) -> None:
    if M.n != N.n:
        raise GroundSetMismatch(f"ground sets of size {M.n} and {N.n}")


def _require_loopfree(*Ms: Matroid) -> None:
    for M in Ms:
        if not M.is_loopfree():
            raise InputHasLoops(f"{M!r} has loops {elements_of(M.loops())}")


# -- union, intersection, product ------------------------------------------------


def union(M: Matroid, N: Matroid) -> Matroid:
    """Matroid union: independent sets are the unions I | J.

    A maximum-size union can always be enlarged to a union of two bases, so
    the bases of the union are the largest sets of the form B | B'.
    """
    _same_ground(M, N)
    U = np.bitwise_or.outer(M.basis_array, N.basis_array).ravel()
    sizes = np.bitwise_count(U)
    top = sizes.max()
    return Matroid(M.n, np.unique(U[sizes == top]).tolist(), check=False)


def intersect(M: Matroid, N: Matroid) -> Matroid:
    """Matroid intersection, the dual of the union of the duals (may have loops)."""
    _same_ground(M, N)
    return union(M.dual(), N.dual()).dual()


def product(M: Matroid, N: Matroid) -> Matroid | None:
    """Ring product: the intersection if it is loopfree, ``None`` (zero) otherwise."""
    _same_ground(M, N)
    _require_loopfree(M, N)
    expected = M.rank() + N.rank() - M.n
    if expected <= 0:
        return None
    P = intersect(M, N)
    if not P.is_loopfree():
        return None
    if P.rank() != expected:
        raise GradingViolation(
            f"product has rank {P.rank()}, expected {M.rank()} + {N.rank()} - {M.n}")
    return P


# -- ring elements ------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class RingElement:
    """A graded element: sparse map from flat chains to integer coefficients.

    ``r`` is ``None`` exactly for the zero element, which lives in every degree.
    """

    n: int
    r: int | None
    coeffs: Mapping[FlatChain, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {c: int(v) for c, v in self.coeffs.items() if v}
        object.__setattr__(self, "coeffs", clean)
        if not clean:
            object.__setattr__(self, "r", None)

    @classmethod
    def zero(cls, n: int) -> "RingElement":
        return cls(n, None, {})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(other, -1))

    def __neg__(self):
        return scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, RingElement):
            return product_elements(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def __repr__(self):
        if self.is_zero():
            return f"RingElement(n={self.n}, 0)"
        return f"RingElement(n={self.n}, r={self.r}, {len(self.coeffs)} chains)"


def indicator(M: Matroid) -> RingElement:
    """Indicator vector of the maximal chains of flats of a loopfree matroid."""
    _require_loopfree(M)
    return RingElement(M.n, M.rank(), dict.fromkeys(M.maximal_chains, 1))


def add(a: RingElement, b: RingElement) -> RingElement:
    if a.n != b.n:
        raise GroundSetMismatch(f"ground sets of size {a.n} and {b.n}")
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.r != b.r:
        raise GradeMismatch(f"cannot add degrees {a.r} and {b.r}")
    out = Counter(a.coeffs)
    for c, v in b.coeffs.items():
        out[c] += v
    return RingElement(a.n, a.r, out)


def scale(a: RingElement, c: int) -> RingElement:
    return RingElement(a.n, a.r, {k: v * int(c) for k, v in a.coeffs.items()})


def combination(terms, n: int | None = None) -> RingElement:
    """The ring element of a formal combination ``[(coeff, matroid), ...]`` or ``{matroid: coeff}``."""
    items = list(terms.items()) if isinstance(terms, Mapping) else list(terms)
    if items and isinstance(items[0][0], Matroid):
        items = [(c, M) for M, c in items]
    if not items:
        if n is None:
            raise ValueError("empty combination needs an explicit n")
        return RingElement.zero(n)
    n = items[0][1].n if n is None else n
    out = RingElement.zero(n)
    for c, M in items:
        out = add(out, scale(indicator(M), c))
    return out


# -- the cyclic chain lattice ---------------------------------------------------------

TOP = "1^"


@dataclass
class CyclicChainLattice:
    """Chains of cyclic flats containing the bottom and top cyclic flat, plus a top ``TOP``.

    Chains are tuples of cyclic-flat bitmasks sorted by size.  ``mu1[T]`` is
    the Möbius value of the interval from ``T`` to ``TOP``.
    """

    matroid: Matroid
    chains: list[tuple[int, ...]]
    poset: Poset
    mu1: dict

    def records(self, T) -> tuple[CyclicFlat, ...]:
        rank = self.matroid.rank
        return tuple(CyclicFlat(Z, rank(Z)) for Z in T)

    def nested(self, T) -> Matroid:
        """The nested matroid whose cyclic flats are the chain ``T`` (ranks from the matroid)."""
        return nested_from_cyclic_chain(self.matroid.n, self.records(T), check=False)


def _inner_chains(inner: list[int]) -> list[tuple[int, ...]]:
    inner = sorted(inner, key=lambda Z: (popcount(Z), Z))
    out = [()]

    def grow(chain, start):
        for a in range(start, len(inner)):
            Z = inner[a]
            if chain and (chain[-1] & ~Z or chain[-1] == Z):
                continue
            chain.append(Z)
            out.append(tuple(chain))
            grow(chain, a + 1)
            chain.pop()

    grow([], 0)
    return out


def cyclic_chain_lattice(M: Matroid) -> CyclicChainLattice:
    _require_loopfree(M)
    Z = cyclic_flats(M).sets
    if len(Z) > MAX_CYCLIC_FLATS:
        raise LatticeTooLarge(f"{len(Z)} cyclic flats exceed the limit {MAX_CYCLIC_FLATS}")
    bottom = 0
    top = max(Z, key=popcount)
    inner = [X for X in Z if X not in (bottom, top)]
    ends = (bottom,) if top == bottom else (bottom, top)
    chains = []
    for c in _inner_chains(inner):
        chains.append(tuple(sorted((*ends, *c), key=popcount)))
    sets = [frozenset(T) for T in chains]
    k = len(chains)
    leq = np.zeros((k + 1, k + 1), dtype=bool)
    for i, S in enumerate(sets):
        for j, T in enumerate(sets):
            leq[i, j] = S <= T
    leq[:, k] = True
    poset = Poset([*chains, TOP], leq, check=False)
    mu1 = {T: poset.mobius(T, TOP) for T in chains}
    mu1[TOP] = 1
    return CyclicChainLattice(M, chains, poset, mu1)


def decompose_to_nested(M: Matroid) -> list[tuple[int, Matroid]]:
    """Coefficients of ``M`` in the nested basis: pairs ``(-mu1(T), M<T>)`` with nonzero coefficient."""
    lattice = cyclic_chain_lattice(M)
    out = []
    for T in lattice.chains:
        c = -lattice.mu1[T]
        if c:
            out.append((c, lattice.nested(T)))
    return out


# -- nested coordinates ----------------------------------------------------------------------


def _gap_key(M: Matroid, r: int) -> tuple[int, ...]:
    recs = cyclic_flats(M).records
    gaps = [b.rank - a.rank for a, b in zip(recs, recs[1:])]
    return tuple(gaps + [0] * (r - len(gaps)))


def _distinguishing_chain(M: Matroid) -> FlatChain:
    """A maximal chain of flats of ``M`` running through all its cyclic flats."""
    targets = [Z for Z in cyclic_flats(M).sets if Z] + [M.ground]
    F = 0
    out = []
    for Z in targets:
        while F != Z:
            F = next(G for G in M.covers[F] if G & ~Z == 0)
            out.append(F)
    return tuple(out)


@lru_cache(maxsize=32)
def _nested_triangular(r: int, n: int):
    basis = enumerate_nested(r, n)
    basis = sorted(basis, key=lambda N: _gap_key(N, r))
    chains = [frozenset(N.maximal_chains) for N in basis]
    lead = [_distinguishing_chain(N) for N in basis]
    return basis, chains, lead


def to_nested_coordinates(x) -> dict[Matroid, int]:
    """Coordinates in the nested basis of a ring element or a formal combination.

    Formal combinations (``[(coeff, matroid), ...]`` or ``{matroid: coeff}``)
    are decomposed term by term.  A bare :class:`RingElement` is solved
    against the nested basis, ordered so that the system is unitriangular;
    the result is checked by rebuilding the vector.
    """
    out: Counter = Counter()
    if isinstance(x, RingElement):
        if x.is_zero():
            return {}
        basis, chains, lead = _nested_triangular(x.r, x.n)
        found: list[tuple[int, int]] = []
        for i, N in enumerate(basis):
            c = x.coeffs.get(lead[i], 0)
            c -= sum(a for j, a in found if lead[i] in chains[j])
            if c:
                found.append((i, c))
        out = Counter({basis[i]: c for i, c in found})
        rebuilt = combination([(c, N) for N, c in out.items()], x.n)
        if rebuilt != x:
            raise ValueError("vector does not lie in the span of matroid indicator vectors")
        return dict(out)
    items = list(x.items()) if isinstance(x, Mapping) else list(x)
    if items and isinstance(items[0][0], Matroid):
        items = [(c, M) for M, c in items]
    grades = {M.rank() for _, M in items}
    if len(grades) > 1:
        raise GradeMismatch(f"combination mixes degrees {sorted(grades)}")
    for c, M in items:
        for d, N in decompose_to_nested(M):
            out[N] += c * d
    return {N: c for N, c in out.items() if c}


def product_elements(a: RingElement, b: RingElement) -> RingElement:
    """Product of two ring elements, computed through their nested coordinates."""
    if a.n != b.n:
        raise GroundSetMismatch(f"ground sets of size {a.n} and {b.n}")
    n = a.n
    if a.is_zero() or b.is_zero() or a.r + b.r - n <= 0:
        return RingElement.zero(n)
    ca, cb = to_nested_coordinates(a), to_nested_coordinates(b)
    out = RingElement.zero(n)
    for N1, x in ca.items():
        for N2, y in cb.items():
            P = product(N1, N2)
            if P is not None:
                out = add(out, scale(indicator(P), x * y))
    return out


# -- vanishing criteria ------------------------------------------------------------------


def vanishes_corank_one(M: Matroid, G) -> bool:
    """Whether M * H_G = 0, decided by a rank-one flat F with F | G = E."""
    G = mask_of(G)
    if M.rank() < 2:
        raise RankTooSmall("needs rank at least 2")
    if popcount(G) > M.n - 2:
        raise CoLoopSetTooLarge(f"|G| = {popcount(G)} exceeds n - 2")
    return any(F | G == M.ground for F in M.flats_of_rank(1))


def vanishes_nested(M: Matroid, C: SetChain) -> bool:
    """Whether M times the chain product of ``C`` vanishes.

    True iff some i and some flat F of rank c - i + 1 satisfy F | G_i = E.
    """
    c = len(C.sets)
    if M.rank() < 2:
        raise RankTooSmall("needs rank at least 2")
    if C.n != M.n:
        raise GroundSetMismatch(f"ground sets of size {M.n} and {C.n}")
    if not 1 <= c < M.rank():
        raise PreconditionViolated(f"chain length {c} must be in 1..rank-1 = {M.rank() - 1}")
    E = M.ground
    for i, G in enumerate(C.sets, start=1):
        if any(F | G == E for F in M.flats_of_rank(c - i + 1)):
            return True
    return False


def product_flats_check(M: Matroid, G) -> frozenset:
    """Predicted flats of M * H_G, without computing the product.

    A common flat F of M and H_G survives iff F | G = E or no flat covering
    F in M satisfies F' | G = E.
    """
    G = mask_of(G)
    if vanishes_corank_one(M, G):
        raise ProductIsZero("M * H_G vanishes")
    H = corank_one(M.n, G)
    E = M.ground
    out = set()
    for F in M.flat_set & H.flat_set:
        if F | G == E or not any(Fp | G == E for Fp in M.covers[F]):
            out.add(F)
    return frozenset(out)


def predicted_flat_rank(M: Matroid, G, F) -> int:
    """Rank in M * H_G of a flat of the product: one less exactly when F | G = E."""
    G, F = mask_of(G), mask_of(F)
    if F and F | G == M.ground:
        return M.rank(F) - 1
    return M.rank(F)


# -- Poincaré pairing ------------------------------------------------------------------------


def pairing_matrix(r: int, n: int) -> np.ndarray:
    """0/1 matrix of products N_i * N'_j of nested matroids of ranks r and n - r + 1."""
    if n < 2 or not 1 <= r <= n:
        raise RankOutOfRange(f"need n >= 2 and 1 <= r <= n, got r={r}, n={n}")
    rows = enumerate_nested(r, n)
    cols = enumerate_nested(n - r + 1, n)
    P = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for i, N in enumerate(rows):
        for j, N2 in enumerate(cols):
            Q = product(N, N2)
            if Q is not None:
                # the only loopfree rank-one matroid is U_{1,n}
                P[i, j] = 1
    return P


def pairing_determinant(r: int, n: int) -> int:
    return bareiss_det(pairing_matrix(r, n))


# -- boundary maps ---------------------------------------------------------------------------


def _terms(x) -> list[tuple[int, Matroid]]:
    items = list(x.items()) if isinstance(x, Mapping) else list(x)
    if items and isinstance(items[0][0], Matroid):
        items = [(c, M) for M, c in items]
    return items


def deletion_term(M: Matroid, i: int) -> Matroid | None:
    """d_i(M): the deletion of i, or ``None`` when i is a coloop."""
    if M.n == 1 or M.coloops() >> (i - 1) & 1:
        return None
    return M.delete(i)


def contraction_term(M: Matroid, i: int) -> Matroid | None:
    """c_i(M): the contraction of i if {i} is closed, else ``None``."""
    bit = 1 << (i - 1)
    if M.n == 1 or M.closure(bit) != bit:
        return None
    N = M.contract(i)
    return N if N.is_loopfree() and N.rank() >= 1 else None


def _boundary(x, term) -> dict[Matroid, int]:
    out: Counter = Counter()
    for c, M in _terms(x):
        _require_loopfree(M)
        for i in range(1, M.n + 1):
            N = term(M, i)
            if N is not None:
                out[N] += (-1) ** i * c
    return {N: c for N, c in out.items() if c}


def boundary_deletion(x) -> dict[Matroid, int]:
    """Alternating sum of deletions, sum_i (-1)^i d_i, with i running over 1..n."""
    return _boundary(x, deletion_term)


def boundary_contraction(x) -> dict[Matroid, int]:
    """Alternating sum of contractions, sum_i (-1)^i c_i, with i running over 1..n."""
    return _boundary(x, contraction_term)


def grade_parts(x) -> dict[int, RingElement]:
    """Split a formal combination by degree and map each part into the ring."""
    parts: dict[int, list] = defaultdict(list)
    for c, M in _terms(x):
        parts[M.rank()].append((c, M))
    return {r: combination(items) for r, items in parts.items()}
