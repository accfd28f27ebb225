"""Finite posets and their Möbius function."""
from __future__ import annotations

from itertools import combinations
from typing import Hashable, Iterable

import numpy as np

from .errors import IncomparableElements

BOTTOM = "0^"
TOP = "1^"


class Poset:
    """A finite poset on ``elements`` with order relation ``leq``.

    ``leq`` is either a callable ``leq(x, y)`` or an ``n x n`` boolean matrix
    indexed like ``elements``.  The relation is checked to be a partial order.
    """

    def __init__(self, elements: Iterable[Hashable], leq, check: bool = True):
        self.elements = list(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("poset elements must be distinct")
        k = len(self.elements)
        if callable(leq):
            mat = np.array([[bool(leq(x, y)) for y in self.elements] for x in self.elements],
                           dtype=bool).reshape(k, k)
        else:
            mat = np.array(leq, dtype=bool).reshape(k, k)
        if check:
            if not mat.diagonal().all():
                raise ValueError("relation is not reflexive")
            if (mat & mat.T & ~np.eye(k, dtype=bool)).any():
                raise ValueError("relation is not antisymmetric")
            m = mat.astype(np.int32)
            if ((m @ m > 0) & ~mat).any():
                raise ValueError("relation is not transitive")
        mat.flags.writeable = False
        self.leq = mat
        self._rows: dict[int, dict[int, int]] = {}

    def __len__(self):
        return len(self.elements)

    def le(self, x, y) -> bool:
        return bool(self.leq[self.index[x], self.index[y]])

    def _mobius_row(self, i: int) -> dict[int, int]:
        # mu(x, y) = -sum_{x <= z < y} mu(x, z), filled along a linear extension
        row = self._rows.get(i)
        if row is not None:
            return row
        up = np.nonzero(self.leq[i])[0]
        order = sorted(up, key=lambda j: int(self.leq[:, j].sum()))
        lt = self.leq[np.ix_(order, order)] & ~np.eye(len(order), dtype=bool)
        mu = np.zeros(len(order), dtype=object)
        for a in range(len(order)):
            mu[a] = 1 if a == 0 else -sum(mu[b] for b in np.nonzero(lt[:a, a])[0])
        row = {int(order[a]): int(mu[a]) for a in range(len(order))}
        self._rows[i] = row
        return row

    def mobius(self, x, y) -> int:
        i, j = self.index[x], self.index[y]
        if not self.leq[i, j]:
            raise IncomparableElements(f"{x!r} is not <= {y!r}")
        return self._mobius_row(i)[j]

    def mobius_dual(self, x, y) -> int:
        """Same function via mu(x, y) = -sum_{x < z <= y} mu(z, y); used as a cross-check."""
        i, j = self.index[x], self.index[y]
        if not self.leq[i, j]:
            raise IncomparableElements(f"{x!r} is not <= {y!r}")
        down = [a for a in range(len(self)) if self.leq[i, a] and self.leq[a, j]]
        down.sort(key=lambda a: -int(self.leq[:, a].sum()))
        mu: dict[int, int] = {}
        for a in down:
            mu[a] = 1 if a == j else -sum(mu[b] for b in mu if self.leq[a, b] and b != a)
        return mu[i]

    def with_bounds(self) -> "Poset":
        """The poset with an artificial bottom ``BOTTOM`` and top ``TOP`` adjoined."""
        k = len(self)
        mat = np.zeros((k + 2, k + 2), dtype=bool)
        mat[1:k + 1, 1:k + 1] = self.leq
        mat[0, :] = True
        mat[:, k + 1] = True
        return Poset([BOTTOM, *self.elements, TOP], mat, check=False)

    def chains(self) -> "Poset":
        """The poset of nonempty chains, ordered by inclusion."""
        k = len(self)
        comp = self.leq | self.leq.T
        found: list[frozenset] = []

        def grow(chain, start):
            for a in range(start, k):
                if all(comp[a, b] for b in chain):
                    chain.append(a)
                    found.append(frozenset(self.elements[c] for c in chain))
                    grow(chain, a + 1)
                    chain.pop()

        grow([], 0)
        return Poset(found, lambda s, t: s <= t, check=False)

    def mobius_number(self) -> int:
        hat = self.with_bounds()
        return hat.mobius(BOTTOM, TOP)

    def join(self, x, y):
        i, j = self.index[x], self.index[y]
        ups = [a for a in range(len(self)) if self.leq[i, a] and self.leq[j, a]]
        least = [a for a in ups if all(self.leq[a, b] for b in ups)]
        return self.elements[least[0]] if least else None

    def is_join_contractible(self) -> bool:
        return any(all(self.join(x, a) is not None for x in self.elements)
                   for a in self.elements)


def random_poset(rng, size: int, density: float = 0.3) -> Poset:
    """Transitive closure of a random DAG on ``range(size)``."""
    mat = np.eye(size, dtype=bool)
    for a, b in combinations(range(size), 2):
        if rng.random() < density:
            mat[a, b] = True
    for k in range(size):
        mat |= mat[:, [k]] & mat[[k], :]
    return Poset(range(size), mat)
