"""The eight-element rank-4 matroid with seven cyclic flats, its chain lattice and its nine summands."""
from matroid_ring import (
    CyclicFlatList,
    combination,
    cyclic_chain_lattice,
    decompose_to_nested,
    from_cyclic_flats,
    indicator,
)
from matroid_ring.ring import TOP

names = {0b11: "S1", 0b1100: "S2", 0b1111: "R", 0b111111: "U1", 0b11001111: "U2"}
pairs = [((), 0), ((1, 2), 1), ((3, 4), 1), ((1, 2, 3, 4), 2),
         ((1, 2, 3, 4, 5, 6), 3), ((1, 2, 3, 4, 7, 8), 3), (range(1, 9), 4)]
M = from_cyclic_flats(CyclicFlatList.from_pairs(8, pairs))
print(f"rank {M.rank()}, {len(M.bases)} bases, {len(M.flats())} flats")


def label(T):
    inner = [names[Z] for Z in T if Z in names]
    return "{" + ",".join(inner) + "}"


lat = cyclic_chain_lattice(M)
print("\nmu_1 on the cyclic chain lattice (chains listed without the bottom and top):")
for T in sorted(lat.chains, key=lambda T: (len(T), T)):
    print(f"  {label(T):14s} {lat.mu1[T]:+d}")
print(f"  {'top':14s} {lat.mu1[TOP]:+d}")

terms = decompose_to_nested(M)
print(f"\n{len(terms)} nonzero summands:")
for c, N in terms:
    print(f"  {c:+d} * nested matroid with {len(N.bases)} bases")
print("identity holds:", combination(terms) == indicator(M))
