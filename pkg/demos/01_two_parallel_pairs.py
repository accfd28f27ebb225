"""A rank-2 matroid on four elements that is not nested, and how it splits."""
from matroid_ring import (
    combination,
    cyclic_flats,
    decompose_to_nested,
    from_bases,
    g_invariant,
    indicator,
    tutte,
)
from matroid_ring.matroid import elements_of


def show(mask):
    return "{" + ",".join(map(str, elements_of(mask))) + "}"


# Two parallel classes, {1,4} and {2,3}.
M = from_bases(4, [[1, 2], [1, 3], [2, 4], [3, 4]])
print("bases:", [show(B) for B in M.bases])
print("flats:", [show(F) for F in M.flats()])
print("cyclic flats:", [(show(Z), r) for Z, r in cyclic_flats(M)])

print("\nmaximal chains of flats (the indicator vector):")
for chain in indicator(M).coeffs:
    print("  ", " < ".join(show(F) for F in chain))

print("\nnested decomposition:")
terms = decompose_to_nested(M)
for c, N in terms:
    inner = " < ".join(show(Z) for Z in cyclic_flats(N).sets)
    print(f"  {c:+d} * M<{inner}>")
print("indicator of the sum equals indicator(M):", combination(terms) == indicator(M))

print("\nG-invariant:", g_invariant(M))
print("Tutte polynomial:", tutte(M))
