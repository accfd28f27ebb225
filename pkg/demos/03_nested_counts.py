"""Loopfree nested matroids are counted by Eulerian numbers."""
from math import factorial

from matroid_ring import count_nested, enumerate_nested, eulerian

print(" n | counts by rank r = 1..n")
for n in range(1, 9):
    row = [count_nested(r, n) for r in range(1, n + 1)]
    assert row == [eulerian(r - 1, n) for r in range(1, n + 1)]
    assert sum(row) == factorial(n)
    print(f"{n:2d} | " + " ".join(f"{v:5d}" for v in row))

# the recursion is checked against actual enumeration where that is cheap
for n in range(1, 7):
    for r in range(1, n + 1):
        assert len(enumerate_nested(r, n)) == count_nested(r, n)
print("\nenumeration agrees with the recursion for n <= 6")
