"""The finite rotation subgroup: 72 unitary 2x2 matrices over Z[w].

Every entry of such a matrix is a unit or zero, which forces each element
to be diagonal or antidiagonal; breadth-first search over the two
generators assigns every element a shortest product word, and those words
are what the big decomposition emits for the rotation part.
"""

from collections import Counter

from picard31 import enumerate_group, evaluate_uword, serialize_uword, u_decompose

group = enumerate_group()
print("group order:", len(group))

diag = sum(1 for u in group if u.is_diagonal())
print("diagonal elements:", diag, " antidiagonal:", len(group) - diag)
print()

lengths = Counter()
for u in group:
    word = u_decompose(u)
    assert evaluate_uword(word) == u
    lengths[sum(abs(e) for _, e in word)] += 1
print("word length distribution (letters -> count):")
for n in sorted(lengths):
    print(f"  {n:2d}: {lengths[n]}")
print()

sample = sorted(group, key=lambda u: tuple(
    (e.a, e.b) for row in u.rows for e in row))[:6]
print("a few elements with their words:")
for u in sample:
    print(f"  {serialize_uword(u_decompose(u)) or '1':<18} {u}")
