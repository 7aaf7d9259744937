#!/usr/bin/env python3
# The minimal realization of the height-2 lattice M_{p+1} as a congruence
# lattice: a carrier of size 2p carrying the regular action of the dihedral
# group of order 2p, with one operation per generator.

from mnlab import congruences_oracle, minimal_representation

for p in (2, 3, 5, 7, 11):
    A, L = minimal_representation(p)
    print(f"p = {p:2d}: carrier {A.size:2d}, ops {len(A.ops)},"
          f" lattice {L.n:2d} elements, {len(L.atoms()):2d} atoms,"
          f" height {L.height}, shape M_{L.detect_mn()}")

# For small carriers the brute-force oracle can confirm the whole lattice.
for p in (2, 3, 5):
    A, L = minimal_representation(p)
    assert congruences_oracle(A) == L
    print(f"p = {p}: oracle confirms all {L.n} congruences")

# The p = 3 witness in full: six elements, the rotation and reflection
# translations, and the M_4 congruence lattice.
A, L = minimal_representation(3)
print("\nwitness p=3 operations:")
for op in A.ops:
    print("  ", op)
print("congruence classes (restricted growth strings):")
for label in L.labels:
    print("  ", label)
print(L.to_dot())
