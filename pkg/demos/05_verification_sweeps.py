#!/usr/bin/env python3
# The three verification sweeps, on settings small enough to finish quickly.
# (The full acceptance settings are exercised by tests/test_acceptance.py.)

from mnlab import check_lemma, check_theorem1, check_theorem2

# Sweep 1: over every catalog group of order <= 12 and every subgroup, find
# the intervals shaped like M_n with index below 2n, and confirm that each
# forces a normal subgroup with a dihedral quotient of prime rotation order.
report = check_lemma(max_order=12)
print("lemma sweep:", report.status, report.counts)
for f in report.findings[:5]:
    print("  hit:", f["group"], "n =", f["n"], "index =", f["index"],
          "quotient m =", f["conclusions"]["quotient_dihedral_m"])
print("  ...", len(report.findings), "hits total\n")

# Sweep 2: every transitive subgroup of the symmetric groups of degree < 6
# whose action congruence lattice is M_3 must be the regular Klein action.
report = check_theorem1(2)
print("theorem1 p=2:", report.status)
for stats in report.findings:
    print("  degree", stats["degree"], stats)
print("  hits:", report.witnesses, "\n")

# Sweep 3: no 4-partition atom system on a 4- or 5-element carrier survives
# the Galois closure, so no 5-element algebra can have congruence lattice
# M_4.  (Size 6 admits exactly the dihedral systems; that tier takes a few
# more seconds, pass max_size=6 to see it.)
report = check_theorem2(3, max_size=5)
print("theorem2 p=3:", report.status)
for stats in report.findings:
    print("  size", stats["size"], ":", stats["candidate_systems"],
          "candidates,", stats["closed_systems"], "closed")
