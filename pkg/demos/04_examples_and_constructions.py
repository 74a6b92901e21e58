"""Discriminants of the classical examples and the K3-based constructions.

Run: python3 demos/04_examples_and_constructions.py
"""
from fano10 import fano

for r in fano.example_family_table():
    print(f"{r.family:18s} (S)^2={r.self_int}  d={r.d:3d}  {r.divisor}")

rows = fano.th81_targets(3)
for r in rows:
    print(r.family, r.e, r.gram, r.d, r.divisor)

# rank-2 conditions on the K3 side
for gamma in (((10, 0), (0, -2)), ((10, 0), (0, -4)), ((10, 5), (5, -2))):
    rep = fano.hassett_lemma_check(gamma)
    print(gamma, "ok" if rep.lemma_conditions_hold else "fails",
          [c.witness for c in rep.conditions if not c.satisfied])

# coverage of the divisors by the constructions
got = fano.th81_divisors(50) | {(fano.Label.D, 12)}
want = fano.theorem_divisors(407)
print("covered up to 407:", {x for x in got if x[1] <= 407} == want)
