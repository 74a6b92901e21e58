"""Special sublattices K of discriminant d, and the involution r_I.

Run: python3 demos/02_special_sublattices.py
"""
from fano10 import fano

for d in (8, 10, 12, 16, 18, 20):
    for k in fano.classify_special_sublattice(d):
        print(f"{k.divisor:8s} gram={k.gram}  K.u, K.v = {fano.ideals(k.embedding)}")

# r_I exchanges the two orbits when d = 2 (mod 8)
r = fano.r_involution()
kp, ks = fano.classify_special_sublattice(26)
print(kp.divisor, "->", fano.embedding_label(fano.apply_isometry(r, kp)).divisor(26))
print(ks.divisor, "->", fano.embedding_label(fano.apply_isometry(r, ks)).divisor(26))

# D(K^perp) in the cyclic cases carries a distinguished generator
for d in (10, 12, 26):
    D = fano.nonspecial_discriminant_form(d)
    print(d, D.invariant_factors, "b(g,g) =", D.bform[0][0], "q(g) =", D.qform[0])
