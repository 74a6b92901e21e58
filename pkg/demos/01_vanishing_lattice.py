"""The vanishing lattice inside I_{22,2} and its gluing.

Run: python3 demos/01_vanishing_lattice.py
"""
from fano10 import fano
from fano10.discgroup import discriminant_group, glue_overlattice, isotropic_subgroups
from fano10.lattice import direct_sum, divisibility, lambda_abstract

model = fano.build_ambient_model()

# u and v' come from the two Schubert classes; their complement is Lambda
print("u  =", model.u.coords)
print("v' =", model.vprime.coords)

lam = model.lambda_lattice
D = discriminant_group(lam)
print("Lambda: rank", lam.rank, "signature", lam.signature, "even", lam.is_even)
print("D(Lambda) =", D.invariant_factors)

# same invariants as the abstract model 2E8 + 2U + 2A1
abstract = lambda_abstract()
print("2E8+2U+2A1: signature", abstract.signature, "det", abstract.det)

# the two glue vectors e, f
print("e =", model.e_vec.coords, " div", divisibility(model.in_lambda(model.e_vec)))
print("f =", model.f_vec.coords, " div", divisibility(model.in_lambda(model.f_vec)))

# one nonzero isotropic class; gluing along it gives an odd unimodular lattice
(h,) = [h for h in isotropic_subgroups(D) if h.order > 1]
g = glue_overlattice(lam, h)
print("glued along", h.elements, "-> det", g.det, "even", g.is_even, "sig", g.signature)

# Lambda_2 + Lambda has two injective isotropic subgroups of order 4
M = direct_sum([model.lambda2_lattice, lam])
hs = [h for h in isotropic_subgroups(discriminant_group(M), split=2) if h.order == 4]
for h in hs:
    g = glue_overlattice(M, h)
    print("  overlattice det", g.det, "signature", g.signature)
