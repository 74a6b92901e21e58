"""Which discriminants admit an associated K3 surface or cubic fourfold.

Run: python3 demos/03_associated_k3_and_cubics.py
"""
from fano10 import fano

k3 = [d for d in range(1, 201) if fano.admissible_discriminant(d) and fano.has_associated_k3(d)]
cubic = [d for d in range(1, 401) if fano.admissible_discriminant(d) and fano.has_associated_cubic(d)]
print("K3:   ", k3)
print("cubic:", cubic)

# the same answers from the explicit lattices (q-forms of K^perp)
for d in (10, 18, 26, 188):
    print(d, "K3 via lattices:", fano.k3_lattice_check(d),
          " cubic via lattices:", fano.cubic_lattice_check(d))
