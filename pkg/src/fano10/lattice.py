"""Integral lattices given by Gram matrices, and vectors in them."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from . import exactlin as el
from .errors import (
    Degenerate,
    InvalidParameter,
    NonSymmetric,
    OwnerMismatch,
    ZeroVector,
)

# E8 Cartan matrix, Bourbaki numbering. Its rows are the inner products of
# the simple roots a1 = (1/2)(1,-1,-1,-1,-1,-1,-1,1), a2 = e1+e2,
# a3 = e2-e1, a4 = e3-e2, ..., a8 = e7-e6 in the D8-plus-glue model of E8.
E8_GRAM = (
    (2, 0, -1, 0, 0, 0, 0, 0),
    (0, 2, 0, -1, 0, 0, 0, 0),
    (-1, 0, 2, -1, 0, 0, 0, 0),
    (0, -1, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, 0),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, -1),
    (0, 0, 0, 0, 0, 0, -1, 2),
)


@dataclass(frozen=True)
class Lattice:
    """A nondegenerate integral lattice, identified by its Gram matrix."""

    gram: el.IntMatrix
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        g = el.as_matrix(self.gram)
        object.__setattr__(self, "gram", g)
        if not el.is_symmetric(g):
            raise NonSymmetric("Gram matrix must be symmetric")
        if el.determinant(g) == 0:
            raise Degenerate("Gram matrix is degenerate")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @cached_property
    def det(self) -> int:
        return el.determinant(self.gram)

    @cached_property
    def signature(self) -> tuple[int, int]:
        return el.signature(self.gram)

    @property
    def is_even(self) -> bool:
        return is_even(self)

    @property
    def is_unimodular(self) -> bool:
        return abs(self.det) == 1

    def vector(self, coords: Iterable[int]) -> LatticeVector:
        return LatticeVector(tuple(coords), self)

    def basis_vector(self, i: int) -> LatticeVector:
        return self.vector(int(i == j) for j in range(self.rank))

    def zero(self) -> LatticeVector:
        return self.vector((0,) * self.rank)

    def to_json(self) -> dict:
        return {"label": self.label or "", "gram": [list(r) for r in self.gram]}

    @classmethod
    def from_json(cls, data: dict) -> Lattice:
        return cls(el.as_matrix(data["gram"]), data.get("label") or None)

    def __repr__(self):
        name = self.label or "Lattice"
        return f"<{name}: rank {self.rank}, det {self.det}>"


@dataclass(frozen=True)
class LatticeVector:
    coords: tuple[int, ...]
    owner: Lattice = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(x) for x in self.coords))
        if len(self.coords) != self.owner.rank:
            raise InvalidParameter(
                f"vector of length {len(self.coords)} in a rank-{self.owner.rank} lattice")

    def _check(self, other: LatticeVector):
        if other.owner is not self.owner and other.owner != self.owner:
            raise OwnerMismatch("vectors belong to different lattices")

    def __add__(self, other: LatticeVector) -> LatticeVector:
        self._check(other)
        return LatticeVector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.owner)

    def __sub__(self, other: LatticeVector) -> LatticeVector:
        self._check(other)
        return LatticeVector(tuple(a - b for a, b in zip(self.coords, other.coords)), self.owner)

    def __neg__(self) -> LatticeVector:
        return LatticeVector(tuple(-a for a in self.coords), self.owner)

    def __rmul__(self, k: int) -> LatticeVector:
        return LatticeVector(tuple(k * a for a in self.coords), self.owner)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def half(self) -> LatticeVector:
        """Exact halving; raises if some coordinate is odd."""
        if any(x % 2 for x in self.coords):
            raise InvalidParameter("vector is not divisible by 2")
        return LatticeVector(tuple(x // 2 for x in self.coords), self.owner)


# ---------------------------------------------------------------------------
# constructors


def make_standard(kind: str, *params: int) -> Lattice:
    """Building-block lattices.

    ``kind`` is one of ``"U"``, ``"A1"``, ``"E8"``, ``"scaled"`` (takes ``n``,
    giving the rank-one lattice ``<n>``) or ``"odd_unimodular"`` (takes
    ``p, q``, giving ``I_{p,q} = diag(+1 x p, -1 x q)``).
    """
    if kind == "U":
        return Lattice(((0, 1), (1, 0)), "U")
    if kind == "A1":
        return Lattice(((2,),), "A1")
    if kind == "E8":
        return Lattice(E8_GRAM, "E8")
    if kind == "scaled":
        if len(params) != 1 or params[0] == 0:
            raise InvalidParameter("scaled(n) needs a single nonzero n")
        n = params[0]
        return Lattice(((n,),), f"<{n}>")
    if kind == "odd_unimodular":
        if len(params) != 2:
            raise InvalidParameter("odd_unimodular needs (p, q)")
        p, q = params
        if p < 0 or q < 0 or p + q < 1:
            raise InvalidParameter("odd_unimodular needs p, q >= 0 and p + q >= 1")
        return Lattice(el.diagonal([1] * p + [-1] * q), f"I_{p},{q}")
    raise InvalidParameter(f"unknown standard lattice {kind!r}")


def direct_sum(ls: Sequence[Lattice], label: str | None = None) -> Lattice:
    if not ls:
        raise InvalidParameter("direct sum of an empty list")
    if len(ls) == 1 and label is None:
        return ls[0]
    if label is None:
        label = "+".join(l.label or "L" for l in ls)
    return Lattice(el.block_diagonal([l.gram for l in ls]), label)


def rescaled(l: Lattice, n: int, label: str | None = None) -> Lattice:
    """The lattice L(n): same module, form multiplied by n."""
    if n == 0:
        raise InvalidParameter("cannot rescale by 0")
    g = tuple(tuple(n * x for x in row) for row in l.gram)
    return Lattice(g, label or f"{l.label or 'L'}({n})")


def opposite(l: Lattice) -> Lattice:
    return rescaled(l, -1)


def lambda_abstract() -> Lattice:
    """2E8 + 2U + 2A1, with the two A1 generators as the last two basis vectors."""
    E8, U, A1 = make_standard("E8"), make_standard("U"), make_standard("A1")
    return direct_sum([E8, E8, U, U, A1, A1], "Lambda")


def builtin_lattice(name: str) -> Lattice:
    """Named lattices addressable from the command line."""
    name_ = name.strip()
    if name_ in ("U", "A1", "E8"):
        return make_standard(name_)
    if name_ == "Lambda":
        return lambda_abstract()
    if name_ == "Lambda2":
        return Lattice(((2, 0), (0, 2)), "Lambda2")
    if name_ == "I22_2":
        return make_standard("odd_unimodular", 22, 2)
    if name_ == "I20_2":
        return make_standard("odd_unimodular", 20, 2)
    raise InvalidParameter(f"unknown builtin lattice {name!r}")


BUILTIN_NAMES = ("U", "A1", "E8", "Lambda", "Lambda2", "I22_2", "I20_2")


# ---------------------------------------------------------------------------
# invariants of vectors


def inner(x: LatticeVector, y: LatticeVector) -> int:
    x._check(y)
    return el.bilinear(x.owner.gram, x.coords, y.coords)


def norm(x: LatticeVector) -> int:
    return inner(x, x)


def is_even(l: Lattice) -> bool:
    return all(l.gram[i][i] % 2 == 0 for i in range(l.rank))


def _owned(w: LatticeVector, l: Lattice | None) -> Lattice:
    if l is not None and l is not w.owner and l != w.owner:
        raise OwnerMismatch("vector does not belong to the given lattice")
    return w.owner


def divisibility(w: LatticeVector, l: Lattice | None = None) -> int:
    """Positive generator of the ideal w.L in Z."""
    lat = _owned(w, l)
    if w.is_zero():
        raise ZeroVector("divisibility of the zero vector")
    return el.vector_gcd(el.matvec(lat.gram, w.coords))


def is_characteristic(x: LatticeVector, l: Lattice | None = None) -> bool:
    """x.y = y.y (mod 2) for all y; checking the basis suffices."""
    lat = _owned(x, l)
    gx = el.matvec(lat.gram, x.coords)
    return all((gx[i] - lat.gram[i][i]) % 2 == 0 for i in range(lat.rank))
