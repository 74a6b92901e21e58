"""Sublattices of an ambient lattice, given by integer basis matrices."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from . import exactlin as el
from .errors import Degenerate, InvalidParameter
from .lattice import Lattice, LatticeVector


@dataclass(frozen=True)
class SublatticeEmbedding:
    """Columns of ``basis`` are ambient coordinates of the sublattice basis."""

    ambient: Lattice
    basis: el.IntMatrix

    def __post_init__(self):
        b = el.as_matrix(self.basis)
        object.__setattr__(self, "basis", b)
        if len(b) != self.ambient.rank:
            raise InvalidParameter("basis rows must match the ambient rank")
        if self.rank and el.rank(b) != self.rank:
            raise Degenerate("basis vectors are linearly dependent")

    @classmethod
    def from_vectors(cls, ambient: Lattice, vectors: Sequence) -> SublatticeEmbedding:
        cols = [v.coords if isinstance(v, LatticeVector) else tuple(v) for v in vectors]
        if not cols:
            return cls(ambient, tuple(() for _ in range(ambient.rank)))
        return cls(ambient, el.transpose(cols))

    @property
    def rank(self) -> int:
        return len(self.basis[0]) if self.basis else 0

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return el.transpose(self.basis) if self.rank else ()

    def vectors(self) -> list[LatticeVector]:
        return [self.ambient.vector(c) for c in self.columns]

    @cached_property
    def gram(self) -> el.IntMatrix:
        return el.congruent(self.ambient.gram, self.basis)

    def coordinates(self, x: LatticeVector | Sequence[int]) -> tuple[int, ...] | None:
        """Sublattice coordinates of an ambient vector, or None if it is not in it."""
        coords = x.coords if isinstance(x, LatticeVector) else tuple(x)
        return el.solve_integer(self.basis, coords)

    def contains(self, x: LatticeVector | Sequence[int]) -> bool:
        return self.coordinates(x) is not None

    def lattice(self, label: str | None = None) -> Lattice:
        return induced_lattice(self, label)


def induced_lattice(s: SublatticeEmbedding, label: str | None = None) -> Lattice:
    """The sublattice with Gram basis^T * G * basis (raises Degenerate)."""
    return Lattice(s.gram, label)


def saturation_index(s: SublatticeEmbedding) -> int:
    """[saturation : s], the product of the invariant factors of the basis."""
    idx = 1
    for d in el.invariant_factors(s.basis):
        idx *= d
    return idx


def saturation(s: SublatticeEmbedding) -> SublatticeEmbedding:
    """Primitive closure ``Q.span(s) & ambient``, with an HNF basis."""
    n = s.ambient.rank
    if s.rank == 0:
        return s
    # annihilator of the annihilator of the column span
    ann = el.kernel_basis(el.transpose(s.basis))
    if not ann or not ann[0]:
        return SublatticeEmbedding(s.ambient, el.identity(n))
    sat = el.kernel_basis(el.transpose(ann))
    return SublatticeEmbedding(s.ambient, sat)


def is_primitive(s: SublatticeEmbedding) -> bool:
    return all(d == 1 for d in el.invariant_factors(s.basis))


def orthogonal_complement(s: SublatticeEmbedding) -> SublatticeEmbedding:
    """Saturated ``{x : x.s = 0}`` with an HNF basis."""
    n = s.ambient.rank
    if s.rank == 0:
        return SublatticeEmbedding(s.ambient, el.identity(n))
    a = el.matmul(el.transpose(s.basis), s.ambient.gram)
    return SublatticeEmbedding(s.ambient, el.kernel_basis(a))
