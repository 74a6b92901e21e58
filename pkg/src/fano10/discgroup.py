"""Discriminant groups L^v/L with their finite bilinear and quadratic forms.

Elements of a discriminant group are integer tuples taken modulo the
invariant factors (``x_i mod d_i``). Every group remembers rational lifts of
its generators in the coordinates of the lattice it came from, so forms are
always evaluated exactly.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd, lcm, prod
from typing import Iterator, Sequence

from . import exactlin as el
from .errors import (
    InvalidParameter,
    NotCyclic,
    NotEven,
    NotExtendable,
    NotFiniteIndex,
    NotIsometry,
    NotIsotropic,
    TooLarge,
    ZeroVector,
)
from .lattice import Lattice, LatticeVector, direct_sum as lattice_direct_sum, divisibility
from .sublattice import SublatticeEmbedding

MAX_GROUP_ORDER = 10**6

Element = tuple[int, ...]


class _Residue:
    modulus = 1
    __slots__ = ("value",)

    def __init__(self, x):
        if isinstance(x, str):
            x = Fraction(x.strip())
        self.value = Fraction(x) % self.modulus

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def is_zero(self) -> bool:
        return self.value == 0

    def __eq__(self, other):
        if isinstance(other, type(self)):
            return self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == Fraction(other) % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, self.value))

    def __lt__(self, other):
        return self.value < other.value

    def __add__(self, other):
        o = other.value if isinstance(other, _Residue) else other
        return type(self)(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = other.value if isinstance(other, _Residue) else other
        return type(self)(self.value - o)

    def __neg__(self):
        return type(self)(-self.value)

    def __mul__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return type(self)(self.value * k)

    __rmul__ = __mul__

    def __str__(self):
        v = self.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class QmodZ(_Residue):
    """A rational number modulo Z, normalized to [0, 1)."""

    modulus = 1
    __slots__ = ()


class QmodTwoZ(_Residue):
    """A rational number modulo 2Z, normalized to [0, 2)."""

    modulus = 2
    __slots__ = ()


@dataclass(frozen=True, eq=False)
class DiscriminantGroup:
    """The finite group L^v/L with b_L (and q_L when L is even).

    ``coord_map`` holds one integer row per generator: the class of a dual
    vector ``y`` (lattice coordinates) has coordinate ``row_i . y mod d_i``.
    """

    invariant_factors: tuple[int, ...]
    generator_lifts: tuple[tuple[Fraction, ...], ...]
    bform: tuple[tuple[QmodZ, ...], ...]
    qform: tuple[QmodTwoZ, ...] | None
    coord_map: tuple[tuple[int, ...], ...] = field(repr=False)
    lattice: Lattice | None = field(default=None, repr=False)

    def __eq__(self, other):
        if not isinstance(other, DiscriminantGroup):
            return NotImplemented
        return (self.invariant_factors == other.invariant_factors
                and self.bform == other.bform and self.qform == other.qform)

    def __hash__(self):
        return hash((self.invariant_factors, self.bform, self.qform))

    # -- structure ---------------------------------------------------------

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    @property
    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) <= 1

    @property
    def is_even(self) -> bool:
        return self.qform is not None

    @property
    def ngens(self) -> int:
        return len(self.invariant_factors)

    def zero(self) -> Element:
        return (0,) * self.ngens

    def normalize(self, x: Sequence[int]) -> Element:
        return tuple(a % d for a, d in zip(x, self.invariant_factors))

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % d for a, b, d in zip(x, y, self.invariant_factors))

    def neg(self, x: Element) -> Element:
        return tuple((-a) % d for a, d in zip(x, self.invariant_factors))

    def scale(self, k: int, x: Element) -> Element:
        return tuple((k * a) % d for a, d in zip(x, self.invariant_factors))

    def order_of(self, x: Element) -> int:
        o = 1
        for a, d in zip(x, self.invariant_factors):
            o = lcm(o, d // gcd(a % d, d))
        return o

    def generator(self, i: int) -> Element:
        return tuple(int(i == j) for j in range(self.ngens))

    def elements(self) -> Iterator[Element]:
        """All elements in lexicographic order."""
        return product(*(range(d) for d in self.invariant_factors))

    # -- forms -------------------------------------------------------------

    def b(self, x: Element, y: Element) -> QmodZ:
        B = self.bform
        s = Fraction(0)
        for i, a in enumerate(x):
            if a:
                row = B[i]
                for j, c in enumerate(y):
                    if c:
                        s += a * c * row[j].value
        return QmodZ(s)

    def q(self, x: Element) -> QmodTwoZ:
        if self.qform is None:
            raise NotEven("q_L is only defined for even lattices")
        B, Q = self.bform, self.qform
        s = Fraction(0)
        for i, a in enumerate(x):
            if a:
                s += a * a * Q[i].value
                for j in range(i + 1, len(x)):
                    if x[j]:
                        s += 2 * a * x[j] * B[i][j].value
        return QmodTwoZ(s)

    def self_value(self, x: Element):
        """q(x) for even lattices, b(x, x) otherwise."""
        return self.q(x) if self.qform is not None else self.b(x, x)

    def lift(self, x: Element) -> tuple[Fraction, ...]:
        n = len(self.coord_map[0]) if self.coord_map else 0
        out = [Fraction(0)] * n
        for a, g in zip(x, self.generator_lifts):
            if a:
                for k, c in enumerate(g):
                    out[k] += a * c
        return tuple(out)

    def class_of(self, y: Sequence) -> Element:
        """Class of a dual vector given in lattice coordinates."""
        out = []
        for row, d in zip(self.coord_map, self.invariant_factors):
            z = sum(Fraction(r) * c for r, c in zip(row, y))
            if z.denominator != 1:
                raise InvalidParameter("vector is not in the dual lattice")
            out.append(int(z) % d)
        return tuple(out)

    def bmatrix(self, elements: Sequence[Element]) -> tuple[tuple[QmodZ, ...], ...]:
        return tuple(tuple(self.b(x, y) for y in elements) for x in elements)

    def value_census(self) -> tuple:
        """Sorted multiset of (order, self value) over all elements.

        An isomorphism invariant of the finite form, cheap for small groups.
        """
        _guard(self.order)
        c = Counter((self.order_of(x), self.self_value(x)) for x in self.elements())
        return tuple(sorted(((o, str(v)), n) for (o, v), n in c.items()))

    # -- derived groups ----------------------------------------------------

    def negated(self) -> DiscriminantGroup:
        """The same group with b and q replaced by their negatives."""
        from .lattice import opposite
        return DiscriminantGroup(
            self.invariant_factors,
            self.generator_lifts,
            tuple(tuple(-x for x in row) for row in self.bform),
            None if self.qform is None else tuple(-x for x in self.qform),
            self.coord_map,
            None if self.lattice is None else opposite(self.lattice),
        )

    def rebased_cyclic(self, k: int) -> DiscriminantGroup:
        """For a cyclic group, the same group generated by k times the generator."""
        if not self.is_cyclic:
            raise NotCyclic("rebasing is only supported for cyclic groups")
        if self.ngens == 0:
            return self
        n = self.invariant_factors[0]
        if gcd(k, n) != 1:
            raise InvalidParameter(f"{k} is not a unit modulo {n}")
        kinv = pow(k, -1, n)
        lift = tuple(k * c for c in self.generator_lifts[0])
        return DiscriminantGroup(
            (n,),
            (lift,),
            ((self.bform[0][0] * (k * k),),),
            None if self.qform is None else (self.qform[0] * (k * k),),
            (tuple(kinv * r for r in self.coord_map[0]),),
            self.lattice,
        )

    def to_json(self) -> dict:
        return {
            "invariant_factors": list(self.invariant_factors),
            "b": [[str(x) for x in row] for row in self.bform],
            "q": None if self.qform is None else [str(x) for x in self.qform],
        }


def form_tables_from_json(data: dict) -> tuple:
    """Parse the JSON rendering back into (factors, b table, q table)."""
    factors = tuple(int(x) for x in data["invariant_factors"])
    b = tuple(tuple(QmodZ(x) for x in row) for row in data["b"])
    q = None if data.get("q") is None else tuple(QmodTwoZ(x) for x in data["q"])
    return factors, b, q


def _guard(order: int):
    if order > MAX_GROUP_ORDER:
        raise TooLarge(f"group of order {order} exceeds the enumeration limit")


@lru_cache(maxsize=4096)
def discriminant_group(l: Lattice) -> DiscriminantGroup:
    """D(L) from the Smith form ``U G V = D`` of the Gram matrix.

    Generator i is the dual vector ``V[:, i] / d_i``; a dual vector ``y`` has
    coordinates ``(U G y)_i mod d_i``.
    """
    G = l.gram
    n = l.rank
    snf = el.smith_normal_form(G)
    diag = snf.diagonal
    idx = [i for i in range(n) if diag[i] > 1]
    factors = tuple(diag[i] for i in idx)
    lifts = tuple(tuple(Fraction(snf.v[k][i], diag[i]) for k in range(n)) for i in idx)
    UG = el.matmul(snf.u, G)
    coord_map = tuple(UG[i] for i in idx)
    b = tuple(tuple(QmodZ(el.bilinear(G, x, y)) for y in lifts) for x in lifts)
    q = None
    if l.is_even:
        q = tuple(QmodTwoZ(el.bilinear(G, x, x)) for x in lifts)
    return DiscriminantGroup(factors, lifts, b, q, coord_map, l)


def direct_sum(d1: DiscriminantGroup, d2: DiscriminantGroup) -> DiscriminantGroup:
    """D(L1) + D(L2) as a group of the orthogonal sum L1 + L2.

    Generators of ``d1`` come first, so the split point is ``d1.ngens``.
    """
    n1 = len(d1.coord_map[0]) if d1.coord_map else (d1.lattice.rank if d1.lattice else 0)
    n2 = len(d2.coord_map[0]) if d2.coord_map else (d2.lattice.rank if d2.lattice else 0)
    z1, z2 = (Fraction(0),) * n1, (Fraction(0),) * n2
    lifts = tuple(g + z2 for g in d1.generator_lifts) + tuple(z1 + g for g in d2.generator_lifts)
    cmap = tuple(r + (0,) * n2 for r in d1.coord_map) + tuple((0,) * n1 + r for r in d2.coord_map)
    zero = QmodZ(0)
    b = tuple(row + (zero,) * d2.ngens for row in d1.bform) + tuple(
        (zero,) * d1.ngens + row for row in d2.bform)
    q = None
    if d1.qform is not None and d2.qform is not None:
        q = d1.qform + d2.qform
    lat = None
    if d1.lattice is not None and d2.lattice is not None:
        lat = lattice_direct_sum([d1.lattice, d2.lattice])
    return DiscriminantGroup(d1.invariant_factors + d2.invariant_factors, lifts, b, q, cmap, lat)


def vector_class(w: LatticeVector, d: DiscriminantGroup | None = None) -> Element:
    """The class ``w* = [w / div(w)]`` in D(L)."""
    if w.is_zero():
        raise ZeroVector("class of the zero vector")
    if d is None:
        d = discriminant_group(w.owner)
    k = divisibility(w)
    return d.class_of(tuple(Fraction(c, k) for c in w.coords))


# ---------------------------------------------------------------------------
# subgroups and gluing


@dataclass(frozen=True)
class FiniteSubgroup:
    elements: tuple[Element, ...]
    group: DiscriminantGroup = field(compare=False, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return tuple(x) in set(self.elements)

    def generators(self) -> list[Element]:
        """A small generating set (greedy, deterministic)."""
        gens: list[Element] = []
        span = {self.group.zero()}
        for x in self.elements:
            if x not in span:
                gens.append(x)
                span = _closure(self.group, span, x)
        return gens


def _closure(d: DiscriminantGroup, h: set, g: Element) -> set:
    out = set()
    multiple = d.zero()
    for _ in range(d.order_of(g)):
        for x in h:
            out.add(d.add(x, multiple))
        multiple = d.add(multiple, g)
    return out


def subgroup_generated(d: DiscriminantGroup, gens: Sequence[Element]) -> FiniteSubgroup:
    h = {d.zero()}
    for g in gens:
        h = _closure(d, h, d.normalize(g))
    return FiniteSubgroup(tuple(sorted(h)), d)


def _is_zero(v) -> bool:
    return v.is_zero()


def isotropic_subgroups(
    d: DiscriminantGroup,
    split: int | None = None,
    kind: str = "integral",
) -> list[FiniteSubgroup]:
    """All isotropic subgroups, sorted by their element sets.

    ``kind="integral"`` asks for b to vanish on H (integral overlattices);
    ``kind="even"`` asks for q to vanish (even overlattices; needs an even
    lattice). With ``split=k`` the group is read as D1 + D2 with D1 spanned
    by the first ``k`` generators, and only subgroups meeting both summands
    trivially (injective projections to both factors) are returned.
    """
    if kind not in ("integral", "even"):
        raise InvalidParameter(f"unknown isotropy kind {kind!r}")
    if kind == "even" and d.qform is None:
        raise NotEven("even isotropy needs an even lattice")
    _guard(d.order)

    def selfval(x):
        return d.q(x) if kind == "even" else d.b(x, x)

    candidates = [x for x in d.elements() if _is_zero(selfval(x))]
    zero = d.zero()
    start = frozenset([zero])
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for h in frontier:
            for g in candidates:
                if g in h:
                    continue
                if not all(_is_zero(d.b(g, x)) for x in h):
                    continue
                new = frozenset(_closure(d, set(h), g))
                if new not in seen:
                    seen.add(new)
                    nxt.append(new)
        frontier = nxt

    out = []
    for h in seen:
        if split is not None:
            # kernels of both projections must be trivial
            inj1 = all(x == zero or any(x[:split]) for x in h)
            inj2 = all(x == zero or any(x[split:]) for x in h)
            if not (inj1 and inj2):
                continue
        out.append(FiniteSubgroup(tuple(sorted(h)), d))
    out.sort(key=lambda s: (s.order, s.elements))
    return out


def overlattice_basis(l: Lattice, h: FiniteSubgroup) -> tuple[tuple[Fraction, ...], ...]:
    """Rational basis (columns, in L coordinates) of L + lifts of H."""
    d = h.group
    n = l.rank
    lifts = [d.lift(x) for x in h.generators()]
    N = 1
    for v in lifts:
        for c in v:
            N = lcm(N, c.denominator)
    rows = [tuple(N * int(i == j) for j in range(n)) for i in range(n)]
    rows += [tuple(int(c * N) for c in v) for v in lifts]
    hnf = el.hermite_normal_form(rows)
    return el.transpose(tuple(tuple(Fraction(c, N) for c in r) for r in hnf))


def glue_overlattice(l: Lattice, h: FiniteSubgroup, require_even: bool = False) -> Lattice:
    """The overlattice of L generated by lifts of the isotropic subgroup H."""
    d = h.group
    if d.lattice is not None and d.lattice != l:
        raise InvalidParameter("subgroup does not belong to D(l)")
    for x in h.elements:
        for y in h.elements:
            if not d.b(x, y).is_zero():
                raise NotIsotropic("b does not vanish on the subgroup")
        if require_even and not d.q(x).is_zero():
            raise NotIsotropic("q does not vanish on the subgroup")
    B = overlattice_basis(l, h)
    g = el.congruent(l.gram, B)
    if any(c.denominator != 1 for row in g for c in row):
        raise NotIsotropic("glued form is not integral")
    label = l.label if h.order == 1 else f"{l.label or 'L'}+H{h.order}"
    return Lattice(el.as_matrix(g), label)


def extend_isometry(g: Sequence[Sequence[int]], m_in_l: SublatticeEmbedding) -> el.IntMatrix:
    """Extend an isometry of a finite-index sublattice M to the ambient L.

    ``g`` acts on M coordinates; the result acts on L coordinates. Raises
    NotExtendable when the unique rational extension does not preserve L.
    """
    B = m_in_l.basis
    GM = m_in_l.gram
    g = el.as_matrix(g)
    if m_in_l.rank != m_in_l.ambient.rank:
        raise NotFiniteIndex("sublattice must have full rank")
    if el.congruent(GM, g) != GM:
        raise NotIsometry("g does not preserve the Gram matrix of M")
    ext = el.matmul(el.matmul(B, g), el.inverse_rational(B))
    if any(Fraction(c).denominator != 1 for row in ext for c in row):
        raise NotExtendable("extension does not map L into L")
    return el.as_matrix(ext)


def cyclic_form_conjugate(d1: DiscriminantGroup, d2: DiscriminantGroup) -> bool:
    """Whether two cyclic discriminant forms are isomorphic.

    Compares q when both groups are even, b otherwise, by trying every unit
    multiple of the second generator.
    """
    if not (d1.is_cyclic and d2.is_cyclic):
        raise NotCyclic("conjugacy test needs cyclic groups")
    if d1.order != d2.order:
        return False
    n = d1.order
    if n == 1:
        return True
    _guard(n)
    use_q = d1.qform is not None and d2.qform is not None
    target = d1.qform[0] if use_q else d1.bform[0][0]
    base = d2.qform[0] if use_q else d2.bform[0][0]
    return any(gcd(k, n) == 1 and base * (k * k) == target for k in range(1, n))
