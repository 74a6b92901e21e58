"""Lattice theory of special prime Fano fourfolds of degree 10 and index 2.

All constructions live in ``I_{22,2} = diag(1 x 22, -1 x 2)`` with canonical
basis ``e_1, ..., e_22, f_1, f_2`` (coordinate indices 0..21, 22, 23).
The Grassmannian classes sigma_{1,1} and sigma_2 restrict to

    u  = e_1 + e_2
    v' = e_1 + ... + e_22 - 3 f_1 - 3 f_2      (characteristic)

and ``v = v' - u``, so that ``Lambda_2 = <u, v>`` has Gram diag(2, 2) and the
vanishing lattice ``Lambda`` is its orthogonal complement.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd, isqrt

import numpy as np

from . import exactlin as el
from .discgroup import (
    DiscriminantGroup,
    QmodZ,
    cyclic_form_conjugate,
    discriminant_group,
    extend_isometry,
    vector_class,
)
from .errors import (
    HNotNorm10,
    InternalVerificationFailed,
    InvalidParameter,
    MethodDisagreement,
    NotAdmissible,
    UnsupportedShape,
)
from .lattice import (
    Lattice,
    LatticeVector,
    divisibility,
    inner,
    is_characteristic,
    make_standard,
    norm,
)
from .sublattice import (
    SublatticeEmbedding,
    induced_lattice,
    is_primitive,
    orthogonal_complement,
)

RANK = 24
F1, F2 = 22, 23


def _basis(i: int, n: int = RANK) -> tuple[int, ...]:
    return tuple(int(i == j) for j in range(n))


def _vec(terms: dict[int, int], n: int = RANK) -> tuple[int, ...]:
    out = [0] * n
    for i, c in terms.items():
        out[i] += c
    return tuple(out)


def _verify(cond: bool, what: str):
    if not cond:
        raise InternalVerificationFailed(what)


# ---------------------------------------------------------------------------
# labels


class Label(str, enum.Enum):
    D = "D"
    DPRIME = "Dprime"
    DSECOND = "Dsecond"

    def divisor(self, d: int) -> str:
        mark = {"D": "", "Dprime": "'", "Dsecond": "''"}[self.value]
        return f"D{mark}_{d}"


def _label_rule(d: int, ideal_u: int, ideal_v: int) -> Label:
    if d % 4 == 0:
        return Label.D
    if (ideal_u, ideal_v) == (1, 2):
        return Label.DPRIME
    if (ideal_u, ideal_v) == (2, 1):
        return Label.DSECOND
    raise InvalidParameter(
        f"ideals K.u = {ideal_u}Z, K.v = {ideal_v}Z do not fit discriminant {d}")


def label_from_gram(gram) -> Label:
    """Divisor label of K = <u, v, g> read off a Gram matrix in that basis."""
    g = el.as_matrix(gram)
    if len(g) != 3 or g[0][0] != 2 or g[1][1] != 2 or g[0][1] != 0:
        raise InvalidParameter("expected a Gram matrix in a basis (u, v, g)")
    return _label_rule(el.determinant(g), el.vector_gcd(g[0]), el.vector_gcd(g[1]))


# ---------------------------------------------------------------------------
# ambient model


@dataclass(frozen=True)
class AmbientModel:
    i222: Lattice
    u: LatticeVector
    v: LatticeVector
    vprime: LatticeVector
    lambda2: SublatticeEmbedding
    lam: SublatticeEmbedding
    e_vec: LatticeVector
    f_vec: LatticeVector
    u1: LatticeVector
    u2: LatticeVector

    @cached_property
    def lambda_lattice(self) -> Lattice:
        return induced_lattice(self.lam, "Lambda")

    @cached_property
    def lambda2_lattice(self) -> Lattice:
        return induced_lattice(self.lambda2, "Lambda2")

    def in_lambda(self, x: LatticeVector) -> LatticeVector:
        """Coordinates of an ambient vector of Lambda in the Lambda basis."""
        c = self.lam.coordinates(x)
        if c is None:
            raise InvalidParameter("vector is not in Lambda")
        return self.lambda_lattice.vector(c)

    def w(self, m: int) -> LatticeVector:
        """w_m = u1 + m u2, of norm 2m and divisibility 1 in Lambda."""
        return self.u1 + m * self.u2

    @cached_property
    def splitting(self) -> SublatticeEmbedding:
        """Lambda_2 + Lambda, basis (u, v, Lambda basis), index 2 in I_{22,2}."""
        return SublatticeEmbedding.from_vectors(
            self.i222, [self.u, self.v] + self.lam.vectors())


def _glue_candidates(model_i, target, others):
    """Vectors target - 2y, y = +-(basis vector), with norm 2 orthogonal to others."""
    out = []
    for i in range(RANK):
        for s in (1, -1):
            x = target - (2 * s) * model_i.basis_vector(i)
            if norm(x) == 2 and all(inner(x, o) == 0 for o in others):
                out.append(x)
    return out


@lru_cache(maxsize=1)
def build_ambient_model() -> AmbientModel:
    I = make_standard("odd_unimodular", 22, 2)
    u = I.vector(_vec({0: 1, 1: 1}))
    vprime = I.vector(tuple([1] * 22 + [-3, -3]))
    v = vprime - u
    lambda2 = SublatticeEmbedding.from_vectors(I, [u, v])
    lam = orthogonal_complement(lambda2)
    lam_lat = induced_lattice(lam, "Lambda")
    D = discriminant_group(lam_lat)

    def in_lam(x):
        return lam_lat.vector(lam.coordinates(x))

    def div_in_lambda(x):
        return divisibility(in_lam(x))

    # e: lexicographically smallest candidate of the form u - 2y; f likewise
    # from v, orthogonal to e. Both must have divisibility 2 in Lambda.
    es = [x for x in _glue_candidates(I, u, [u, v]) if div_in_lambda(x) == 2]
    _verify(bool(es), "no candidate for e")
    e = min(es, key=lambda x: x.coords)
    fs = [x for x in _glue_candidates(I, v, [u, v, e]) if div_in_lambda(x) == 2]
    _verify(bool(fs), "no candidate for f")
    f = min(fs, key=lambda x: x.coords)

    # hyperbolic pair in Lambda, orthogonal to e and f
    u1 = I.vector(_vec({3: 1, 4: -1, F1: 1, F2: -1}))
    u2 = I.vector(_vec({3: -1, 5: 1, F1: -1, F2: 1}))

    model = AmbientModel(I, u, v, vprime, lambda2, lam, e, f, u1, u2)

    _verify(norm(u) == 2 and norm(v) == 2 and inner(u, v) == 0, "u, v")
    _verify(is_characteristic(vprime), "v' characteristic")
    _verify(lam_lat.rank == 22 and lam_lat.is_even, "Lambda even of rank 22")
    _verify(lam_lat.signature == (20, 2), "Lambda signature")
    _verify(D.invariant_factors == (2, 2), "D(Lambda) = (Z/2)^2")
    for x in ((u + e), (v + f), (u + v + e + f)):
        _verify(all(c % 2 == 0 for c in x.coords), "glue vectors integral")
    es_, fs_ = model.in_lambda(e), model.in_lambda(f)
    ce, cf = vector_class(es_, D), vector_class(fs_, D)
    _verify(len({ce, cf, D.zero()}) == 3, "e*, f* distinct and nonzero")
    half, zero = QmodZ(Fraction(1, 2)), QmodZ(0)
    _verify(D.bmatrix([ce, cf]) == ((half, zero), (zero, half)),
            "b_Lambda = diag(1/2, 1/2) on e*, f*")
    for x in (u1, u2):
        _verify(norm(x) == 0 and all(inner(x, y) == 0 for y in (u, v, e, f)),
                "hyperbolic pair orthogonal to u, v, e, f")
    _verify(inner(u1, u2) == 1, "u1.u2 = 1")
    return model


# ---------------------------------------------------------------------------
# classification of special sublattices


def admissible_discriminant(d: int) -> bool:
    return d >= 1 and d % 8 in (0, 2, 4)


def _require_admissible(d: int):
    if not isinstance(d, int) or not admissible_discriminant(d):
        raise NotAdmissible(f"d = {d} is not positive with d = 0, 2, 4 (mod 8)")


def case_of(d: int) -> str:
    """'a', 'b' or 'c' for d = 0, 2, 4 (mod 8)."""
    _require_admissible(d)
    return {0: "a", 2: "b", 4: "c"}[d % 8]


def canonical_gram(d: int) -> el.IntMatrix:
    case = case_of(d)
    if case == "a":
        return ((2, 0, 0), (0, 2, 0), (0, 0, d // 4))
    if case == "b":
        return ((2, 0, 0), (0, 2, 1), (0, 1, (d + 2) // 4))
    return ((2, 0, 1), (0, 2, 1), (1, 1, (d + 4) // 4))


@dataclass(frozen=True)
class SpecialSublattice:
    """A primitive positive-definite rank-3 K in I_{22,2} containing Lambda_2.

    ``embedding`` has basis (u, v, g); ``gram`` is the Gram matrix in that
    basis. ``w`` generates K & Lambda.
    """

    d: int
    gram: el.IntMatrix
    embedding: SublatticeEmbedding = field(repr=False)
    divisor_label: Label
    w: LatticeVector = field(repr=False, compare=False)

    @property
    def canonical_gram(self) -> el.IntMatrix:
        return canonical_gram(self.d)

    @property
    def divisor(self) -> str:
        return self.divisor_label.divisor(self.d)

    def lattice(self) -> Lattice:
        return Lattice(self.gram, self.divisor)


def _special(model: AmbientModel, d: int, w: LatticeVector, glue: LatticeVector | None,
             verify: bool) -> SpecialSublattice:
    if glue is None:
        g = w
    else:
        g = (glue + w).half()
    emb = SublatticeEmbedding.from_vectors(model.i222, [model.u, model.v, g])
    gram = emb.gram
    k = SpecialSublattice(d, gram, emb, label_from_gram(gram), w)
    if verify:
        verify_special(k)
    return k


def verify_special(k: SpecialSublattice) -> None:
    """Re-check a representative with generic linear algebra."""
    model = build_ambient_model()
    emb = k.embedding
    cols = emb.columns
    _verify(cols[0] == model.u.coords and cols[1] == model.v.coords, "K contains Lambda_2")
    _verify(is_primitive(emb), f"K primitive (d={k.d})")
    lat = induced_lattice(emb)
    _verify(lat.det == k.d, f"det K = {k.d}")
    _verify(lat.signature == (3, 0), "K positive definite")
    _verify(orbit_label(k) == k.divisor_label, "label rule")
    swap = ((0, 1, 0), (1, 0, 0), (0, 0, 1))
    expected = k.canonical_gram
    if k.divisor_label is Label.DPRIME:
        expected = el.congruent(expected, swap)
    _verify(lat.gram == expected, "canonical Gram")


def classify_special_sublattice(d: int, verify: bool = True) -> list[SpecialSublattice]:
    """One representative per orbit of special sublattices of discriminant d.

    The representatives are the saturations of Lambda_2 + Zw for
    ``w = w_m`` (d = 8m), ``e + 2w_m`` and ``f + 2w_m`` (d = 8m + 2) and
    ``e + f + 2w_m`` (d = 8m + 4).
    """
    case = case_of(d)
    model = build_ambient_model()
    u, v, e, f = model.u, model.v, model.e_vec, model.f_vec
    if case == "a":
        return [_special(model, d, model.w(d // 8), None, verify)]
    if case == "b":
        wm2 = 2 * model.w((d - 2) // 8)
        return [
            _special(model, d, e + wm2, u, verify),
            _special(model, d, f + wm2, v, verify),
        ]
    wm2 = 2 * model.w((d - 4) // 8)
    return [_special(model, d, e + f + wm2, u + v, verify)]


def orbit_label(k: SpecialSublattice) -> Label:
    """Label from the ideals K.u and K.v computed inside I_{22,2}."""
    return embedding_label(k.embedding)


def ideals(emb: SublatticeEmbedding) -> tuple[int, int]:
    """Positive generators of K.u and K.v."""
    model = build_ambient_model()
    vecs = emb.vectors()
    iu = el.vector_gcd([inner(x, model.u) for x in vecs])
    iv = el.vector_gcd([inner(x, model.v) for x in vecs])
    return iu, iv


def embedding_label(emb: SublatticeEmbedding) -> Label:
    return _label_rule(el.determinant(emb.gram), *ideals(emb))


@lru_cache(maxsize=1)
def r_involution() -> el.IntMatrix:
    """The extension r_I to I_{22,2} of (u <-> v) + (e <-> f)."""
    return extend_isometry(_split_isometry(swap_uv=True), build_ambient_model().splitting)


def _split_isometry(swap_uv: bool) -> el.IntMatrix:
    """Matrix on Lambda_2 + Lambda of (r_2 or Id) + r, r swapping e and f."""
    model = build_ambient_model()
    d = model.e_vec - model.f_vec
    cols = []
    for b in model.lam.vectors():
        k = inner(b, d)
        img = b - (k // 2) * d
        cols.append((0, 0) + model.lam.coordinates(img))
    first = [(0, 1), (1, 0)] if swap_uv else [(1, 0), (0, 1)]
    cols = [c + (0,) * 22 for c in first] + cols
    return el.transpose(cols)


def apply_isometry(g: el.IntMatrix, k: SpecialSublattice) -> SublatticeEmbedding:
    return SublatticeEmbedding(k.embedding.ambient, el.matmul(g, k.embedding.basis))


# ---------------------------------------------------------------------------
# non-special lattice and associations


def nonspecial_lattice(k: SpecialSublattice) -> Lattice:
    return induced_lattice(orthogonal_complement(k.embedding), f"K_perp({k.divisor})")


def nonspecial_discriminant_form(d: int, case: str | None = None) -> DiscriminantGroup:
    """D(K^perp) computed from the explicit complement in I_{22,2}.

    In the cyclic cases the group is rebased so that the generator has
    b = -(d+8)/(2d) (d = 2 mod 8) or -(d+2)/(2d) (d = 4 mod 8).
    """
    actual = case_of(d)
    if case is not None and case != actual:
        raise InvalidParameter(f"d = {d} is in case {actual}, not {case}")
    k = classify_special_sublattice(d, verify=False)[0]
    D = discriminant_group(nonspecial_lattice(k))
    if actual == "a":
        _verify(D.invariant_factors == (2, 2, d // 4), "D(K_perp) = (Z/2)^2 x Z/(d/4)")
        return D
    _verify(D.invariant_factors == (d,), "D(K_perp) cyclic of order d")
    target = QmodZ(Fraction(-(d + 8) if actual == "b" else -(d + 2), 2 * d))
    for kk in range(1, d):
        if gcd(kk, d) == 1 and D.bform[0][0] * (kk * kk) == target:
            return D.rebased_cyclic(kk)
    raise InternalVerificationFailed(f"no generator with b = {target} for d = {d}")


def _odd_prime_factors(n: int) -> list[int]:
    out = []
    n = abs(n)
    while n % 2 == 0 and n:
        n //= 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 2
    if n > 1:
        out.append(n)
    return out


def _unit_solution_exists(target: int, coeff: int, d: int) -> bool:
    """Is there n in [0, d) prime to d with coeff * n^2 = target (mod d)?"""
    target %= d
    coeff %= d
    if d <= 3 * 10**9:
        n = np.arange(d, dtype=np.int64)
        units = np.gcd(n, d) == 1
        vals = ((n * n) % d) * coeff % d
        return bool(np.any(units & (vals == target)))
    return any(gcd(n, d) == 1 and coeff * n * n % d == target for n in range(d))


def k3_prime_criterion(d: int) -> bool:
    _require_admissible(d)
    return d % 8 != 0 and all(p % 4 == 1 for p in _odd_prime_factors(d))


def k3_congruence_oracle(d: int) -> bool:
    case = case_of(d)
    if case == "a":
        return False
    shift = 8 if case == "b" else 2
    return _unit_solution_exists(-(d + shift) // 2, 1, d)


def has_associated_k3(d: int) -> bool:
    a, b = k3_prime_criterion(d), k3_congruence_oracle(d)
    if a != b:
        raise MethodDisagreement(f"K3 criteria disagree at d = {d}: {a} vs {b}")
    return a


def cubic_prime_criterion(d: int) -> bool:
    _require_admissible(d)
    if d % 24 in (2, 20):
        return all(p % 12 in (1, 11) for p in _odd_prime_factors(d))
    if d % 72 in (12, 66):
        return all(p % 12 in (1, 11) for p in _odd_prime_factors(d) if p >= 5)
    return False


def cubic_congruence_oracle(d: int) -> bool:
    _require_admissible(d)
    e, dp = d % 24, d // 24
    if e == 2:
        return _unit_solution_exists(d // 2 + 12, 1, d)
    if e == 20:
        return _unit_solution_exists(d // 2 + 3, 1, d)
    if e == 12:
        return d % 9 != 0 and _unit_solution_exists(-12 * dp - 7, 16 * dp + 5, d)
    if e == 18:
        return d % 9 != 0 and _unit_solution_exists(-12 * dp - 13, 16 * dp + 9, d)
    return False


def has_associated_cubic(d: int) -> bool:
    a, b = cubic_prime_criterion(d), cubic_congruence_oracle(d)
    if a != b:
        raise MethodDisagreement(f"cubic criteria disagree at d = {d}: {a} vs {b}")
    return a


def k3_lattice_check(d: int) -> bool:
    """Compare q-forms of K^perp and of the opposite primitive K3 lattice.

    The latter is 2E8 + 2U + <d>, so only D(<d>) matters.
    """
    D = nonspecial_discriminant_form(d)
    if not D.is_cyclic:
        return False
    return cyclic_form_conjugate(D, discriminant_group(make_standard("scaled", d)))


@lru_cache(maxsize=None)
def cubic_nonspecial_lattice(d: int) -> Lattice:
    """K_d^perp for the special cubic lattice K_d = <h, T> in I_{21,2}.

    ``h = e_1 + ... + e_21 - 3 f_1 - 3 f_2`` is characteristic with h^2 = 3;
    T has h.T = 0, T^2 = d/3 (d = 0 mod 6) or h.T = 1, T^2 = (d+1)/3
    (d = 2 mod 6).
    """
    if d <= 0 or d % 6 not in (0, 2):
        raise InvalidParameter("special cubic discriminants satisfy d = 0, 2 (mod 6)")
    n = 23
    I = make_standard("odd_unimodular", 21, 2)
    h = I.vector(tuple([1] * 21 + [-3, -3]))
    a1 = I.vector(_vec({1: 1, 2: -1, 21: 1, 22: -1}, n))
    a2 = I.vector(_vec({1: -1, 3: 1, 21: -1, 22: 1}, n))
    if d % 6 == 0:
        T = a1 + (d // 6) * a2
    else:
        T = I.basis_vector(0) + a1 + ((d - 2) // 6) * a2
    emb = SublatticeEmbedding.from_vectors(I, [h, T])
    _verify(is_primitive(emb) and induced_lattice(emb).det == d, "K_d primitive of det d")
    return induced_lattice(orthogonal_complement(emb), f"cubic K_{d}^perp")


def cubic_lattice_check(d: int) -> bool:
    """Compare D(K^perp) with D(K_d^perp) of a special cubic fourfold."""
    _require_admissible(d)
    if d % 6 not in (0, 2):
        return False
    D = nonspecial_discriminant_form(d)
    C = discriminant_group(cubic_nonspecial_lattice(d))
    if D.invariant_factors != C.invariant_factors:
        return False
    return cyclic_form_conjugate(D, C)


# ---------------------------------------------------------------------------
# surfaces and example families


@dataclass(frozen=True)
class SurfaceClass:
    """[S] = a sigma_{3,1} + b sigma_{2,2}, with K_S.sigma_1, K_S^2, chi(O_S)."""

    a: int
    b: int
    k_dot_sigma1: int
    k_squared: int
    chi: int


def surface_self_intersection(s: SurfaceClass) -> int:
    return 3 * s.a + 4 * s.b + 2 * s.k_dot_sigma1 + 2 * s.k_squared - 12 * s.chi


def surface_discriminant(s: SurfaceClass) -> int:
    return 4 * surface_self_intersection(s) - 2 * (s.b ** 2 + (s.a - s.b) ** 2)


def surface_gram(a: int, b: int, self_int: int) -> el.IntMatrix:
    """Gram of <sigma_{1,1}, sigma_2 - sigma_{1,1}, [S]> = <u, v, S>.

    sigma_{1,1}.[S] = b and sigma_2.[S] = a by Schubert duality on G(2,5).
    """
    return ((2, 0, b), (0, 2, a - b), (b, a - b, self_int))


# Plane: sigma_1 restricts to a line class l, K = -3l.
# tau-quadric: P1 x P1 with sigma_1 = O(1,1), K = O(-2,-2).
# Cubic scroll F_1 with hyperplane class H = C0 + 2f, K = -2C0 - 3f: K.H = -5, K^2 = 8.
# Quintic del Pezzo: K = -H with H^2 = 5.
EXAMPLE_SURFACES = {
    "sigma-plane": SurfaceClass(1, 0, -3, 9, 1),
    "rho-plane": SurfaceClass(0, 1, -3, 9, 1),
    "tau-quadric": SurfaceClass(1, 1, -4, 8, 1),
    "cubic scroll": SurfaceClass(2, 1, -5, 8, 1),
    "quintic del Pezzo": SurfaceClass(3, 2, -5, 5, 1),
}


@dataclass(frozen=True)
class FamilyRow:
    family: str
    a: int
    b: int
    self_int: int
    d: int
    divisor_label: Label
    gram: el.IntMatrix

    @property
    def divisor(self) -> str:
        return self.divisor_label.divisor(self.d)

    def to_json(self) -> dict:
        return {"family": self.family, "a": self.a, "b": self.b, "self_int": self.self_int,
                "d": self.d, "divisor_label": self.divisor_label.value,
                "divisor": self.divisor, "gram": [list(r) for r in self.gram]}


def example_family_table() -> list[FamilyRow]:
    rows = []
    for name, s in EXAMPLE_SURFACES.items():
        c = surface_self_intersection(s)
        gram = surface_gram(s.a, s.b, c)
        d = surface_discriminant(s)
        _verify(el.determinant(gram) == d, f"(S3) agrees with det for {name}")
        rows.append(FamilyRow(name, s.a, s.b, c, d, label_from_gram(gram), gram))
    # nodal: vanishing cycle delta with delta^2 = 2, orthogonal to u and v
    gram = surface_gram(0, 0, 2)
    rows.append(FamilyRow("nodal", 0, 0, 2, el.determinant(gram), label_from_gram(gram), gram))
    return rows


# ---------------------------------------------------------------------------
# targets of the construction of special fourfolds


@dataclass(frozen=True)
class Th81Row:
    family: str
    e: int
    gram: el.IntMatrix
    d: int
    divisor_label: Label

    @property
    def divisor(self) -> str:
        return self.divisor_label.divisor(self.d)

    def to_json(self) -> dict:
        return {"family": self.family, "e": self.e, "gram": [list(r) for r in self.gram],
                "d": self.d, "divisor_label": self.divisor_label.value,
                "divisor": self.divisor}


K10_GRAM = ((2, 0, 0), (0, 2, 1), (0, 1, 3))


def th81_targets(e_max: int) -> list[Th81Row]:
    """Rank-3 lattices produced by the two K3-based constructions.

    First family (Gamma = [[10, 0], [0, -2e]], valid for e >= 2): K_10,
    diag(2, 2, 2e) and [[2,0,0],[0,2,1],[0,1,2e+3]]. Second family
    (Gamma = [[10, 5], [5, -2e]], e >= 0): the saturation
    [[2,0,1],[0,2,0],[1,0,2e+3]] of Lambda_2 + Z w_X, and
    [[2,0,1],[0,2,1],[1,1,2e+6]].
    """
    if not isinstance(e_max, int) or e_max < 0:
        raise InvalidParameter("e_max must be a nonnegative integer")
    rows = []

    def add(family, e, gram):
        gram = el.as_matrix(gram)
        rows.append(Th81Row(family, e, gram, el.determinant(gram), label_from_gram(gram)))

    for e in range(2, e_max + 1):
        if e == 2:
            add("first", e, K10_GRAM)
        add("first", e, ((2, 0, 0), (0, 2, 0), (0, 0, 2 * e)))
        add("first", e, ((2, 0, 0), (0, 2, 1), (0, 1, 2 * e + 3)))
    for e in range(0, e_max + 1):
        add("second", e, ((2, 0, 1), (0, 2, 0), (1, 0, 2 * e + 3)))
        add("second", e, ((2, 0, 1), (0, 2, 1), (1, 1, 2 * e + 6)))
    return rows


def th81_divisors(e_max: int) -> set[tuple[Label, int]]:
    return {(r.divisor_label, r.d) for r in th81_targets(e_max)}


def theorem_divisors(d_max: int) -> set[tuple[Label, int]]:
    """Divisors met by the period map per the construction theorem, d <= d_max."""
    out = set()
    for d in range(1, d_max + 1):
        if d % 4 == 0 and d >= 12:
            out.add((Label.D, d))
        elif d % 8 == 2 and d >= 10:
            out.add((Label.DPRIME, d))
            if d != 18:
                out.add((Label.DSECOND, d))
    return out


# ---------------------------------------------------------------------------
# Hassett-type conditions on rank-2 lattices


@dataclass(frozen=True)
class ConditionResult:
    name: str
    c_squared: int
    c_dot_h: int
    satisfied: bool
    witness: tuple[int, int] | None = None


@dataclass(frozen=True)
class HassettReport:
    gram: el.IntMatrix
    h_index: int
    conditions: tuple[ConditionResult, ...]

    @property
    def lemma_conditions_hold(self) -> bool:
        """No c with (c^2, c.h) in {(-2, 0), (0, 1), (0, 2)}."""
        return all(c.satisfied for c in self.conditions[:3])

    @property
    def not_trigonal(self) -> bool:
        return self.conditions[3].satisfied

    def to_json(self) -> dict:
        return {
            "gram": [list(r) for r in self.gram],
            "h_index": self.h_index,
            "conditions": [
                {"name": c.name, "c_squared": c.c_squared, "c_dot_h": c.c_dot_h,
                 "status": "SATISFIED" if c.satisfied else "VIOLATED",
                 "witness": None if c.witness is None else list(c.witness)}
                for c in self.conditions
            ],
        }


HASSETT_CONDITIONS = (
    ("c^2=-2, c.h=0", -2, 0),
    ("c^2=0, c.h=1", 0, 1),
    ("c^2=0, c.h=2", 0, 2),
    ("c^2=0, c.h=3 (trigonal)", 0, 3),
)


def _integer_roots(A: int, B: int, C: int) -> list[int]:
    """Integer roots of A s^2 + B s + C = 0, ascending."""
    if A == 0:
        if B == 0:
            raise UnsupportedShape("constraint does not cut out finitely many classes")
        return [-C // B] if C % B == 0 else []
    disc = B * B - 4 * A * C
    if disc < 0:
        return []
    r = isqrt(disc)
    if r * r != disc:
        return []
    out = {(-B + sgn * r) // (2 * A) for sgn in (1, -1) if (-B + sgn * r) % (2 * A) == 0}
    return sorted(out)


def _solve_class(gram, hi: int, k: int, t: int) -> tuple[int, int] | None:
    """A class c = x h + y o with c.h = k and c^2 = t, or None."""
    oi = 1 - hi
    hh, ho, oo = gram[hi][hi], gram[hi][oi], gram[oi][oi]
    # c.h = hh x + ho y = k is linear; parametrize its integer points
    if ho == 0:
        if k % hh:
            return None
        x = k // hh
        rest = t - hh * x * x
        if rest % oo:
            return None
        y2 = rest // oo
        if y2 < 0 or isqrt(y2) ** 2 != y2:
            return None
        y = isqrt(y2)
        coords = (x, y)
    else:
        g = gcd(hh, ho)
        if k % g:
            return None
        # extended Euclid: hh * p + ho * q = g
        p, q = _ext_gcd(hh, ho)
        x0, y0 = p * (k // g), q * (k // g)
        dx, dy = ho // g, -hh // g
        # c^2 as a quadratic in s for x = x0 + dx s, y = y0 + dy s
        A = hh * dx * dx + 2 * ho * dx * dy + oo * dy * dy
        B = 2 * (hh * x0 * dx + ho * (x0 * dy + y0 * dx) + oo * y0 * dy)
        C = hh * x0 * x0 + 2 * ho * x0 * y0 + oo * y0 * y0 - t
        roots = _integer_roots(A, B, C)
        if not roots:
            return None
        s = roots[0]
        x, y = x0 + dx * s, y0 + dy * s
        coords = (x, y)
    return coords if hi == 0 else (coords[1], coords[0])


def _ext_gcd(a: int, b: int) -> tuple[int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        x0, y0 = -x0, -y0
    return x0, y0


def hassett_lemma_check(gram2x2, h_index: int = 0) -> HassettReport:
    """Check the rank-2 lattice conditions used to build K3 surfaces of degree 10.

    Since c.h = k is one linear equation, each condition reduces to integer
    roots of a one-variable quadratic. Only even indefinite rank-2 Gram
    matrices are accepted.
    """
    g = el.as_matrix(gram2x2)
    if len(g) != 2 or len(g[0]) != 2 or not el.is_symmetric(g):
        raise UnsupportedShape("expected a symmetric 2x2 Gram matrix")
    if g[0][0] % 2 or g[1][1] % 2:
        raise UnsupportedShape("Gram matrix must be even")
    if el.determinant(g) >= 0:
        raise UnsupportedShape("Gram matrix must be indefinite and nondegenerate")
    if h_index not in (0, 1):
        raise InvalidParameter("h_index must be 0 or 1")
    if g[h_index][h_index] != 10:
        raise HNotNorm10("h must have h^2 = 10")
    results = []
    for name, t, k in HASSETT_CONDITIONS:
        c = _solve_class(g, h_index, k, t)
        if c is not None:
            _verify(el.bilinear(g, c, c) == t and el.matvec(g, c)[h_index] == k,
                    "Hassett witness")
        results.append(ConditionResult(name, t, k, c is None, c))
    return HassettReport(g, h_index, tuple(results))


# ---------------------------------------------------------------------------
# sweeps


@dataclass(frozen=True)
class SweepRow:
    d: int
    n_orbits: int
    labels: tuple[Label, ...]
    k3: bool
    cubic: bool

    def to_json(self) -> dict:
        return {"d": self.d, "n_orbits": self.n_orbits,
                "labels": [l.value for l in self.labels],
                "divisors": [l.divisor(self.d) for l in self.labels],
                "k3": self.k3, "cubic": self.cubic}


def sweep(d_max: int) -> list[SweepRow]:
    rows = []
    for d in range(1, d_max + 1):
        if not admissible_discriminant(d):
            continue
        reps = classify_special_sublattice(d, verify=False)
        rows.append(SweepRow(d, len(reps), tuple(k.divisor_label for k in reps),
                             has_associated_k3(d), has_associated_cubic(d)))
    return rows
