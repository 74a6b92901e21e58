import random

import pytest
from hypothesis import given, settings, strategies as st

from fano10 import exactlin as el
from fano10.errors import Degenerate, InvalidParameter, NonSymmetric, OwnerMismatch, ZeroVector
from fano10.fano import build_ambient_model
from fano10.lattice import (
    BUILTIN_NAMES,
    Lattice,
    builtin_lattice,
    direct_sum,
    divisibility,
    inner,
    is_characteristic,
    is_even,
    lambda_abstract,
    make_standard,
    norm,
    rescaled,
)

from oracles import det_leibniz, signature_float

STANDARD_TABLE = {
    "U": ((1, 1), -1, True),
    "A1": ((1, 0), 2, True),
    "E8": ((8, 0), 1, True),
}


@pytest.mark.parametrize("kind", sorted(STANDARD_TABLE))
def test_standard_invariants(kind):
    sig, det, even = STANDARD_TABLE[kind]
    l = make_standard(kind)
    assert l.signature == sig and l.det == det and l.is_even == even


@pytest.mark.parametrize("p,q", [(1, 0), (2, 1), (22, 2), (20, 2), (0, 3)])
def test_odd_unimodular_invariants(p, q):
    l = make_standard("odd_unimodular", p, q)
    assert l.signature == (p, q) and l.det == (-1) ** q and not l.is_even


def test_e8_is_even_unimodular():
    e8 = make_standard("E8")
    assert det_leibniz(e8.gram) == 1
    assert e8.is_even and e8.is_unimodular and e8.signature == (8, 0)


def test_standard_errors():
    with pytest.raises(InvalidParameter):
        make_standard("scaled", 0)
    with pytest.raises(InvalidParameter):
        make_standard("odd_unimodular", 0, 0)
    with pytest.raises(InvalidParameter):
        make_standard("D4")


def test_lattice_validation():
    with pytest.raises(NonSymmetric):
        Lattice(((1, 2), (3, 4)))
    with pytest.raises(Degenerate):
        Lattice(((1, 1), (1, 1)))


def test_direct_sum_examples():
    a1 = make_standard("A1")
    assert direct_sum([a1, a1]).gram == ((2, 0), (0, 2))
    assert direct_sum([a1, a1]).det == 4
    assert direct_sum([make_standard("U")]) == make_standard("U")
    lam = lambda_abstract()
    assert lam.rank == 22 and lam.det == 4 and lam.is_even and lam.signature == (20, 2)


def test_direct_sum_determinant_sign():
    # the determinant sign follows the signature: (-1)^2 for two negative directions
    lam = lambda_abstract()
    assert lam.det == (-1) ** lam.signature[1] * 1 * 1 * 1 * 1 * 2 * 2


def test_parity():
    assert is_even(make_standard("U"))
    assert not is_even(make_standard("odd_unimodular", 22, 2))
    assert is_even(lambda_abstract())


def test_divisibility_examples():
    m = build_ambient_model()
    lam = m.lambda_lattice
    assert divisibility(m.in_lambda(m.e_vec)) == 2
    assert divisibility(m.in_lambda(m.u1)) == 1
    for k in range(-3, 8):
        w = m.in_lambda(m.w(k))
        assert norm(w) == 2 * k and divisibility(w, lam) == 1
    # abstract model: an A1 generator has divisibility 2
    l = lambda_abstract()
    assert divisibility(l.basis_vector(20)) == 2
    with pytest.raises(ZeroVector):
        divisibility(l.zero())


def test_characteristic_examples():
    m = build_ambient_model()
    assert is_characteristic(m.vprime)
    assert is_characteristic(make_standard("U").zero())
    i20 = make_standard("odd_unimodular", 2, 0)
    assert not is_characteristic(i20.basis_vector(0))


def test_inner_examples():
    m = build_ambient_model()
    assert inner(m.u, m.vprime) == 2
    assert norm(m.u) == 2
    assert norm(m.vprime) == 22 - 18 == 4
    with pytest.raises(OwnerMismatch):
        inner(m.u, make_standard("U").zero())


def test_builtins():
    for name in BUILTIN_NAMES:
        assert builtin_lattice(name).rank >= 1
    with pytest.raises(InvalidParameter):
        builtin_lattice("nope")


def test_json_round_trip():
    for name in BUILTIN_NAMES:
        l = builtin_lattice(name)
        back = Lattice.from_json(l.to_json())
        assert back == l and back.label == l.label


def test_rescaled():
    assert rescaled(make_standard("U"), 2).gram == ((0, 2), (2, 0))


@st.composite
def random_lattice(draw):
    n = draw(st.integers(1, 5))
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            g[i][j] = g[j][i] = draw(st.integers(-4, 4))
    from hypothesis import assume
    assume(el.determinant(g) != 0)
    return Lattice(el.as_matrix(g))


@settings(max_examples=100, deadline=None)
@given(random_lattice(), st.lists(st.integers(-5, 5), min_size=5, max_size=5))
def test_divisibility_divides_norm(l, coords):
    w = l.vector(coords[: l.rank])
    if w.is_zero():
        return
    assert norm(w) % divisibility(w) == 0


@settings(max_examples=50, deadline=None)
@given(random_lattice())
def test_signature_agrees_with_eigenvalues(l):
    assert l.signature == signature_float(l.gram)


def test_characteristic_definition_random():
    m = build_ambient_model()
    rng = random.Random(1)
    for _ in range(200):
        y = m.i222.vector(rng.randint(-5, 5) for _ in range(24))
        assert (inner(m.vprime, y) - norm(y)) % 2 == 0
