import pytest
from hypothesis import given, settings, strategies as st

from fano10 import exactlin as el
from fano10.errors import Degenerate, NonSquare, NonSymmetric
from fano10.lattice import E8_GRAM, lambda_abstract, make_standard

from oracles import det_fraction, det_leibniz, signature_float


def small_matrix(max_n=6, lo=-6, hi=6, square=False):
    @st.composite
    def build(draw):
        m = draw(st.integers(1, max_n))
        n = m if square else draw(st.integers(1, max_n))
        return tuple(tuple(draw(st.integers(lo, hi)) for _ in range(n)) for _ in range(m))
    return build()


@st.composite
def unimodular(draw, n):
    """Product of random elementary matrices and sign flips."""
    t = [list(r) for r in el.identity(n)]
    for _ in range(draw(st.integers(0, 3 * n))):
        i, j = draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))
        if i == j:
            t[i] = [-x for x in t[i]]
            continue
        k = draw(st.integers(-3, 3))
        t[i] = [a + k * b for a, b in zip(t[i], t[j])]
    return el.as_matrix(t)


@st.composite
def symmetric_nondegenerate(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            g[i][j] = g[j][i] = draw(st.integers(-5, 5))
    g = el.as_matrix(g)
    if el.determinant(g) == 0:
        g = tuple(tuple(x + (7 if i == j else 0) for j, x in enumerate(r)) for i, r in enumerate(g))
    from hypothesis import assume
    assume(el.determinant(g) != 0)
    return g


# ---------------------------------------------------------------------------
# smith normal form


def test_snf_identity():
    r = el.smith_normal_form(el.identity(3))
    assert r.d == el.identity(3) and r.u == el.identity(3) and r.v == el.identity(3)


def test_snf_diag_two():
    assert el.invariant_factors([[2, 0], [0, 2]]) == (2, 2)


def test_snf_e8_trivial():
    assert det_leibniz(E8_GRAM) == 1
    assert set(el.invariant_factors(E8_GRAM)) == {1}


def test_snf_textbook_example():
    r = el.smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert r.diagonal == (2, 6, 12)


def _check_snf(a):
    r = el.smith_normal_form(a)
    assert el.matmul(el.matmul(r.u, a), r.v) == r.d
    assert el.determinant(r.u) in (1, -1) and el.determinant(r.v) in (1, -1)
    diag = r.diagonal
    m, n = el.shape(a)
    for i in range(m):
        for j in range(n):
            if i != j:
                assert r.d[i][j] == 0
    assert all(x >= 0 for x in diag)
    nz = [x for x in diag if x]
    assert all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))
    assert all(x == 0 for x in diag[len(nz):])
    return r


@settings(max_examples=200, deadline=None)
@given(small_matrix())
def test_snf_reconstruction_property(a):
    _check_snf(a)


def test_snf_deterministic():
    a = [[3, 7, 1], [4, -2, 9], [0, 5, 5]]
    assert el.smith_normal_form(a) == el.smith_normal_form(a)


def test_snf_rank24_gram():
    g = make_standard("odd_unimodular", 22, 2).gram
    r = _check_snf(g)
    assert set(r.invariant_factors) == {1}


# ---------------------------------------------------------------------------
# determinant


def test_determinant_examples():
    assert el.determinant([[2, 2], [2, 4]]) == 4
    assert el.determinant(el.diagonal([2, 2, 2])) == 8
    assert el.determinant([[2, 0, 0], [0, 2, 1], [0, 1, 3]]) == 10


def test_determinant_nonsquare():
    with pytest.raises(NonSquare):
        el.determinant([[1, 2, 3], [4, 5, 6]])


@settings(max_examples=100, deadline=None)
@given(small_matrix(max_n=5, square=True))
def test_determinant_matches_leibniz(a):
    assert el.determinant(a) == det_leibniz(a)


@settings(max_examples=60, deadline=None)
@given(small_matrix(max_n=10, square=True))
def test_determinant_matches_snf_product(a):
    d = el.determinant(a)
    r = el.smith_normal_form(a)
    prod = 1
    for x in r.diagonal:
        prod *= x
    assert abs(d) == prod
    assert d == det_fraction(a)


# ---------------------------------------------------------------------------
# signature


def test_signature_examples():
    assert el.signature(make_standard("U").gram) == (1, 1)
    assert el.signature(lambda_abstract().gram) == (20, 2)
    assert el.signature(make_standard("odd_unimodular", 22, 2).gram) == (22, 2)


def test_signature_errors():
    with pytest.raises(Degenerate):
        el.signature([[1, 1], [1, 1]])
    with pytest.raises(NonSymmetric):
        el.signature([[1, 2], [0, 1]])


def test_signature_zero_diagonal():
    # all diagonal pivots vanish: needs the 2x2 block
    assert el.signature([[0, 1, 1], [1, 0, 1], [1, 1, 0]]) == (1, 2)


@settings(max_examples=200, deadline=None)
@given(symmetric_nondegenerate(), st.data())
def test_signature_congruence_invariant(g, data):
    p, n = el.signature(g)
    assert p + n == len(g)
    assert (p, n) == signature_float(g)
    t = data.draw(unimodular(len(g)))
    assert el.signature(el.congruent(g, t)) == (p, n)


# ---------------------------------------------------------------------------
# kernels, HNF, solving


def test_kernel_examples():
    assert el.kernel_basis([[1, 1]]) == ((1,), (-1,))
    assert all(len(r) == 0 for r in el.kernel_basis(el.identity(3)))
    assert el.kernel_basis([[2, 4]]) == ((2,), (-1,))


@settings(max_examples=100, deadline=None)
@given(small_matrix(max_n=5))
def test_kernel_saturated_property(a):
    k = el.kernel_basis(a)
    cols = len(k[0]) if k and k[0] else 0
    n = len(a[0])
    assert cols == n - el.rank(a)
    if cols:
        assert all(x == 0 for row in el.matmul(a, k) for x in row)
        assert set(el.invariant_factors(k)) == {1}


def test_hnf_shape():
    h = el.hermite_normal_form([[4, 6], [2, 3], [0, 0]])
    assert h == ((2, 3),)


def test_solve_integer():
    assert el.solve_integer([[2, 0], [0, 3]], [4, 9]) == (2, 3)
    assert el.solve_integer([[2, 0], [0, 3]], [1, 0]) is None
