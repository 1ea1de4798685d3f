import pytest
from hypothesis import given, settings, strategies as st

from frobdiv import CyclotomicField, Matrix, Poly, QQ, Rat, kronecker_product
from frobdiv.linalg import rref_and_kernel


def qmat(rows):
    return Matrix(QQ, [[QQ.from_rat(Rat(x)) for x in row] for row in rows])


def test_rref_oracle():
    m = qmat([[1, 2, 3], [2, 4, 6], [1, 1, 1]])
    red, pivots = m.rref()
    assert pivots == [0, 1]
    assert m.rank() == 2
    # reduced rows: [1, 0, -1], [0, 1, 2]
    assert red.entries[0] == [QQ.one, QQ.zero, QQ.from_rat(Rat(-1))]
    assert red.entries[1] == [QQ.zero, QQ.one, QQ.from_rat(Rat(2))]


def test_kernel_annihilates():
    m = qmat([[1, 2, 3], [4, 5, 6]])
    ker = m.kernel()
    assert len(ker) == 1
    assert all(x == QQ.zero for x in m.apply(ker[0]))


def test_solve_and_inverse():
    m = qmat([[2, 1], [1, 1]])
    rhs = [QQ.from_rat(Rat(3)), QQ.from_rat(Rat(2))]
    x = m.solve(rhs)
    assert m.apply(x) == rhs
    inv = m.inverse()
    assert m * inv == Matrix.identity(QQ, 2)
    # inconsistent system
    s = qmat([[1, 1], [1, 1]]).solve([QQ.one, QQ.zero])
    assert s is None


def test_det_oracle():
    assert qmat([[2, 1], [1, 1]]).det() == QQ.one
    assert qmat([[1, 2], [2, 4]]).det() == QQ.zero
    assert qmat([[0, 1], [1, 0]]).det() == QQ.from_rat(Rat(-1))


def test_kron_convention():
    # e_i (x) e_j maps to index i*dim(b) + j
    a = qmat([[0, 1], [0, 0]])
    b = Matrix.identity(QQ, 3)
    k = kronecker_product(a, b)
    assert k.rows == 6 and k.cols == 6
    # k sends e_{1*3+j} to e_{0*3+j}
    for j in range(3):
        v = [QQ.zero] * 6
        v[3 + j] = QQ.one
        out = k.apply(v)
        want = [QQ.zero] * 6
        want[j] = QQ.one
        assert out == want


def test_minimal_polynomial_oracles():
    # 3-cycle permutation: x^3 - 1
    perm = qmat([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    mp = perm.minimal_polynomial()
    assert mp.coeffs == [QQ.from_rat(Rat(-1)), QQ.zero, QQ.zero, QQ.one]
    # nilpotent: x^2
    nil = qmat([[0, 1], [0, 0]])
    assert nil.minimal_polynomial().coeffs == [QQ.zero, QQ.zero, QQ.one]
    # diagonal {1, 2}: x^2 - 3x + 2
    diag = qmat([[1, 0], [0, 2]])
    assert diag.minimal_polynomial().coeffs == [
        QQ.from_rat(Rat(2)), QQ.from_rat(Rat(-3)), QQ.one]
    # minimal polynomial annihilates the matrix
    assert diag.minimal_polynomial().eval_matrix(diag).is_zero()


def test_rref_and_kernel_surface():
    m = qmat([[1, 2], [2, 4]])
    red, rank, ker = rref_and_kernel(m)
    assert rank == 1 and len(ker) == 1


def test_poly_ops():
    f = Poly.from_ints(QQ, [-1, 0, 1])        # x^2 - 1
    g = Poly.from_ints(QQ, [1, 1])            # x + 1
    q, r = f.divmod(g)
    assert r.is_zero() and q.coeffs == [QQ.from_rat(Rat(-1)), QQ.one]
    assert f.gcd(g).monic() == g.monic()
    assert f.lcm(g) == f.monic()
    assert f.derivative().coeffs == [QQ.zero, QQ.from_rat(Rat(2))]
    # pow_mod: x^4 mod (x^2 - 1) = 1
    x = Poly.x(QQ)
    assert x.pow_mod(4, f).coeffs == [QQ.one]


def test_cyclotomic_matrix():
    K = CyclotomicField(4)
    i = K.zeta()
    m = Matrix(K, [[K.zero, -i], [i, K.zero]])
    assert m.det() == -K.one
    mp = m.minimal_polynomial()
    # eigenvalues +-1: x^2 - 1
    assert mp.coeffs == [-K.one, K.zero, K.one]


@st.composite
def small_qmatrix(draw):
    n = draw(st.integers(2, 4))
    m = draw(st.integers(2, 4))
    ent = [[QQ.from_rat(Rat(draw(st.integers(-5, 5))))
            for _ in range(m)] for _ in range(n)]
    return Matrix(QQ, ent)


@settings(max_examples=40, deadline=None)
@given(small_qmatrix())
def test_rref_properties(m):
    red, pivots = m.rref()
    # idempotent
    assert red.rref()[0] == red
    # rank-nullity
    assert len(pivots) + len(m.kernel()) == m.cols
    for v in m.kernel():
        assert all(x == QQ.zero for x in m.apply(v))
