from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from diadeform.errors import MixedFields, ShapeMismatch
from diadeform.fields import PrimeField, QQ
from diadeform.linalg import Matrix

F7 = PrimeField(7)


def qmat(rows):
    return Matrix.from_rows(QQ, rows)


small = st.integers(-6, 6)


def matrices(field=QQ, max_dim=4):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(
                st.lists(small, min_size=c, max_size=c),
                min_size=r, max_size=r).map(
                    lambda rows: Matrix.from_rows(field, rows))))


def test_construction_and_indexing():
    m = qmat([[1, 2], [3, 4]])
    assert m[0, 1] == Fraction(2)
    assert m.rows == 2 and m.cols == 2
    assert m.transpose()[1, 0] == Fraction(2)


def test_shape_checks():
    a = qmat([[1, 2]])
    b = qmat([[1], [2]])
    with pytest.raises(ShapeMismatch):
        a + b
    with pytest.raises(ShapeMismatch):
        b * b


def test_field_checks():
    a = qmat([[1]])
    b = Matrix.from_rows(F7, [[1]])
    with pytest.raises(MixedFields):
        a + b


def test_rank_examples():
    assert qmat([[1, 2], [2, 4]]).rank() == 1
    assert qmat([[1, 2], [3, 4]]).rank() == 2
    assert Matrix.zero(QQ, 3, 2).rank() == 0
    assert Matrix.identity(QQ, 4).rank() == 4


def test_kernel_examples():
    k = qmat([[1, 2], [2, 4]]).kernel_basis()
    assert len(k) == 1
    v = k[0]
    assert v[0] + 2 * v[1] == QQ.zero


def test_solve_exact():
    m = qmat([[2, 1], [1, 3]])
    b = (Fraction(5), Fraction(10))
    x = m.solve(b)
    assert m.apply(x) == b
    assert x == (Fraction(1), Fraction(3))


def test_solve_inconsistent():
    m = qmat([[1, 1], [1, 1]])
    assert m.solve((Fraction(0), Fraction(1))) is None


def test_solve_underdetermined():
    m = qmat([[1, 1]])
    b = (Fraction(3),)
    x = m.solve(b)
    assert m.apply(x) == b


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    assert m.rank() + len(m.kernel_basis()) == m.cols


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_annihilated(m):
    z = tuple([QQ.zero] * m.rows)
    for v in m.kernel_basis():
        assert m.apply(v) == z


@settings(max_examples=60, deadline=None)
@given(matrices(), st.lists(small, min_size=1, max_size=4))
def test_solve_roundtrip(m, coords):
    # build a consistent right-hand side, then solve it back
    x = tuple(QQ.from_int(coords[i % len(coords)]) for i in range(m.cols))
    b = m.apply(x)
    y = m.solve(b)
    assert y is not None
    assert m.apply(y) == b


@settings(max_examples=40, deadline=None)
@given(matrices(F7, 3))
def test_rank_nullity_gf(m):
    assert m.rank() + len(m.kernel_basis()) == m.cols


def test_transpose_rank_invariant():
    m = qmat([[1, 2, 3], [4, 5, 6]])
    assert m.rank() == m.transpose().rank()


def test_hstack():
    a = qmat([[1], [2]])
    b = qmat([[3], [4]])
    c = a.hstack(b)
    assert c.cols == 2 and c[1, 1] == Fraction(4)
