from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from artifact import linalg as la
from conftest import F2, F3, QQ


def small_matrices(field, max_rows=4, max_cols=4):
    if field.p is None:
        entry = st.integers(-3, 3).map(Fraction)
    else:
        entry = st.integers(0, field.p - 1)
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(entry, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_field_parse():
    assert la.Field.parse("p=5") == la.Field.prime(5)
    assert la.Field.parse("rational") == QQ
    assert la.Field.parse("Q").p is None
    with pytest.raises(la.FieldError):
        la.Field.parse("p=4")
    with pytest.raises(la.FieldError):
        la.Field.prime(9)


def test_solve_identity_over_f2():
    r = la.solve_linear(la.identity(2, F2), [1, 0], F2)
    assert r.particular == [1, 0]
    assert r.kernel_basis == []


def test_solve_zero_map():
    r = la.solve_linear([[0, 0], [0, 0]], [0, 0], F2)
    assert r.particular == [0, 0]
    assert len(r.kernel_basis) == 2


def test_solve_inconsistent_rank_one():
    one = Fraction(1)
    r = la.solve_linear([[one, one], [one, one]], [1, 0], QQ)
    assert r.particular is None
    assert not r.consistent
    assert len(r.kernel_basis) == 1


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        la.solve_linear([[1, 0]], [1, 0], F2)


def test_solve_rejects_unrepresentable_entry():
    with pytest.raises(la.FieldError):
        la.solve_linear([[Fraction(1, 2)]], [1], F2)


def test_smith_examples():
    assert la.smith_normal_form([[2, 0], [0, 2]])[0] == [2, 2]
    assert la.smith_normal_form([[3, 1], [1, 2]])[0] == [1, 5]
    assert la.smith_normal_form([[0, 0], [0, 0]])[0] == [0, 0]


def test_determinant_and_inverse():
    M = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
    assert la.det(M, QQ) == 1
    assert la.matmul(M, la.inverse(M, QQ), QQ) == la.identity(2, QQ)
    with pytest.raises(ZeroDivisionError):
        la.inverse([[1, 1], [1, 1]], F2)


@pytest.mark.parametrize("field", [F2, F3, QQ], ids=str)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_solve_property(field, data):
    A = data.draw(small_matrices(field))
    x0 = data.draw(st.lists(st.integers(0, 2), min_size=len(A[0]), max_size=len(A[0])))
    x0 = [field(v) for v in x0]
    b = la.matvec(la.coerce(A, field), x0, field)
    r = la.solve_linear(A, b, field)
    assert r.consistent
    assert la.matvec(la.coerce(A, field), r.particular, field) == b
    for k in r.kernel_basis:
        assert not any(la.matvec(la.coerce(A, field), k, field))
    assert len(r.kernel_basis) == len(A[0]) - la.rank(A, field)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c),
                           min_size=r, max_size=r))))
def test_smith_property(M):
    diag, L, R = la.smith_normal_form(M)
    D = la.int_matmul(la.int_matmul(L, M), R)
    for i, row in enumerate(D):
        for j, x in enumerate(row):
            assert x == (diag[i] if i == j else 0)
    nz = [d for d in diag if d]
    assert all(d > 0 for d in diag if d)
    assert diag[:len(nz)] == nz
    for a, b in zip(nz, nz[1:]):
        assert b % a == 0
    assert abs(la.int_det(L)) == 1
    assert abs(la.int_det(R)) == 1
    assert len(nz) == la.int_rank(M)


@settings(max_examples=40, deadline=None)
@given(small_matrices(QQ))
def test_coordinates_round_trip(M):
    rows, _ = la.rref(M, QQ)
    if not rows:
        return
    C = la.Coordinates(rows, QQ, len(M[0]))
    for r in M:
        c = C(r)
        assert la.vcomb(c, rows, QQ, len(M[0])) == [Fraction(x) for x in r]
