from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superschur.exactla import RatMatrix, inverse, nullspace, rank, rref, to_scalar


def naive_rank(rows):
    """Textbook Gaussian elimination on Fractions, independent of the library kernel."""
    a = [[Fraction(x) for x in r] for r in rows]
    r = 0
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, max_rows=6, max_cols=6):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    # bias towards low rank: many zeros and repeated rows
    entry = st.one_of(st.just(Fraction(0)), rationals)
    rows = [draw(st.lists(entry, min_size=c, max_size=c)) for _ in range(r)]
    if rows and draw(st.booleans()):
        k = draw(st.integers(0, len(rows) - 1))
        rows.append([2 * x for x in rows[k]])
    return RatMatrix.from_rows(rows, cols=c)


# -- examples ---------------------------------------------------------------

def test_rank_examples():
    assert rank(RatMatrix.identity(3)) == 3
    assert rank(RatMatrix.zeros(4, 7)) == 0
    assert rank(RatMatrix.from_rows([[1, 2], [2, 4]])) == 1
    assert rank(RatMatrix.zeros(0, 0)) == 0


def test_nullspace_examples():
    assert nullspace(RatMatrix.identity(3)) == []
    assert len(nullspace(RatMatrix.zeros(2, 3))) == 3
    (v,) = nullspace(RatMatrix.from_rows([[1, 1]]))
    assert v[0] == -v[1] != 0


def test_rref_examples():
    R, piv = rref(RatMatrix.identity(3))
    assert R == RatMatrix.identity(3) and piv == [0, 1, 2]
    R, piv = rref(RatMatrix.from_rows([[0, 1], [0, 2]]))
    assert R.to_rows() == [[0, 1], [0, 0]] and piv == [1]
    R, piv = rref(RatMatrix.from_rows([[2, 4]]))
    assert R.to_rows() == [[1, 2]] and piv == [0]


def test_scalars_are_canonical():
    assert to_scalar("6/4") == Fraction(3, 2)
    M = RatMatrix.from_rows([["2/4", 3]])
    assert M[0, 0] == Fraction(1, 2)
    with pytest.raises(TypeError):
        to_scalar(True)


def test_inverse_roundtrip():
    M = RatMatrix.from_rows([[2, 1], [1, 1]])
    assert M @ inverse(M) == RatMatrix.identity(2)
    with pytest.raises(ZeroDivisionError):
        inverse(RatMatrix.from_rows([[1, 2], [2, 4]]))


# -- properties -------------------------------------------------------------

@given(matrices())
def test_rank_matches_naive_elimination(M):
    assert rank(M) == naive_rank(M.to_rows())


@given(matrices())
def test_rank_of_transpose(M):
    assert rank(M) == rank(M.transpose())


@given(matrices())
def test_nullspace_vectors_are_killed(M):
    basis = nullspace(M)
    assert len(basis) == M.cols - rank(M)
    for v in basis:
        assert all(x == 0 for x in M.apply(v))
    if basis:
        assert rank(RatMatrix.from_rows(basis, cols=M.cols)) == len(basis)


@given(matrices())
def test_rref_idempotent_and_rank_preserving(M):
    R, piv = rref(M)
    assert rank(R) == rank(M) == len(piv)
    R2, piv2 = rref(R)
    assert R2 == R and piv2 == piv
    for k, c in enumerate(piv):
        assert R[k, c] == 1
        assert all(R[i, c] == 0 for i in range(R.rows) if i != k)
