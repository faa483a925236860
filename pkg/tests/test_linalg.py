from fractions import Fraction

import pytest

from fano22.linalg import ExactMatrix
from fano22.poly import Registry


@pytest.fixture
def reg():
    return Registry([("x", "coordinate"), ("t", "family-parameter")])


def test_rank_and_det_rational(reg):
    m = ExactMatrix(reg, [[1, 2], [3, 4]])
    assert m.rank() == 2
    assert m.det().constant_value() == -2
    singular = ExactMatrix(reg, [[1, 2], [2, 4]])
    assert singular.rank() == 1
    assert singular.det().is_zero()


def test_det_sign_under_row_pivoting(reg):
    m = ExactMatrix(reg, [[0, 1], [1, 0]])
    assert m.det().constant_value() == -1


def test_det_non_square(reg):
    with pytest.raises(ValueError):
        ExactMatrix(reg, [[1, 2, 3]]).det()


def test_polynomial_entries(reg):
    t = reg.var("t")
    m = ExactMatrix(reg, [[t, 1], [1, t]])
    assert m.det() == t ** 2 - 1
    assert m.rank() == 2


def test_kernel_rational(reg):
    m = ExactMatrix(reg, [[1, 1, 1], [0, 1, 2]])
    kern = m.kernel()
    assert len(kern) == 1
    for vec in kern:
        assert all(e.is_zero() for e in m.mul_vector(vec))


def test_kernel_with_parameters(reg):
    t = reg.var("t")
    # row (1, t): kernel spanned by (t, -1) up to content
    m = ExactMatrix(reg, [[reg.one, t]])
    kern = m.kernel()
    assert len(kern) == 1
    assert all(e.is_zero() for e in m.mul_vector(kern[0]))


def test_kernel_zero_matrix(reg):
    m = ExactMatrix(reg, [[0, 0]])
    kern = m.kernel()
    assert len(kern) == 2


def test_rank_nullity(reg):
    m = ExactMatrix(reg, [[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert m.rank() + len(m.kernel()) == m.ncols


def test_ragged_rows_rejected(reg):
    with pytest.raises(ValueError):
        ExactMatrix(reg, [[1, 2], [1]])
