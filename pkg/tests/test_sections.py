from fractions import Fraction

import pytest

from fano22.constants import PaperConstants
from fano22.poly import Registry
from fano22.sections import (
    Grading,
    SectionSpace,
    UnboundedDegreeCone,
    monomial_basis,
    restricted_order_subspace,
    torus_weight,
    weight_decompose,
)


@pytest.fixture
def consts():
    return PaperConstants()


def test_multidegree(consts):
    grading = consts.f3_grading()
    reg = consts.reg_f3
    assert grading.multidegree(consts.upsilon_p()) == (1, 1)
    assert grading.multidegree(reg.var("x0") + reg.var("y0")) is None
    assert grading.multidegree(reg.zero) is None


def test_bidegree_11_basis_has_7_monomials(consts):
    basis = monomial_basis(
        consts.reg_f3, consts.f3_grading(), (1, 1), ["x0", "x1", "y0", "y1"]
    )
    assert len(basis) == 7
    grading = consts.f3_grading()
    assert all(grading.multidegree(m) == (1, 1) for m in basis)


def test_unbounded_cone_detected():
    reg = Registry([("x", "coordinate"), ("y", "coordinate")])
    grading = Grading(reg, {"x": (1,), "y": (-1,)})
    with pytest.raises(UnboundedDegreeCone):
        monomial_basis(reg, grading, (0,))


def test_torus_weight(consts):
    reg = consts.reg_f3
    m = reg.var("x0") ** 4 * reg.var("y0")
    assert torus_weight(m, consts.f3_torus_weights()) == 5
    with pytest.raises(ValueError):
        torus_weight(m + reg.var("x0"), consts.f3_torus_weights())


def test_section_space_coords_and_contains(consts):
    space = consts.o11_space()
    u = consts.upsilon_p()
    coords = space.coords(u)
    assert coords is not None
    assert space.recombine(coords) == u
    assert not space.contains(consts.reg_f3.var("x0"))


def test_coords_with_parameter_coefficients(consts):
    space = consts.o11_space()
    coords = space.coords(consts.upsilon_t())
    assert coords is not None
    v = consts.reg_f3.var("v")
    assert any(c == v for c in coords)


def test_dependent_basis_rejected(consts):
    reg = consts.reg_f3
    with pytest.raises(ValueError):
        SectionSpace(reg, [reg.var("x0"), reg.var("x0").scale(2)])


def test_inhomogeneous_basis_rejected(consts):
    reg = consts.reg_f3
    with pytest.raises(ValueError):
        SectionSpace(reg, [reg.var("x0") + reg.var("y0")], (1, 0),
                     consts.f3_grading())


def test_weight_decompose(consts):
    space = consts.o11_space()
    parts = weight_decompose(space, consts.f3_torus_weights())
    assert sum(p.dim for p in parts.values()) == space.dim
    assert sorted(parts) == [0, 1, 2, 3, 4, 5]
    assert parts[1].dim == 2


def test_restricted_order_subspace_simple():
    reg = Registry([("t0", "curve-parameter"), ("t1", "curve-parameter")])
    t0, t1 = reg.var("t0"), reg.var("t1")
    space = SectionSpace(reg, [t0 ** 2, t0 * t1, t1 ** 2])
    sub = restricted_order_subspace(
        space, {}, [((Fraction(0), Fraction(1)), 1)], ("t0", "t1")
    )
    # vanishing at [0:1] kills the pure t1^2 direction
    assert sub.dim == 2
    assert sub.contains(t0 ** 2) and sub.contains(t0 * t1)
    assert not sub.contains(t1 ** 2)


def test_restricted_order_general_point():
    reg = Registry([("t0", "curve-parameter"), ("t1", "curve-parameter")])
    t0, t1 = reg.var("t0"), reg.var("t1")
    space = SectionSpace(reg, [t0 ** 2, t0 * t1, t1 ** 2])
    sub = restricted_order_subspace(
        space, {}, [((Fraction(1), Fraction(1)), 2)], ("t0", "t1")
    )
    # double vanishing at [1:1] leaves the square (t1 - t0)^2
    assert sub.dim == 1
    assert sub.contains((t1 - t0) ** 2)
