"""Graded algebra core: construction, products, integration, maps, tensor."""

from fractions import Fraction

import pytest

from lefalg.constructors import projective_space, truncated_polynomial_algebra
from lefalg.linalg import Matrix
from lefalg.ring import (GradedAlgebra, RingMap, apply_ring_map, integrate,
                         multiply, pairing_matrix, relabeled, render_element,
                         tensor_product, verify_algebra, verify_ring_map)


@pytest.fixture(scope="module")
def p2():
    return projective_space(2)


@pytest.fixture(scope="module")
def p1xp1():
    p1 = projective_space(1)
    return tensor_product(p1, p1)


def test_rejects_empty_or_fat_degree_zero():
    with pytest.raises(ValueError):
        GradedAlgebra("bad", [[], ["x"]], {}, [1])
    with pytest.raises(ValueError):
        GradedAlgebra("bad", [["1", "1'"]], {}, [1, 1])


def test_rejects_duplicate_labels():
    with pytest.raises(ValueError):
        truncated_polynomial_algebra("dup", [("x", 1), ("x", 1)])


def test_element_arithmetic(p2):
    h = p2.by_label("h")
    two_h = h + h
    assert two_h == 2 * h == h * 2
    assert (two_h - h) == h
    assert (-h).coords == (Fraction(-1),)
    assert (h * Fraction(1, 2)).coords == (Fraction(1, 2),)
    with pytest.raises(ValueError):
        h + p2.unit()  # degree mismatch


def test_elements_of_different_algebras_do_not_mix(p2):
    other = projective_space(2)
    # same structure but a distinct instance is fine; a different algebra is not
    q = projective_space(3)
    with pytest.raises(ValueError):
        p2.by_label("h") + q.by_label("h")
    assert other.by_label("h").coords == p2.by_label("h").coords


def test_products_truncate_above_top(p2):
    h = p2.by_label("h")
    h2 = h * h
    assert h2.coords == (Fraction(1),)
    top_plus = h2 * h2  # degree 4 > 2
    assert top_plus.is_zero and top_plus.above_top
    assert integrate(top_plus) == 0
    # above-top zeros absorb further multiplication
    assert (top_plus * h).is_zero


def test_power_operator(p2):
    h = p2.by_label("h")
    assert h ** 0 == p2.unit()
    assert h ** 2 == h * h
    assert (h ** 3).is_zero
    with pytest.raises(ValueError):
        h ** -1


def test_integration_picks_top_class(p2):
    h = p2.by_label("h")
    assert integrate(h * h) == 1
    with pytest.raises(ValueError):
        integrate(h)  # not top degree


def test_render_element(p2):
    h = p2.by_label("h")
    assert render_element(3 * h) == "3*h"
    assert render_element(h - 2 * h) == "-h"
    assert render_element(p2.zero(1)) == "0"
    assert render_element(2 * p2.unit()) == "2"
    assert render_element(Fraction(1, 2) * h) == "1/2*h"


def test_pairing_matrix_p2(p2):
    m = pairing_matrix(p2, 1)
    assert m == Matrix.from_rows([[1]])
    assert pairing_matrix(p2, 0) == Matrix.from_rows([[1]])


def test_verify_algebra_passes_on_good_ring(p2):
    assert verify_algebra(p2).ok


def test_verify_algebra_flags_degenerate_integration():
    # x with x^2 = 0 and integration reading the x coefficient is fine,
    # but zero integration kills the pairing
    a = GradedAlgebra("degen", [["1"], ["x"]],
                      {(0, 0): [[(1,)]], (0, 1): [[(1,)]],
                       (1, 0): [[(1,)]]},
                      [0])
    rep = verify_algebra(a)
    assert not rep.ok
    assert any("integration" in v or "pairing" in v for v in rep.violations)


def test_verify_algebra_flags_broken_associativity():
    # tamper with P1 x P2: kill x * y^2 (but keep x*y) so that
    # (x*y)*y != x*(y*y) while commutativity still holds
    t = tensor_product(projective_space(1), projective_space(2))
    products = {k: [list(row) for row in tab] for k, tab in t.products.items()}
    i = t.basis[1].index("h⊗1")
    j = t.basis[2].index("1⊗h^2")
    products[(1, 2)][i][j] = (Fraction(0),)
    products[(2, 1)][j][i] = (Fraction(0),)
    a = GradedAlgebra("warped", t.basis, products, t.integration)
    rep = verify_algebra(a)
    assert not rep.ok
    assert any("associativity" in v for v in rep.violations)


def test_verify_algebra_flags_broken_commutativity():
    t = tensor_product(projective_space(1), projective_space(2))
    products = {k: [list(row) for row in tab] for k, tab in t.products.items()}
    i = t.basis[1].index("h⊗1")
    j = t.basis[2].index("1⊗h^2")
    products[(1, 2)][i][j] = (Fraction(-1),)  # mirror left intact
    a = GradedAlgebra("warped2", t.basis, products, t.integration)
    rep = verify_algebra(a)
    assert any("commutativity" in v for v in rep.violations)


def test_tensor_product_dims_and_labels(p1xp1):
    assert p1xp1.dims == (1, 2, 1)
    assert p1xp1.basis[1] == ("h⊗1", "1⊗h")
    assert p1xp1.basis[2] == ("h⊗h",)
    assert p1xp1.name == "P1xP1"


def test_tensor_product_structure(p1xp1):
    x = p1xp1.by_label("h⊗1")
    y = p1xp1.by_label("1⊗h")
    assert (x * x).is_zero
    assert (y * y).is_zero
    assert render_element(x * y) == "h⊗h"
    assert integrate(x * y) == 1
    assert pairing_matrix(p1xp1, 1) == Matrix.from_rows([[0, 1], [1, 0]])
    assert verify_algebra(p1xp1).ok


def test_tensor_product_betti_numbers_convolve():
    a = projective_space(2)
    b = projective_space(3)
    t = tensor_product(a, b)
    expected = tuple(sum(a.dim(i) * b.dim(k - i) for i in range(k + 1))
                     for k in range(t.top_degree + 1))
    assert t.dims == expected
    assert verify_algebra(t).ok


def test_tensor_is_associative_up_to_labels():
    p1 = projective_space(1)
    left = tensor_product(tensor_product(p1, p1), p1)
    right = tensor_product(p1, tensor_product(p1, p1))
    assert left.dims == right.dims == (1, 3, 3, 1)
    # structure constants agree after the obvious relabeling
    relab = relabeled(right, left.basis, name=left.name)
    assert relab.products == left.products
    assert relab.integration == left.integration


def test_ring_map_functoriality():
    p3, p1 = projective_space(3), projective_space(1)
    # restriction h -> h: matrices are identity in shared degrees
    mats = [Matrix.identity(1), Matrix.identity(1)]
    f = RingMap(p3, p1, mats)
    assert verify_ring_map(f).ok
    h3 = p3.by_label("h")
    assert f(h3) == p1.by_label("h")
    # degree above the target top collapses to zero
    assert apply_ring_map(f, p3.by_label("h^2")).is_zero


def test_ring_map_detects_crushed_relation():
    # P1 -> P2 sending h to h is NOT a ring map: h^2 = 0 upstairs but the
    # pair (1,1) lands on h^2 != 0 downstairs. The checker must look at
    # degree sums beyond the source top to see it.
    p1, p2 = projective_space(1), projective_space(2)
    f = RingMap(p1, p2, [Matrix.identity(1), Matrix.identity(1)])
    rep = verify_ring_map(f)
    assert not rep.ok


def test_ring_map_shape_validation():
    p3, p1 = projective_space(3), projective_space(1)
    with pytest.raises(ValueError):
        RingMap(p3, p1, [Matrix.identity(1)])  # missing degree 1
    with pytest.raises(ValueError):
        RingMap(p3, p1, [Matrix.identity(1), Matrix.identity(2)])


def test_relabeled_checks_profile(p2):
    with pytest.raises(ValueError):
        relabeled(p2, [["1"], ["x"]])
    r = relabeled(p2, [["1"], ["t"], ["t^2"]], name="retagged")
    assert r.by_label("t") * r.by_label("t") == r.by_label("t^2")


def test_structural_equality(p2):
    again = projective_space(2)
    assert p2 == again
    assert hash(p2) == hash(again)
    assert p2 != projective_space(3)
