from fractions import Fraction

import pytest

from sasaki.catalog import instantiate
from sasaki.exact import Mat
from sasaki.forms import (KForm, NotContactError, basis_form, ce_d, contact_volume, is_contact,
                          one_form, reeb, wedge)


def test_wedge_antisymmetry():
    a, b = basis_form(4, 0), basis_form(4, 2)
    assert wedge(a, b) == -wedge(b, a)
    assert wedge(a, a).is_zero()
    ab = wedge(a, b)
    assert ab.coeff((2, 0)) == -1


def test_evaluation_is_determinant():
    w = wedge(wedge(basis_form(3, 0), basis_form(3, 1)), basis_form(3, 2))
    u, v, x = (1, 2, 0), (0, 1, 3), (2, 0, 1)
    assert w(u, v, x) == Mat.from_cols([u, v, x]).det()


@pytest.mark.parametrize("id", ["h5", "g2", "g6", "g8", "g0", "sl2xaff", "caseA4"])
def test_d_squared_zero(id):
    L, _ = instantiate(id)
    for k in range(L.dim):
        assert ce_d(L, ce_d(L, basis_form(L.dim, k))).is_zero()
    two = wedge(basis_form(L.dim, 0), basis_form(L.dim, 1))
    assert ce_d(L, ce_d(L, two)).is_zero()


def test_h5_contact_and_reeb():
    L, S = instantiate("h5")
    a = basis_form(5, 4)
    assert ce_d(L, a) == KForm.from_dict(2, 5, {(0, 1): 2, (2, 3): 2})
    assert contact_volume(L, a) == 8
    assert reeb(L, a) == (0, 0, 0, 0, 1)


def test_non_contact():
    L, _ = instantiate("h5")
    alpha = basis_form(5, 0)
    assert not is_contact(L, alpha)
    with pytest.raises(NotContactError):
        reeb(L, alpha)


def test_pullback_matches_evaluation():
    w = KForm.from_dict(2, 3, {(0, 1): 1, (1, 2): Fraction(1, 2)})
    P = Mat.from_rows([[1, 1, 0], [0, 2, 1], [1, 0, 1]])
    pb = w.pullback(P)
    for i in range(3):
        for j in range(3):
            assert pb(tuple(1 if k == i else 0 for k in range(3)),
                      tuple(1 if k == j else 0 for k in range(3))) == w(P.col(i), P.col(j))


def test_one_form_vector():
    assert one_form([1, 0, "1/2"]).as_vector() == (1, 0, Fraction(1, 2))
