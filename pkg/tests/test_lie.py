from fractions import Fraction

import pytest
import sympy as sp

from oracles import jacobi_holds, table_of
from sasaki.catalog import instantiate
from sasaki.exact import Mat
from sasaki.lie import (LieAlg, NotADerivationError, abelian, center, change_basis, derivation_dim,
                        direct_sum, invariant_profile, jacobi_defect, killing_signature,
                        semidirect_product, series_dims, verify_isomorphism)

E = Fraction


def heis3():
    return LieAlg.from_dict(3, {(0, 1): (0, 0, 1)})


def test_differentials_sign_convention():
    # de^3 = -e^{12} means [e1, e2] = e3
    L = LieAlg.from_differentials([{}, {}, {(0, 1): -1}])
    assert L == heis3()
    assert L.differentials() == [{}, {}, {(0, 1): Fraction(-1)}]


def test_jacobi_defect_reports_triple():
    bad = LieAlg.from_dict(3, {(0, 1): (0, 0, 1), (1, 2): (0, 1, 0), (0, 2): (1, 0, 0)})
    assert jacobi_defect(bad)
    assert not jacobi_holds(table_of(bad))
    assert not jacobi_defect(heis3())


def test_center_and_series():
    H = heis3()
    assert center(H) == [(0, 0, 1)]
    d = series_dims(H)
    assert d["derived_dims"] == [3, 1, 0]
    assert d["lower_central_dims"] == [3, 1, 0]


def test_killing_signatures(cat):
    sl2, _ = instantiate("sl2")
    su2, _ = instantiate("su2")
    assert killing_signature(sl2) == (2, 1, 0)
    assert killing_signature(su2) == (0, 3, 0)


def _der_oracle(L):
    n = L.dim
    D = sp.Matrix(n, n, lambda i, j: sp.Symbol(f"d{i}{j}"))
    c = table_of(L)
    eqs = []
    for i in range(n):
        for j in range(i + 1, n):
            ei, ej = sp.eye(n)[:, i], sp.eye(n)[:, j]
            br = lambda u, v: sp.Matrix([sum(u[a] * v[b] * c[a][b][k] for a in range(n) for b in range(n))
                                         for k in range(n)])
            eqs += list(D * br(ei, ej) - br(D * ei, ej) - br(ei, D * ej))
    A, _ = sp.linear_eq_to_matrix([e for e in eqs if e != 0] or [sp.Integer(0)], list(D))
    return n * n - A.rank()


@pytest.mark.parametrize("id", ["h5", "g1", "g3", "g5", "g7", "sl2", "h3"])
def test_derivation_dim_vs_oracle(id):
    L, _ = instantiate(id)
    assert derivation_dim(L) == _der_oracle(L)


def test_derivation_dim_heisenberg5():
    L, _ = instantiate("h5")
    assert derivation_dim(L) == 15


def test_change_basis_roundtrip():
    L, _ = instantiate("g3")
    P = Mat.from_rows([[1, 1, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 2, 0, 0], [0, 0, 0, 1, 0], [1, 0, 0, 0, 1]])
    L2 = change_basis(L, P)
    assert verify_isomorphism(L, L2, P)
    assert verify_isomorphism(L2, L, P.inverse())
    assert not jacobi_defect(L2)
    assert invariant_profile(L2) == invariant_profile(L)


def test_verify_isomorphism_rejects_singular():
    L = heis3()
    assert not verify_isomorphism(L, L, Mat.zeros(3, 3))


def test_semidirect_checks_derivation():
    h = abelian(2)
    D = Mat.from_rows([[1, 0], [0, -1]])
    L = semidirect_product(h, [D])
    assert L.bracket_basis(0, 1) == (0, 1, 0)
    with pytest.raises(NotADerivationError):
        semidirect_product(heis3(), [Mat.from_rows([[1, 0, 0], [0, 0, 0], [0, 0, 0]])])


def test_direct_sum_profile():
    L = direct_sum(heis3(), abelian(2))
    assert L.dim == 5
    assert len(center(L)) == 3


def test_json_roundtrip():
    L, _ = instantiate("g7", {"delta": "1/2"})
    assert LieAlg.from_json(L.to_json()) == L
    p = invariant_profile(L)
    assert type(p).from_json_obj(p.to_json_obj()) == p


def test_bad_bracket_index():
    with pytest.raises(ValueError):
        LieAlg(3, ((1, 0, (0, 0, 1)),))
