from fractions import Fraction

import pytest
import sympy as sp

from oracles import ricci_oracle, table_from_differentials, table_of, to_sympy
from sasaki.catalog import instantiate
from sasaki.curvature import (alpha_einstein, bianchi_failures, check_sasaki_curvature_identity,
                              curvature, levi_civita, metric_failures, pair_symmetry_failures, ricci,
                              torsion_failures)
from sasaki.exact import Mat

ORACLE_IDS = [("h5", {}), ("g2", {}), ("g6tau", {"tau": "1/2"}), ("g8", {"delta": 2}),
              ("k3", {"lam": "-1/2", "mu": -2}), ("caseA1", {"c3": 1}), ("caseB2", {}),
              ("g0", {}), ("su2", {}), ("affxR", {})]


@pytest.mark.parametrize("id,params", ORACLE_IDS)
def test_ricci_matches_sympy(id, params):
    L, S = instantiate(id, params)
    assert to_sympy(ricci(L, S.g)) == ricci_oracle(table_of(L), to_sympy(S.g))


def test_nondiagonal_metric_oracle():
    L, _ = instantiate("g3")
    G = Mat.from_rows([[2, 1, 0, 0, 0], [1, 2, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 3, 1], [0, 0, 0, 1, 1]])
    assert to_sympy(ricci(L, G)) == ricci_oracle(table_of(L), to_sympy(G))


def test_case_a1_ricci_symbolic():
    # one-parameter family with a1 = -2/c3, f4 = 0, identity metric
    c3 = sp.Symbol("c3", nonzero=True)
    a1 = -2 / c3
    des = [{(0, 1): a1}, {}, {(3, 4): -1, (0, 3): c3}, {(2, 4): 1, (0, 2): -c3}, {(0, 1): 2, (2, 3): 2}]
    R = ricci_oracle(table_from_differentials(des), sp.eye(5))
    assert sp.simplify(R[0, 0] + 2 + 4 / c3 ** 2) == 0
    L, S = instantiate("caseA1", {"c3": 2})
    assert ricci(L, S.g)[0, 0] == Fraction(-3)


@pytest.mark.parametrize("id", ["h5", "g5", "g7", "caseA3", "g0", "sl2xaff"])
def test_connection_is_levi_civita(id):
    L, S = instantiate(id)
    c = levi_civita(L, S.g)
    assert not torsion_failures(L, c)
    assert not metric_failures(L, c, S.g)


@pytest.mark.parametrize("id", ["h5", "g4", "g6", "caseB4", "su2xaff"])
def test_curvature_symmetries(id):
    L, S = instantiate(id)
    R = curvature(L, levi_civita(L, S.g))
    assert not pair_symmetry_failures(L, S.g, R)
    assert not bianchi_failures(L, S.g, R)
    assert ricci(L, S.g).is_symmetric()
    assert check_sasaki_curvature_identity(L, S)


def test_alpha_einstein_values():
    L, S = instantiate("h5")
    assert alpha_einstein(L, S) == (Fraction(-2), Fraction(6))
    L, S = instantiate("g2")
    assert alpha_einstein(L, S) is None


def test_curvature_identity_detects_non_sasakian():
    L, S = instantiate("h5")
    from sasaki.contact import ACMS
    bad = ACMS(S.Phi, S.alpha, S.xi, Mat.from_rows([[1 if i == j else 0 for j in range(5)] for i in range(4)]
                                                   + [[0, 0, 0, 0, 2]]))
    assert not check_sasaki_curvature_identity(L, bad)
