import random
from fractions import Fraction

import pytest

from sasaki.catalog import instantiate
from sasaki.contact import (ACMS, NotPositiveDefiniteError, adxi_analysis, kernel_subalgebra,
                            ker_im_bracket_closed, metric_from_dalpha, nijenhuis, phi_from_pairs,
                            sasaki_dim_obstruction, transport, verify_sasakian)
from sasaki.exact import Mat, vadd, vscale, vsub
from sasaki.forms import basis_form
from sasaki.lie import change_basis


def test_h5_model_is_sasakian():
    L, S = instantiate("h5")
    rep = verify_sasakian(L, S)
    assert rep.sasakian, rep.first_failure()
    assert rep.to_json_obj()["sasakian"] is True


def test_wrong_sign_phi_is_reported():
    L, S = instantiate("h5")
    bad = ACMS(-S.Phi, S.alpha, S.xi, S.g)
    rep = verify_sasakian(L, bad)
    assert rep.almost_contact and rep.compatible
    assert rep.contact_metric is False
    assert "d alpha" in rep.counterexamples["contact_metric"]


def test_scaled_metric_fails_compatibility():
    L, S = instantiate("h5")
    rep = verify_sasakian(L, ACMS(S.Phi, S.alpha, S.xi, S.g.scale(2)))
    assert rep.compatible is False
    assert not rep.sasakian


def test_metric_must_be_positive():
    L, S = instantiate("h5")
    with pytest.raises(NotPositiveDefiniteError):
        ACMS(S.Phi, S.alpha, S.xi, -S.g)


def test_metric_from_dalpha_recovers_identity():
    L, S = instantiate("h5")
    assert metric_from_dalpha(L, S.Phi, S.alpha) == S.g


def test_phi_from_pairs():
    Phi = phi_from_pairs(3, [((1, 0, 0), (0, 1, 0))], (0, 0, 1))
    assert Phi @ (1, 0, 0) == (0, 1, 0)
    assert Phi @ (0, 1, 0) == (-1, 0, 0)
    assert Phi @ (0, 0, 1) == (0, 0, 0)


def _n_direct(L, Phi, x, y):
    v = (Phi @ Phi) @ L.bracket(x, y)
    v = vadd(v, L.bracket(Phi @ x, Phi @ y))
    v = vsub(v, Phi @ L.bracket(Phi @ x, y))
    return vsub(v, Phi @ L.bracket(x, Phi @ y))


def _n_table(N, x, y):
    n = len(x)
    out = (Fraction(0),) * n
    for i in range(n):
        for j in range(n):
            if x[i] and y[j]:
                out = vadd(out, vscale(x[i] * y[j], N[i][j]))
    return out


@pytest.mark.parametrize("id", ["g2", "g8", "caseA2", "sl2xaff", "k3"])
def test_nijenhuis_antisymmetric_and_tensorial(id):
    L, S = instantiate(id)
    N = nijenhuis(L, S.Phi)
    rng = random.Random(3)
    n = L.dim
    for i in range(n):
        for j in range(n):
            assert N[i][j] == tuple(-x for x in N[j][i])
    for _ in range(10):
        x = tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n))
        y = tuple(Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n))
        assert _n_direct(L, S.Phi, x, y) == _n_table(N, x, y)
        assert _n_direct(L, S.Phi, x, y) == tuple(-v for v in _n_direct(L, S.Phi, y, x))


def test_transport_preserves_sasakian():
    L, S = instantiate("g3")
    P = Mat.from_rows([[1, 0, 0, 0, 0], [1, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 2, 1, 0], [0, 0, 0, 0, 1]])
    L2, S2 = change_basis(L, P), transport(S, P)
    assert verify_sasakian(L2, S2).sasakian


def test_adxi_on_trivial_center():
    L, S = instantiate("g0")
    rep = adxi_analysis(L, S)
    assert rep.ok
    assert len(rep.ker_basis) + len(rep.im_basis) == 5
    assert ker_im_bracket_closed(L, S)


def test_kernel_subalgebra_is_sasakian_3dim():
    L, S = instantiate("sl2xaff")
    sub, T = kernel_subalgebra(L, S)
    assert sub.dim == 3
    assert verify_sasakian(sub, T).sasakian


def test_kernel_subalgebra_refuses_center():
    L, S = instantiate("h5")
    with pytest.raises(ValueError):
        kernel_subalgebra(L, S)


def test_obstruction_example():
    L, _ = instantiate("sl2_r2", {"a3": 1, "a4": 1, "a1": 0, "a2": 0, "a5": 0})
    alpha = basis_form(5, 2) + basis_form(5, 3)
    ob = sasaki_dim_obstruction(L, alpha)
    assert ob["dim"] == 1 and ob["obstructed"]
