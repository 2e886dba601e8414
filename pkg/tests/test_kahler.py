import pytest

from sasaki.catalog import instantiate
from sasaki.contact import verify_sasakian
from sasaki.exact import Mat
from sasaki.kahler import (KahlerStruct, central_extension, kahler_equivalence_witness, sasaki_quotient,
                           verify_kahler)
from sasaki.lie import change_basis


@pytest.mark.parametrize("id", ["h5", "g2", "g3", "g5", "g7"])
def test_quotient_then_extension(id):
    L, S = instantiate(id)
    h, K = sasaki_quotient(L, S)
    assert verify_kahler(h, K).kahler
    L2, S2 = central_extension(h, K)
    assert L2 == L
    assert verify_sasakian(L2, S2).sasakian


def test_quotient_of_h5_is_abelian():
    L, S = instantiate("h5")
    h, K = sasaki_quotient(L, S)
    assert h.is_abelian()
    assert K.J @ K.J == -Mat.identity(4)


def test_quotient_needs_center():
    L, S = instantiate("g0")
    with pytest.raises(ValueError):
        sasaki_quotient(L, S)


def test_broken_kahler_is_reported():
    L, S = instantiate("g2")
    h, K = sasaki_quotient(L, S)
    rep = verify_kahler(h, KahlerStruct(-K.J, K.omega, K.g))
    assert not rep.kahler
    assert "compatible" in rep.first_failure()
    with pytest.raises(ValueError):
        central_extension(h, KahlerStruct(-K.J, K.omega, K.g))


def test_equivalence_witness():
    L, S = instantiate("g4")
    h, K = sasaki_quotient(L, S)
    I = Mat.identity(4)
    assert kahler_equivalence_witness(h, K, h, K, I)
    P = Mat.from_rows([[2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert not kahler_equivalence_witness(h, K, change_basis(h, P), K, P)
