import json
from fractions import Fraction

import pytest

from sasaki.catalog import (Catalog, CatalogError, DomainError, LatticePoint, UnknownEntryError,
                            WitnessError, alpha_einstein_filter, case_algebra, case_constraints,
                            classification_filter, d_squared_zero, evaluate, full_verify,
                            g3_lattice_product, instantiate, lattice_report,
                            witness_suite)
from sasaki.exact import Mat
from sasaki.lie import center, invariant_profile, is_unimodular, jacobi_defect, verify_isomorphism


def test_evaluate():
    assert evaluate("-2/c3", {"c3": Fraction(4)}) == Fraction(-1, 2)
    assert evaluate("a**2 + 1", {"a": Fraction(3)}) == 10
    assert evaluate("d > 0", {"d": Fraction(1)}) is True
    with pytest.raises(CatalogError):
        evaluate("__import__('os')", {})
    with pytest.raises(CatalogError):
        evaluate("x", {})


def test_unknown_entry():
    with pytest.raises(UnknownEntryError):
        instantiate("g9")


def test_domain_violation_names_constraint():
    with pytest.raises(DomainError, match="delta>0"):
        instantiate("g8", {"delta": 0})
    with pytest.raises(CatalogError):
        instantiate("g8", {"gamma": 1})


def test_instantiate_h5():
    L, S = instantiate("h5")
    assert L.bracket_basis(0, 1) == (0, 0, 0, 0, -2)
    assert S.xi == (0, 0, 0, 0, 1)


def test_every_sample_verifies(cat):
    for e in cat:
        for inst in cat.instances(e.id):
            rep = full_verify(e.id, inst.params, cat)
            assert rep.ok, (e.id, inst.params_json(), [c for c in rep.checks if c.status == "fail"])


def test_case_constraints_examples():
    assert all(r.value == 0 for r in case_constraints("A1", {"c3": 1}))
    res = {r.name: r.value for r in case_constraints("caseA1", {"c3": 1, "a1": 0})}
    assert res["a1*c3 - b1*f4 + 2"] == 2
    assert res["a1*c3 + 2"] == 2
    assert all(r.value == 0 for r in case_constraints("A2", {"a1": 1, "b1": 1, "c3": 0, "f4": 2}))


def test_case_constraints_rejects_unknown_constant():
    with pytest.raises(CatalogError):
        case_constraints("A1", {"z9": 1})


def test_case_algebra_broken_by_perturbation():
    L = case_algebra("A1", {"a1": -2, "b1": 0, "c2": 0, "c3": 1, "c4": 0, "f4": 0})
    assert d_squared_zero(L) and not jacobi_defect(L)
    L = case_algebra("A1", {"a1": -1, "b1": 0, "c2": 0, "c3": 1, "c4": 0, "f4": 0})
    assert not d_squared_zero(L) and jacobi_defect(L)


def test_witness_suite_passes(cat):
    res = witness_suite(cat)
    assert res and all(r.ok for r in res)
    assert {r.target for r in res} >= {"g1", "g2", "g3", "g4", "g5", "g6", "g7", "g8", "gt", "g0",
                                       "sl2xaff", "su2xaff", "affxR_std", "h5"}


def test_unscaled_g6_basis_fails():
    # E1 = 2 e1 + tau e5 (no factor 1/2) is not an isomorphism onto g6
    tau = Fraction(1)
    L, _ = instantiate("g6tau", {"tau": tau})
    G6, _ = instantiate("g6")
    P = Mat.identity(5).to_rows()
    P[0][0], P[4][0] = 2, tau
    assert not verify_isomorphism(L, G6, Mat.from_rows(P))



def test_broken_witness_raises(tmp_path):
    from sasaki.catalog import _default_path
    doc = json.loads(_default_path().read_text())
    e = next(x for x in doc["entries"] if x["id"] == "k5")
    e["witnesses"][0]["columns"][4] = ["0", "0", "0", "0", "1"]
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(doc))
    with pytest.raises(WitnessError, match="k5"):
        witness_suite(Catalog.load(p))


def test_catalog_env_override(tmp_path, monkeypatch):
    from sasaki.catalog import _default_path
    doc = json.loads(_default_path().read_text())
    doc["entries"] = [x for x in doc["entries"] if x["id"] == "h5"]
    p = tmp_path / "small.json"
    p.write_text(json.dumps(doc))
    monkeypatch.setenv("SASAKI_CATALOG", str(p))
    assert Catalog.load().ids() == ["h5"]


def test_lattice_examples():
    a = LatticePoint.of(1, 1, 0, 0, 1)
    b = LatticePoint.of(0, 0, 1, 0, 0)
    assert g3_lattice_product(a, b) == LatticePoint.of(1, 1, 1, 1, 1)
    e = LatticePoint.of(0, 0, 0, 0, 0)
    assert g3_lattice_product(e, a) == a == g3_lattice_product(a, e)
    with pytest.raises(TypeError):
        LatticePoint((1, 2, 3, 4, 0.5))
    rep = lattice_report(30, seed=11)
    assert rep["ok"] and rep["first_failure"] is None


def test_profiles_separate_center_list(cat):
    ids = ["g1", "g2", "g3", "g4", "g5", "g6"]
    profs = [invariant_profile(cat.instances(i)[0].algebra) for i in ids]
    assert len(set(profs)) == 6
    g7 = [invariant_profile(x.algebra) for x in cat.instances("g7")]
    g8 = [invariant_profile(x.algebra) for x in cat.instances("g8")]
    assert not (set(g7) | set(g8)) & set(profs)


def test_classification_filters(cat):
    assert classification_filter(lambda L: is_unimodular(L) and bool(center(L)), cat, "center") == ["g1", "g3"]
    assert classification_filter(lambda L: invariant_profile(L).nilpotent, cat) == ["g1"]


def test_alpha_einstein_filter_shape(cat):
    hits = alpha_einstein_filter(cat, ["h5", "g2"])
    assert [h[0] for h in hits] == ["h5"]
    assert hits[0][2:] == (Fraction(-2), Fraction(6))
