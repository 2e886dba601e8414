"""Write ``src/sasaki/data/catalog.json`` and ``ricci_goldens.json``.

Everything numeric is an expression string over the entry's parameters,
evaluated exactly by :mod:`sasaki.catalog`.  Witness matrices are given by
columns (the new basis vectors written in the old basis); those marked
``"provenance": "oracle"`` came out of ``tools/find_witness.py`` or the
centralizer computation for the direct products.

    python3 tools/build_catalog.py
"""
from __future__ import annotations

import json
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "sasaki" / "data"


def de(*pairs):
    """de("12", "1", "34", "-delta") -> {"12": "1", "34": "-delta"}"""
    return {k: str(v) for k, v in zip(pairs[::2], pairs[1::2])}


def br(i, j, **coeffs):
    """bracket [e_i, e_j] = sum coeffs; keys like e3="1/2"."""
    return [i, j, {k[1:]: str(v) for k, v in coeffs.items()}]


def sample(**kw):
    return {k: str(v) for k, v in kw.items()}


def cols(*vectors):
    return [[str(x) for x in v] for v in vectors]


ENTRIES = []


def entry(id, **kw):
    e = {"id": id}
    e.update(kw)
    ENTRIES.append(e)


STD_PHI = [[1, 2, "1"], [3, 4, "1"]]

# --- models and the non-trivial-center list ---------------------------------------

entry("h5", title="h5 (Heisenberg)", kind="sasakian", iso="h5",
      de=[{}, {}, {}, {}, de("12", 2, "34", 2)],
      structure={"phi": STD_PHI, "xi": 5, "metric": "identity"},
      witnesses=[{"target": "g1", "columns": cols([1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0],
                                                   [0, 0, 0, 1, 0], [0, 0, 0, 0, 2])}],
      note="rescaled so that g is the identity")

entry("g1", title="g1 = (0,0,0,0,e12+e34)", kind="sasakian", iso="h5",
      de=[{}, {}, {}, {}, de("12", 1, "34", 1)],
      structure={"phi": STD_PHI, "xi": 5, "metric": "dalpha"},
      witnesses=[{"target": "h5", "columns": cols([1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0],
                                                  [0, 0, 0, 1, 0], [0, 0, 0, 0, "1/2"])}])

entry("g2", title="g2 = aff(R) x h3", kind="sasakian", iso="g2",
      de=[{}, de("12", -1), {}, {}, de("12", 1, "34", 1)],
      structure={"phi": STD_PHI, "xi": 5, "metric": "dalpha"})

entry("g3", title="g3 = R x| (h3 x R)", kind="sasakian", iso="g3",
      de=[{}, de("13", -1), de("12", 1), {}, de("14", 1, "23", 1)],
      structure={"phi": [[1, 4, "1"], [2, 3, "1"]], "xi": 5, "metric": "dalpha"})

entry("g4", title="g4 = aff(R) x aff(R) x R", kind="sasakian", iso="g4",
      de=[{}, de("12", -1), {}, de("34", -1), de("12", 1, "34", 1)],
      structure={"phi": STD_PHI, "xi": 5, "metric": "dalpha"})

entry("g5", title="g5 = R x (R x| h3)", kind="sasakian", iso="g5",
      de=[de("14", "1/2"), de("24", "1/2"), de("12", -1, "34", 1), {}, de("12", 1, "34", -1)],
      structure={"phi": [[1, 2, "1"], [4, 3, "1"]], "xi": 5, "metric": "dalpha"})

entry("g6tau", title="g6^tau", kind="sasakian", iso="g6",
      params=[{"name": "tau", "default": "1", "samples": ["1/2", "1", "2"]}],
      constraints=[{"name": "tau>0", "expr": "tau > 0"}],
      de=[de("14", 2), de("24", -1), de("12", -1, "34", 1), {}, de("14", "tau", "23", 1)],
      structure={"phi": [[2, 3, "1"], [4, 1, "-2"]], "xi": 5, "metric": "dalpha"},
      witnesses=[{"target": "g6",
                  "columns": cols([1, 0, 0, 0, "tau/2"], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0],
                                  [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]),
                  "provenance": "oracle",
                  "note": "E1 = e1 + (tau/2) e5; 2 e1 + tau e5 alone needs E3, E5 rescaled too"}])

entry("g6", title="g6 = R x| n4", kind="sasakian", iso="g6",
      de=[de("14", 2), de("24", -1), de("12", -1, "34", 1), {}, de("23", 1)],
      structure={"transport": {"from": "g6tau", "params": {"tau": "1"}, "chain": ["g6"]}},
      note="e^5 is not a contact form here; the structure is carried over from g6^1")

entry("g7", title="g7^delta", kind="sasakian", iso="g7",
      params=[{"name": "delta", "default": "1", "samples": ["1/2", "1", "2"]}],
      constraints=[{"name": "delta>0", "expr": "delta > 0"}],
      de=[de("14", "delta/2", "24", 1), de("14", -1, "24", "delta/2"), de("12", -1, "34", "delta"), {},
          de("12", 1, "34", "-delta")],
      structure={"phi": [[1, 2, "1"], [4, 3, "1"]], "xi": 5, "metric": "dalpha"})

entry("g8", title="g8^delta", kind="sasakian", iso="g8",
      params=[{"name": "delta", "default": "1", "samples": ["1/2", "1", "2"]}],
      constraints=[{"name": "delta>0", "expr": "delta > 0"}],
      de=[de("14", 1), de("34", "delta"), de("24", "-delta"), {}, de("14", 1, "23", 1)],
      structure={"phi": [[4, 1, "1"], [3, 2, "1"]], "phi_sign": -1, "xi": 5, "metric": "dalpha"},
      note="Phi is minus the second table endomorphism; the first one gives an indefinite metric")

# --- Kähler central extensions ------------------------------------------------------

NEG = [{"name": "lam<0", "expr": "lam < 0"}, {"name": "mu<0", "expr": "mu < 0"}]
LM = [{"name": "lam", "default": "-1"}, {"name": "mu", "default": "-1"}]
LM_SAMPLES = [sample(lam=-1, mu=-1), sample(lam="-1/2", mu=-2), sample(lam=-2, mu="-1/2")]


def diag_cols(*d):
    return cols(*[[d[i] if j == i else 0 for j in range(5)] for i in range(5)])


entry("k1", title="k1", kind="sasakian", iso="h5", params=LM, samples=LM_SAMPLES, constraints=NEG,
      de=[{}, {}, {}, {}, de("12", "lam", "34", "mu")],
      structure={"phi": STD_PHI, "phi_sign": -1, "xi": 5, "metric": "dalpha"},
      witnesses=[{"target": "g1", "columns": diag_cols("1/lam", 1, "1/mu", 1, 1), "provenance": "oracle"}])

entry("k2", title="k2", kind="sasakian", iso="g2", params=LM, samples=LM_SAMPLES, constraints=NEG,
      de=[{}, de("12", -1), {}, {}, de("12", "lam", "34", "mu")],
      structure={"phi": STD_PHI, "phi_sign": -1, "xi": 5, "metric": "dalpha"},
      witnesses=[{"target": "g2", "columns": diag_cols(1, "1/lam", "1/mu", 1, 1), "provenance": "oracle"}])

entry("k3", title="k3", kind="sasakian", iso="g3", params=LM, samples=LM_SAMPLES, constraints=NEG,
      de=[{}, de("13", -1), de("12", 1), {}, de("14", "lam", "23", "mu")],
      structure={"phi": [[1, 4, "1"], [2, 3, "1"]], "phi_sign": -1, "xi": 5, "metric": "dalpha"},
      witnesses=[{"target": "g3", "columns": diag_cols(-1, -1, 1, "mu/lam", "-mu"), "provenance": "oracle"}])

entry("k4", title="k4", kind="sasakian", iso="g4", params=LM, samples=LM_SAMPLES, constraints=NEG,
      de=[{}, de("12", -1), {}, de("34", -1), de("12", "lam", "34", "mu")],
      structure={"phi": STD_PHI, "phi_sign": -1, "xi": 5, "metric": "dalpha"},
      witnesses=[{"target": "g4", "columns": diag_cols(1, "1/lam", 1, "1/mu", 1), "provenance": "oracle"}])

entry("k5", title="k5", kind="sasakian", iso="g5",
      params=[{"name": "lam", "default": "-1", "samples": ["-1/2", "-1", "-2"]}],
      constraints=[{"name": "lam<0", "expr": "lam < 0"}],
      de=[de("14", "1/2"), de("24", "1/2"), de("12", -1, "34", 1), {}, de("12", "lam", "34", "-lam")],
      structure={"phi": [[1, 2, "1"], [4, 3, "1"]], "phi_sign": -1, "xi": 5, "metric": "dalpha"},
      witnesses=[{"target": "g5", "columns": diag_cols(1, 1, 1, 1, "lam"), "provenance": "oracle"}])

entry("k6", title="k6", kind="sasakian", iso="g6", params=LM, samples=LM_SAMPLES, constraints=NEG,
      de=[de("14", 2), de("24", -1), de("12", -1, "34", 1), {}, de("14", "lam", "23", "mu")],
      structure={"phi": [[2, 3, "1"], [4, 1, "-2"]], "phi_sign": -1, "xi": 5, "metric": "dalpha"},
      witnesses=[{"target": "g6tau", "target_params": {"tau": "lam/mu"},
                  "columns": diag_cols(1, 1, 1, 1, "mu"), "provenance": "oracle"}])

D7 = de("14", "delta/2", "24", 1), de("14", -1, "24", "delta/2"), de("12", -1, "34", "delta"), {}
entry("k7m", title="k7^-", kind="sasakian", iso="g7",
      params=[{"name": "delta", "default": "1"}, {"name": "lam", "default": "-1"}],
      samples=[sample(delta=1, lam=-1), sample(delta="1/2", lam=-2), sample(delta=2, lam="-1/2")],
      constraints=[{"name": "delta>0", "expr": "delta > 0"}, {"name": "lam<0", "expr": "lam < 0"}],
      de=list(D7) + [de("12", "lam", "34", "-lam*delta")],
      structure={"phi": [[1, 2, "1"], [4, 3, "1"]], "phi_sign": -1, "xi": 5, "metric": "dalpha"},
      witnesses=[{"target": "g7", "target_params": {"delta": "delta"},
                  "columns": diag_cols(1, 1, 1, 1, "lam"), "provenance": "oracle"}])

entry("k7p", title="k7^+", kind="sasakian", iso="g7",
      params=[{"name": "delta", "default": "1"}, {"name": "lam", "default": "1"}],
      samples=[sample(delta=1, lam=1), sample(delta="1/2", lam=2), sample(delta=2, lam="1/2")],
      constraints=[{"name": "delta>0", "expr": "delta > 0"}, {"name": "lam>0", "expr": "lam > 0"}],
      de=list(D7) + [de("12", "lam", "34", "-lam*delta")],
      structure={"phi": [[1, 2, "-1"], [4, 3, "-1"]], "phi_sign": -1, "xi": 5, "metric": "dalpha"},
      witnesses=[{"target": "g7", "target_params": {"delta": "delta"},
                  "columns": diag_cols(1, 1, 1, 1, "lam"), "provenance": "oracle"}],
      note="lam>0 is needed for a positive metric with this Phi")

D8 = de("14", 1), de("34", "delta"), de("24", "-delta"), {}, de("14", "lam", "23", "mu")
entry("k8m", title="k8^-", kind="sasakian", iso="g8",
      params=[{"name": "delta", "default": "1"}, {"name": "lam", "default": "1"}, {"name": "mu", "default": "-1"}],
      samples=[sample(delta=1, lam=1, mu=-1), sample(delta="1/2", lam=2, mu="-1/2"),
               sample(delta=2, lam="1/2", mu=-2)],
      constraints=[{"name": "delta>0", "expr": "delta > 0"}, {"name": "lam>0", "expr": "lam > 0"},
                   {"name": "mu<0", "expr": "mu < 0"}],
      de=list(D8),
      structure={"phi": [[4, 1, "1"], [2, 3, "1"]], "phi_sign": -1, "xi": 5, "metric": "dalpha"},
      witnesses=[{"target": "g8", "target_params": {"delta": "delta"},
                  "columns": diag_cols("mu/lam", 1, 1, 1, "mu"), "provenance": "oracle"}])

entry("k8p", title="k8^+", kind="sasakian", iso="g8",
      params=[{"name": "delta", "default": "1"}, {"name": "lam", "default": "1"}, {"name": "mu", "default": "1"}],
      samples=[sample(delta=1, lam=1, mu=1), sample(delta="1/2", lam=2, mu="1/2"),
               sample(delta=2, lam="1/2", mu=2)],
      constraints=[{"name": "delta>0", "expr": "delta > 0"}, {"name": "lam>0", "expr": "lam > 0"},
                   {"name": "mu>0", "expr": "mu > 0"}],
      de=list(D8),
      structure={"phi": [[4, 1, "1"], [3, 2, "1"]], "phi_sign": -1, "xi": 5, "metric": "dalpha"},
      witnesses=[{"target": "g8", "target_params": {"delta": "delta"},
                  "columns": diag_cols("mu/lam", 1, 1, 1, "mu"), "provenance": "oracle"}])

# --- trivial center: the case families -----------------------------------------------

A_CONST = ["a1", "b1", "c2", "c3", "c4", "f4"]
B_CONST = ["a1", "b1", "b6", "c3", "c4", "f4"]
A_DE = [de("12", "a1", "34", "-2*c4"), de("12", "b1", "34", "2*c2"),
        de("45", -1, "13", "c2", "14", "c3", "23", "c4", "24", "-f4"),
        de("35", 1, "13", "-c3", "14", "c2", "23", "f4", "24", "c4"),
        de("12", 2, "34", 2)]
B_DE = [de("12", "a1", "34", "-2*c4"), de("12", "b1", "34", "b6"),
        de("45", 1, "13", "b6/2", "14", "c3", "23", "c4", "24", "-f4"),
        de("35", -1, "13", "-c3", "14", "b6/2", "23", "f4", "24", "c4"),
        de("12", 2, "34", 2)]
A_SYSTEM = ["c2*(a1 + 2*c4)", "c4*(a1 + 2*c4)", "c2*(-b1 + 2*c2)", "c4*(-b1 + 2*c2)",
            "a1*c3 - b1*f4 + 2", "c2*a1 + c4*b1"]
B_SYSTEM = ["c4*(2*c4 + a1)", "b6*(a1 + 2*c4)", "c4*(b1 - b6)", "b6*(b6 - b1)",
            "b1*c4 + a1*b6/2", "c3*a1 - b1*f4 - 2"]
CASE_STRUCT = {"phi": STD_PHI, "xi": 5, "metric": "identity"}

SL2 = cols([0, 0, -2, 0, -2], [0, 0, "1/2", "1/2", 1], [0, 0, -1, 1, -2])
SU2 = cols([0, 0, 0, 0, 1], [0, 0, "1/2", "1/2", 0], [0, 0, "1/2", "-1/2", 0])


def case(id, family, free, samples, derived, zero, extra, witnesses, nonzero):
    const = A_CONST if family == "A" else B_CONST
    entry("case" + id, title=f"case {id}", kind="sasakian", family=family,
          iso="sl2xaff" if id in ("A1", "A2") else "su2xaff" if id in ("B1", "B2") else "g0",
          params=[{"name": p, "default": samples[0][p]} for p in free],
          samples=samples,
          constants=const,
          derived={c: derived.get(c, "0") for c in const if c not in free},
          constraints=[{"name": f"{p}!=0", "expr": f"{p} != 0"} for p in nonzero],
          system=A_SYSTEM if family == "A" else B_SYSTEM,
          case_equations=zero + extra,
          de=A_DE if family == "A" else B_DE,
          structure=CASE_STRUCT,
          witnesses=witnesses)


case("A1", "A", ["c3", "f4"], [sample(c3=1, f4=0), sample(c3=2, f4=1), sample(c3="-1/2", f4=3)],
     {"a1": "-2/c3"}, ["b1", "c2", "c4"], ["a1*c3 + 2"],
     [{"target": "sl2xaff", "provenance": "oracle",
       "columns": SL2 + cols(["-f4/2", "-c3/2", 0, 0, 0], [1, 0, 0, 0, "-c3"]),
       "note": "aff part spanned by f4 e1 + c3 e2 and e1 - c3 e5"}],
     ["c3"])
case("A2", "A", ["a1", "b1", "c3"], [sample(a1=1, b1=1, c3=0), sample(a1=2, b1=-1, c3=1),
                                     sample(a1="-1/2", b1=2, c3=3)],
     {"f4": "(2 + a1*c3)/b1"}, ["c2", "c4"], [],
     [{"target": "sl2xaff", "provenance": "oracle",
       "columns": SL2 + cols(["-1/b1", 0, 0, 0, "c3/b1"], ["a1", "b1", 0, 0, 2])}],
     ["b1"])
case("A3", "A", ["a1", "f4"], [sample(a1=1, f4=0), sample(a1=2, f4=3), sample(a1=-1, f4="1/2")],
     {"c3": "-2/a1", "c4": "-a1/2"}, ["b1", "c2"], ["a1*c3 + 2", "2*c4 + a1"],
     [{"target": "gt", "target_params": {"t": "f4/a1"},
       "columns": cols([0, "1/a1", 0, 0, 0], [0, 0, 0, 0, 1], ["a1", 0, 0, 0, 2],
                       [0, 0, 1, 0, 0], [0, 0, 0, 1, 0])}],
     ["a1"])
case("A4", "A", ["a1", "b1", "c3"], [sample(a1=2, b1=3, c3=5), sample(a1=1, b1=1, c3=0),
                                     sample(a1=-1, b1=2, c3=1)],
     {"c2": "b1/2", "c4": "-a1/2", "f4": "(2 + a1*c3)/b1"}, [], ["2*c2 - b1", "2*c4 + a1"],
     [{"target": "gt", "target_params": {"t": "c3/b1"},
       "columns": cols(["-1/b1", 0, 0, 0, 0], [0, 0, 0, 0, 1], ["a1", "b1", 0, 0, 2],
                       [0, 0, 1, 0, 0], [0, 0, 0, 1, 0]),
       "note": "X = -F2 so that ad_X matches psi_t(X)"}],
     ["b1"])
case("B1", "B", ["a1", "f4"], [sample(a1=1, f4=0), sample(a1=2, f4=7), sample(a1="-1/2", f4=1)],
     {"c3": "2/a1"}, ["b1", "b6", "c4"], ["a1*c3 - 2"],
     [{"target": "su2xaff", "provenance": "oracle",
       "columns": SU2 + cols(["f4/2", "1/a1", 0, 0, 0], ["a1", 0, 0, 0, 2]),
       "note": "aff part spanned by a1 f4 e1 + 2 e2 and a1 e1 + 2 e5"}],
     ["a1"])
case("B2", "B", ["a1", "b1", "c3"], [sample(a1=1, b1=1, c3=0), sample(a1=1, b1=1, c3=1),
                                     sample(a1=2, b1=-1, c3=3)],
     {"f4": "(c3*a1 - 2)/b1"}, ["b6", "c4"], [],
     [{"target": "su2xaff", "provenance": "oracle",
       "columns": SU2 + cols(["-1/b1", 0, 0, 0, "-c3/b1"], ["a1", "b1", 0, 0, 2])}],
     ["b1"])
case("B3", "B", ["a1", "f4"], [sample(a1=2, f4=3), sample(a1=1, f4=0), sample(a1=-1, f4=2)],
     {"c3": "2/a1", "c4": "-a1/2"}, ["b1", "b6"], ["a1*c3 - 2", "2*c4 + a1"],
     [{"target": "gt", "target_params": {"t": "f4/a1"},
       "columns": cols([0, "1/a1", 0, 0, 0], [0, 0, 0, 0, -1], ["a1", 0, 0, 0, 2],
                       [0, 0, 1, 0, 0], [0, 0, 0, 1, 0]),
       "note": "Y = -G5"}],
     ["a1"])
case("B4", "B", ["a1", "b1", "c3"], [sample(a1=2, b1=3, c3=5), sample(a1=1, b1=1, c3=1),
                                     sample(a1=-1, b1=2, c3=0)],
     {"b6": "b1", "c4": "-a1/2", "f4": "(c3*a1 - 2)/b1"}, [], ["b6 - b1", "2*c4 + a1"],
     [{"target": "gt", "target_params": {"t": "c3/b1"},
       "columns": cols(["-1/b1", 0, 0, 0, 0], [0, 0, 0, 0, -1], ["a1", "b1", 0, 0, 2],
                       [0, 0, 1, 0, 0], [0, 0, 0, 1, 0]),
       "note": "X = -H2, Y = -H5"}],
     ["b1"])

entry("gt", title="g_t = R^2 x|_psi_t h3", kind="algebra", iso="g0",
      params=[{"name": "t", "default": "1/2", "samples": ["1/2", "1", "2"]}],
      brackets=[br(4, 5, e3=-1), br(1, 3, e3=1), br(1, 4, e4="1/2", e5="-t"), br(1, 5, e4="t", e5="1/2"),
                br(2, 4, e5=1), br(2, 5, e4=-1)],
      basis=["X", "Y", "v1", "v2", "v3"],
      witnesses=[{"target": "g0", "columns": cols([1, "t", 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0],
                                                  [0, 0, 0, 1, 0], [0, 0, 0, 0, 1])}])

entry("g0", title="g0 = R^2 x| h3", kind="sasakian", iso="g0",
      brackets=[br(1, 3, e3=1), br(1, 4, e4="1/2"), br(1, 5, e5="1/2"), br(2, 4, e5=1), br(2, 5, e4=-1),
                br(4, 5, e3=-1)],
      structure={"transport": {"from": "caseA3", "params": {"a1": "1", "f4": "0"}, "chain": ["gt", "g0"]}})

entry("sl2xaff", title="sl(2,R) x aff(R)", kind="sasakian", iso="sl2xaff",
      params=[{"name": "c3", "default": "1"}, {"name": "f4", "default": "0"}],
      samples=[sample(c3=1, f4=0), sample(c3=2, f4=1), sample(c3="-1/2", f4=3)],
      constraints=[{"name": "c3!=0", "expr": "c3 != 0"}],
      brackets=[br(1, 2, e2=2), br(1, 3, e3=-2), br(2, 3, e1=1), br(4, 5, e5=1)],
      structure={"transport": {"from": "caseA1", "params": {"c3": "c3", "f4": "f4"}, "chain": ["sl2xaff"]}},
      note="standard basis (h, e, f, x, y); structures from case A1")

entry("su2xaff", title="su(2) x aff(R)", kind="sasakian", iso="su2xaff",
      params=[{"name": "a1", "default": "1"}, {"name": "f4", "default": "0"}],
      samples=[sample(a1=1, f4=0), sample(a1=2, f4=7), sample(a1="-1/2", f4=1)],
      constraints=[{"name": "a1!=0", "expr": "a1 != 0"}],
      brackets=[br(1, 2, e3=1), br(2, 3, e1=1), br(1, 3, e2=-1), br(4, 5, e5=1)],
      structure={"transport": {"from": "caseB1", "params": {"a1": "a1", "f4": "f4"}, "chain": ["su2xaff"]}},
      note="standard basis (u1, u2, u3, x, y); structures from case B1")

entry("sl2_r2", title="sl(2,R) x| R^2", kind="obstruction", iso="sl2_r2",
      params=[{"name": f"a{i}", "default": "0"} for i in range(1, 6)],
      samples=[sample(a1=0, a2=0, a3=1, a4=1, a5=0), sample(a1=0, a2=1, a3=0, a4=0, a5=1),
               sample(a1=1, a2=0, a3=1, a4=2, a5=1)],
      constraints=[{"name": "Delta!=0", "expr": "a3*a4**2 - a2*a5**2 - a1*a4*a5 != 0"}],
      de=[de("23", -1), de("12", -2), de("13", 2), de("14", -1, "25", -1), de("15", 1, "34", -1)],
      alpha=["a1", "a2", "a3", "a4", "a5"])

# --- dimension three ----------------------------------------------------------------------

PHI3 = [[1, 2, "1"]]
entry("h3", title="h3", kind="sasakian", iso="h3",
      de=[{}, {}, de("12", 2)], structure={"phi": PHI3, "xi": 3, "metric": "identity"})
entry("sl2", title="sl(2,R)", kind="sasakian", iso="sl2",
      brackets=[br(1, 2, e3=-2), br(3, 1, e2=1), br(3, 2, e1=-1)],
      structure={"phi": PHI3, "xi": 3, "metric": "identity"})
entry("su2", title="su(2)", kind="sasakian", iso="su2",
      brackets=[br(1, 2, e3=-2), br(3, 1, e2=-1), br(3, 2, e1=1)],
      structure={"phi": PHI3, "xi": 3, "metric": "identity"})
entry("affxR", title="aff(R) x R", kind="sasakian", iso="affxR",
      de=[{}, de("12", 1), de("12", 2)],
      structure={"phi": PHI3, "xi": 3, "metric": "dalpha"},
      witnesses=[{"target": "affxR_std", "columns": cols([1, 0, 0], [0, 1, 2], [0, 0, 1]),
                  "note": "dual basis E^3 = e^3 - 2 e^2"}])
entry("affxR_std", title="aff(R) x R, product basis", kind="algebra", iso="affxR",
      de=[{}, de("12", 1), {}])


RICCI_GOLDENS = {
    "note": "diagonal Ricci matrices in the case bases, g = identity",
    "cases": [
        {"id": "caseA1", "params": sample(c3=1, f4=0),
         "diag": ["-(2*c3**2 + 2)/c3**2", "-(2*c3**2 + 2)/c3**2", "-4", "-4", "4"]},
        {"id": "caseA1", "params": sample(c3=2, f4=0),
         "diag": ["-(2*c3**2 + 2)/c3**2", "-(2*c3**2 + 2)/c3**2", "-4", "-4", "4"]},
        {"id": "caseA2", "params": sample(a1=1, b1=1, c3=0),
         "diag": ["-(2 + a1**2 + b1**2)", "-(2 + a1**2 + b1**2)", "-4", "-4", "4"]},
        {"id": "caseB1", "params": sample(a1=1, f4=0),
         "diag": ["-(2 + a1**2)", "-(2 + a1**2)", "0", "0", "4"]},
        {"id": "caseB2", "params": sample(a1=1, b1=1, c3=0),
         "diag": ["-(2 + a1**2 + b1**2)", "-(2 + a1**2 + b1**2)", "0", "0", "4"]},
    ],
}


# partial profiles: only the invariants stated for each class
SOLV = {"solvable": True, "nilpotent": False}
EXPECTED = {
    "h5": {"dim_center": 1, "nilpotent": True, "unimodular": True},
    "g2": {"dim_center": 1, **SOLV, "unimodular": False},
    "g3": {"dim_center": 1, **SOLV, "unimodular": True},
    "g4": {"dim_center": 1, **SOLV, "unimodular": False},
    "g5": {"dim_center": 1, **SOLV, "unimodular": False},
    "g6": {"dim_center": 1, **SOLV, "unimodular": False},
    "g7": {"dim_center": 1, **SOLV, "unimodular": False},
    "g8": {"dim_center": 1, **SOLV, "unimodular": False},
    "g0": {"dim_center": 0, **SOLV, "unimodular": False},
    "sl2xaff": {"dim_center": 0, "solvable": False, "unimodular": False},
    "su2xaff": {"dim_center": 0, "solvable": False, "unimodular": False},
    "sl2_r2": {"dim_center": 0, "solvable": False},
    "h3": {"dim_center": 1, "nilpotent": True},
    "sl2": {"dim_center": 0, "solvable": False, "killing_signature": [2, 1, 0]},
    "su2": {"dim_center": 0, "solvable": False, "killing_signature": [0, 3, 0]},
    "affxR": {"dim_center": 1, **SOLV, "unimodular": False},
}
CLASSIFICATION = {"g1": "center", "g2": "center", "g3": "center", "g4": "center", "g5": "center",
                  "g6": "center", "g7": "center", "g8": "center",
                  "sl2xaff": "trivial_center", "su2xaff": "trivial_center", "g0": "trivial_center"}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for e in ENTRIES:
        e["expected"] = EXPECTED[e["iso"]]
        if e["id"] in CLASSIFICATION:
            e["classification"] = CLASSIFICATION[e["id"]]
    doc = {"version": 1, "entries": ENTRIES}
    (OUT / "catalog.json").write_text(json.dumps(doc, indent=1) + "\n")
    (OUT / "ricci_goldens.json").write_text(json.dumps(RICCI_GOLDENS, indent=1) + "\n")
    print(f"wrote {len(ENTRIES)} entries to {OUT}")


if __name__ == "__main__":
    main()
