"""Named Lie algebras, their Sasakian structures and isomorphism witnesses.

The data lives in ``data/catalog.json`` (override with ``SASAKI_CATALOG``).
Every number there is an expression string over the entry's parameters,
evaluated exactly by :func:`evaluate`.  Witness matrices are stored by
columns: column ``i`` is the ``i``-th new basis vector written in the old
basis, so a witness ``P`` from ``a`` to ``b`` satisfies
``change_basis(a, P) == b``.
"""
from __future__ import annotations

import ast
import json
import operator
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from .contact import (ACMS, adxi_analysis, metric_from_dalpha, phi_from_pairs, sasaki_dim_obstruction,
                      transport, verify_sasakian)
from .curvature import alpha_einstein, check_sasaki_curvature_identity, ricci
from .exact import Mat, fmt_q, q, unit_vec
from .forms import KForm, basis_form, ce_d, is_contact, one_form, reeb
from .kahler import central_extension, sasaki_quotient, verify_kahler
from .lie import LieAlg, Profile, center, change_basis, invariant_profile, jacobi_defect

__all__ = [
    "CatalogError",
    "DomainError",
    "UnknownEntryError",
    "WitnessError",
    "evaluate",
    "Entry",
    "Instance",
    "Catalog",
    "load_catalog",
    "instantiate",
    "case_constraints",
    "case_algebra",
    "d_squared_zero",
    "witness_suite",
    "LatticePoint",
    "g3_lattice_product",
    "expected_profile",
    "profile_matches",
    "full_verify",
    "VerifyReport",
    "alpha_einstein_filter",
    "classification_filter",
]

Env = Dict[str, Fraction]


class CatalogError(ValueError):
    pass


class DomainError(CatalogError):
    """A parameter outside the entry's domain; ``constraint`` names the rule."""

    def __init__(self, constraint: str, detail: str = ""):
        self.constraint = constraint
        super().__init__(f"{constraint} violated" + (f" ({detail})" if detail else ""))


class UnknownEntryError(CatalogError):
    pass


class WitnessError(CatalogError):
    pass


# -- expressions ------------------------------------------------------------------

_BIN = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv}
_CMP = {ast.Lt: operator.lt, ast.LtE: operator.le, ast.Gt: operator.gt, ast.GtE: operator.ge,
        ast.Eq: operator.eq, ast.NotEq: operator.ne}


@lru_cache(maxsize=None)
def _parse(expr: str) -> ast.Expression:
    return ast.parse(expr.strip(), mode="eval")


def _eval(node: ast.AST, env: Mapping[str, Fraction]) -> Any:
    if isinstance(node, ast.Expression):
        return _eval(node.body, env)
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        if node.id not in env:
            raise CatalogError(f"unknown parameter {node.id!r}")
        return env[node.id]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, env)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        a, b = _eval(node.left, env), _eval(node.right, env)
        if isinstance(node.op, ast.Pow):
            if b.denominator != 1:
                raise CatalogError("only integer powers are allowed")
            return a ** int(b)
        if type(node.op) in _BIN:
            if isinstance(node.op, ast.Div) and b == 0:
                raise ZeroDivisionError("division by zero in catalog expression")
            return _BIN[type(node.op)](a, b)
    if isinstance(node, ast.Compare) and len(node.ops) == 1:
        return _CMP[type(node.ops[0])](_eval(node.left, env), _eval(node.comparators[0], env))
    raise CatalogError(f"unsupported expression element {ast.dump(node)}")


def evaluate(expr, env: Optional[Mapping[str, Fraction]] = None):
    """Exact value of an expression string; comparisons give a bool."""
    if not isinstance(expr, str):
        return q(expr)
    return _eval(_parse(expr), env or {})


# -- entries ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Entry:
    raw: Mapping[str, Any] = field(repr=False)

    @property
    def id(self) -> str:
        return self.raw["id"]

    @property
    def title(self) -> str:
        return self.raw.get("title", self.id)

    @property
    def kind(self) -> str:
        return self.raw["kind"]

    @property
    def iso(self) -> str:
        return self.raw.get("iso", self.id)

    @property
    def classification(self) -> Optional[str]:
        return self.raw.get("classification")

    @property
    def params(self) -> List[str]:
        return [p["name"] for p in self.raw.get("params", [])]

    @property
    def is_case(self) -> bool:
        return "system" in self.raw

    @property
    def dim(self) -> int:
        if "de" in self.raw:
            return len(self.raw["de"])
        return max(max(i, j, *map(int, c)) for i, j, c in self.raw["brackets"])

    def defaults(self) -> Dict[str, str]:
        return {p["name"]: p["default"] for p in self.raw.get("params", []) if "default" in p}

    def samples(self) -> List[Env]:
        """Parameter samples spanning the domain, in catalog order."""
        if "samples" in self.raw:
            return [{k: evaluate(v) for k, v in s.items()} for s in self.raw["samples"]]
        ps = self.raw.get("params", [])
        if not ps:
            return [{}]
        if len(ps) == 1 and "samples" in ps[0]:
            return [{ps[0]["name"]: evaluate(v)} for v in ps[0]["samples"]]
        return [self.resolve({})]

    def resolve(self, given: Mapping[str, Any]) -> Env:
        """Fill defaults, check names and the domain."""
        unknown = sorted(set(given) - set(self.params))
        if unknown:
            raise CatalogError(f"{self.id} has no parameter {unknown[0]!r}; expected {self.params}")
        env: Env = {}
        defaults = self.defaults()
        for name in self.params:
            if name in given:
                env[name] = evaluate(given[name]) if isinstance(given[name], str) else q(given[name])
            elif name in defaults:
                env[name] = evaluate(defaults[name])
            else:
                raise CatalogError(f"{self.id} needs parameter {name!r}")
        self.check_domain(env)
        return env

    def check_domain(self, env: Env) -> None:
        for c in self.raw.get("constraints", []):
            if not evaluate(c["expr"], env):
                detail = ", ".join(f"{k}={fmt_q(v)}" for k, v in env.items())
                raise DomainError(c["name"], detail)

    def constants(self, env: Env) -> Env:
        """Parameters plus derived constants (case families)."""
        out = dict(env)
        for name, expr in self.raw.get("derived", {}).items():
            if name not in out:
                out[name] = evaluate(expr, env)
        return out


@dataclass
class Instance:
    entry: Entry
    params: Env
    algebra: LieAlg
    structure: Optional[ACMS] = None
    alpha: Optional[KForm] = None

    @property
    def id(self) -> str:
        return self.entry.id

    def params_json(self) -> Dict[str, str]:
        return {k: fmt_q(v) for k, v in self.params.items()}


def _default_path() -> Path:
    env = os.environ.get("SASAKI_CATALOG")
    if env:
        return Path(env)
    return Path(str(resources.files("sasaki") / "data" / "catalog.json"))


class Catalog:
    """Immutable after load."""

    def __init__(self, doc: Mapping[str, Any], source: str = "<memory>"):
        self.source = source
        self.version = doc.get("version", 1)
        self._entries: Dict[str, Entry] = {}
        for raw in doc["entries"]:
            if raw["id"] in self._entries:
                raise CatalogError(f"duplicate entry {raw['id']!r}")
            self._entries[raw["id"]] = Entry(raw)

    @classmethod
    def load(cls, path: Optional[os.PathLike] = None) -> "Catalog":
        p = Path(path) if path is not None else _default_path()
        with open(p, encoding="utf-8") as fh:
            return cls(json.load(fh), str(p))

    def __contains__(self, id: str) -> bool:
        return id in self._entries

    def __iter__(self) -> Iterator[Entry]:
        return iter(self._entries.values())

    def ids(self) -> List[str]:
        return list(self._entries)

    def get(self, id: str) -> Entry:
        try:
            return self._entries[id]
        except KeyError:
            raise UnknownEntryError(f"unknown catalog entry {id!r}") from None

    # -- builders --------------------------------------------------------------------

    def algebra(self, id: str, env: Mapping[str, Fraction]) -> LieAlg:
        e = self.get(id)
        consts = e.constants(dict(env))
        if "de" in e.raw:
            des = [{(int(k[0]) - 1, int(k[1]) - 1): evaluate(v, consts) for k, v in d.items()}
                   for d in e.raw["de"]]
            return LieAlg.from_differentials(des, tuple(e.raw.get("basis", ())))
        n = e.dim
        table: Dict[Tuple[int, int], List[Fraction]] = {}
        for i, j, coeffs in e.raw["brackets"]:
            v = [Fraction(0)] * n
            for k, c in coeffs.items():
                v[int(k) - 1] = evaluate(c, consts)
            a, b = i - 1, j - 1
            if a > b:
                a, b, v = b, a, [-x for x in v]
            table[(a, b)] = v
        return LieAlg.from_dict(n, table, tuple(e.raw.get("basis", ())))

    def witness_matrix(self, id: str, target: str, env: Mapping[str, Fraction]) -> Tuple[Mat, Env]:
        """Evaluated witness from ``id`` to ``target`` and the target's parameters."""
        e = self.get(id)
        consts = e.constants(dict(env))
        for w in e.raw.get("witnesses", []):
            if w["target"] == target:
                P = Mat.from_cols([[evaluate(x, consts) for x in c] for c in w["columns"]])
                tenv = {k: evaluate(v, consts) for k, v in w.get("target_params", {}).items()}
                return P, self.get(target).resolve(tenv)
        raise CatalogError(f"{id} has no witness to {target}")

    def structure(self, id: str, env: Mapping[str, Fraction], L: Optional[LieAlg] = None) -> ACMS:
        e = self.get(id)
        spec = e.raw["structure"]
        consts = e.constants(dict(env))
        if L is None:
            L = self.algebra(id, env)
        if "transport" in spec:
            t = spec["transport"]
            src = self.get(t["from"])
            senv = src.resolve({k: evaluate(v, consts) for k, v in t["params"].items()})
            S = self.structure(src.id, senv)
            Lsrc = self.algebra(src.id, senv)
            P = Mat.identity(L.dim)
            cur, cenv = src.id, senv
            for nxt in t["chain"]:
                Pw, cenv = self.witness_matrix(cur, nxt, cenv)
                P = P @ Pw
                cur = nxt
            if not change_basis(Lsrc, P).same_constants(L):
                raise WitnessError(f"transport chain {src.id} -> {id} does not reach {id}")
            return transport(S, P)
        n = L.dim
        xi = unit_vec(n, int(spec["xi"]) - 1)
        alpha = basis_form(n, int(spec["xi"]) - 1)
        pairs = [(unit_vec(n, i - 1), tuple(evaluate(c, consts) * x for x in unit_vec(n, j - 1)))
                 for i, j, c in spec["phi"]]
        Phi = phi_from_pairs(n, pairs, xi).scale(spec.get("phi_sign", 1))
        if spec["metric"] == "identity":
            g = Mat.identity(n)
        elif spec["metric"] == "dalpha":
            g = metric_from_dalpha(L, Phi, alpha)
        else:
            raise CatalogError(f"unknown metric rule {spec['metric']!r}")
        return ACMS(Phi, alpha, xi, g)

    def instantiate(self, id: str, params: Optional[Mapping[str, Any]] = None) -> Instance:
        e = self.get(id)
        env = e.resolve(params or {})
        L = self.algebra(id, env)
        if e.kind == "sasakian":
            return Instance(e, env, L, self.structure(id, env, L))
        if e.kind == "obstruction":
            consts = e.constants(env)
            return Instance(e, env, L, None, one_form([evaluate(a, consts) for a in e.raw["alpha"]]))
        return Instance(e, env, L)

    def instances(self, id: str) -> List[Instance]:
        e = self.get(id)
        return [self.instantiate(id, s) for s in e.samples()]


@lru_cache(maxsize=4)
def _cached(path: str) -> Catalog:
    return Catalog.load(path)


def load_catalog(path: Optional[os.PathLike] = None) -> Catalog:
    return _cached(str(Path(path) if path is not None else _default_path()))


def instantiate(id: str, params: Optional[Mapping[str, Any]] = None,
                catalog: Optional[Catalog] = None) -> Tuple[LieAlg, Optional[ACMS]]:
    """``(algebra, structure)``; the structure is ``None`` for bare algebras."""
    inst = (catalog or load_catalog()).instantiate(id, params)
    return inst.algebra, inst.structure


# -- case families -------------------------------------------------------------------------

def _case_entry(case_id: str, catalog: Optional[Catalog]) -> Entry:
    cat = catalog or load_catalog()
    cid = case_id if case_id.startswith("case") else "case" + case_id
    e = cat.get(cid)
    if not e.is_case:
        raise CatalogError(f"{case_id} is not a case family")
    return e


def _case_constants(e: Entry, params: Mapping[str, Any]) -> Env:
    """Free parameters (defaults filled), then derived constants unless given."""
    given = {k: (evaluate(v) if isinstance(v, str) else q(v)) for k, v in params.items()}
    bad = sorted(set(given) - set(e.raw["constants"]))
    if bad:
        raise CatalogError(f"{e.id} has no constant {bad[0]!r}")
    env = {k: evaluate(v) for k, v in e.defaults().items()}
    env.update({k: v for k, v in given.items() if k in e.params})
    out = dict(env)
    for name, expr in e.raw["derived"].items():
        out[name] = given[name] if name in given else evaluate(expr, env)
    return out


@dataclass(frozen=True)
class Residual:
    name: str
    value: Fraction
    source: str  # "system" or "case"

    def to_json_obj(self) -> dict:
        return {"name": self.name, "value": fmt_q(self.value), "source": self.source}


def case_constraints(case_id: str, params: Mapping[str, Any], catalog: Optional[Catalog] = None) -> List[Residual]:
    """Every constraint polynomial of the family at the given constants.

    ``params`` may set free parameters and override derived constants; the
    rest is filled from the family's definition.
    """
    e = _case_entry(case_id, catalog)
    consts = _case_constants(e, params)
    out = [Residual(p, evaluate(p, consts), "system") for p in e.raw["system"]]
    out += [Residual(p, evaluate(p, consts), "case") for p in e.raw["case_equations"]]
    return out


def case_algebra(case_id: str, constants: Mapping[str, Any], catalog: Optional[Catalog] = None) -> LieAlg:
    """The template algebra at arbitrary constants (Jacobi not assumed)."""
    e = _case_entry(case_id, catalog)
    consts = {k: (evaluate(v) if isinstance(v, str) else q(v)) for k, v in constants.items()}
    missing = [c for c in e.raw["constants"] if c not in consts]
    if missing:
        raise CatalogError(f"missing constants {missing}")
    des = [{(int(k[0]) - 1, int(k[1]) - 1): evaluate(v, consts) for k, v in d.items()} for d in e.raw["de"]]
    return LieAlg.from_differentials(des)


def d_squared_zero(L: LieAlg) -> bool:
    """``d(d e^k) = 0`` for every generator."""
    n = L.dim
    return all(ce_d(L, ce_d(L, basis_form(n, k))).is_zero() for k in range(n))


# -- witnesses ------------------------------------------------------------------------------

@dataclass(frozen=True)
class WitnessResult:
    source: str
    params: Tuple[Tuple[str, str], ...]
    target: str
    target_params: Tuple[Tuple[str, str], ...]
    ok: bool
    provenance: str

    def to_json_obj(self) -> dict:
        return {"source": self.source, "params": dict(self.params), "target": self.target,
                "target_params": dict(self.target_params), "ok": self.ok, "provenance": self.provenance}


def _pj(env: Mapping[str, Fraction]) -> Tuple[Tuple[str, str], ...]:
    return tuple((k, fmt_q(v)) for k, v in env.items())


def entry_witnesses(cat: Catalog, id: str, env: Env) -> List[WitnessResult]:
    e = cat.get(id)
    out = []
    L = cat.algebra(id, env)
    for w in e.raw.get("witnesses", []):
        P, tenv = cat.witness_matrix(id, w["target"], env)
        ok = change_basis(L, P).same_constants(cat.algebra(w["target"], tenv)) if P.det() != 0 else False
        out.append(WitnessResult(id, _pj(env), w["target"], _pj(tenv), ok, w.get("provenance", "stated")))
    return out


def witness_suite(catalog: Optional[Catalog] = None, strict: bool = True) -> List[WitnessResult]:
    """Check every stored witness at every sample of its source entry.

    With ``strict`` a failing witness raises :class:`WitnessError` naming the pair.
    """
    cat = catalog or load_catalog()
    results = []
    for e in cat:
        if not e.raw.get("witnesses"):
            continue
        for env in e.samples():
            for r in entry_witnesses(cat, e.id, env):
                if strict and not r.ok:
                    raise WitnessError(f"witness {r.source}{dict(r.params)} -> {r.target}{dict(r.target_params)} fails")
                results.append(r)
    return results


# -- the lattice in G_3 ----------------------------------------------------------------------

@dataclass(frozen=True)
class LatticePoint:
    """``(2 pi m1, m2, m3, m4, m5 / (2 pi))``."""

    m: Tuple[int, int, int, int, int]

    def __post_init__(self):
        if len(self.m) != 5 or any(not isinstance(x, int) or isinstance(x, bool) for x in self.m):
            raise TypeError("a lattice point has five integer coordinates")

    @classmethod
    def of(cls, *m: int) -> "LatticePoint":
        return cls(tuple(int(x) for x in m))


def _group_law(x: Sequence[Fraction], y: Sequence[Fraction], sin: Fraction, cos: Fraction,
               sin2: Fraction, x1y5: Fraction) -> List[Fraction]:
    """Coordinates 2..4 of the product in G_3.

    The trigonometric values of ``x1`` and the product ``x1 * y5`` are passed
    in exactly, since on the lattice they are rational.
    """
    _, x2, x3, x4, _ = x
    _, y2, y3, y4, _ = y
    Q = (y4 + x1y5 - sin ** 2 * y2 * y3 - Fraction(1, 4) * sin2 * (y2 ** 2 - y3 ** 2)
         + x2 * (-sin * y2 + cos * y3) + x4)
    return [cos * y2 + sin * y3 + x2, -sin * y2 + cos * y3 + x3, Q]


def g3_lattice_product(a: LatticePoint, b: LatticePoint) -> LatticePoint:
    """Product of two points of the lattice, evaluated exactly.

    ``x1 = 2 pi m1`` so ``sin x1 = sin 2 x1 = 0`` and ``cos x1 = 1``; the only
    product of transcendental coordinates is ``x1 * y5 = m1 * n5``.
    """
    m, n = a.m, b.m
    mid = _group_law([Fraction(v) for v in m], [Fraction(v) for v in n],
                     Fraction(0), Fraction(1), Fraction(0), Fraction(m[0] * n[4]))
    # first and last coordinates add: 2 pi (m1 + n1) and (m5 + n5) / (2 pi)
    out = [Fraction(m[0] + n[0])] + mid + [Fraction(m[4] + n[4])]
    if any(v.denominator != 1 for v in out):
        raise ArithmeticError(f"lattice not closed at {m} * {n}")
    return LatticePoint(tuple(int(v) for v in out))


def lattice_report(samples: int, seed: int, lo: int = -3, hi: int = 3) -> dict:
    """Closure, associativity and the unit on seeded random lattice triples."""
    rng = random.Random(seed)
    e = LatticePoint.of(0, 0, 0, 0, 0)
    closed = assoc = unit = 0
    first_bad = None
    for _ in range(samples):
        a, b, c = (LatticePoint(tuple(rng.randint(lo, hi) for _ in range(5))) for _ in range(3))
        try:
            ab = g3_lattice_product(a, b)
            left = g3_lattice_product(ab, c)
            right = g3_lattice_product(a, g3_lattice_product(b, c))
            closed += 1
        except ArithmeticError:
            first_bad = first_bad or [a.m, b.m, c.m]
            continue
        if left == right:
            assoc += 1
        elif first_bad is None:
            first_bad = [a.m, b.m, c.m]
        if g3_lattice_product(e, a) == a == g3_lattice_product(a, e):
            unit += 1
    return {"samples": samples, "seed": seed, "closed": closed, "associative": assoc, "unit": unit,
            "ok": closed == assoc == unit == samples, "first_failure": first_bad}


# -- profiles and full verification --------------------------------------------------------------

def expected_profile(id: str, catalog: Optional[Catalog] = None) -> Dict[str, Any]:
    """Invariants stated for the entry's isomorphism class (a partial profile)."""
    return dict((catalog or load_catalog()).get(id).raw.get("expected", {}))


def profile_matches(p: Profile, expected: Mapping[str, Any]) -> List[str]:
    """Names of the expected invariants that disagree with ``p``."""
    got = p.to_json_obj()
    return [k for k, v in expected.items() if got.get(k) != v]


@dataclass
class Check:
    name: str
    status: str  # "pass", "fail" or "info"
    detail: Any = None

    def to_json_obj(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class VerifyReport:
    id: str
    params: Dict[str, str]
    checks: List[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def add(self, name: str, passed: Optional[bool], detail: Any = None) -> None:
        status = "info" if passed is None else ("pass" if passed else "fail")
        self.checks.append(Check(name, status, detail))

    def get(self, name: str) -> Optional[Check]:
        return next((c for c in self.checks if c.name == name), None)

    def to_json_obj(self) -> dict:
        return {"id": self.id, "params": self.params, "ok": self.ok,
                "checks": [c.to_json_obj() for c in self.checks]}


def _matrix_json(M: Mat) -> List[List[str]]:
    return [[fmt_q(x) for x in r] for r in M.to_rows()]


def _verify_sasakian_instance(cat: Catalog, inst: Instance, rep: VerifyReport) -> None:
    L, S = inst.algebra, inst.structure
    sr = verify_sasakian(L, S)
    rep.add("sasakian", sr.sasakian, sr.first_failure())
    ad = adxi_analysis(L, S)
    rep.add("ad_xi", ad.ok, {"dim_ker": len(ad.ker_basis), "dim_im": len(ad.im_basis)})
    rep.add("curvature_identity", check_sasaki_curvature_identity(L, S))
    Ric = ricci(L, S.g)
    rep.add("ricci_symmetric", Ric.is_symmetric())
    ae = alpha_einstein(L, S, Ric)
    rep.add("alpha_einstein", None,
            None if ae is None else {"lambda": fmt_q(ae[0]), "nu": fmt_q(ae[1])})
    z = center(L)
    if z:
        try:
            h, K = sasaki_quotient(L, S)
        except ValueError as exc:
            rep.add("kahler_quotient", False, str(exc))
            return
        kr = verify_kahler(h, K)
        rep.add("kahler_quotient", kr.kahler, kr.first_failure())
        n = L.dim
        if S.xi == unit_vec(n, n - 1) and S.alpha == basis_form(n, n - 1) and kr.kahler:
            L2, S2 = central_extension(h, K)
            rep.add("round_trip", L2.same_constants(L) and S2.Phi == S.Phi and S2.g == S.g)


def _verify_obstruction(inst: Instance, rep: VerifyReport) -> None:
    L, alpha = inst.algebra, inst.alpha
    rep.add("contact", is_contact(L, alpha))
    a1, a2, a3, a4, a5 = alpha.as_vector()
    delta = a3 * a4 ** 2 - a2 * a5 ** 2 - a1 * a4 * a5
    xi = reeb(L, alpha)
    want = tuple(-x / (3 * delta) for x in (a4 * a5, a5 ** 2, -a4 ** 2, a1 * a5 - 2 * a3 * a4, a1 * a4 + 2 * a2 * a5))
    rep.add("reeb_formula", xi == want, [fmt_q(x) for x in xi])
    ob = sasaki_dim_obstruction(L, alpha)
    spanned = ob["dim"] == 1 and Mat.from_cols([ob["subspace_basis"][0], (0, 0, 0, -a5, a4)]).rank() == 1
    rep.add("ker_ad_xi_cap_ker_alpha", spanned,
            {"dim": ob["dim"], "basis": [[fmt_q(x) for x in v] for v in ob["subspace_basis"]]})
    rep.add("obstructed", ob["obstructed"])


def verify_instance(cat: Catalog, inst: Instance) -> VerifyReport:
    rep = VerifyReport(inst.id, inst.params_json())
    L = inst.algebra
    jd = jacobi_defect(L)
    rep.add("jacobi", not jd, None if not jd else f"e{jd[0][0] + 1}, e{jd[0][1] + 1}, e{jd[0][2] + 1}")
    prof = invariant_profile(L)
    bad = profile_matches(prof, inst.entry.raw.get("expected", {}))
    rep.add("profile", not bad, prof.to_json_obj() if not bad else {"mismatch": bad})
    if inst.entry.kind == "sasakian" and not jd:
        _verify_sasakian_instance(cat, inst, rep)
    elif inst.entry.kind == "obstruction":
        _verify_obstruction(inst, rep)
    for w in entry_witnesses(cat, inst.id, inst.params):
        rep.add(f"witness->{w.target}", w.ok, dict(w.target_params) or None)
    return rep


def full_verify(id: str, params: Optional[Mapping[str, Any]] = None,
                catalog: Optional[Catalog] = None) -> VerifyReport:
    cat = catalog or load_catalog()
    return verify_instance(cat, cat.instantiate(id, params))


# -- filters over the catalog --------------------------------------------------------------

def alpha_einstein_filter(catalog: Optional[Catalog] = None, ids: Optional[Sequence[str]] = None
                          ) -> List[Tuple[str, Dict[str, str], Fraction, Fraction]]:
    """``(id, params, lambda, nu)`` for every alpha-Einstein Sasakian sample."""
    cat = catalog or load_catalog()
    hits = []
    for e in cat:
        if e.kind != "sasakian" or (ids is not None and e.id not in ids):
            continue
        for inst in cat.instances(e.id):
            ae = alpha_einstein(inst.algebra, inst.structure)
            if ae is not None:
                hits.append((e.id, inst.params_json(), ae[0], ae[1]))
    return hits


def classification_filter(predicate, catalog: Optional[Catalog] = None, group: Optional[str] = None) -> List[str]:
    """Ids of classification entries whose algebra (first sample) satisfies ``predicate``."""
    cat = catalog or load_catalog()
    out = []
    for e in cat:
        if e.classification is None or (group is not None and e.classification != group):
            continue
        if predicate(cat.instances(e.id)[0].algebra):
            out.append(e.id)
    return out
