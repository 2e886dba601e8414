"""Finite-dimensional Lie algebras given by rational structure constants.

Brackets are stored only for ``i < j``; ``[e_i, e_j] = sum_k c[k] e_k``.
Indices are 0-based in the API and 1-based in labels and JSON.

Sign convention for structure equations: ``d beta(X, Y) = -beta([X, Y])``,
so ``de^k = sum_{i<j} -c^k_{ij} e^{ij}`` and ``de^5 = e^{12}`` means
``[e_1, e_2] = -e_5``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .exact import (
    DimensionError,
    Mat,
    SingularMatrixError,
    Vec,
    det,
    fmt_q,
    is_zero_vec,
    kernel,
    q,
    span_basis,
    unit_vec,
    vadd,
    vec,
    zero_vec,
)

__all__ = [
    "LieAlg",
    "Profile",
    "NotADerivationError",
    "jacobi_defect",
    "center",
    "series_dims",
    "derived_series",
    "lower_central_series",
    "is_unimodular",
    "killing_form",
    "killing_signature",
    "derivation_dim",
    "change_basis",
    "verify_isomorphism",
    "direct_sum",
    "semidirect_product",
    "invariant_profile",
    "abelian",
]


class NotADerivationError(ValueError):
    pass


@dataclass(frozen=True)
class LieAlg:
    dim: int
    brackets: Tuple[Tuple[int, int, Vec], ...]
    labels: Tuple[str, ...] = ()
    _table: Tuple[Tuple[Vec, ...], ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        if self.dim <= 0:
            raise DimensionError("dimension must be positive")
        labels = self.labels or tuple(f"e{i + 1}" for i in range(self.dim))
        if len(labels) != self.dim:
            raise DimensionError("one label per basis vector")
        object.__setattr__(self, "labels", tuple(labels))
        seen = set()
        clean = []
        for i, j, c in self.brackets:
            if not (0 <= i < j < self.dim):
                raise ValueError(f"bracket index pair ({i}, {j}) must satisfy 0 <= i < j < dim")
            if (i, j) in seen:
                raise ValueError(f"duplicate bracket ({i}, {j})")
            seen.add((i, j))
            c = vec(c)
            if len(c) != self.dim:
                raise DimensionError(f"bracket ({i}, {j}) has {len(c)} coefficients")
            if not is_zero_vec(c):
                clean.append((i, j, c))
        clean.sort(key=lambda t: (t[0], t[1]))
        object.__setattr__(self, "brackets", tuple(clean))
        n = self.dim
        z = zero_vec(n)
        table = [[z] * n for _ in range(n)]
        for i, j, c in clean:
            table[i][j] = c
            table[j][i] = tuple(-x for x in c)
        object.__setattr__(self, "_table", tuple(tuple(r) for r in table))

    # -- construction -----------------------------------------------------
    @classmethod
    def from_dict(cls, dim: int, brackets: Mapping[Tuple[int, int], Sequence], labels=()) -> "LieAlg":
        """Build from ``{(i, j): coeffs}``; pairs with ``i > j`` are flipped."""
        acc: Dict[Tuple[int, int], Vec] = {}
        for (i, j), c in brackets.items():
            c = vec(c)
            if i == j:
                if not is_zero_vec(c):
                    raise ValueError(f"[e{i + 1}, e{i + 1}] must vanish")
                continue
            if i > j:
                i, j, c = j, i, tuple(-x for x in c)
            acc[(i, j)] = vadd(acc.get((i, j), zero_vec(dim)), c)
        return cls(dim, tuple((i, j, c) for (i, j), c in acc.items()), tuple(labels))

    @classmethod
    def from_differentials(cls, des: Sequence[Mapping[Tuple[int, int], Fraction]], labels=()) -> "LieAlg":
        """Build from structure equations ``de^k = sum coeff * e^{ij}``.

        ``des[k]`` maps 0-based pairs to coefficients; ``c^k_{ij} = -coeff``.
        """
        n = len(des)
        acc: Dict[Tuple[int, int], List[Fraction]] = {}
        for k, de in enumerate(des):
            for (i, j), coeff in de.items():
                coeff = q(coeff)
                if i == j:
                    raise ValueError("e^{ii} is zero; refuse to decode it")
                if i > j:
                    i, j, coeff = j, i, -coeff
                acc.setdefault((i, j), [Fraction(0)] * n)[k] -= coeff
        return cls(n, tuple((i, j, tuple(c)) for (i, j), c in acc.items()), tuple(labels))

    # -- evaluation -------------------------------------------------------
    def bracket_basis(self, i: int, j: int) -> Vec:
        return self._table[i][j]

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vec:
        n = self.dim
        out = [Fraction(0)] * n
        for i in range(n):
            xi = x[i]
            if not xi:
                continue
            row = self._table[i]
            for j in range(n):
                yj = y[j]
                if not yj or i == j:
                    continue
                c = row[j]
                f = xi * yj
                for k in range(n):
                    if c[k]:
                        out[k] += f * c[k]
        return tuple(out)

    def ad(self, x: Sequence[Fraction]) -> Mat:
        """Matrix of ``ad_x`` (column j is ``[x, e_j]``)."""
        n = self.dim
        return Mat.from_cols([self.bracket(x, unit_vec(n, j)) for j in range(n)])

    def ad_basis(self, i: int) -> Mat:
        return Mat.from_cols([self._table[i][j] for j in range(self.dim)])

    def structure_constant(self, k: int, i: int, j: int) -> Fraction:
        return self._table[i][j][k]

    def differentials(self) -> List[Dict[Tuple[int, int], Fraction]]:
        """Inverse of :meth:`from_differentials`."""
        out: List[Dict[Tuple[int, int], Fraction]] = [dict() for _ in range(self.dim)]
        for i, j, c in self.brackets:
            for k, x in enumerate(c):
                if x:
                    out[k][(i, j)] = -x
        return out

    def is_abelian(self) -> bool:
        return not self.brackets

    def same_constants(self, other: "LieAlg") -> bool:
        return self.dim == other.dim and self.brackets == other.brackets

    def __eq__(self, other):
        if not isinstance(other, LieAlg):
            return NotImplemented
        return self.same_constants(other)

    def __hash__(self):
        return hash((self.dim, self.brackets))

    # -- serialisation ----------------------------------------------------
    def to_json_obj(self) -> dict:
        return {
            "dim": self.dim,
            "labels": list(self.labels),
            "brackets": [[i + 1, j + 1, [fmt_q(x) for x in c]] for i, j, c in self.brackets],
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "LieAlg":
        dim = int(obj["dim"])
        br = tuple((int(i) - 1, int(j) - 1, vec(c)) for i, j, c in obj["brackets"])
        return cls(dim, br, tuple(obj.get("labels", ())))

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "LieAlg":
        return cls.from_json_obj(json.loads(text))

    def pretty(self) -> str:
        """Human-readable list of nonzero brackets."""
        parts = []
        for i, j, c in self.brackets:
            rhs = " + ".join(f"{fmt_q(x)}*{self.labels[k]}" for k, x in enumerate(c) if x)
            parts.append(f"[{self.labels[i]},{self.labels[j]}] = {rhs}")
        return "; ".join(parts) if parts else "abelian"


def abelian(n: int) -> LieAlg:
    return LieAlg(n, ())


# -- structure ----------------------------------------------------------------

def jacobi_defect(L: LieAlg) -> List[Tuple[int, int, int, Vec]]:
    """Basis triples ``i < j < k`` whose cyclic Jacobi sum is nonzero."""
    n = L.dim
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            bij = L.bracket_basis(i, j)
            for k in range(j + 1, n):
                # [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
                s = vadd(
                    vadd(L.bracket(unit_vec(n, i), L.bracket_basis(j, k)),
                         L.bracket(unit_vec(n, j), L.bracket_basis(k, i))),
                    L.bracket(unit_vec(n, k), bij),
                )
                if not is_zero_vec(s):
                    out.append((i, j, k, s))
    return out


def center(L: LieAlg) -> List[Vec]:
    """Kernel of the stacked maps ``X -> [X, e_j]``."""
    n = L.dim
    rows = []
    for j in range(n):
        # column i of this block is [e_i, e_j]
        block = Mat.from_cols([L.bracket_basis(i, j) for i in range(n)])
        rows.extend(block.to_rows())
    return kernel(Mat.from_rows(rows))


def _bracket_span(L: LieAlg, A: Sequence[Vec], B: Sequence[Vec]) -> List[Vec]:
    vs = [L.bracket(a, b) for a in A for b in B]
    return span_basis([v for v in vs if not is_zero_vec(v)], L.dim)


def derived_series(L: LieAlg) -> List[List[Vec]]:
    cur = [unit_vec(L.dim, i) for i in range(L.dim)]
    out = [cur]
    while True:
        nxt = _bracket_span(L, cur, cur)
        out.append(nxt)
        if len(nxt) == len(cur) or not nxt:
            return out
        cur = nxt


def lower_central_series(L: LieAlg) -> List[List[Vec]]:
    full = [unit_vec(L.dim, i) for i in range(L.dim)]
    cur = full
    out = [cur]
    while True:
        nxt = _bracket_span(L, full, cur)
        out.append(nxt)
        if len(nxt) == len(cur) or not nxt:
            return out
        cur = nxt


def series_dims(L: LieAlg) -> dict:
    """Derived and lower central series dimensions until they stabilise."""
    dd = [len(s) for s in derived_series(L)]
    ld = [len(s) for s in lower_central_series(L)]
    return {
        "derived_dims": dd,
        "lower_central_dims": ld,
        "solvable": dd[-1] == 0,
        "nilpotent": ld[-1] == 0,
    }


def is_unimodular(L: LieAlg) -> bool:
    return all(L.ad_basis(i).trace() == 0 for i in range(L.dim))


def derivation_dim(L: LieAlg) -> int:
    """Dimension of Der(L), from ``D[x, y] = [Dx, y] + [x, Dy]`` on basis pairs."""
    n = L.dim
    # unknown D[a, b] sits at column a * n + b; D e_b = sum_a D[a, b] e_a
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            cij = L.bracket_basis(i, j)
            for k in range(n):
                row = [Fraction(0)] * (n * n)
                for m in range(n):
                    row[k * n + m] += cij[m]
                for a in range(n):
                    row[a * n + i] -= L.bracket_basis(a, j)[k]
                    row[a * n + j] -= L.bracket_basis(i, a)[k]
                if any(row):
                    rows.append(row)
    if not rows:
        return n * n
    return n * n - Mat.from_rows(rows).rank()


def killing_form(L: LieAlg) -> Mat:
    ads = [L.ad_basis(i) for i in range(L.dim)]
    n = L.dim
    return Mat.from_rows([[(ads[i] @ ads[j]).trace() for j in range(n)] for i in range(n)])


def killing_signature(L: LieAlg) -> Tuple[int, int, int]:
    """(positive, negative, zero) inertia of the Killing form."""
    return symmetric_inertia(killing_form(L))


def symmetric_inertia(S: Mat) -> Tuple[int, int, int]:
    """Sylvester inertia of a rational symmetric matrix by congruence.

    Symmetric Gaussian elimination; a zero diagonal with a nonzero
    off-diagonal entry is fixed by adding row/column ``j`` to ``i``.
    """
    if not S.is_symmetric():
        raise ValueError("matrix is not symmetric")
    m = S.to_rows()
    n = len(m)
    pos = neg = 0
    active = list(range(n))
    while active:
        i = next((k for k in active if m[k][k] != 0), None)
        if i is None:
            pair = next(((a, b) for a in active for b in active if a != b and m[a][b] != 0), None)
            if pair is None:
                break
            a, b = pair
            # e_a <- e_a + e_b keeps symmetry and makes m[a][a] = 2 m[a][b] + m[b][b]
            for k in range(n):
                m[a][k] += m[b][k]
            for k in range(n):
                m[k][a] += m[k][b]
            if m[a][a] == 0:
                # m[b][b] == 0 too, so m[a][a] was 2 m[a][b] != 0; cannot happen
                raise ArithmeticError("congruence step failed")
            i = a
        p = m[i][i]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for k in active:
            if k != i and m[k][i] != 0:
                f = m[k][i] / p
                for c in range(n):
                    m[k][c] -= f * m[i][c]
                for r in range(n):
                    m[r][k] -= f * m[r][i]
        active.remove(i)
    return (pos, neg, n - pos - neg)


# -- constructions --------------------------------------------------------------

def change_basis(L: LieAlg, P: Mat) -> LieAlg:
    """Re-express the bracket in the basis ``E_i = sum_j P[j, i] e_j``."""
    if not P.is_square or P.rows != L.dim:
        raise DimensionError(f"basis change must be {L.dim}x{L.dim}")
    if det(P) == 0:
        raise SingularMatrixError("basis change matrix is singular")
    Pinv = P.inverse()
    cols = [P.col(i) for i in range(L.dim)]
    br = {}
    for a in range(L.dim):
        for b in range(a + 1, L.dim):
            br[(a, b)] = Pinv @ L.bracket(cols[a], cols[b])
    return LieAlg.from_dict(L.dim, br, L.labels)


def verify_isomorphism(L1: LieAlg, L2: LieAlg, P: Mat) -> bool:
    """True iff ``P`` is invertible and carries the bracket of L1 onto L2."""
    if L1.dim != L2.dim:
        raise DimensionError(f"dimensions differ: {L1.dim} vs {L2.dim}")
    if not P.is_square or P.rows != L1.dim or det(P) == 0:
        return False
    return change_basis(L1, P).same_constants(L2)


def direct_sum(L1: LieAlg, L2: LieAlg) -> LieAlg:
    n1, n = L1.dim, L1.dim + L2.dim
    br = []
    for i, j, c in L1.brackets:
        br.append((i, j, tuple(c) + zero_vec(L2.dim)))
    for i, j, c in L2.brackets:
        br.append((i + n1, j + n1, zero_vec(n1) + tuple(c)))
    labels = tuple(f"e{i + 1}" for i in range(n))
    return LieAlg(n, tuple(br), labels)


def _is_derivation(h: LieAlg, D: Mat) -> Optional[Tuple[int, int]]:
    n = h.dim
    for i in range(n):
        for j in range(i + 1, n):
            ei, ej = unit_vec(n, i), unit_vec(n, j)
            lhs = D @ h.bracket_basis(i, j)
            rhs = vadd(h.bracket(D @ ei, ej), h.bracket(ei, D @ ej))
            if lhs != rhs:
                return (i, j)
    return None


def semidirect_product(h: LieAlg, actions: Sequence[Mat]) -> LieAlg:
    """``R^k`` (abelian, basis first) acting on ``h`` by the given derivations."""
    k, m = len(actions), h.dim
    for a, D in enumerate(actions):
        if D.shape != (m, m):
            raise DimensionError(f"action {a} must be {m}x{m}")
        bad = _is_derivation(h, D)
        if bad is not None:
            raise NotADerivationError(
                f"action {a} is not a derivation: fails on pair "
                f"({h.labels[bad[0]]}, {h.labels[bad[1]]})")
    for a in range(k):
        for b in range(a + 1, k):
            if not (actions[a] @ actions[b] - actions[b] @ actions[a]).is_zero():
                raise NotADerivationError(f"actions {a} and {b} do not commute")
    n = k + m
    br = {}
    for a, D in enumerate(actions):
        for j in range(m):
            br[(a, k + j)] = zero_vec(k) + tuple(D.col(j))
    for i, j, c in h.brackets:
        br[(k + i, k + j)] = zero_vec(k) + tuple(c)
    return LieAlg.from_dict(n, br)


# -- invariants -----------------------------------------------------------------

@dataclass(frozen=True)
class Profile:
    dim: int
    dim_center: int
    derived_dims: Tuple[int, ...]
    lower_central_dims: Tuple[int, ...]
    solvable: bool
    nilpotent: bool
    unimodular: bool
    killing_rank: int
    killing_signature: Tuple[int, int, int]
    derivation_dim: int

    def to_json_obj(self) -> dict:
        return {
            "dim": self.dim,
            "dim_center": self.dim_center,
            "derived_dims": list(self.derived_dims),
            "lower_central_dims": list(self.lower_central_dims),
            "solvable": self.solvable,
            "nilpotent": self.nilpotent,
            "unimodular": self.unimodular,
            "killing_rank": self.killing_rank,
            "killing_signature": list(self.killing_signature),
            "derivation_dim": self.derivation_dim,
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "Profile":
        return cls(
            dim=obj["dim"],
            dim_center=obj["dim_center"],
            derived_dims=tuple(obj["derived_dims"]),
            lower_central_dims=tuple(obj["lower_central_dims"]),
            solvable=obj["solvable"],
            nilpotent=obj["nilpotent"],
            unimodular=obj["unimodular"],
            killing_rank=obj["killing_rank"],
            killing_signature=tuple(obj["killing_signature"]),
            derivation_dim=obj["derivation_dim"],
        )


def invariant_profile(L: LieAlg) -> Profile:
    s = series_dims(L)
    sig = killing_signature(L)
    return Profile(
        dim=L.dim,
        dim_center=len(center(L)),
        derived_dims=tuple(s["derived_dims"]),
        lower_central_dims=tuple(s["lower_central_dims"]),
        solvable=s["solvable"],
        nilpotent=s["nilpotent"],
        unimodular=is_unimodular(L),
        killing_rank=sig[0] + sig[1],
        killing_signature=sig,
        derivation_dim=derivation_dim(L),
    )
