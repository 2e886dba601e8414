"""Kähler Lie algebras and the Sasakian/Kähler dictionary.

A Sasakian algebra whose center is spanned by the Reeb vector projects to
a Kähler structure on ``ker alpha``; conversely a Kähler algebra
``(h, J, omega, g)`` extends centrally by ``[X, Y] = [X, Y]_h - 2 omega(X, Y) xi``
(so that ``d alpha = 2 omega`` afterwards).  Same ``omega(X, Y) = g(JX, Y)``
convention as :mod:`sasaki.contact`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .contact import ACMS, is_positive_definite
from .exact import DimensionError, Mat, Vec, det, dot, fmt_q, kernel, solve_linear, unit_vec
from .forms import KForm, basis_form, ce_d
from .lie import LieAlg, center, change_basis

__all__ = [
    "KahlerStruct",
    "KahlerReport",
    "kahler_from_omega",
    "verify_kahler",
    "sasaki_quotient",
    "central_extension",
    "kahler_equivalence_witness",
]


@dataclass(frozen=True)
class KahlerStruct:
    J: Mat
    omega: KForm
    g: Mat

    def __post_init__(self):
        n = self.J.rows
        if self.J.shape != (n, n) or self.g.shape != (n, n):
            raise DimensionError("J and g must be square of the same size")
        if self.omega.degree != 2 or self.omega.dim != n:
            raise DimensionError("omega must be a 2-form on the same space")
        if not is_positive_definite(self.g):
            raise ValueError("Kähler metric is not positive definite")

    @property
    def dim(self) -> int:
        return self.J.rows

    def to_json_obj(self) -> dict:
        return {
            "J": [[fmt_q(x) for x in r] for r in self.J.to_rows()],
            "omega": self.omega.to_json_obj(),
            "g": [[fmt_q(x) for x in r] for r in self.g.to_rows()],
        }


def kahler_from_omega(J: Mat, omega: KForm) -> KahlerStruct:
    """Metric forced by ``omega(X, Y) = g(JX, Y)``: ``g(X, Y) = omega(X, JY)``."""
    W = omega.as_matrix()
    return KahlerStruct(J, omega, W @ J)


@dataclass
class KahlerReport:
    complex_structure: Optional[bool] = None
    compatible: Optional[bool] = None
    closed: Optional[bool] = None
    integrable: Optional[bool] = None
    counterexamples: Dict[str, str] = field(default_factory=dict)

    @property
    def kahler(self) -> bool:
        return bool(self.complex_structure and self.compatible and self.closed and self.integrable)

    def first_failure(self) -> Optional[str]:
        for name in ("complex_structure", "compatible", "closed", "integrable"):
            if getattr(self, name) is False:
                return f"{name}: {self.counterexamples.get(name, '')}"
        return None

    def to_json_obj(self) -> dict:
        return {
            "complex_structure": self.complex_structure,
            "compatible": self.compatible,
            "closed": self.closed,
            "integrable": self.integrable,
            "kahler": self.kahler,
            "counterexamples": dict(sorted(self.counterexamples.items())),
        }


def _nijenhuis_J(h: LieAlg, J: Mat):
    n = h.dim
    cols = [J.col(j) for j in range(n)]
    for i in range(n):
        ei = unit_vec(n, i)
        for j in range(i + 1, n):
            ej = unit_vec(n, j)
            v = [a + b - c - d for a, b, c, d in zip(
                (J @ J) @ h.bracket_basis(i, j),
                h.bracket(cols[i], cols[j]),
                J @ h.bracket(cols[i], ej),
                J @ h.bracket(ei, cols[j]))]
            if any(v):
                return (i, j)
    return None


def verify_kahler(h: LieAlg, K: KahlerStruct) -> KahlerReport:
    """``J^2 = -I``; ``g(JX,JY) = g`` and ``omega = g(J., .)``; ``d omega = 0``; ``N_J = 0``."""
    n = h.dim
    if n % 2:
        raise DimensionError("Kähler algebras are even-dimensional")
    if K.dim != n:
        raise DimensionError("structure and algebra dimensions differ")
    rep = KahlerReport()
    J, g = K.J, K.g
    rep.complex_structure = J @ J == -Mat.identity(n)
    if not rep.complex_structure:
        rep.counterexamples["complex_structure"] = "J^2 != -I"
    W = K.omega.as_matrix()
    if J.T @ g @ J != g:
        rep.compatible = False
        rep.counterexamples["compatible"] = "g(JX, JY) != g(X, Y)"
    elif J.T @ g != W:
        i, j = next((i, j) for i in range(n) for j in range(n) if (J.T @ g)[i, j] != W[i, j])
        rep.compatible = False
        rep.counterexamples["compatible"] = (
            f"omega(e{i + 1}, e{j + 1}) = {fmt_q(W[i, j])} != g(J e{i + 1}, e{j + 1})")
    else:
        rep.compatible = True
    dw = ce_d(h, K.omega)
    rep.closed = dw.is_zero()
    if not rep.closed:
        rep.counterexamples["closed"] = f"d omega = {dw.pretty()}"
    bad = _nijenhuis_J(h, J)
    rep.integrable = bad is None
    if bad is not None:
        rep.counterexamples["integrable"] = f"N_J(e{bad[0] + 1}, e{bad[1] + 1}) != 0"
    return rep


def _kernel_alpha_basis(S: ACMS) -> List[Vec]:
    a = S.alpha_vec
    n = len(a)
    # prefer the coordinate complement when alpha is a dual basis vector
    nz = [i for i, x in enumerate(a) if x]
    if len(nz) == 1:
        return [unit_vec(n, i) for i in range(n) if i != nz[0]]
    return kernel(Mat.from_rows([list(a)]))


def sasaki_quotient(L: LieAlg, S: ACMS) -> Tuple[LieAlg, KahlerStruct]:
    """Kähler algebra on ``ker alpha`` with the projected bracket.

    When ``alpha`` is a multiple of a dual basis covector ``e^k`` the basis of
    ``ker alpha`` is the remaining ``e_i`` in order.
    """
    z = center(L)
    if not z:
        raise ValueError("algebra has trivial center; no Kähler quotient")
    if len(z) != 1 or solve_linear(Mat.from_cols(z), S.xi) is None:
        raise ValueError("center is not spanned by the Reeb vector")
    H = _kernel_alpha_basis(S)
    m = len(H)
    Hm = Mat.from_cols(H)
    a = S.alpha_vec

    def coords(v):
        # project along xi onto ker alpha, then solve in the H basis
        t = dot(a, v)
        w = tuple(x - t * y for x, y in zip(v, S.xi))
        c = solve_linear(Hm, w)
        assert c is not None
        return c

    br = {}
    for i in range(m):
        for j in range(i + 1, m):
            br[(i, j)] = coords(L.bracket(H[i], H[j]))
    h = LieAlg.from_dict(m, br)
    J = Mat.from_cols([coords(S.Phi @ v) for v in H])
    omega = ce_d(L, S.alpha).restrict(H).scale(Fraction(1, 2))
    g = Hm.T @ S.g @ Hm
    return h, KahlerStruct(J, omega, g)


def central_extension(h: LieAlg, K: KahlerStruct) -> Tuple[LieAlg, ACMS]:
    """``g = h + R xi`` (xi last) with ``[X, Y] = [X, Y]_h - 2 omega(X, Y) xi``."""
    rep = verify_kahler(h, K)
    if not rep.kahler:
        raise ValueError(f"not a Kähler algebra: {rep.first_failure()}")
    m = h.dim
    n = m + 1
    W = K.omega.as_matrix()
    br = {}
    for i in range(m):
        for j in range(i + 1, m):
            br[(i, j)] = tuple(h.bracket_basis(i, j)) + (-2 * W[i, j],)
    L = LieAlg.from_dict(n, br)
    Phi = Mat.from_rows([list(K.J.row(i)) + [0] for i in range(m)] + [[0] * n])
    g = Mat.from_rows([list(K.g.row(i)) + [0] for i in range(m)] + [[0] * m + [1]])
    S = ACMS(Phi, basis_form(n, m), unit_vec(n, m), g)
    return L, S


def kahler_equivalence_witness(h1: LieAlg, K1: KahlerStruct, h2: LieAlg, K2: KahlerStruct, P: Mat) -> bool:
    """True iff ``P`` identifies the two Kähler algebras.

    Columns of ``P`` are the images of h2's basis inside h1 (the same
    orientation as :func:`sasaki.lie.verify_isomorphism`); the complex
    structure, metric and Kähler form must be carried over exactly.
    """
    if h1.dim != h2.dim:
        raise DimensionError("dimensions differ")
    if P.shape != (h1.dim, h1.dim) or det(P) == 0:
        return False
    if not change_basis(h1, P).same_constants(h2):
        return False
    Pinv = P.inverse()
    return (Pinv @ K1.J @ P == K2.J
            and P.T @ K1.g @ P == K2.g
            and K1.omega.pullback(P) == K2.omega)
