"""Levi-Civita connection, curvature and Ricci tensor of left-invariant metrics.

``R(X, Y) = [nabla_X, nabla_Y] - nabla_[X, Y]`` and
``Ric(Y, Z) = trace(X -> R(X, Y) Z)``.  With these signs the Sasakian
identity ``R(X, Y) xi = alpha(Y) X - alpha(X) Y`` holds and
``Ric(xi, xi) = 2n``.  The trace form of Ricci needs no orthonormal frame,
so it stays rational for every rational metric.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .exact import DimensionError, Mat, Vec, dot, solve_linear, unit_vec, vsub
from .contact import ACMS, is_positive_definite
from .lie import LieAlg

__all__ = [
    "Conn",
    "levi_civita",
    "curvature",
    "ricci",
    "sasaki_identity_failures",
    "check_sasaki_curvature_identity",
    "alpha_einstein",
    "bianchi_failures",
    "pair_symmetry_failures",
]


@dataclass(frozen=True)
class Conn:
    """``gamma[i][j]`` is ``nabla_{e_i} e_j`` as a coordinate vector."""

    gamma: Tuple[Tuple[Vec, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.gamma)

    def christoffel(self, k: int, i: int, j: int) -> Fraction:
        return self.gamma[i][j][k]

    def matrix(self, i: int) -> Mat:
        """``nabla_{e_i}`` as a matrix acting on coordinates."""
        return Mat.from_cols(self.gamma[i])

    def along(self, x: Sequence[Fraction]) -> Mat:
        n = self.dim
        out = Mat.zeros(n)
        for i, xi in enumerate(x):
            if xi:
                out = out + self.matrix(i).scale(xi)
        return out


def levi_civita(L: LieAlg, g: Mat) -> Conn:
    """Koszul formula for left-invariant fields:

    ``2 g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y)``.
    """
    n = L.dim
    if g.shape != (n, n) or not g.is_symmetric():
        raise DimensionError("metric must be a symmetric dim x dim matrix")
    if not is_positive_definite(g):
        raise ValueError("metric is not positive definite")
    ginv = g.inverse()
    half = Fraction(1, 2)
    gamma = []
    for i in range(n):
        row = []
        for j in range(n):
            rhs = []
            for k in range(n):
                t = dot(g @ L.bracket_basis(i, j), unit_vec(n, k))
                t -= dot(g @ L.bracket_basis(j, k), unit_vec(n, i))
                t += dot(g @ L.bracket_basis(k, i), unit_vec(n, j))
                rhs.append(half * t)
            row.append(ginv @ rhs)
        gamma.append(tuple(row))
    return Conn(tuple(gamma))


def torsion_failures(L: LieAlg, c: Conn) -> List[Tuple[int, int]]:
    n = L.dim
    return [(i, j) for i in range(n) for j in range(i + 1, n)
            if vsub(c.gamma[i][j], c.gamma[j][i]) != L.bracket_basis(i, j)]


def metric_failures(L: LieAlg, c: Conn, g: Mat) -> List[int]:
    """Directions ``i`` where ``nabla_{e_i}`` is not g-skew."""
    out = []
    for i in range(L.dim):
        N = c.matrix(i)
        if N.T @ g != -(g @ N):
            out.append(i)
    return out


def curvature(L: LieAlg, c: Conn) -> Tuple[Tuple[Mat, ...], ...]:
    """``R[i][j]`` is the endomorphism ``R(e_i, e_j)``."""
    n = L.dim
    mats = [c.matrix(i) for i in range(n)]
    zero = Mat.zeros(n)
    R = [[zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            Rij = mats[i] @ mats[j] - mats[j] @ mats[i] - c.along(L.bracket_basis(i, j))
            R[i][j] = Rij
            R[j][i] = -Rij
    return tuple(tuple(r) for r in R)


def ricci_from_curvature(R) -> Mat:
    n = len(R)
    rows = [[sum((R[i][a][i, b] for i in range(n)), Fraction(0)) for b in range(n)] for a in range(n)]
    # Ric(a, b) = sum_i coefficient of e_i in R(e_i, e_a) e_b
    return Mat.from_rows(rows)


def ricci(L: LieAlg, g: Mat) -> Mat:
    return ricci_from_curvature(curvature(L, levi_civita(L, g)))


def sasaki_identity_failures(L: LieAlg, S: ACMS, R=None) -> List[Tuple[int, int]]:
    """Pairs where ``R(e_i, e_j) xi != alpha(e_j) e_i - alpha(e_i) e_j``."""
    n = L.dim
    if R is None:
        R = curvature(L, levi_civita(L, S.g))
    a = S.alpha_vec
    bad = []
    for i in range(n):
        for j in range(i + 1, n):
            want = tuple(a[j] * x - a[i] * y for x, y in zip(unit_vec(n, i), unit_vec(n, j)))
            if R[i][j] @ S.xi != want:
                bad.append((i, j))
    return bad


def check_sasaki_curvature_identity(L: LieAlg, S: ACMS) -> bool:
    """``R(X,Y) xi = alpha(Y) X - alpha(X) Y`` and ``Ric(xi, X) = 2n alpha(X)``."""
    R = curvature(L, levi_civita(L, S.g))
    if sasaki_identity_failures(L, S, R):
        return False
    Ric = ricci_from_curvature(R)
    twon = L.dim - 1
    return tuple(Ric.T @ S.xi) == tuple(twon * x for x in S.alpha_vec)


def alpha_einstein(L: LieAlg, S: ACMS, Ric: Optional[Mat] = None) -> Optional[Tuple[Fraction, Fraction]]:
    """``(lambda, nu)`` with ``Ric = lambda g + nu alpha (x) alpha``, if any."""
    if Ric is None:
        Ric = ricci(L, S.g)
    aa = Mat.outer(S.alpha_vec, S.alpha_vec)
    A = Mat.from_cols([S.g.entries, aa.entries])
    sol = solve_linear(A, Ric.entries)
    if sol is None:
        return None
    return sol[0], sol[1]


def _g(gm: Mat, u, v) -> Fraction:
    return dot(u, gm @ v)


def pair_symmetry_failures(L: LieAlg, g: Mat, R=None) -> List[Tuple[int, int, int, int]]:
    """Quadruples violating ``g(R(X,Y)Z, W) = g(R(Z,W)X, Y)``."""
    n = L.dim
    if R is None:
        R = curvature(L, levi_civita(L, g))
    e = [unit_vec(n, i) for i in range(n)]
    bad = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if _g(g, R[i][j] @ e[k], e[l]) != _g(g, R[k][l] @ e[i], e[j]):
                        bad.append((i, j, k, l))
    return bad


def bianchi_failures(L: LieAlg, g: Mat, R=None) -> List[Tuple[int, int, int]]:
    """Triples violating ``R(X,Y)Z + R(Y,Z)X + R(Z,X)Y = 0``."""
    n = L.dim
    if R is None:
        R = curvature(L, levi_civita(L, g))
    e = [unit_vec(n, i) for i in range(n)]
    bad = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                s = [a + b + c for a, b, c in zip(R[i][j] @ e[k], R[j][k] @ e[i], R[k][i] @ e[j])]
                if any(s):
                    bad.append((i, j, k))
    return bad
