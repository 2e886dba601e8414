"""Independent reference computations in sympy.

Nothing here calls into the package's linear algebra or geometry; the
inputs are plain bracket tables ``c[i][j] = [e_i, e_j]`` (lists of
rationals) and Gram matrices.
"""
from __future__ import annotations

from fractions import Fraction

import sympy as sp


def table_of(L):
    """Bracket table as nested lists of sympy Rationals."""
    n = L.dim
    return [[[sp.Rational(x.numerator, x.denominator) for x in L.bracket_basis(i, j)] for j in range(n)]
            for i in range(n)]


def table_from_differentials(des):
    """``des[k] = {(i, j): coeff}`` (0-based, i < j) with ``d beta(X, Y) = -beta([X, Y])``."""
    n = len(des)
    c = [[[sp.Integer(0)] * n for _ in range(n)] for _ in range(n)]
    for k, d in enumerate(des):
        for (i, j), v in d.items():
            v = sp.nsimplify(v)
            c[i][j][k] -= v
            c[j][i][k] += v
    return c


def _br(c, u, v):
    n = len(c)
    out = [sp.Integer(0)] * n
    for i in range(n):
        if u[i] == 0:
            continue
        for j in range(n):
            if v[j] == 0:
                continue
            for k in range(n):
                out[k] += u[i] * v[j] * c[i][j][k]
    return out


def jacobi_holds(c) -> bool:
    n = len(c)
    E = [[sp.Integer(int(i == j)) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                s = [a + b + d for a, b, d in zip(_br(c, E[i], _br(c, E[j], E[k])),
                                                 _br(c, E[j], _br(c, E[k], E[i])),
                                                 _br(c, E[k], _br(c, E[i], E[j])))]
                if any(sp.simplify(x) != 0 for x in s):
                    return False
    return True


def ricci_orthonormal(c):
    """Ricci tensor of a left-invariant metric for which the basis is orthonormal.

    Standard formula for unimodular-or-not metric Lie algebras:
    ``Ric(X,Y) = -1/2 sum |[X,e_i]|.[Y,e_i] - 1/2 B(X,Y)
    + 1/4 sum <[e_i,e_j],X><[e_i,e_j],Y> - 1/2 (<[H,X],Y> + <[H,Y],X>)``
    with ``<H, Z> = tr ad_Z``.
    """
    n = len(c)
    E = [[sp.Integer(int(i == j)) for j in range(n)] for i in range(n)]

    def ad(x):
        return sp.Matrix([_br(c, x, E[j]) for j in range(n)]).T

    H = [ad(E[k]).trace() for k in range(n)]
    R = sp.zeros(n)
    for a in range(n):
        for b in range(a, n):
            X, Y = E[a], E[b]
            t = -sp.Rational(1, 2) * sum(sp.Matrix(_br(c, X, E[i])).dot(sp.Matrix(_br(c, Y, E[i])))
                                        for i in range(n))
            t -= sp.Rational(1, 2) * (ad(X) * ad(Y)).trace()
            t += sp.Rational(1, 4) * sum(_br(c, E[i], E[j])[a] * _br(c, E[i], E[j])[b]
                                        for i in range(n) for j in range(n))
            t -= sp.Rational(1, 2) * (sp.Matrix(_br(c, H, X)).dot(sp.Matrix(Y))
                                     + sp.Matrix(_br(c, H, Y)).dot(sp.Matrix(X)))
            R[a, b] = R[b, a] = sp.simplify(t)
    return R


def ricci_oracle(c, G):
    """Ricci matrix in the original basis for Gram matrix ``G``.

    Passes to the orthonormal frame ``F = (chol G)^{-T}`` (columns), applies
    :func:`ricci_orthonormal` and transforms back.
    """
    n = len(c)
    G = sp.Matrix(G)
    Lc = G.cholesky(hermitian=False)
    F = Lc.T.inv()                    # columns: orthonormal frame in old coordinates
    Finv = F.inv()
    cols = [list(F[:, i]) for i in range(n)]
    cf = [[[sp.simplify(x) for x in Finv * sp.Matrix(_br(c, cols[i], cols[j]))] for j in range(n)]
          for i in range(n)]
    Rf = ricci_orthonormal(cf)
    return (Finv.T * Rf * Finv).applyfunc(sp.simplify)


def to_sympy(M):
    """Package Mat -> sympy Matrix."""
    return sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in r] for r in M.to_rows()])


def from_sympy(v):
    return [Fraction(int(sp.fraction(x)[0]), int(sp.fraction(x)[1])) for x in v]
