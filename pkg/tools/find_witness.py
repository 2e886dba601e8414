"""Offline search for basis-change witnesses between Lie algebras.

Not imported by the package.  Given two algebras written as structure
equations with sympy coefficients and an ansatz for the basis-change matrix
(a matrix of sympy expressions with unknown symbols), solve the bracket
preservation equations ``[P a, P b]_1 = P [a, b]_2`` for the unknowns.
The solutions found here are frozen into ``catalog.json``; the package only
verifies them.

Usage is interactive::

    python3 tools/find_witness.py            # runs the searches below
"""
from __future__ import annotations

import sympy as sp


def brackets(n, des):
    """des: list of dicts {(i, j): coeff} (1-based, i<j) for de^k."""
    c = {}
    for k, de in enumerate(des):
        for (i, j), v in de.items():
            i, j = i - 1, j - 1
            c.setdefault((i, j), [0] * n)[k] -= v
            c.setdefault((j, i), [0] * n)[k] += v
    def br(u, v):
        out = [0] * n
        for (i, j), w in c.items():
            f = u[i] * v[j]
            if f != 0:
                for k in range(n):
                    out[k] += f * w[k]
        return sp.Matrix(out)
    return br


def equations(n, des1, des2, P):
    br1, br2 = brackets(n, des1), brackets(n, des2)
    eqs = []
    E = sp.eye(n)
    for a in range(n):
        for b in range(a + 1, n):
            lhs = br1(list(P[:, a]), list(P[:, b]))
            rhs = P * br2(list(E[:, a]), list(E[:, b]))
            eqs += [sp.expand(x) for x in (lhs - rhs) if sp.expand(x) != 0]
    return eqs


def solve(n, des1, des2, P, unknowns):
    eqs = equations(n, des1, des2, P)
    sols = sp.solve(eqs, unknowns, dict=True)
    out = []
    for s in sols:
        Q = P.subs(s)
        if sp.simplify(Q.det()) != 0:
            out.append(Q)
    return out


def d(*terms):
    """d("12", 1, "34", -1) -> {(1,2): 1, (3,4): -1}"""
    return {(int(k[0]), int(k[1])): v for k, v in zip(terms[::2], terms[1::2])}


if __name__ == "__main__":
    lam, mu, tau, delta = sp.symbols("lambda mu tau delta")
    x = sp.symbols("x1:26")
    # g6^tau -> g6: E1 = 2 e1 + tau e5 completed by a diagonal rescaling
    g6t = [d("14", 2), d("24", -1), d("12", -1, "34", 1), {}, d("14", tau, "23", 1)]
    g6 = [d("14", 2), d("24", -1), d("12", -1, "34", 1), {}, d("23", 1)]
    P = sp.Matrix([[x[0], 0, 0, 0, 0], [0, x[1], 0, 0, 0], [0, 0, x[2], 0, 0],
                   [0, 0, 0, x[3], 0], [x[4], 0, 0, 0, x[5]]])
    print("g6tau -> g6", solve(5, g6t, g6, P, [x[0], x[1], x[2], x[3], x[4], x[5]]))
