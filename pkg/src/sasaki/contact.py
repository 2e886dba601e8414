"""Almost contact metric structures, normality and the Sasakian test.

Conventions (fixed once here):

* the fundamental 2-form is ``omega(X, Y) = g(Phi X, Y)`` and the
  contact-metric condition reads ``d alpha = 2 omega``;
* ``N_Phi(X, Y) = Phi^2 [X, Y] + [Phi X, Phi Y] - Phi [Phi X, Y] - Phi [X, Phi Y]``
  and normality means ``N_Phi = -d alpha (x) xi``.

Since ``N_Phi`` is even in ``Phi``, replacing ``Phi`` by ``-Phi`` turns a
structure written with ``omega(X, Y) = g(X, Phi Y)`` into one in this
convention and changes nothing else.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .exact import (
    DimensionError,
    Mat,
    Vec,
    det,
    dot,
    fmt_q,
    is_zero_vec,
    kernel,
    solve_linear,
    span_basis,
    unit_vec,
    vadd,
    vec,
    vscale,
    vsub,
)
from .forms import KForm, ce_d, reeb
from .lie import LieAlg, center

__all__ = [
    "ACMS",
    "SasakiReport",
    "AdXiReport",
    "NotPositiveDefiniteError",
    "is_positive_definite",
    "phi_from_pairs",
    "metric_from_dalpha",
    "transport",
    "verify_almost_contact",
    "nijenhuis",
    "verify_sasakian",
    "adxi_analysis",
    "kernel_subalgebra",
    "sasaki_dim_obstruction",
]


class NotPositiveDefiniteError(ValueError):
    pass


def is_positive_definite(g: Mat) -> bool:
    """Sylvester's criterion on leading principal minors."""
    if not g.is_symmetric():
        return False
    n = g.rows
    for k in range(1, n + 1):
        sub = Mat.from_rows([[g[i, j] for j in range(k)] for i in range(k)])
        if det(sub) <= 0:
            return False
    return True


@dataclass(frozen=True)
class ACMS:
    """``(Phi, alpha, xi, g)`` in a fixed basis.

    ``Phi`` acts on column vectors; ``g`` is the Gram matrix.  Only the
    metric is validated here: the structure axioms are what the verify
    functions report on.
    """

    Phi: Mat
    alpha: KForm
    xi: Vec
    g: Mat

    def __post_init__(self):
        n = self.Phi.rows
        object.__setattr__(self, "xi", vec(self.xi))
        if self.Phi.shape != (n, n) or self.g.shape != (n, n):
            raise DimensionError("Phi and g must be square of the same size")
        if self.alpha.degree != 1 or self.alpha.dim != n or len(self.xi) != n:
            raise DimensionError("alpha and xi must live on the same space as Phi")
        if not self.g.is_symmetric():
            raise NotPositiveDefiniteError("metric is not symmetric")
        if not is_positive_definite(self.g):
            raise NotPositiveDefiniteError("metric is not positive definite")

    @property
    def dim(self) -> int:
        return self.Phi.rows

    @property
    def alpha_vec(self) -> Vec:
        return self.alpha.as_vector()

    def to_json_obj(self) -> dict:
        return {
            "Phi": [[fmt_q(x) for x in r] for r in self.Phi.to_rows()],
            "alpha": self.alpha.to_json_obj(),
            "xi": [fmt_q(x) for x in self.xi],
            "g": [[fmt_q(x) for x in r] for r in self.g.to_rows()],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "ACMS":
        return cls(Mat.from_rows(obj["Phi"]), KForm.from_json_obj(obj["alpha"]),
                   vec(obj["xi"]), Mat.from_rows(obj["g"]))


def phi_from_pairs(dim: int, pairs: Sequence[Tuple[Sequence, Sequence]], xi: Sequence) -> Mat:
    """Endomorphism with ``Phi u = v``, ``Phi v = -u`` for each pair and ``Phi xi = 0``.

    The vectors ``u, v`` of all pairs together with ``xi`` must form a basis.
    """
    dom: List[Vec] = []
    img: List[Vec] = []
    for u, v in pairs:
        u, v = vec(u), vec(v)
        dom += [u, v]
        img += [v, tuple(-x for x in u)]
    dom.append(vec(xi))
    img.append((Fraction(0),) * dim)
    D = Mat.from_cols(dom)
    if D.shape != (dim, dim) or det(D) == 0:
        raise ValueError("pairs plus xi do not form a basis")
    return Mat.from_cols(img) @ D.inverse()


def metric_from_dalpha(L: LieAlg, Phi: Mat, alpha: KForm) -> Mat:
    """``g = alpha (x) alpha - 1/2 d alpha(Phi ., .)``.

    This is the only metric making ``d alpha = 2 g(Phi ., .)`` together
    with ``g(xi, .) = alpha``.  May fail to be positive definite; the
    caller's :class:`ACMS` construction rejects that.
    """
    a = alpha.as_vector()
    B = ce_d(L, alpha).as_matrix()
    G = Mat.outer(a, a) - (Phi.T @ B).scale(Fraction(1, 2))
    if not G.is_symmetric():
        raise ValueError("d alpha(Phi ., .) is not symmetric; Phi is not compatible with d alpha")
    return G


def transport(S: ACMS, P: Mat) -> ACMS:
    """Express ``S`` in the basis ``E_i = sum_j P[j, i] e_j``."""
    Pinv = P.inverse()
    return ACMS(Pinv @ S.Phi @ P, S.alpha.pullback(P), Pinv @ S.xi, P.T @ S.g @ P)


# -- reports ---------------------------------------------------------------------

@dataclass
class SasakiReport:
    almost_contact: Optional[bool] = None
    compatible: Optional[bool] = None
    contact_metric: Optional[bool] = None
    normal: Optional[bool] = None
    counterexamples: Dict[str, str] = field(default_factory=dict)

    @property
    def sasakian(self) -> bool:
        return bool(self.almost_contact and self.compatible and self.contact_metric and self.normal)

    def first_failure(self) -> Optional[str]:
        for name in ("almost_contact", "compatible", "contact_metric", "normal"):
            if getattr(self, name) is False:
                return f"{name}: {self.counterexamples.get(name, '')}"
        return None

    def to_json_obj(self) -> dict:
        return {
            "almost_contact": self.almost_contact,
            "compatible": self.compatible,
            "contact_metric": self.contact_metric,
            "normal": self.normal,
            "sasakian": self.sasakian,
            "counterexamples": dict(sorted(self.counterexamples.items())),
        }


def _lab(L: Optional[LieAlg], i: int) -> str:
    return L.labels[i] if L is not None else f"e{i + 1}"


def _vfmt(v: Sequence[Fraction]) -> str:
    return "(" + ", ".join(fmt_q(x) for x in v) + ")"


def verify_almost_contact(L: LieAlg, S: ACMS) -> SasakiReport:
    """Almost contact identities and metric compatibility, basis-wise."""
    n = L.dim
    if S.dim != n:
        raise DimensionError("structure and algebra dimensions differ")
    rep = SasakiReport()
    a, xi, Phi, g = S.alpha_vec, S.xi, S.Phi, S.g

    def fail(msg: str) -> SasakiReport:
        rep.almost_contact = False
        rep.counterexamples["almost_contact"] = msg
        return rep

    if dot(a, xi) != 1:
        fail(f"alpha(xi) = {fmt_q(dot(a, xi))} != 1")
    elif not is_zero_vec(Phi @ xi):
        fail(f"Phi xi = {_vfmt(Phi @ xi)} != 0")
    elif not is_zero_vec(Phi.T @ a):
        j = next(j for j, x in enumerate(Phi.T @ a) if x)
        fail(f"alpha(Phi {_lab(L, j)}) != 0")
    else:
        target = Mat.outer(xi, a) - Mat.identity(n)
        P2 = Phi @ Phi
        if P2 != target:
            i, j = next((i, j) for i in range(n) for j in range(n) if P2[i, j] != target[i, j])
            fail(f"Phi^2 != -I + xi (x) alpha at entry ({i + 1}, {j + 1})")
        else:
            rep.almost_contact = True

    lhs = Phi.T @ g @ Phi
    rhs = g - Mat.outer(a, a)
    if lhs == rhs:
        rep.compatible = True
    else:
        i, j = next((i, j) for i in range(n) for j in range(n) if lhs[i, j] != rhs[i, j])
        rep.compatible = False
        rep.counterexamples["compatible"] = (
            f"g(Phi {_lab(L, i)}, Phi {_lab(L, j)}) = {fmt_q(lhs[i, j])} "
            f"!= g - alpha(x)alpha = {fmt_q(rhs[i, j])}")
    return rep


def nijenhuis(L: LieAlg, Phi: Mat) -> Tuple[Tuple[Vec, ...], ...]:
    """``N[i][j] = N_Phi(e_i, e_j)``."""
    n = L.dim
    P2 = Phi @ Phi
    cols = [Phi.col(j) for j in range(n)]
    out = [[(Fraction(0),) * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        ei = unit_vec(n, i)
        for j in range(i + 1, n):
            ej = unit_vec(n, j)
            v = P2 @ L.bracket_basis(i, j)
            v = vadd(v, L.bracket(cols[i], cols[j]))
            v = vsub(v, Phi @ L.bracket(cols[i], ej))
            v = vsub(v, Phi @ L.bracket(ei, cols[j]))
            out[i][j] = v
            out[j][i] = tuple(-x for x in v)
    return tuple(tuple(r) for r in out)


def verify_sasakian(L: LieAlg, S: ACMS) -> SasakiReport:
    rep = verify_almost_contact(L, S)
    n = L.dim
    B = ce_d(L, S.alpha).as_matrix()
    W = (S.Phi.T @ S.g).scale(2)  # 2 omega(e_i, e_j) = 2 g(Phi e_i, e_j)
    if B == W:
        rep.contact_metric = True
    else:
        i, j = next((i, j) for i in range(n) for j in range(n) if B[i, j] != W[i, j])
        rep.contact_metric = False
        rep.counterexamples["contact_metric"] = (
            f"d alpha({_lab(L, i)}, {_lab(L, j)}) = {fmt_q(B[i, j])} "
            f"!= 2 omega = {fmt_q(W[i, j])}")
    N = nijenhuis(L, S.Phi)
    rep.normal = True
    for i in range(n):
        for j in range(i + 1, n):
            want = vscale(-B[i, j], S.xi)
            if N[i][j] != want:
                rep.normal = False
                rep.counterexamples["normal"] = (
                    f"N({_lab(L, i)}, {_lab(L, j)}) = {_vfmt(N[i][j])} "
                    f"!= -d alpha (x) xi = {_vfmt(want)}")
                break
        if not rep.normal:
            break
    return rep


# -- ad_xi structure theory --------------------------------------------------------

@dataclass
class AdXiReport:
    commute: bool
    sym: bool
    skew: bool
    ker_basis: List[Vec]
    im_basis: List[Vec]
    orthogonal: bool

    @property
    def ok(self) -> bool:
        return self.commute and self.sym and self.skew and self.orthogonal

    def to_json_obj(self) -> dict:
        return {
            "commute": self.commute,
            "sym": self.sym,
            "skew": self.skew,
            "orthogonal": self.orthogonal,
            "dim_ker": len(self.ker_basis),
            "dim_im": len(self.im_basis),
            "ker_basis": [[fmt_q(x) for x in v] for v in self.ker_basis],
            "im_basis": [[fmt_q(x) for x in v] for v in self.im_basis],
        }


def adxi_analysis(L: LieAlg, S: ACMS) -> AdXiReport:
    n = L.dim
    A = L.ad(S.xi)
    g, Phi = S.g, S.Phi
    AP = A @ Phi
    ker = kernel(A)
    im = span_basis([A.col(j) for j in range(n)], n)
    orth = len(ker) + len(im) == n and all(
        dot(k, g @ m) == 0 for k in ker for m in im)
    return AdXiReport(
        commute=AP == Phi @ A,
        sym=AP.T @ g == g @ AP,
        skew=A.T @ g == -(g @ A),
        ker_basis=ker,
        im_basis=im,
        orthogonal=orth,
    )


def _coords(basis: Sequence[Vec], v: Sequence[Fraction]) -> Optional[Vec]:
    return solve_linear(Mat.from_cols(basis), v)


def kernel_subalgebra(L: LieAlg, S: ACMS) -> Tuple[LieAlg, ACMS]:
    """Restrict everything to ``ker ad_xi`` (trivial-center case).

    The basis of the subalgebra is the echelon basis of ``ker ad_xi``.
    """
    if L.dim < 5:
        raise ValueError("kernel subalgebra needs dim >= 5")
    if center(L):
        raise ValueError("algebra has non-trivial center")
    K = kernel(L.ad(S.xi))
    m = len(K)
    br = {}
    for a in range(m):
        for b in range(a + 1, m):
            c = _coords(K, L.bracket(K[a], K[b]))
            if c is None:
                raise ArithmeticError(
                    f"ker ad_xi is not closed: [{_vfmt(K[a])}, {_vfmt(K[b])}] escapes it")
            br[(a, b)] = c
    sub = LieAlg.from_dict(m, br)
    phi_cols = []
    for k in K:
        c = _coords(K, S.Phi @ k)
        if c is None:
            raise ArithmeticError("ker ad_xi is not Phi-invariant")
        phi_cols.append(c)
    xi = _coords(K, S.xi)
    if xi is None:
        raise ArithmeticError("xi not in ker ad_xi")
    Kmat = Mat.from_cols(K)
    alpha = S.alpha.restrict(K)
    return sub, ACMS(Mat.from_cols(phi_cols), alpha, xi, Kmat.T @ S.g @ Kmat)


def ker_im_bracket_closed(L: LieAlg, S: ACMS) -> bool:
    """``[ker ad_xi, Im ad_xi]`` stays inside ``Im ad_xi``."""
    rep = adxi_analysis(L, S)
    if not rep.im_basis:
        return True
    return all(
        is_zero_vec(w) or _coords(rep.im_basis, w) is not None
        for k in rep.ker_basis for m in rep.im_basis for w in [L.bracket(k, m)])


def sasaki_dim_obstruction(L: LieAlg, alpha: KForm) -> dict:
    """``ker ad_xi`` intersected with ``ker alpha`` for the Reeb vector of alpha.

    A Sasakian ``Phi`` would have to preserve this subspace, which is
    impossible when its dimension is odd.
    """
    xi = reeb(L, alpha)
    A = L.ad(xi)
    M = Mat.from_rows(A.to_rows() + [list(alpha.as_vector())])
    basis = kernel(M)
    return {
        "xi": xi,
        "subspace_basis": basis,
        "dim": len(basis),
        "obstructed": len(basis) % 2 == 1,
    }
