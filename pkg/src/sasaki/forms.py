"""Alternating forms on a Lie algebra and the Chevalley-Eilenberg differential.

Forms are stored by coefficients on strictly increasing index tuples and
evaluate with the determinant convention
``e^{ij}(e_k, e_l) = d_ik d_jl - d_il d_jk`` (no 1/k! factors).  With it,
``e^1 ^ e^2 = e^{12}`` and ``(e^{12} + e^{34})^2 = 2 e^{1234}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Mapping, Optional, Sequence, Tuple

from .exact import DimensionError, Mat, Vec, det, fmt_q, q, solve_linear
from .lie import LieAlg

__all__ = [
    "KForm",
    "NotContactError",
    "basis_form",
    "one_form",
    "ce_d",
    "wedge",
    "is_contact",
    "contact_volume",
    "reeb",
]

Index = Tuple[int, ...]


class NotContactError(ValueError):
    pass


def _sort_sign(idx: Sequence[int]) -> Tuple[int, Optional[Index]]:
    """Sign of the sorting permutation, or (0, None) on a repeated index."""
    if len(set(idx)) != len(idx):
        return 0, None
    arr = list(idx)
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(arr)):
        j = i
        while j > 0 and arr[j - 1] > arr[j]:
            arr[j - 1], arr[j] = arr[j], arr[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(arr)


@dataclass(frozen=True)
class KForm:
    degree: int
    dim: int
    terms: Tuple[Tuple[Index, Fraction], ...] = ()

    def __post_init__(self):
        if self.degree < 0 or self.dim <= 0:
            raise DimensionError("bad degree/dim")
        acc: Dict[Index, Fraction] = {}
        for idx, c in self.terms:
            idx = tuple(int(i) for i in idx)
            if len(idx) != self.degree:
                raise DimensionError(f"term {idx} has the wrong degree")
            if any(not 0 <= i < self.dim for i in idx):
                raise DimensionError(f"index out of range in {idx}")
            sign, key = _sort_sign(idx)
            if sign == 0:
                continue
            acc[key] = acc.get(key, Fraction(0)) + sign * q(c)
        clean = tuple(sorted((k, v) for k, v in acc.items() if v != 0))
        object.__setattr__(self, "terms", clean)

    @classmethod
    def from_dict(cls, degree: int, dim: int, coeffs: Mapping[Index, object]) -> "KForm":
        return cls(degree, dim, tuple((tuple(k), q(v)) for k, v in coeffs.items()))

    @classmethod
    def zero(cls, degree: int, dim: int) -> "KForm":
        return cls(degree, dim, ())

    def as_dict(self) -> Dict[Index, Fraction]:
        return dict(self.terms)

    def coeff(self, idx: Sequence[int]) -> Fraction:
        sign, key = _sort_sign(idx)
        if sign == 0:
            return Fraction(0)
        return sign * self.as_dict().get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "KForm") -> "KForm":
        self._check(other)
        return KForm(self.degree, self.dim, self.terms + other.terms)

    def __neg__(self) -> "KForm":
        return KForm(self.degree, self.dim, tuple((k, -v) for k, v in self.terms))

    def __sub__(self, other: "KForm") -> "KForm":
        return self + (-other)

    def scale(self, c) -> "KForm":
        c = q(c)
        return KForm(self.degree, self.dim, tuple((k, c * v) for k, v in self.terms))

    def __rmul__(self, c) -> "KForm":
        return self.scale(c)

    def __xor__(self, other: "KForm") -> "KForm":
        return wedge(self, other)

    def _check(self, other: "KForm") -> None:
        if (self.degree, self.dim) != (other.degree, other.dim):
            raise DimensionError("forms of different degree or dimension")

    def __call__(self, *vectors: Sequence[Fraction]) -> Fraction:
        """Evaluate on ``degree`` vectors (determinant convention)."""
        if len(vectors) != self.degree:
            raise DimensionError(f"{self.degree}-form needs {self.degree} arguments")
        total = Fraction(0)
        for idx, c in self.terms:
            M = Mat.from_rows([[v[i] for v in vectors] for i in idx]) if idx else None
            total += c * (det(M) if M is not None else 1)
        return total

    def as_matrix(self) -> Mat:
        """Gram-style matrix ``B[i, j] = phi(e_i, e_j)`` of a 2-form."""
        if self.degree != 2:
            raise DimensionError("only 2-forms have a matrix")
        n = self.dim
        d = self.as_dict()
        rows = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), c in d.items():
            rows[i][j] = c
            rows[j][i] = -c
        return Mat.from_rows(rows)

    @classmethod
    def from_matrix(cls, B: Mat) -> "KForm":
        if not B.is_square or not (B + B.T).is_zero():
            raise ValueError("2-form matrix must be square and skew")
        n = B.rows
        return cls(2, n, tuple(((i, j), B[i, j]) for i in range(n) for j in range(i + 1, n)))

    def as_vector(self) -> Vec:
        """Row of values on basis vectors (degree 1 only)."""
        if self.degree != 1:
            raise DimensionError("only 1-forms are covectors")
        d = self.as_dict()
        return tuple(d.get((i,), Fraction(0)) for i in range(self.dim))

    def pullback(self, P: Mat) -> "KForm":
        """Components in the basis ``E_i = sum_j P[j, i] e_j``."""
        n = self.dim
        if P.shape != (n, n):
            raise DimensionError("pullback matrix has the wrong size")
        cols = [P.col(i) for i in range(n)]
        return KForm(self.degree, n, tuple(
            (idx, self(*[cols[i] for i in idx])) for idx in combinations(range(n), self.degree)))

    def restrict(self, basis: Sequence[Sequence[Fraction]]) -> "KForm":
        """Components on the subspace spanned by ``basis`` (in that basis)."""
        m = len(basis)
        return KForm(self.degree, m, tuple(
            (idx, self(*[basis[i] for i in idx])) for idx in combinations(range(m), self.degree)))

    def to_json_obj(self) -> dict:
        return {
            "degree": self.degree,
            "dim": self.dim,
            "terms": [[[i + 1 for i in idx], fmt_q(c)] for idx, c in self.terms],
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "KForm":
        return cls(int(obj["degree"]), int(obj["dim"]),
                   tuple((tuple(int(i) - 1 for i in idx), q(c)) for idx, c in obj["terms"]))

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{fmt_q(c)}*e^{''.join(str(i + 1) for i in idx)}" for idx, c in self.terms)


def basis_form(dim: int, *idx: int) -> KForm:
    """``e^{i1 ... ik}`` for 0-based indices."""
    return KForm(len(idx), dim, ((tuple(idx), Fraction(1)),))


def one_form(coeffs: Sequence) -> KForm:
    return KForm(1, len(coeffs), tuple(((i,), q(c)) for i, c in enumerate(coeffs)))


def wedge(phi: KForm, psi: KForm) -> KForm:
    if phi.dim != psi.dim:
        raise DimensionError("wedge of forms on different spaces")
    k = phi.degree + psi.degree
    if k > phi.dim:
        return KForm.zero(k, phi.dim)
    out = []
    for a, ca in phi.terms:
        for b, cb in psi.terms:
            sign, key = _sort_sign(a + b)
            if sign:
                out.append((key, sign * ca * cb))
    return KForm(k, phi.dim, tuple(out))


def _d_generators(L: LieAlg) -> list[KForm]:
    n = L.dim
    out = []
    for k in range(n):
        terms = [((i, j), -c[k]) for i, j, c in L.brackets if c[k]]
        out.append(KForm(2, n, tuple(terms)))
    return out


def ce_d(L: LieAlg, phi: KForm) -> KForm:
    """Chevalley-Eilenberg differential, with ``d beta(X, Y) = -beta([X, Y])``.

    Extended to higher degree as a graded derivation.
    """
    if phi.dim != L.dim:
        raise DimensionError("form and algebra have different dimensions")
    n = L.dim
    k = phi.degree
    if k + 1 > n:
        return KForm.zero(k + 1, n)
    dgen = _d_generators(L)
    out = []
    for idx, c in phi.terms:
        for pos, i in enumerate(idx):
            sign = -1 if pos % 2 else 1
            for (a, b), cab in dgen[i].terms:
                new = idx[:pos] + (a, b) + idx[pos + 1:]
                s, key = _sort_sign(new)
                if s:
                    out.append((key, sign * s * c * cab))
    return KForm(k + 1, n, tuple(out))


def contact_volume(L: LieAlg, alpha: KForm) -> Fraction:
    """Coefficient of ``e^{1...n}`` in ``alpha ^ (d alpha)^m``, n = 2m + 1."""
    if alpha.degree != 1:
        raise DimensionError("contact form must have degree 1")
    if L.dim % 2 == 0:
        raise DimensionError("contact forms live on odd-dimensional algebras")
    m = (L.dim - 1) // 2
    da = ce_d(L, alpha)
    top = alpha
    for _ in range(m):
        top = wedge(top, da)
    return top.coeff(tuple(range(L.dim)))


def is_contact(L: LieAlg, alpha: KForm) -> bool:
    return contact_volume(L, alpha) != 0


def reeb(L: LieAlg, alpha: KForm) -> Vec:
    """The unique xi with ``alpha(xi) = 1`` and ``d alpha(xi, .) = 0``."""
    if not is_contact(L, alpha):
        raise NotContactError("alpha is not a contact form")
    n = L.dim
    B = ce_d(L, alpha).as_matrix()
    # rows: alpha(xi) = 1, then d alpha(xi, e_j) = sum_i xi_i B[i, j] = 0
    A = Mat.from_rows([list(alpha.as_vector())] + [list(B.col(j)) for j in range(n)])
    x = solve_linear(A, (1,) + (0,) * n)
    if x is None:
        raise ArithmeticError("Reeb system is singular although alpha is contact")
    return x
