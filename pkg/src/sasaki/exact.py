"""Exact rational scalars, vectors and dense matrices.

Scalars are :class:`fractions.Fraction` (arbitrary precision, always in
lowest terms).  Vectors are plain tuples of Fractions.  :class:`Mat` is an
immutable row-major matrix.  Nothing in this module ever touches floats.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

Scalar = Fraction
Vec = Tuple[Fraction, ...]
Number = Union[int, Fraction, str]

__all__ = [
    "Scalar",
    "Vec",
    "Mat",
    "DimensionError",
    "SingularMatrixError",
    "q",
    "vec",
    "zero_vec",
    "unit_vec",
    "vadd",
    "vsub",
    "vscale",
    "dot",
    "is_zero_vec",
    "solve_linear",
    "kernel",
    "det",
    "rank",
    "rref",
    "fmt_q",
]


class DimensionError(ValueError):
    pass


class SingularMatrixError(ArithmeticError):
    pass


def q(x: Number) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction.

    Floats are refused: they would silently carry binary rounding.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot make an exact scalar from {type(x).__name__}")


def fmt_q(x: Fraction) -> str:
    """Render as "p/q" (or "p" when the denominator is 1)."""
    x = q(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def vec(xs: Iterable[Number]) -> Vec:
    return tuple(q(x) for x in xs)


def zero_vec(n: int) -> Vec:
    return (Fraction(0),) * n


def unit_vec(n: int, i: int) -> Vec:
    return tuple(Fraction(1 if k == i else 0) for k in range(n))


def vadd(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    if len(u) != len(v):
        raise DimensionError(f"length {len(u)} != {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    if len(u) != len(v):
        raise DimensionError(f"length {len(u)} != {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vscale(c: Number, v: Sequence[Fraction]) -> Vec:
    c = q(c)
    return tuple(c * a for a in v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"length {len(u)} != {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def is_zero_vec(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)


@dataclass(frozen=True)
class Mat:
    """Immutable dense rational matrix, row-major."""

    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative shape")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    # -- construction -----------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]]) -> "Mat":
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, 0, ())
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, tuple(q(x) for r in rows for x in r))

    @classmethod
    def from_cols(cls, cols: Sequence[Sequence[Number]]) -> "Mat":
        return cls.from_rows(cols).T

    @classmethod
    def zeros(cls, rows: int, cols: Optional[int] = None) -> "Mat":
        cols = rows if cols is None else cols
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    @classmethod
    def diag(cls, values: Sequence[Number]) -> "Mat":
        n = len(values)
        vals = [q(v) for v in values]
        return cls(n, n, tuple(vals[i] if i == j else Fraction(0) for i in range(n) for j in range(n)))

    @classmethod
    def outer(cls, u: Sequence[Fraction], v: Sequence[Fraction]) -> "Mat":
        return cls(len(u), len(v), tuple(q(a) * q(b) for a in u for b in v))

    # -- access -----------------------------------------------------------
    def __getitem__(self, ij: Tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vec:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> Vec:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def T(self) -> "Mat":
        return Mat(self.cols, self.rows,
                   tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.T

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        return Mat(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        return Mat(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Mat":
        return Mat(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c: Number) -> "Mat":
        c = q(c)
        return Mat(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __rmul__(self, c: Number) -> "Mat":
        return self.scale(c)

    def __matmul__(self, other):
        if isinstance(other, Mat):
            if self.cols != other.rows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            ocols = [other.col(j) for j in range(other.cols)]
            out = []
            for i in range(self.rows):
                r = self.row(i)
                for c in ocols:
                    out.append(sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)))
            return Mat(self.rows, other.cols, tuple(out))
        v = tuple(other)
        if len(v) != self.cols:
            raise DimensionError(f"cannot apply {self.shape} matrix to length-{len(v)} vector")
        return tuple(sum((a * b for a, b in zip(self.row(i), v) if a and b), Fraction(0))
                     for i in range(self.rows))

    def __pow__(self, k: int) -> "Mat":
        if not self.is_square or k < 0:
            raise DimensionError("power needs a square matrix and k >= 0")
        out = Mat.identity(self.rows)
        for _ in range(k):
            out = out @ self
        return out

    def trace(self) -> Fraction:
        if not self.is_square:
            raise DimensionError("trace of non-square matrix")
        return sum((self[i, i] for i in range(self.rows)), Fraction(0))

    def det(self) -> Fraction:
        return det(self)

    def rank(self) -> int:
        return rank(self)

    def inverse(self) -> "Mat":
        if not self.is_square:
            raise DimensionError("inverse of non-square matrix")
        n = self.rows
        aug = [list(self.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        red, pivots = _rref_rows(aug, n)
        if pivots != list(range(n)):
            raise SingularMatrixError("matrix is singular")
        return Mat.from_rows([r[n:] for r in red])

    def hstack(self, other: "Mat") -> "Mat":
        if self.rows != other.rows:
            raise DimensionError("hstack row mismatch")
        return Mat.from_rows([list(self.row(i)) + list(other.row(i)) for i in range(self.rows)])

    def vstack(self, other: "Mat") -> "Mat":
        if self.cols != other.cols:
            raise DimensionError("vstack column mismatch")
        return Mat(self.rows + other.rows, self.cols, self.entries + other.entries)

    def _same_shape(self, other: "Mat") -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape {self.shape} != {other.shape}")

    def __repr__(self) -> str:
        body = "; ".join(" ".join(fmt_q(x) for x in self.row(i)) for i in range(self.rows))
        return f"Mat[{body}]"


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> Tuple[list[list[Fraction]], list[int]]:
    """Reduce ``rows`` in place on the first ``ncols`` columns.

    Pivots are normalised to 1 with zeros above and below.  Returns the
    reduced rows and the list of pivot columns.
    """
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(A: Mat) -> Tuple[Mat, list[int]]:
    """Reduced row echelon form and pivot columns."""
    red, piv = _rref_rows(A.to_rows(), A.cols)
    return (Mat.from_rows(red) if red else Mat.zeros(0, A.cols)), piv


def rank(A: Mat) -> int:
    return len(rref(A)[1])


def solve_linear(A: Mat, b: Sequence[Number]) -> Optional[Vec]:
    """Return some x with A x = b, or None when the system is inconsistent.

    Free variables (non-pivot columns of the echelon form) are set to zero,
    so the answer is deterministic.
    """
    b = vec(b)
    if A.rows != len(b):
        raise DimensionError(f"A has {A.rows} rows but b has length {len(b)}")
    aug = [list(A.row(i)) + [b[i]] for i in range(A.rows)]
    red, pivots = _rref_rows(aug, A.cols)
    # a pivot-free row with nonzero rhs means 0 = c
    for row in red[len(pivots):]:
        if row[-1] != 0:
            return None
    x = [Fraction(0)] * A.cols
    for r, c in enumerate(pivots):
        x[c] = red[r][-1]
    return tuple(x)


def kernel(A: Mat) -> list[Vec]:
    """Basis of the null space, one vector per free column.

    Each basis vector has a 1 in its free column and zeros in the other
    free columns, which fixes the normalisation.
    """
    red, pivots = _rref_rows(A.to_rows(), A.cols)
    free = [c for c in range(A.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * A.cols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        basis.append(tuple(v))
    return basis


def det(A: Mat) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    if not A.is_square:
        raise DimensionError(f"determinant of a {A.rows}x{A.cols} matrix")
    n = A.rows
    m = A.to_rows()
    sign = 1
    out = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        piv = m[c][c]
        out *= piv
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / piv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return sign * out


def span_basis(vectors: Sequence[Sequence[Fraction]], dim: int) -> list[Vec]:
    """Echelon basis of the span of ``vectors`` (possibly empty)."""
    if not vectors:
        return []
    red, piv = _rref_rows([list(v) for v in vectors], dim)
    return [tuple(red[i]) for i in range(len(piv))]


def in_span(v: Sequence[Fraction], basis: Sequence[Sequence[Fraction]]) -> bool:
    if is_zero_vec(v):
        return True
    if not basis:
        return False
    return solve_linear(Mat.from_cols(basis), v) is not None
