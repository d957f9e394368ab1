"""Dense exact linear algebra over the rationals.

Elimination runs fraction-free on integer rows (denominators cleared per row),
then results are normalized back to ``Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Scalar = Fraction
Row = Sequence[Fraction]


def to_scalar(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a canonical Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix shape")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], cols: int | None = None) -> "RatMatrix":
        data = [[to_scalar(x) for x in r] for r in rows]
        if cols is None:
            cols = len(data[0]) if data else 0
        for r in data:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(data), cols, tuple(x for r in data for x in r))

    @classmethod
    def from_columns(cls, columns: Iterable[Iterable], rows: int) -> "RatMatrix":
        cols = [list(c) for c in columns]
        return cls.from_rows(
            ([c[i] for c in cols] for i in range(rows)), cols=len(cols)
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.from_rows(
            ([Fraction(int(i == j)) for j in range(n)] for i in range(n)), cols=n
        )

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RatMatrix":
        return RatMatrix.from_rows(
            (self.column(j) for j in range(self.cols)), cols=self.rows
        )

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        out = []
        other_cols = [other.column(j) for j in range(other.cols)]
        for i in range(self.rows):
            r = self.row(i)
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append([sum((a * c[k] for k, a in nz), Fraction(0)) for c in other_cols])
        return RatMatrix.from_rows(out, cols=other.cols)

    def apply(self, v: Row) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise ValueError("vector length does not match matrix columns")
        nz = [(k, a) for k, a in enumerate(v) if a]
        return tuple(
            sum((a * self[i, k] for k, a in nz), Fraction(0)) for i in range(self.rows)
        )

    def is_zero(self) -> bool:
        return not any(self.entries)


def _as_rows(M) -> tuple[list[list[Fraction]], int]:
    if isinstance(M, RatMatrix):
        return M.to_rows(), M.cols
    rows = [[x if type(x) is Fraction else to_scalar(x) for x in r] for r in M]
    return rows, (len(rows[0]) if rows else 0)


def _integer_rows(rows: list[list[Fraction]]) -> list[list[int]]:
    out = []
    for r in rows:
        den = 1
        for x in r:
            if x.denominator != 1:
                den = lcm(den, x.denominator)
        out.append([x.numerator * (den // x.denominator) for x in r])
    return out


def _bareiss_echelon(A: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form (in place); returns rows and pivot columns."""
    pivots = []
    prev = 1
    r = 0
    nrows = len(A)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if A[i][c]), None)
        if p is None:
            continue
        if p != r:
            A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        prow = A[r]
        for i in range(r + 1, nrows):
            row = A[i]
            a = row[c]
            if a:
                for j in range(c + 1, ncols):
                    row[j] = (piv * row[j] - a * prow[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    row[j] = (piv * row[j]) // prev
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(M) -> int:
    """Exact rank over the rationals; 0 for empty matrices."""
    rows, ncols = _as_rows(M)
    rows = [r for r in rows if any(r)]
    if not rows or ncols == 0:
        return 0
    _, pivots = _bareiss_echelon(_integer_rows(rows), ncols)
    return len(pivots)


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    A = _integer_rows([r for r in rows if any(r)])
    A, pivots = _bareiss_echelon(A, ncols)
    # back-substitution, still on integers; content removed to keep entries small
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        pk = A[k]
        g = 0
        for x in pk:
            g = gcd(g, x)
        if g > 1:
            pk[:] = [x // g for x in pk]
        for i in range(k):
            a = A[i][c]
            if a:
                piv = pk[c]
                A[i] = [piv * x - a * y for x, y in zip(A[i], pk)]
    out = []
    for k, c in enumerate(pivots):
        piv = A[k][c]
        out.append([Fraction(x, piv) for x in A[k]])
    return out, pivots


def rref(M) -> tuple[RatMatrix, list[int]]:
    """Reduced row echelon form (zero rows dropped to the bottom) and pivot columns."""
    rows, ncols = _as_rows(M)
    nrows = len(rows)
    red, pivots = _rref_rows(rows, ncols)
    red += [[Fraction(0)] * ncols for _ in range(nrows - len(red))]
    return RatMatrix.from_rows(red, cols=ncols), pivots


def row_basis(rows, ncols: int | None = None) -> tuple[list[tuple[Fraction, ...]], list[int]]:
    """Nonzero RREF rows spanning the row space, with their pivot columns."""
    rows, n = _as_rows(rows)
    if ncols is None:
        ncols = n
    red, pivots = _rref_rows(rows, ncols)
    return [tuple(r) for r in red], pivots


def nullspace(M) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel, one vector per free column."""
    rows, ncols = _as_rows(M)
    red, pivots = _rref_rows(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in zip(red, pivots):
            v[p] = -r[f]
        basis.append(tuple(v))
    return basis


def reduce_mod(v: Row, basis: Sequence[Row], pivots: Sequence[int]) -> tuple[Fraction, ...]:
    """Remainder of ``v`` modulo the span of RREF ``basis`` rows (zero on pivots)."""
    out = list(v)
    for r, p in zip(basis, pivots):
        a = out[p]
        if a:
            out = [x - a * y for x, y in zip(out, r)]
    return tuple(out)


def in_span(v: Row, basis: Sequence[Row], pivots: Sequence[int]) -> bool:
    return not any(reduce_mod(v, basis, pivots))


def inverse(M: RatMatrix) -> RatMatrix:
    if M.rows != M.cols:
        raise ValueError("inverse of a non-square matrix")
    n = M.rows
    aug = [list(M.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    red, pivots = _rref_rows(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("matrix is singular")
    return RatMatrix.from_rows((r[n:] for r in red[:n]), cols=n)
