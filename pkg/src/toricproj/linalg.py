"""Exact integer and rational matrix routines.

Everything here works on Python ints and ``fractions.Fraction``; there is no
floating point anywhere, so results are exact regardless of entry size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .errors import InputError


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


@dataclass(frozen=True)
class IntMat:
    """Dense integer matrix, row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise InputError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise InputError(
                f"entries length {len(self.entries)} != {self.rows}x{self.cols}"
            )
        for x in self.entries:
            if isinstance(x, bool) or not isinstance(x, int):
                raise InputError(f"matrix entry {x!r} is not an integer")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> IntMat:
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            if not rows:
                raise InputError("column count needed for a matrix without rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise InputError("ragged matrix rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> IntMat:
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMat:
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[int, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> IntMat:
        return IntMat.from_rows([self.col(j) for j in range(self.cols)], self.rows)

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise InputError(f"vector of length {len(v)} for matrix with {self.cols} columns")
        return tuple(sum(a * b for a, b in zip(self.row(i), v)) for i in range(self.rows))

    def __matmul__(self, other: IntMat) -> IntMat:
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = [other.col(j) for j in range(other.cols)]
        return IntMat.from_rows(
            [[sum(a * b for a, b in zip(self.row(i), c)) for c in cols] for i in range(self.rows)],
            other.cols,
        )

    def scale(self, k: int) -> IntMat:
        return IntMat(self.rows, self.cols, tuple(k * x for x in self.entries))

    def with_column(self, v: Sequence[int]) -> IntMat:
        """The augmented matrix with ``v`` appended as a last column."""
        if len(v) != self.rows:
            raise InputError("augmenting column has wrong length")
        return IntMat.from_rows([list(self.row(i)) + [v[i]] for i in range(self.rows)], self.cols + 1)

    def select_columns(self, idx: Sequence[int]) -> IntMat:
        return IntMat.from_rows([[self[i, j] for j in idx] for i in range(self.rows)], len(idx))

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for x in self.entries)

    def zero_columns(self) -> list[int]:
        return [j for j in range(self.cols) if not any(self.col(j))]

    def to_json(self) -> dict:
        return {
            "rows": str(self.rows),
            "cols": str(self.cols),
            "entries": [[str(x) for x in r] for r in self.to_rows()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> IntMat:
        try:
            rows, cols = int(obj["rows"]), int(obj["cols"])
            data = [[int(x) for x in r] for r in obj["entries"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed matrix JSON: {exc}") from None
        if len(data) != rows:
            raise InputError(f"matrix JSON field 'entries' has {len(data)} rows, expected {rows}")
        return cls.from_rows(data, cols)

    def __str__(self):
        return "\n".join(" ".join(f"{x:>4}" for x in r) for r in self.to_rows())


@dataclass(frozen=True)
class RatMat:
    """Dense rational matrix; entries are reduced Fractions."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise InputError("entries length does not match dimensions")
        object.__setattr__(self, "entries", tuple(Fraction(x) for x in self.entries))

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> RatMat:
        rows = [tuple(Fraction(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __matmul__(self, other: IntMat | RatMat) -> RatMat:
        if self.cols != other.rows:
            raise InputError("dimension mismatch in rational product")
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.append([sum((r[k] * other.entries[k * other.cols + j] for k in range(self.cols)), Fraction(0))
                        for j in range(other.cols)])
        return RatMat.from_rows(out, other.cols)

    def equals_int(self, m: IntMat) -> bool:
        return (self.rows, self.cols) == (m.rows, m.cols) and all(
            a == b for a, b in zip(self.entries, m.entries)
        )

    def to_json(self) -> dict:
        return {
            "rows": str(self.rows),
            "cols": str(self.cols),
            "entries": [[str(x) for x in r] for r in self.to_rows()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> RatMat:
        try:
            return cls.from_rows([[Fraction(x) for x in r] for r in obj["entries"]], int(obj["cols"]))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise InputError(f"malformed rational matrix JSON: {exc}") from None


def _hnf_rows(rows: list[list[int]], ncols: int) -> list[list[int]]:
    a = [list(r) for r in rows]
    p = 0
    for j in range(ncols):
        if p == len(a):
            break
        for i in range(p + 1, len(a)):
            if a[i][j] == 0:
                continue
            x, y = a[p][j], a[i][j]
            g, s, t = xgcd(x, y)
            xg, yg = x // g, y // g
            rp, ri = a[p], a[i]
            a[p] = [s * u + t * v for u, v in zip(rp, ri)]
            a[i] = [xg * v - yg * u for u, v in zip(rp, ri)]
        piv = a[p][j]
        if piv == 0:
            continue
        if piv < 0:
            a[p] = [-u for u in a[p]]
            piv = -piv
        for k in range(p):
            q = a[k][j] // piv
            if q:
                a[k] = [u - q * v for u, v in zip(a[k], a[p])]
        p += 1
    return a[:p]


def hnf(m: IntMat) -> IntMat:
    """Row-style Hermite normal form of the row lattice of ``m``.

    Zero rows are dropped, pivots are positive and the entries above each
    pivot lie in ``[0, pivot)``, so two matrices generate the same lattice
    exactly when their HNFs are identical.
    """
    return IntMat.from_rows(_hnf_rows(m.to_rows(), m.cols), m.cols)


def rank(m: IntMat) -> int:
    return hnf(m).rows


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * akk - aik * a[k][j]) // prev
        prev = akk
    return sign * a[-1][-1]


def gcd_maximal_minors(m: IntMat) -> int:
    """gcd of all rows x rows minors of a wide matrix (0 if they all vanish)."""
    if m.rows > m.cols:
        raise InputError(f"{m.rows}x{m.cols} matrix has no maximal minors of order {m.rows}")
    g = 0
    for cols in combinations(range(m.cols), m.rows):
        g = gcd(g, bareiss_det([[m[i, j] for j in cols] for i in range(m.rows)]))
        if g == 1:
            break
    return g


def kernel_basis(m: IntMat):
    """Canonical basis of ker_Z(m) = {u in Z^cols : m u = 0} as a Lattice."""
    from .lattice import Lattice

    n, r = m.cols, m.rows
    aug = [list(m.col(j)) + [int(i == j) for i in range(n)] for j in range(n)]
    red = _hnf_rows(aug, r + n)
    kernel = [row[r:] for row in red if not any(row[:r])]
    return Lattice.span(kernel, n)


def _echelon(a: list[list[int]], ncols: int) -> list[int]:
    """In-place fraction-free row echelon form on the first ``ncols`` columns.

    Returns the pivot columns. Each elimination step cross-multiplies and then
    divides the row by its content, which keeps entries small.
    """
    pivots = []
    p = 0
    for j in range(ncols):
        sel = next((i for i in range(p, len(a)) if a[i][j]), None)
        if sel is None:
            continue
        a[p], a[sel] = a[sel], a[p]
        for i in range(p + 1, len(a)):
            if a[i][j]:
                x, y = a[p][j], a[i][j]
                row = [x * v - y * u for u, v in zip(a[p], a[i])]
                c = 0
                for v in row:
                    c = gcd(c, v)
                a[i] = [v // c for v in row] if c > 1 else row
        pivots.append(j)
        p += 1
    return pivots


def solve_right_factor(n: IntMat, m: IntMat) -> RatMat | None:
    """Find a rational D with D n = m, or None when no such D exists.

    Works on the transposed system n^T D^T = m^T. When n has dependent rows
    the solution is not unique; free coordinates are set to zero.
    """
    if n.cols != m.cols:
        raise InputError(f"column counts differ: n has {n.cols}, m has {m.cols}")
    k = n.rows
    a = [list(n.col(j)) + list(m.col(j)) for j in range(n.cols)]
    pivots = _echelon(a, k)
    for i in range(len(pivots), len(a)):
        if any(a[i][k:]):
            return None
    sol = [[Fraction(0)] * k for _ in range(m.rows)]
    for c in range(m.rows):
        x = [Fraction(0)] * k
        for i in reversed(range(len(pivots))):
            j = pivots[i]
            acc = Fraction(a[i][k + c])
            for jj in range(j + 1, k):
                if a[i][jj]:
                    acc -= a[i][jj] * x[jj]
            x[j] = acc / a[i][j]
        sol[c] = x
    d = RatMat.from_rows(sol, k)
    assert (d @ n).equals_int(m)
    return d


def elementary_divisors(m: IntMat) -> list[int]:
    """Nonzero diagonal of the Smith normal form, each dividing the next."""
    a = m.to_rows()
    rows, cols = m.rows, m.cols
    out = []
    s = 0
    while s < min(rows, cols):
        nz = [(abs(a[i][j]), i, j) for i in range(s, rows) for j in range(s, cols) if a[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        a[s], a[pi] = a[pi], a[s]
        for r in a:
            r[s], r[pj] = r[pj], r[s]
        while True:
            piv = a[s][s]
            dirty = False
            for i in range(s + 1, rows):
                q = a[i][s] // piv
                if q:
                    a[i] = [u - q * v for u, v in zip(a[i], a[s])]
                if a[i][s]:
                    dirty = True
            for j in range(s + 1, cols):
                q = a[s][j] // piv
                if q:
                    for r in a:
                        r[j] -= q * r[s]
                if a[s][j]:
                    dirty = True
            if not dirty:
                bad = next(((i, j) for i in range(s + 1, rows) for j in range(s + 1, cols)
                            if a[i][j] % piv), None)
                if bad is None:
                    break
                a[s] = [u + v for u, v in zip(a[s], a[bad[0]])]
                dirty = True
            # move the smallest nonzero entry of row/column s onto the pivot
            cand = [(abs(a[i][s]), i, s) for i in range(s, rows) if a[i][s]]
            cand += [(abs(a[s][j]), s, j) for j in range(s, cols) if a[s][j]]
            _, ci, cj = min(cand)
            if ci != s:
                a[s], a[ci] = a[ci], a[s]
            if cj != s:
                for r in a:
                    r[s], r[cj] = r[cj], r[s]
        out.append(abs(a[s][s]))
        s += 1
    return out
