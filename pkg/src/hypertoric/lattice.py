"""Exact integer and rational linear algebra.

Everything here works on Python ints and :class:`fractions.Fraction`; there
is no floating point anywhere. Matrices are small (a handful of rows), so the
algorithms favour determinism and readability over asymptotic speed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import floor, gcd, lcm
from typing import Iterable, Optional, Sequence

Vector = tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
        for e in self.entries:
            if isinstance(e, bool) or not isinstance(e, int):
                raise TypeError(f"matrix entries must be int, got {type(e).__name__}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> IntMatrix:
        rows = [tuple(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(e for r in rows for e in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: Optional[int] = None) -> IntMatrix:
        columns = [tuple(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        if any(len(c) != rows for c in columns):
            raise ValueError("ragged columns")
        return cls(rows, len(columns), tuple(columns[j][i] for i in range(rows) for j in range(len(columns))))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_columns([self.row(i) for i in range(self.rows)], rows=self.cols)

    def select_columns(self, indices: Iterable[int]) -> IntMatrix:
        return IntMatrix.from_columns([self.column(j) for j in indices], rows=self.rows)

    def select_rows(self, indices: Iterable[int]) -> IntMatrix:
        return IntMatrix.from_rows([self.row(i) for i in indices], cols=self.cols)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def apply(self, x: Sequence) -> tuple:
        """Matrix-vector product; works for int or Fraction vectors."""
        if len(x) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(sum(a * b for a, b in zip(self.row(i), x)) for i in range(self.rows))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        return IntMatrix.from_rows(
            [[sum(a * b for a, b in zip(self.row(i), c)) for c in cols] for i in range(self.rows)],
            cols=other.cols,
        )

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.to_rows()) + "]"


@dataclass(frozen=True)
class SNFDecomposition:
    """``U @ M @ V == S`` with ``U``, ``V`` unimodular and ``S`` in Smith form."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(self.S[i, i] for i in range(min(self.S.rows, self.S.cols)))

    @property
    def rank(self) -> int:
        return sum(1 for s in self.invariant_factors if s != 0)


def determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q of a list of rows (ints or Fractions)."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, len(a)):
            if a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for r in m:
        r[i], r[j] = r[j], r[i]


def _pivot(S, t):
    best = None
    for i in range(t, len(S)):
        for j in range(t, len(S[0])):
            v = abs(S[i][j])
            if v and (best is None or v < best[0]):
                best = (v, i, j)
    return None if best is None else best[1:]


def smith_normal_form(M: IntMatrix) -> SNFDecomposition:
    """Smith normal form with transforms.

    Pivoting is fixed: the nonzero entry of least absolute value in the
    remaining block, ties broken by lowest (row, column) index. This makes
    ``U`` and ``V`` a deterministic function of ``M``.
    """
    m, n = M.rows, M.cols
    S = M.to_rows()
    U = IntMatrix.identity(m).to_rows()
    V = IntMatrix.identity(n).to_rows()
    for t in range(min(m, n)):
        piv = _pivot(S, t)
        if piv is None:
            break
        while True:
            i, j = piv
            _swap_rows(S, t, i)
            _swap_rows(U, t, i)
            _swap_cols(S, t, j)
            _swap_cols(V, t, j)
            p = S[t][t]
            clean = True
            for i in range(t + 1, m):
                q = S[i][t] // p
                if q:
                    S[i] = [x - q * y for x, y in zip(S[i], S[t])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[t])]
                clean = clean and S[i][t] == 0
            for j in range(t + 1, n):
                q = S[t][j] // p
                if q:
                    for row in S:
                        row[j] -= q * row[t]
                    for row in V:
                        row[j] -= q * row[t]
                clean = clean and S[t][j] == 0
            if clean:
                bad = next(
                    (i for i in range(t + 1, m) for j in range(t + 1, n) if S[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                # fold the offending row into the pivot row and re-reduce
                S[t] = [x + y for x, y in zip(S[t], S[bad])]
                U[t] = [x + y for x, y in zip(U[t], U[bad])]
            piv = _pivot(S, t)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
    return SNFDecomposition(
        IntMatrix.from_rows(U, cols=m),
        IntMatrix.from_rows(S, cols=n),
        IntMatrix.from_rows(V, cols=n),
    )


def kernel_basis(M: IntMatrix) -> IntMatrix:
    """Columns form a Z-basis of ``{x in Z^cols : M x = 0}``."""
    snf = smith_normal_form(M)
    r = snf.rank
    return IntMatrix.from_columns([snf.V.column(j) for j in range(r, M.cols)], rows=M.cols)


def minor_dets(M: IntMatrix, k: int, rows: Optional[Sequence[int]] = None) -> dict[tuple[int, ...], int]:
    """Determinants of all k x k minors on a fixed set of k rows.

    Keys are 0-based column subsets in lexicographic order. ``rows`` defaults
    to the first k rows.
    """
    if k > min(M.rows, M.cols):
        raise ValueError(f"k={k} exceeds min{M.shape}")
    rows = tuple(range(k)) if rows is None else tuple(rows)
    if len(rows) != k:
        raise ValueError("need exactly k rows")
    sub = [M.row(i) for i in rows]
    return {
        cols: determinant([[r[j] for j in cols] for r in sub])
        for cols in combinations(range(M.cols), k)
    }


def gcd_all(values: Iterable[int]) -> int:
    """gcd of a collection; 0 for the empty collection."""
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def primitive(v: Sequence[int]) -> Vector:
    g = gcd_all(v)
    return tuple(v) if g in (0, 1) else tuple(x // g for x in v)


# -- exact Fourier-Motzkin ---------------------------------------------------

Constraint = tuple[tuple[Fraction, ...], Fraction]  # coeffs . x >= rhs


def _normalize(c: Constraint) -> Constraint:
    coeffs, rhs = c
    nz = [abs(x) for x in coeffs if x]
    if not nz:
        return coeffs, rhs
    den = lcm(*(x.denominator for x in coeffs))
    ints = [int(x * den) for x in coeffs]
    g = gcd_all(ints)
    scale = Fraction(den, g)
    return tuple(Fraction(x // g) for x in ints), rhs * scale


def _dedup(constraints: Iterable[Constraint]) -> list[Constraint]:
    tightest: dict[tuple[Fraction, ...], Fraction] = {}
    for c in constraints:
        coeffs, rhs = _normalize(c)
        if coeffs in tightest:
            tightest[coeffs] = max(tightest[coeffs], rhs)
        else:
            tightest[coeffs] = rhs
    return sorted(tightest.items())


def _simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Rational of least denominator in [lo, hi]; assumes 0 < lo <= hi."""
    fl = floor(lo)
    if fl == lo or fl + 1 <= hi:
        return Fraction(fl if fl == lo else fl + 1)
    return fl + 1 / _simplest_between(1 / (hi - fl), 1 / (lo - fl))


def _pick(lo: Optional[Fraction], hi: Optional[Fraction]) -> Fraction:
    """Integer of least |value| in [lo, hi] if any, else simplest rational."""
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return Fraction(min(0, floor(hi)))
    if hi is None:
        return Fraction(max(0, -floor(-lo)))
    if lo <= 0 <= hi:
        return Fraction(0)
    if lo > 0:
        c = -floor(-lo)
        return Fraction(c) if c <= hi else _simplest_between(lo, hi)
    c = floor(hi)
    return Fraction(c) if c >= lo else -_simplest_between(-hi, -lo)


def fme_solve(constraints: Sequence[Constraint], nvars: int) -> Optional[tuple[Fraction, ...]]:
    """Find x with ``c . x >= b`` for every constraint, or None if infeasible.

    Variables are eliminated from last to first; the witness is rebuilt by
    back-substitution picking, for each variable, the integer closest to zero
    in its interval (or the simplest rational when no integer fits).
    """
    system = _dedup((tuple(Fraction(x) for x in c), Fraction(b)) for c, b in constraints)
    stages = []
    for k in reversed(range(nvars)):
        stages.append(system)
        pos = [c for c in system if c[0][k] > 0]
        neg = [c for c in system if c[0][k] < 0]
        new = [c for c in system if c[0][k] == 0]
        for pc, pb in pos:
            for nc, nb in neg:
                s, t = -nc[k], pc[k]
                new.append((tuple(s * x + t * y for x, y in zip(pc, nc)), s * pb + t * nb))
        system = _dedup(new)
        if any(b > 0 and not any(c) for c, b in system):
            return None
    if any(b > 0 for _, b in system):
        return None
    x: list[Fraction] = []
    for k in range(nvars):
        lo = hi = None
        for c, b in stages[nvars - 1 - k]:
            if c[k] == 0:
                continue
            bound = (b - sum(ci * xi for ci, xi in zip(c, x))) / c[k]
            if c[k] > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        x.append(_pick(lo, hi))
    return tuple(x)


@dataclass(frozen=True)
class SignSystem:
    """Strict homogeneous sign conditions on lambda in Z^dim."""

    dim: int
    strict_positive: tuple[Vector, ...] = ()
    strict_negative: tuple[Vector, ...] = ()

    def __post_init__(self):
        for v in self.strict_positive + self.strict_negative:
            if len(v) != self.dim:
                raise ValueError(f"vector {v} does not have length {self.dim}")

    def holds(self, lam: Sequence[int]) -> bool:
        return all(_dot(v, lam) > 0 for v in self.strict_positive) and all(
            _dot(v, lam) < 0 for v in self.strict_negative
        )


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def strict_feasible(system: SignSystem) -> Optional[Vector]:
    """Integer lambda satisfying every strict sign condition, or None.

    Strict homogeneous inequalities are feasible iff ``W lam >= 1`` is, so
    this runs exact Fourier-Motzkin on the latter, clears denominators and
    divides out the gcd.
    """
    rows = [tuple(v) for v in system.strict_positive]
    rows += [tuple(-x for x in v) for v in system.strict_negative]
    if not rows:
        return (0,) * system.dim
    sol = fme_solve([(r, Fraction(1)) for r in rows], system.dim)
    if sol is None:
        return None
    den = lcm(*(x.denominator for x in sol))
    return primitive([int(x * den) for x in sol])


def in_rational_cone(target: Sequence[int], generators: Sequence[Sequence[int]]) -> bool:
    """Whether target is a nonnegative rational combination of generators.

    Decided through the Farkas alternative: target lies outside the cone iff
    some y has ``g . y >= 0`` for every generator and ``target . y < 0``.
    """
    d = len(target)
    if any(len(g) != d for g in generators):
        raise ValueError("generator length mismatch")
    if not any(target):
        return True
    constraints = [(tuple(g), Fraction(0)) for g in generators]
    constraints.append((tuple(-t for t in target), Fraction(1)))
    return fme_solve(constraints, d) is None
