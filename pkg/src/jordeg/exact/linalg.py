"""Exact linear algebra over Q or Q(t).

Matrices are plain row lists. Entries may be ``Fraction``/``int`` or
:class:`~jordeg.exact.poly.RatFunc`; the dense routines only use field
operations and ``== 0``.  Large sparse systems (derivations, cocycles)
go through :class:`SparseEliminator`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence


class SingularMatrixError(ValueError):
    pass


def shape(m: Sequence[Sequence]) -> tuple[int, int]:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if any(len(r) != cols for r in m):
        raise ValueError("matrix is not rectangular")
    return rows, cols


def identity(n: int, one=Fraction(1), zero=Fraction(0)) -> list[list]:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(m):
    r, c = shape(m)
    return [[m[i][j] for i in range(r)] for j in range(c)]


def mat_mul(a, b):
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise ValueError(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    out = []
    for i in range(ra):
        row = []
        for j in range(cb):
            acc = 0
            for k in range(ca):
                x = a[i][k]
                if x != 0:
                    y = b[k][j]
                    if y != 0:
                        acc = acc + x * y
            row.append(acc)
        out.append(row)
    return out


def mat_vec(m, v):
    return [sum((m[i][j] * v[j] for j in range(len(v)) if v[j] != 0), Fraction(0))
            for i in range(len(m))]


def rref(m):
    """Reduced row echelon form; returns ``(rows, pivot_columns)``."""
    a = [list(r) for r in m]
    nrows, ncols = shape(a)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c] if not isinstance(a[r][c], int) else Fraction(1, a[r][c])
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m) -> int:
    if not m:
        return 0
    return len(rref(m)[1])


def kernel(m, ncols: int | None = None) -> list[list]:
    """Basis of the right null space, one list per basis vector.

    ``ncols`` is needed only when ``m`` has no rows.
    """
    if not m:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return identity(ncols)
    rows, pivots = rref(m)
    ncols = shape(m)[1]
    one, zero = Fraction(1), Fraction(0)
    basis = []
    pivset = set(pivots)
    for f in range(ncols):
        if f in pivset:
            continue
        v = [zero] * ncols
        v[f] = one
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(v)
    return basis


def determinant(m):
    """Fraction-free (Bareiss) determinant."""
    n, c = shape(m)
    if n != c:
        raise ValueError(f"determinant of a non-square {n}x{c} matrix")
    if n == 0:
        return Fraction(1)
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if p is None:
                return a[k][k] * 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = _exact_div(num, prev)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def _exact_div(num, den):
    if isinstance(num, int) and isinstance(den, int):
        q, r = divmod(num, den)
        return q if r == 0 else Fraction(num, den)
    return num / den


def inverse(m):
    n, c = shape(m)
    if n != c:
        raise ValueError("inverse of a non-square matrix")
    aug = [list(m[i]) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
           for i in range(n)]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularMatrixError("matrix is singular")
    return [r[n:] for r in rows]


# ---------------------------------------------------------------- subspaces

def span_basis(vectors: Iterable[Sequence]) -> list[list]:
    """RREF basis of the span (empty list for the zero space)."""
    vs = [list(v) for v in vectors]
    if not vs:
        return []
    return rref(vs)[0]


def in_span(basis_rref: list[list], v: Sequence) -> bool:
    """``basis_rref`` must come from :func:`span_basis`."""
    w = list(v)
    for row in basis_rref:
        p = next(i for i, x in enumerate(row) if x != 0)
        if w[p] != 0:
            f = w[p]
            w = [x - f * y for x, y in zip(w, row)]
    return all(x == 0 for x in w)


def subspace_contains(big: list[list], small: Iterable[Sequence]) -> bool:
    return all(in_span(big, v) for v in small)


# ------------------------------------------------------------------ sparse

class SparseEliminator:
    """Incremental sparse Gauss-Jordan over Q.

    Rows are ``{column: value}`` dicts. Pivot rows are kept fully reduced
    with unit pivots, so the kernel can be read off at any time.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, dict[int, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        r = {k: Fraction(v) for k, v in row.items() if v != 0}
        for p in [k for k in r if k in self.pivots]:
            f = r.get(p)
            if not f:
                continue
            for k, v in self.pivots[p].items():
                nv = r.get(k, 0) - f * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        return r

    def add(self, row: dict) -> bool:
        """Insert a row; True when it increased the rank."""
        r = self.reduce(row)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        r = {k: v * inv for k, v in r.items()}
        for q, prow in self.pivots.items():
            f = prow.get(p)
            if f:
                for k, v in r.items():
                    nv = prow.get(k, 0) - f * v
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
        self.pivots[p] = r
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)

    def kernel(self) -> list[list[Fraction]]:
        one, zero = Fraction(1), Fraction(0)
        basis = []
        for f in range(self.ncols):
            if f in self.pivots:
                continue
            v = [zero] * self.ncols
            v[f] = one
            for p, prow in self.pivots.items():
                x = prow.get(f)
                if x:
                    v[p] = -x
            basis.append(v)
        return basis


def sparse_kernel(rows: Iterable[dict], ncols: int) -> list[list[Fraction]]:
    el = SparseEliminator(ncols)
    for r in rows:
        el.add(r)
    return el.kernel()


def integer_rank(rows: Iterable[dict]) -> int:
    """Rank over Q of sparse rows, by fraction-free elimination.

    Rational rows are scaled to integers first; after each step a row is
    divided by the gcd of its entries, which keeps the integers small.
    """
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        den = math.lcm(*(Fraction(v).denominator for v in row.values())) if row else 1
        r = {k: int(Fraction(v) * den) for k, v in row.items() if v != 0}
        while r:
            p = min(r)
            if p not in pivots:
                g = math.gcd(*r.values())
                pivots[p] = {k: v // g for k, v in r.items()}
                break
            prow = pivots[p]
            a, b = prow[p], r[p]
            g = math.gcd(a, b)
            a, b = a // g, b // g
            new = {k: a * v for k, v in r.items()}
            for k, v in prow.items():
                nv = new.get(k, 0) - b * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            if new:
                g = math.gcd(*new.values())
                new = {k: v // g for k, v in new.items()}
            r = new
    return len(pivots)


def sparse_rank(rows: Iterable[dict], ncols: int) -> int:
    el = SparseEliminator(ncols)
    for r in rows:
        el.add(r)
    return el.rank
