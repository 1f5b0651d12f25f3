"""Second cohomology H^2(A, A) of a Jordan algebra with coefficients in itself.

A symmetric bilinear map h is a cocycle when mu + t*h satisfies the Jordan
identity to first order in t, i.e. for all a, b

    (h(a,a)b)a + h(a^2,b)a + h(a^2 b,a) - a^2 h(b,a) - h(a,a)(ba) - h(a^2,ba) = 0.

This is cubic in ``a``; we impose its complete linearization on basis
elements, which is equivalent in characteristic 0.  Coboundaries are
d(mu)(a,b) = mu(a)b + a mu(b) - mu(ab).
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Algebra, is_jordan, unit
from .exact.linalg import SparseEliminator, integer_rank

ZERO = Fraction(0)


def sym_pairs(n: int) -> list[tuple[int, int]]:
    return [(p, q) for p in range(n) for q in range(p, n)]


def unknown_index(n: int) -> dict[tuple[int, int, int], int]:
    """Column of h_{pq}^r (p <= q) in the cocycle system."""
    out = {}
    for idx, (p, q) in enumerate(sym_pairs(n)):
        for r in range(n):
            out[(p, q, r)] = idx * n + r
    return out


@dataclass(frozen=True)
class SymBilinearMap:
    """``h[p][q][r]``: coefficient of e_r in h(e_p, e_q); symmetric in p, q."""

    h: tuple

    def __post_init__(self):
        h = tuple(tuple(tuple(Fraction(v) for v in row) for row in plane) for plane in self.h)
        n = len(h)
        for p in range(n):
            for q in range(p + 1, n):
                if h[p][q] != h[q][p]:
                    raise ValueError(f"h is not symmetric at ({p}, {q})")
        object.__setattr__(self, "h", h)

    @property
    def dim(self) -> int:
        return len(self.h)

    def __call__(self, x: Sequence, y: Sequence) -> list:
        n = self.dim
        out = [ZERO] * n
        for p in range(n):
            if x[p] == 0:
                continue
            for q in range(n):
                if y[q] == 0:
                    continue
                f = x[p] * y[q]
                for r in range(n):
                    if self.h[p][q][r]:
                        out[r] += f * self.h[p][q][r]
        return out

    def is_zero(self) -> bool:
        return all(v == 0 for plane in self.h for row in plane for v in row)

    def to_vector(self) -> list:
        n = self.dim
        vec = [ZERO] * (n * n * (n + 1) // 2)
        for (p, q, r), col in unknown_index(n).items():
            vec[col] = self.h[p][q][r]
        return vec

    @classmethod
    def from_vector(cls, n: int, vec: Sequence) -> SymBilinearMap:
        h = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (p, q, r), col in unknown_index(n).items():
            h[p][q][r] = h[q][p][r] = Fraction(vec[col])
        return cls(h)


def cocycle_equations(A: Algebra) -> list[dict]:
    """Sparse rows of the linearized cocycle condition (symmetry is built in).

    Rows are indexed by a multiset {i1, i2, i3}, an index j and an output
    coordinate k; each of the six terms adds, for the unknowns h_{pq}^r it
    touches, the e_k-coefficient it contributes.
    """
    n = A.dim
    index = unknown_index(n)
    # every term is quadratic in the structure constants, so clearing their
    # denominators rescales each row without changing the solution space
    d = math.lcm(*(v.denominator for plane in A.c for row in plane for v in row))
    c = [[[int(v * d) for v in row] for row in plane] for plane in A.c]

    def col(p, q, r):
        return index[(p, q, r)] if p <= q else index[(q, p, r)]

    def right(v, i):
        """Coordinates of v * e_i."""
        out = [0] * n
        for m in range(n):
            if v[m]:
                for k in range(n):
                    if c[m][i][k]:
                        out[k] += v[m] * c[m][i][k]
        return out

    tri = [[[right(c[r][j], i) for i in range(n)] for j in range(n)] for r in range(n)]
    rows = []
    for trip in itertools.combinations_with_replacement(range(n), 3):
        perms = list(itertools.permutations(trip))
        for j in range(n):
            total = [dict() for _ in range(n)]

            def add(column, vec, sign=1):
                for k in range(n):
                    if vec[k]:
                        total[k][column] = total[k].get(column, 0) + sign * vec[k]

            for i1, i2, i3 in perms:
                a12 = c[i1][i2]
                bj3 = c[j][i3]
                a12b = right(a12, j)
                for r in range(n):
                    # (h(a,a) b) a  -  h(a,a) (b a)
                    add(col(i1, i2, r), tri[r][j][i3])
                    add(col(i1, i2, r), right(bj3, r), -1)
                    # - a^2 h(b, a)
                    add(col(j, i3, r), right(a12, r), -1)
                for m in range(n):
                    if a12[m]:
                        # h(a^2, b) a
                        for r in range(n):
                            add(col(m, j, r), [a12[m] * x for x in c[r][i3]])
                        # - h(a^2, b a)
                        for l in range(n):
                            if bj3[l]:
                                f = a12[m] * bj3[l]
                                for r in range(n):
                                    total[r][col(m, l, r)] = total[r].get(col(m, l, r), 0) - f
                    if a12b[m]:
                        # h(a^2 b, a)
                        for r in range(n):
                            total[r][col(m, i3, r)] = total[r].get(col(m, i3, r), 0) + a12b[m]
            for form in total:
                row = {k: v for k, v in form.items() if v}
                if row:
                    rows.append(row)
    return rows


def _cocycle_eliminator(A: Algebra) -> SparseEliminator:
    n = A.dim
    el = SparseEliminator(n * n * (n + 1) // 2)
    for row in cocycle_equations(A):
        el.add(row)
    return el


def cocycle_space(A: Algebra) -> list[SymBilinearMap]:
    """Basis of Z^2(A, A)."""
    if not is_jordan(A):
        raise ValueError("cocycles are defined here for Jordan algebras only")
    n = A.dim
    return [SymBilinearMap.from_vector(n, v) for v in _cocycle_eliminator(A).kernel()]


@functools.lru_cache(maxsize=64)
def _equations_by_constants(c) -> tuple:
    return tuple(tuple(row.items()) for row in cocycle_equations(Algebra(c)))


def is_cocycle(A: Algebra, h: SymBilinearMap) -> bool:
    vec = h.to_vector()
    return all(sum((v * vec[col] for col, v in row), ZERO) == 0
               for row in _equations_by_constants(A.c))


def coboundary_of(A: Algebra, mu: Sequence[Sequence]) -> SymBilinearMap:
    """d(mu)(a, b) = mu(a) b + a mu(b) - mu(ab); ``mu[i][j]`` is the e_i-coordinate of mu(e_j)."""
    n = A.dim
    mu = [[Fraction(x) for x in row] for row in mu]

    def apply(v):
        return [sum((mu[i][j] * v[j] for j in range(n) if v[j]), ZERO) for i in range(n)]

    cols = [apply(unit(n, j)) for j in range(n)]
    h = [[None] * n for _ in range(n)]
    for p in range(n):
        for q in range(n):
            ab = list(A.c[p][q])
            h[p][q] = [x + y - z for x, y, z in zip(A.mul(cols[p], unit(n, q)),
                                                      A.mul(unit(n, p), cols[q]), apply(ab))]
    return SymBilinearMap(h)


def coboundary_vectors(A: Algebra) -> list[list]:
    """d(E_ij) for the matrix units E_ij, as unknown vectors."""
    n = A.dim
    out = []
    for i in range(n):
        for j in range(n):
            mu = [[int(a == i and b == j) for b in range(n)] for a in range(n)]
            out.append(coboundary_of(A, mu).to_vector())
    return out


@dataclass(frozen=True)
class CohomologyReport:
    dim_Z2: int
    dim_B2: int
    dim_H2: int
    witness_basis: tuple[SymBilinearMap, ...] = ()

    @property
    def rigid(self) -> bool:
        """H^2 = 0 is sufficient for rigidity."""
        return self.dim_H2 == 0


def h2(A: Algebra, with_witnesses: bool = False) -> CohomologyReport:
    if not is_jordan(A):
        raise ValueError("H^2 is computed here for Jordan algebras only")
    n = A.dim
    N = n * n * (n + 1) // 2
    if not with_witnesses:
        # dimensions only: integer ranks avoid Fraction arithmetic entirely
        dim_z = N - integer_rank(cocycle_equations(A))
        dim_b = integer_rank({k: v for k, v in enumerate(vec) if v}
                             for vec in coboundary_vectors(A))
        if dim_b > dim_z:
            raise ArithmeticError("coboundaries exceed cocycles; the cocycle system is wrong")
        return CohomologyReport(dim_z, dim_b, dim_z - dim_b)
    z_basis = _cocycle_eliminator(A).kernel()
    b = SparseEliminator(N)
    for vec in coboundary_vectors(A):
        b.add({k: v for k, v in enumerate(vec) if v})
    dim_b = b.rank
    witnesses = []
    if with_witnesses:
        for z in z_basis:
            if b.add({k: v for k, v in enumerate(z) if v}):
                witnesses.append(SymBilinearMap.from_vector(n, z))
    dim_z = len(z_basis)
    if dim_b > dim_z:
        raise ArithmeticError("coboundaries exceed cocycles; the cocycle system is wrong")
    return CohomologyReport(dim_z, dim_b, dim_z - dim_b, tuple(witnesses))
