"""Isomorphism invariants of Jordan algebras."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Algebra, in_basis, is_jordan, is_nilpotent, power_dims, square_dim, unit
from .exact.groebner import (
    PositiveDimensional,
    decide_emptiness,
    groebner_basis,
    ideal_dimension,
    is_unit_ideal,
    rational_solutions,
)
from .exact.linalg import kernel, span_basis, sparse_kernel, in_span
from .exact.mpoly import MultiPoly

HALF = Fraction(1, 2)
ZERO = Fraction(0)


class NotJordanError(ValueError):
    pass


def _require_jordan(A: Algebra):
    if not is_jordan(A):
        raise NotJordanError(f"{A.label or 'algebra'} is not a Jordan algebra")


# ------------------------------------------------------------------ derivations

@dataclass(frozen=True)
class DerivationSpace:
    """``basis`` holds matrices D with d(e_j) = sum_i D[i][j] e_i."""

    dim: int
    basis: tuple


def leibniz_rows(A: Algebra) -> list[dict]:
    """d(e_a e_b) = d(e_a) e_b + e_a d(e_b); unknown D[i][j] sits in column i*n + j."""
    n = A.dim
    c = A.c
    rows = []
    for a in range(n):
        for b in range(n):
            for k in range(n):
                row: dict[int, Fraction] = {}
                for m in range(n):
                    if c[a][b][m]:
                        row[k * n + m] = row.get(k * n + m, 0) + c[a][b][m]
                for i in range(n):
                    if c[i][b][k]:
                        row[i * n + a] = row.get(i * n + a, 0) - c[i][b][k]
                    if c[a][i][k]:
                        row[i * n + b] = row.get(i * n + b, 0) - c[a][i][k]
                row = {col: v for col, v in row.items() if v}
                if row:
                    rows.append(row)
    return rows


def derivation_algebra(A: Algebra) -> DerivationSpace:
    n = A.dim
    vecs = sparse_kernel(leibniz_rows(A), n * n)
    basis = tuple(tuple(tuple(v[i * n:(i + 1) * n]) for i in range(n)) for v in vecs)
    return DerivationSpace(len(basis), basis)


def is_derivation(A: Algebra, D: Sequence[Sequence]) -> bool:
    n = A.dim

    def d(v):
        return [sum((D[i][j] * v[j] for j in range(n) if v[j]), ZERO) for i in range(n)]

    for a in range(n):
        for b in range(n):
            ea, eb = unit(n, a), unit(n, b)
            lhs = d(list(A.c[a][b]))
            rhs = [x + y for x, y in zip(A.mul(d(ea), eb), A.mul(ea, d(eb)))]
            if lhs != rhs:
                return False
    return True


# ------------------------------------------------------------------ radical

def trace_form(A: Algebra) -> list[list[Fraction]]:
    """tau(e_i, e_j) = tr L_{e_i e_j}."""
    n = A.dim
    tr = [sum((A.c[m][k][k] for k in range(n)), ZERO) for m in range(n)]
    return [[sum((A.c[i][j][m] * tr[m] for m in range(n)), ZERO) for j in range(n)]
            for i in range(n)]


def trace_form_radical(A: Algebra) -> list[list[Fraction]]:
    _require_jordan(A)
    return span_basis(kernel(trace_form(A), A.dim))


# ------------------------------------------------------------------ idempotents

def _coordinate_ring(n: int):
    names = [f"x{i + 1}" for i in range(n)]
    return names, MultiPoly.gens(names)


def _symbolic_element(A: Algebra):
    names, xs = _coordinate_ring(A.dim)
    return names, xs


def idempotent_equations(A: Algebra) -> list[MultiPoly]:
    """x^2 - x = 0 in the coordinates x1..xn."""
    n = A.dim
    names, xs = _coordinate_ring(n)
    zero = MultiPoly(names)
    sq = [zero] * n
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if A.c[i][j][k]:
                    sq[k] = sq[k] + (xs[i] * xs[j]).scale(A.c[i][j][k])
    return [sq[k] - xs[k] for k in range(n)]


@dataclass(frozen=True)
class IdempotentData:
    """Nonzero idempotents, or the dimension of their variety when infinite."""

    finite: bool
    variety_dim: int
    idempotents: tuple = ()
    frames: tuple = ()

    @property
    def count(self) -> int | None:
        return len(self.idempotents) if self.finite else None


def idempotent_frames(A: Algebra, budget: int | None = None) -> IdempotentData:
    """Maximal sets of pairwise orthogonal primitive idempotents.

    Frames are listed only when x^2 = x has finitely many solutions, which
    must then all be rational (otherwise ``NonRationalSolutions`` escapes).
    """
    _require_jordan(A)
    eqs = idempotent_equations(A)
    gb = groebner_basis(eqs, budget=budget)
    vdim = ideal_dimension(gb) if gb else A.dim
    if vdim > 0:
        return IdempotentData(False, vdim)
    names = [f"x{i + 1}" for i in range(A.dim)]
    sols = rational_solutions(eqs, budget=budget)
    idem = sorted((tuple(s[v] for v in names) for s in sols), reverse=True)
    idem = [e for e in idem if any(e)]
    # f <= e when ef = f; primitive idempotents have nothing strictly below them
    prim = [e for e in idem
            if not any(f != e and tuple(A.mul(e, f)) == f for f in idem)]
    orth = {(e, f): not any(A.mul(e, f)) for e in prim for f in prim}
    frames = []
    for size in range(len(prim), 0, -1):
        for combo in itertools.combinations(prim, size):
            if all(orth[(e, f)] for e, f in itertools.combinations(combo, 2)):
                if not any(set(combo) <= set(fr) for fr in frames):
                    frames.append(combo)
    return IdempotentData(True, 0, tuple(idem), tuple(frames))


def spectrum(A: Algebra, e: Sequence) -> tuple[int, int, int]:
    """Multiplicities of the eigenvalues 0, 1/2, 1 of L_e."""
    pd = peirce_decomposition(A, e)
    return pd.dims


def idempotent_spectra(A: Algebra, budget: int | None = None) -> frozenset:
    """All spectra (m0, m_half, m1) of L_e over nonzero idempotents e in A over C.

    For an idempotent L_e is diagonalizable with eigenvalues in {0, 1/2, 1},
    so tr L_e = m_half/2 + m1 and tr L_e^2 = m_half/4 + m1 pin the spectrum
    down.  Each candidate is decided by an emptiness test, which also covers
    infinite families of idempotents.
    """
    _require_jordan(A)
    n = A.dim
    names, xs = _coordinate_ring(n)
    eqs = idempotent_equations(A)
    zero = MultiPoly(names)
    # L_x as a matrix of linear forms: L[k][j] = sum_i x_i c[i][j][k]
    L = [[zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if A.c[i][j][k]:
                    L[k][j] = L[k][j] + xs[i].scale(A.c[i][j][k])
    tr1 = sum((L[k][k] for k in range(n)), zero)
    tr2 = sum((L[k][j] * L[j][k] for k in range(n) for j in range(n)), zero)
    found = set()
    for m1 in range(1, n + 1):
        for mh in range(0, n - m1 + 1):
            system = eqs + [tr1 - (Fraction(mh, 2) + m1), tr2 - (Fraction(mh, 4) + m1)]
            if not decide_emptiness(system, budget=budget).empty:
                found.add((n - mh - m1, mh, m1))
    return frozenset(found)


# ------------------------------------------------------------------ Peirce

class PeirceRelationError(ArithmeticError):
    pass


@dataclass(frozen=True)
class PeirceDecomposition:
    idempotent: tuple
    J0: tuple
    J1: tuple
    J2: tuple

    @property
    def dims(self) -> tuple[int, int, int]:
        return len(self.J0), len(self.J1), len(self.J2)


def _eigenspace(L, lam, n):
    M = [[L[i][j] - (lam if i == j else 0) for j in range(n)] for i in range(n)]
    return span_basis(kernel(M, n))


def _contained(A, U, V, W) -> bool:
    return all(in_span(W, A.mul(u, v)) for u in U for v in V) if W else \
        all(not any(A.mul(u, v)) for u in U for v in V)


def peirce_decomposition(A: Algebra, e: Sequence) -> PeirceDecomposition:
    n = A.dim
    e = [Fraction(x) for x in e]
    if not any(e):
        raise ValueError("the idempotent must be nonzero")
    if A.mul(e, e) != e:
        raise ValueError("not an idempotent")
    L = A.left_mult(e)
    J0, J1, J2 = (_eigenspace(L, lam, n) for lam in (ZERO, HALF, Fraction(1)))
    if len(J0) + len(J1) + len(J2) != n:
        raise PeirceRelationError("L_e is not diagonalizable with eigenvalues 0, 1/2, 1")
    J02 = span_basis(J0 + J2)
    checks = [
        ("J0 J0 in J0", J0, J0, J0),
        ("J2 J2 in J2", J2, J2, J2),
        ("J0 J2 = 0", J0, J2, []),
        ("J0 J1 in J1", J0, J1, J1),
        ("J2 J1 in J1", J2, J1, J1),
        ("J1 J1 in J0 + J2", J1, J1, J02),
    ]
    for name, U, V, W in checks:
        if not _contained(A, U, V, W):
            raise PeirceRelationError(f"Peirce relation {name} fails")
    as_t = lambda B: tuple(tuple(v) for v in B)
    return PeirceDecomposition(tuple(e), as_t(J0), as_t(J1), as_t(J2))


# ------------------------------------------------------------------ semisimple part

@dataclass(frozen=True)
class SemisimplePart:
    radical_basis: tuple
    quotient: Algebra
    action_spectra: frozenset


def semisimple_part(A: Algebra, budget: int | None = None) -> SemisimplePart:
    """Quotient by the radical, plus the Peirce spectra of A's idempotents.

    The quotient is taken on the complement spanned by the standard basis
    vectors at the non-pivot positions of the radical.
    """
    rad = trace_form_radical(A)
    n = A.dim
    pivots = {next(i for i, x in enumerate(v) if x) for v in rad}
    comp = [unit(n, i) for i in range(n) if i not in pivots]
    m = len(comp)
    B = in_basis(A, comp + [list(v) for v in rad]) if n else A
    c = [[[B.c[i][j][k] for k in range(m)] for j in range(m)] for i in range(m)]
    names = [A.basis_names[i] for i in range(n) if i not in pivots]
    quotient = Algebra(c, tuple(names))
    spectra = idempotent_spectra(A, budget) if n else frozenset()
    return SemisimplePart(tuple(tuple(v) for v in rad), quotient, spectra)


# ------------------------------------------------------------------ fingerprint

@dataclass(frozen=True)
class Fingerprint:
    dim: int
    der: int
    rad: int
    nilpotent: bool
    nilindex: int | None
    powers: tuple
    idempotents: int | None
    idempotent_variety_dim: int
    spectra: tuple
    square: int
    h2: int

    def as_dict(self) -> dict:
        return {"dim": self.dim, "der": self.der, "rad": self.rad,
                "nilpotent": self.nilpotent, "nilindex": self.nilindex,
                "powers": list(self.powers), "idempotents": self.idempotents,
                "idempotent_variety_dim": self.idempotent_variety_dim,
                "spectra": [list(s) for s in self.spectra], "square": self.square,
                "h2": self.h2}


def idempotent_count(A: Algebra, budget: int | None = None) -> tuple[int | None, int]:
    """(number of nonzero idempotents or None, dimension of the idempotent variety)."""
    gb = groebner_basis(idempotent_equations(A), budget=budget)
    if not gb or is_unit_ideal(gb):
        return (None, A.dim) if not gb else (0, -1)
    vdim = ideal_dimension(gb)
    if vdim > 0:
        return None, vdim
    try:
        sols = rational_solutions(idempotent_equations(A), budget=budget)
    except PositiveDimensional:  # pragma: no cover - excluded by the dimension test
        return None, vdim
    return sum(1 for s in sols if any(s.values())), 0


def fingerprint(A: Algebra, budget: int | None = None) -> Fingerprint:
    from .cohomology import h2

    _require_jordan(A)
    nil, index = is_nilpotent(A)
    count, vdim = idempotent_count(A, budget)
    return Fingerprint(
        dim=A.dim,
        der=derivation_algebra(A).dim,
        rad=len(trace_form_radical(A)),
        nilpotent=nil,
        nilindex=index,
        powers=power_dims(A),
        idempotents=count,
        idempotent_variety_dim=vdim,
        spectra=tuple(sorted(idempotent_spectra(A, budget))),
        square=square_dim(A),
        h2=h2(A).dim_H2,
    )


__all__ = ["DerivationSpace", "derivation_algebra", "is_derivation", "trace_form",
           "trace_form_radical", "IdempotentData", "idempotent_frames", "idempotent_spectra",
           "spectrum", "PeirceDecomposition", "peirce_decomposition", "PeirceRelationError",
           "SemisimplePart", "semisimple_part", "Fingerprint", "fingerprint", "NotJordanError",
           "idempotent_equations", "idempotent_count"]
