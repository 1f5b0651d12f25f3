"""Degenerations A -> B certified by parametrized bases.

A parametrized basis is an n x n matrix over Q(t) whose row i gives
E_i(t) = sum_j a_ij(t) e_j in the source's basis.  If the constants of the
source in that basis have finite limits at t = 0 equal to the target's
constants, the source degenerates to the target.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .algebra import Algebra, AlgebraOverT, algebra_from_document, transform_over_t
from .catalog import ZERO_LABEL, catalog, is_label, canonical_label
from .exact.expr import parse_ratfunc
from .exact.linalg import determinant, SingularMatrixError
from .exact.poly import RatFunc, UniPoly


@dataclass(frozen=True)
class ParametrizedBasis:
    matrix: tuple

    def __post_init__(self):
        rows = tuple(tuple(x if isinstance(x, RatFunc) else RatFunc(x) for x in row)
                     for row in self.matrix)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("parametrized basis must be square")
        object.__setattr__(self, "matrix", rows)

    @classmethod
    def parse(cls, rows: Sequence[Sequence]) -> ParametrizedBasis:
        return cls(tuple(tuple(parse_ratfunc(x) if isinstance(x, str) else RatFunc(x)
                               for x in row) for row in rows))

    @classmethod
    def scaling(cls, n: int) -> ParametrizedBasis:
        t = RatFunc(UniPoly.t())
        return cls(tuple(tuple(t if i == j else RatFunc(0) for j in range(n)) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def determinant(self) -> RatFunc:
        return determinant([list(r) for r in self.matrix])

    def non_polynomial_entries(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.matrix)
                for j, x in enumerate(row) if not x.is_polynomial()]

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.matrix]


def transform_by_parametrized_basis(A: Algebra, E: ParametrizedBasis) -> AlgebraOverT:
    if E.dim != A.dim:
        raise ValueError(f"basis of size {E.dim} for an algebra of dimension {A.dim}")
    return transform_over_t(A, E.matrix)


def _resolve(x) -> tuple[Algebra, str]:
    if isinstance(x, Algebra):
        return x, x.label or "algebra"
    if isinstance(x, dict):
        A = algebra_from_document(x)
        return A, A.label or "algebra"
    return catalog(x), canonical_label(x)


@dataclass(frozen=True)
class DegenerationWitness:
    source: object
    target: object
    basis: ParametrizedBasis
    note: str = ""

    @property
    def source_algebra(self) -> Algebra:
        return _resolve(self.source)[0]

    @property
    def target_algebra(self) -> Algebra:
        return _resolve(self.target)[0]

    @property
    def edge(self) -> tuple[str, str]:
        return _resolve(self.source)[1], _resolve(self.target)[1]


@dataclass
class WitnessReport:
    ok: bool
    source: str
    target: str
    poles: list = field(default_factory=list)
    mismatches: list = field(default_factory=list)
    non_polynomial: list = field(default_factory=list)
    determinant: str = ""
    error: str = ""

    def summary(self) -> str:
        if self.error:
            return f"{self.source} -> {self.target}: {self.error}"
        if self.ok:
            extra = " (non-polynomial entries)" if self.non_polynomial else ""
            return f"{self.source} -> {self.target}: verified, det = {self.determinant}{extra}"
        parts = []
        if self.poles:
            parts.append("poles at " + ", ".join(_coord(p) for p in self.poles))
        if self.mismatches:
            parts.append("mismatch at " + ", ".join(
                f"{_coord(p)} (limit {got}, expected {want})" for p, got, want in self.mismatches))
        return f"{self.source} -> {self.target}: FAILED, " + "; ".join(parts)

    def as_dict(self) -> dict:
        return {"source": self.source, "target": self.target, "ok": self.ok,
                "determinant": self.determinant,
                "poles": [_coord(p) for p in self.poles],
                "mismatches": [{"coordinate": _coord(p), "limit": str(g), "expected": str(w)}
                               for p, g, w in self.mismatches],
                "non_polynomial_entries": [list(p) for p in self.non_polynomial],
                "error": self.error}


def _coord(p) -> str:
    i, j, k = p
    return f"c[{i + 1}][{j + 1}]^{k + 1}"


def verify_witness(w: DegenerationWitness) -> WitnessReport:
    A, src = _resolve(w.source)
    B, tgt = _resolve(w.target)
    if A.dim != B.dim or w.basis.dim != A.dim:
        return WitnessReport(False, src, tgt, error="dimension mismatch")
    det = w.basis.determinant()
    if det == 0:
        return WitnessReport(False, src, tgt, determinant="0", error="singular basis")
    try:
        over_t = transform_by_parametrized_basis(A, w.basis)
    except SingularMatrixError as exc:  # pragma: no cover - determinant already checked
        return WitnessReport(False, src, tgt, error=str(exc))
    limit, poles = over_t.limit()
    n = A.dim
    mismatches = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if (i, j, k) in poles:
                    continue
                if limit.c[i][j][k] != B.c[i][j][k]:
                    mismatches.append(((i, j, k), limit.c[i][j][k], B.c[i][j][k]))
    return WitnessReport(not poles and not mismatches, src, tgt, poles, mismatches,
                         w.basis.non_polynomial_entries(), str(det))


def scaling_witness(source) -> DegenerationWitness:
    """Any algebra degenerates to the zero algebra via E = t * identity."""
    A, label = _resolve(source)
    target = ZERO_LABEL.get(A.dim) if is_label(label) else None
    if target is None:
        target = Algebra.zero(A.dim, A.basis_names)
    return DegenerationWitness(source, target, ParametrizedBasis.scaling(A.dim))


# ------------------------------------------------------------------ derivation criterion

@dataclass(frozen=True)
class DerivationCheck:
    verdict: str  # "consistent" or "obstructed"
    der_source: int
    der_target: int
    orbit_dim_source: int
    orbit_dim_target: int


def derivation_check(A: Algebra, B: Algebra) -> DerivationCheck:
    """A proper degeneration A -> B needs dim Der(A) < dim Der(B)."""
    from .invariants import derivation_algebra, fingerprint

    if A.dim != B.dim:
        raise ValueError("algebras of different dimensions")
    n = A.dim
    da, db = derivation_algebra(A).dim, derivation_algebra(B).dim
    obstructed = da >= db and A != B and fingerprint(A) != fingerprint(B)
    return DerivationCheck("obstructed" if obstructed else "consistent", da, db,
                           n * n - da, n * n - db)


# ------------------------------------------------------------------ file format

def witness_from_document(doc: dict) -> DegenerationWitness:
    for key in ("source", "target", "basis"):
        if key not in doc:
            raise ValueError(f"witness document lacks {key!r}")
    basis = ParametrizedBasis.parse(doc["basis"])
    return DegenerationWitness(doc["source"], doc["target"], basis, doc.get("note", ""))


def witness_to_document(w: DegenerationWitness) -> dict:
    def ref(x):
        if isinstance(x, Algebra):
            from .algebra import algebra_to_document
            return algebra_to_document(x)
        return x
    doc = {"source": ref(w.source), "target": ref(w.target), "basis": w.basis.to_strings()}
    if w.note:
        doc["note"] = w.note
    return doc


def load_witnesses(text: str) -> list[DegenerationWitness]:
    """A witness file holds one witness document or a list of them."""
    data = json.loads(text)
    if isinstance(data, dict) and "witnesses" in data:
        data = data["witnesses"]
    if isinstance(data, dict):
        data = [data]
    return [witness_from_document(d) for d in data]
