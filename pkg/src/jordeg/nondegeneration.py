"""Certificates that an algebra does not degenerate to another.

Conventions.  The flag is S_i = span(e_i, ..., e_n) and the Borel group B
is its stabilizer.  Basis changes are written in the row convention of
:mod:`jordeg.algebra` (E_a = sum_i Q[a][i] e_i), where B is the group of
invertible upper triangular Q.  Coordinates are the symmetric structure
constants c_ij^k, 1-based in specs and reports.

Three kinds of certificates:

* derivation-dimension: dim Der(A) >= dim Der(B) for non-isomorphic A, B;
* peirce-obstruction: no idempotent of A has the Peirce spectrum of an
  idempotent of B;
* closed-set: a B-stable set R of structures cut out by vanishing
  coordinates contains A in some basis but meets no structure isomorphic
  to B.  The last part is decided on Bruhat cells: GL = union of B w U_w,
  and stability reduces the question to the polynomial systems
  "constants of B in the basis w u lie in R", u in U_w.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import Algebra, constants_in_basis, in_basis, is_nilpotent
from .catalog import catalog, canonical_label
from .exact.groebner import BudgetExceeded, EmptinessResult, decide_emptiness
from .exact.linalg import identity
from .exact.mpoly import MultiPoly, format_multipoly


class UnsupportedSpec(ValueError):
    pass


class NotBorelStable(ValueError):
    pass


# ------------------------------------------------------------------ specs

@dataclass(frozen=True)
class FlagCondition:
    """``S_a S_b ⊆ S_c`` (kind "sub") or ``S_a S_b = 0`` (kind "zero")."""

    kind: str
    a: int
    b: int
    c: int | None = None

    def __post_init__(self):
        if self.kind not in ("sub", "zero"):
            raise UnsupportedSpec(f"unsupported flag condition kind {self.kind!r}")
        if self.kind == "sub" and self.c is None:
            raise UnsupportedSpec("containment S_a S_b ⊆ S_c needs c")

    def expand(self, n: int) -> set[tuple[int, int, int]]:
        """1-based triples (i, j, k) forced to vanish, both orders of i, j."""
        c = n + 1 if self.kind == "zero" else self.c
        out = set()
        for i in range(self.a, n + 1):
            for j in range(self.b, n + 1):
                for k in range(1, c):
                    out.add((i, j, k))
                    out.add((j, i, k))
        return out

    def __str__(self):
        if self.kind == "zero":
            return f"S{self.a}S{self.b} = 0"
        return f"S{self.a}S{self.b} ⊆ S{self.c}"


@dataclass(frozen=True)
class ClosedSetSpec:
    dim: int
    triples: tuple = ()
    flags: tuple = ()
    name: str = ""

    def __post_init__(self):
        n = self.dim
        trip = tuple(sorted({tuple(t) for t in self.triples}))
        for t in trip:
            if len(t) != 3 or not all(1 <= x <= n for x in t):
                raise UnsupportedSpec(f"triple {t} out of range for dimension {n}")
        flags = tuple(f if isinstance(f, FlagCondition) else FlagCondition(*f)
                      for f in self.flags)
        for f in flags:
            bounds = [f.a, f.b] + ([f.c] if f.kind == "sub" else [])
            if not all(1 <= x <= n for x in bounds):
                raise UnsupportedSpec(f"flag condition {f} out of range for dimension {n}")
        object.__setattr__(self, "triples", trip)
        object.__setattr__(self, "flags", flags)

    @property
    def vanishing(self) -> frozenset:
        """All 1-based (i, j, k) with c_ij^k = 0, closed under i <-> j."""
        out = set()
        for i, j, k in self.triples:
            out.add((i, j, k))
            out.add((j, i, k))
        for f in self.flags:
            out |= f.expand(self.dim)
        return frozenset(out)

    def coordinates(self) -> list[tuple[int, int, int]]:
        """Vanishing coordinates with i <= j, sorted."""
        return sorted(t for t in self.vanishing if t[0] <= t[1])

    def describe(self) -> str:
        parts = [f"c{i}{j}^{k} = 0" for i, j, k in self.triples]
        parts += [str(f) for f in self.flags]
        return ", ".join(parts)

    @classmethod
    def from_coordinates(cls, n: int, coords, name: str = "") -> ClosedSetSpec:
        return cls(n, tuple(coords), (), name)


def spec_to_document(spec: ClosedSetSpec) -> dict:
    return {"name": spec.name, "dim": spec.dim,
            "triples": [list(t) for t in spec.triples],
            "flags": [[f.kind, f.a, f.b] + ([f.c] if f.kind == "sub" else [])
                      for f in spec.flags]}


def spec_from_document(doc: dict) -> ClosedSetSpec:
    try:
        flags = tuple(FlagCondition(*f) for f in doc.get("flags", []))
        return ClosedSetSpec(doc["dim"], tuple(tuple(t) for t in doc.get("triples", [])),
                             flags, doc.get("name", ""))
    except (KeyError, TypeError) as exc:
        raise UnsupportedSpec(f"malformed closed-set spec: {exc}") from None


# ------------------------------------------------------------------ membership

def membership(spec: ClosedSetSpec, A: Algebra) -> bool:
    if A.dim != spec.dim:
        raise ValueError("dimension mismatch")
    return all(A.c[i - 1][j - 1][k - 1] == 0 for i, j, k in spec.vanishing)


def membership_in_basis(spec: ClosedSetSpec, A: Algebra, rows) -> bool:
    return membership(spec, in_basis(A, rows))


def first_violation(spec: ClosedSetSpec, A: Algebra):
    for i, j, k in spec.coordinates():
        v = A.c[i - 1][j - 1][k - 1]
        if v != 0:
            return (i, j, k), v
    return None


# ------------------------------------------------------------------ Borel stability

def _coordinate_names(n: int) -> list[str]:
    return [f"c{i}{j}_{k}" for i in range(1, n + 1) for j in range(i, n + 1)
            for k in range(1, n + 1)]


def _symbolic_constants(n: int, names: Sequence[str]):
    """Generic symmetric structure constants as MultiPoly variables."""
    c = [[[None] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                v = MultiPoly.var(names, f"c{i + 1}{j + 1}_{k + 1}")
                c[i][j][k] = c[j][i][k] = v
    return c


def unipotent_inverse(U):
    """Inverse of a unit upper triangular matrix over a polynomial ring."""
    n = len(U)
    one = U[0][0]
    zero = one - one
    inv = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for i in range(n - 1, -1, -1):
        for j in range(i + 1, n):
            acc = zero
            for k in range(i + 1, j + 1):
                if U[i][k] != 0 and inv[k][j] != 0:
                    acc = acc + U[i][k] * inv[k][j]
            inv[i][j] = -acc
    return inv


@dataclass
class StabilityReport:
    stable: bool
    checked: int
    offending: list = field(default_factory=list)  # (coordinate, monomial)

    def summary(self) -> str:
        if self.stable:
            return f"Borel-stable ({self.checked} constrained coordinates checked)"
        (i, j, k), mono = self.offending[0]
        return (f"not Borel-stable: transformed c{i}{j}^{k} contains the term {mono}, "
                f"which involves no vanishing coordinate")


def borel_stability(spec: ClosedSetSpec) -> StabilityReport:
    """Decide stability under the Borel group symbolically.

    The group element is D U with D = diag(d_i) (inverse entries dinv_i as
    independent variables) and U unit upper triangular with entries u_ij.
    Each constrained coordinate of the transformed structure must have
    every monomial divisible by some constrained input coordinate.  For
    coordinate subspaces this is exact: the torus only contributes the
    monomial factor d_a d_b dinv_k to c'_ab^k.
    """
    n = spec.dim
    coords = _coordinate_names(n)
    group = ([f"d{i}" for i in range(1, n + 1)] + [f"dinv{i}" for i in range(1, n + 1)]
             + [f"u{i}{j}" for i in range(1, n + 1) for j in range(i + 1, n + 1)])
    names = group + coords
    one = MultiPoly.const(names, 1)
    zero = MultiPoly(names)
    U = [[one if i == j else (MultiPoly.var(names, f"u{i + 1}{j + 1}") if j > i else zero)
          for j in range(n)] for i in range(n)]
    d = [MultiPoly.var(names, f"d{i + 1}") for i in range(n)]
    dinv = [MultiPoly.var(names, f"dinv{i + 1}") for i in range(n)]
    Q = [[d[i] * U[i][j] for j in range(n)] for i in range(n)]
    Uinv = unipotent_inverse(U)
    Qinv = [[Uinv[i][j] * dinv[j] for j in range(n)] for i in range(n)]
    c = _symbolic_constants(n, names)
    new = constants_in_basis(c, Q, Qinv)
    vanish_idx = {names.index(f"c{i}{j}_{k}") for i, j, k in spec.coordinates()}
    offending = []
    for i, j, k in spec.coordinates():
        p = new[i - 1][j - 1][k - 1]
        if p == 0:
            continue
        for mono, coef in sorted(p.terms.items()):
            if not any(mono[v] for v in vanish_idx):
                offending.append(((i, j, k), format_multipoly(MultiPoly._raw(p.vars,
                                                                              {mono: coef}))))
                break
    return StabilityReport(not offending, len(spec.coordinates()), offending)


def is_stable_coordinate_set(n: int, coords) -> bool:
    """Combinatorial form of the same test: vanishing (a, b, l) forces
    vanishing of every (i, j, k) with i >= a, j >= b, k <= l (up to i <-> j)."""
    V = {(min(i, j), max(i, j), k) for i, j, k in coords}
    for a, b, l in V:
        for i in range(a, n + 1):
            for j in range(b, n + 1):
                for k in range(1, l + 1):
                    if (min(i, j), max(i, j), k) not in V:
                        return False
    return True


def maximal_stable_set(A: Algebra) -> set[tuple[int, int, int]]:
    """Largest Borel-stable coordinate set containing ``A`` (in its basis)."""
    n = A.dim
    out = set()
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            for l in range(1, n + 1):
                if all(A.c[i - 1][j - 1][k - 1] == 0
                       for i in range(a, n + 1) for j in range(b, n + 1)
                       for k in range(1, l + 1)) and \
                   all(A.c[i - 1][j - 1][k - 1] == 0
                       for i in range(b, n + 1) for j in range(a, n + 1)
                       for k in range(1, l + 1)):
                    out.add((a, b, l))
    return out


# ------------------------------------------------------------------ Bruhat cells

def _inversions(perm: Sequence[int]) -> list[tuple[int, int]]:
    return [(i, j) for i in range(len(perm)) for j in range(i + 1, len(perm))
            if perm[i] > perm[j]]


@dataclass(frozen=True)
class BruhatCell:
    """The cell B w U_w.  ``permutation[i]`` is the image of i (0-based);
    W is the matrix with rows W[i] = e_{permutation[i]}."""

    permutation: tuple
    parameters: tuple  # names u{i}{j} of the free entries of U_w

    @property
    def dimension(self) -> int:
        return len(self.parameters)

    def matrix(self):
        n = len(self.permutation)
        return [[int(self.permutation[i] == j) for j in range(n)] for i in range(n)]


def bruhat_cells(n: int) -> list[BruhatCell]:
    """One cell per permutation; U_w = U ∩ W^-1 U^- W has inversion-count parameters."""
    cells = []
    for perm in itertools.permutations(range(n)):
        W = [[int(perm[i] == j) for j in range(n)] for i in range(n)]
        params = []
        for i in range(n):
            for j in range(i + 1, n):
                # W E_ij W^-1 = E_{r s} where rows r, s of W are e_i, e_j
                r = next(a for a in range(n) if W[a][i])
                s = next(a for a in range(n) if W[a][j])
                if r > s:
                    params.append(f"u{i + 1}{j + 1}")
        cells.append(BruhatCell(tuple(perm), tuple(params)))
    return cells


def cell_system(spec: ClosedSetSpec, B: Algebra, cell: BruhatCell) -> list[MultiPoly]:
    """Polynomials whose common zeros are the u in U_w with B in basis W u inside R."""
    n = B.dim
    names = list(cell.parameters) or ["u"]
    one = MultiPoly.const(names, 1)
    zero = MultiPoly(names)
    U = [[one if i == j else (MultiPoly.var(names, f"u{i + 1}{j + 1}")
                              if f"u{i + 1}{j + 1}" in cell.parameters else zero)
          for j in range(n)] for i in range(n)]
    W = [[one if x else zero for x in row] for row in cell.matrix()]
    P = [[sum((W[i][k] * U[k][j] for k in range(n)), zero) for j in range(n)] for i in range(n)]
    # (W U)^-1 = U^-1 W^T
    Uinv = unipotent_inverse(U)
    WT = [[W[j][i] for j in range(n)] for i in range(n)]
    Pinv = [[sum((Uinv[i][k] * WT[k][j] for k in range(n)), zero) for j in range(n)]
            for i in range(n)]
    c = [[[MultiPoly.const(names, v) for v in row] for row in plane] for plane in B.c]
    new = constants_in_basis(c, P, Pinv)
    eqs = []
    for i, j, k in spec.coordinates():
        p = new[i - 1][j - 1][k - 1]
        if isinstance(p, MultiPoly) and not p.is_zero():
            eqs.append(p)
        elif not isinstance(p, MultiPoly) and p != 0:
            eqs.append(MultiPoly.const(names, p))
    return eqs


@dataclass
class CellTranscript:
    permutation: tuple
    parameters: tuple
    generators: list
    basis: list
    verdict: str  # "empty-over-C", "nonempty-over-C", "undecided"

    def as_dict(self) -> dict:
        return {"permutation": [p + 1 for p in self.permutation],
                "parameters": list(self.parameters),
                "generators": [format_multipoly(g) for g in self.generators],
                "reduced_basis": [format_multipoly(g) for g in self.basis],
                "verdict": self.verdict}


@dataclass
class ExclusionResult:
    verdict: str  # "excluded", "not-excluded", "undecided"
    cells: list

    def as_dict(self) -> dict:
        return {"verdict": self.verdict, "cells": [c.as_dict() for c in self.cells]}


def orbit_exclusion(spec: ClosedSetSpec, B: Algebra, budget: int | None = None,
                    check_stability: bool = True) -> ExclusionResult:
    """Is no structure isomorphic to ``B`` inside the closed set?"""
    if check_stability and not borel_stability(spec).stable:
        raise NotBorelStable(f"{spec.name or 'spec'} is not Borel-stable; "
                             "the Bruhat reduction does not apply")
    cells = []
    undecided = False
    nonempty = False
    for cell in bruhat_cells(B.dim):
        eqs = cell_system(spec, B, cell)
        try:
            res: EmptinessResult = decide_emptiness(eqs, budget=budget) if eqs else None
        except BudgetExceeded:
            cells.append(CellTranscript(cell.permutation, cell.parameters, eqs, [], "undecided"))
            undecided = True
            continue
        if res is None:
            cells.append(CellTranscript(cell.permutation, cell.parameters, [], [],
                                        "nonempty-over-C"))
            nonempty = True
            continue
        cells.append(CellTranscript(cell.permutation, cell.parameters, list(eqs),
                                    list(res.basis), res.verdict.value))
        nonempty = nonempty or not res.empty
    if nonempty:
        return ExclusionResult("not-excluded", cells)
    return ExclusionResult("undecided" if undecided else "excluded", cells)


# ------------------------------------------------------------------ Peirce obstruction

class NilpotentTarget(ValueError):
    pass


@dataclass(frozen=True)
class PeirceResult:
    verdict: str  # "obstructed" / "not-obstructed"
    source_spectra: tuple
    target_spectra: tuple


def peirce_obstruction(A: Algebra, B: Algebra, budget: int | None = None) -> PeirceResult:
    """Obstructed when no idempotent of A shares a Peirce spectrum with any
    idempotent of B.  Requires B non-nilpotent."""
    from .invariants import idempotent_spectra

    if is_nilpotent(B)[0]:
        raise NilpotentTarget("the Peirce obstruction needs a non-nilpotent target")
    sa = idempotent_spectra(A, budget)
    sb = idempotent_spectra(B, budget)
    verdict = "not-obstructed" if sa & sb else "obstructed"
    return PeirceResult(verdict, tuple(sorted(sa)), tuple(sorted(sb)))


# ------------------------------------------------------------------ power identities

def _minors(rows, r):
    """All r x r minors (column subsets) of an r x n matrix of polynomials."""
    n = len(rows[0])
    out = []
    for cols in itertools.combinations(range(n), r):
        total = None
        for perm in itertools.permutations(range(r)):
            inv = sum(1 for a in range(r) for b in range(a + 1, r) if perm[a] > perm[b])
            term = rows[0][cols[perm[0]]]
            for i in range(1, r):
                term = term * rows[i][cols[perm[i]]]
            if inv % 2:
                term = -term
            total = term if total is None else total + term
        out.append(total)
    return out


def power_wedges(A: Algebra, r: int) -> list[MultiPoly]:
    """Coordinates of x ∧ x^2 ∧ ... ∧ x^r for a generic x = sum x_i e_i."""
    n = A.dim
    names = [f"x{i + 1}" for i in range(n)]
    x = MultiPoly.gens(names)
    zero = MultiPoly(names)

    def mul(u, v):
        out = [zero] * n
        for i in range(n):
            if u[i].is_zero():
                continue
            for j in range(n):
                if v[j].is_zero():
                    continue
                uv = u[i] * v[j]
                for k in range(n):
                    if A.c[i][j][k]:
                        out[k] = out[k] + uv.scale(A.c[i][j][k])
        return out

    powers = [x]
    while len(powers) < r:
        powers.append(mul(x, powers[-1]))
    return _minors(powers, r)


def monogenic_rank(A: Algebra) -> int:
    """Generic dimension of span(x, x^2, x^3, ...), the subalgebra generated
    by one element of a power-associative algebra.

    The condition "x, ..., x^(r+1) are dependent for every x" is a
    polynomial identity in the structure constants and is invariant under
    basis change, so it defines a closed set of structures: the rank can
    only drop under degeneration.
    """
    r = 0
    while r < A.dim and any(not m.is_zero() for m in power_wedges(A, r + 1)):
        r += 1
    return r


@dataclass(frozen=True)
class PowerIdentityResult:
    verdict: str  # "obstructed" / "not-obstructed"
    source_rank: int
    target_rank: int


def power_identity_obstruction(A: Algebra, B: Algebra) -> PowerIdentityResult:
    """Obstructed when A satisfies x ∧ ... ∧ x^(r+1) = 0 and B does not."""
    ra, rb = monogenic_rank(A), monogenic_rank(B)
    return PowerIdentityResult("obstructed" if ra < rb else "not-obstructed", ra, rb)


# ------------------------------------------------------------------ certificates

CERTIFICATE_KINDS = ("derivation-dimension", "peirce-obstruction", "closed-set", "power-identity")


@dataclass
class NonDegenerationCertificate:
    kind: str  # one of CERTIFICATE_KINDS
    source: str
    target: str
    spec: ClosedSetSpec | None = None
    basis: list | None = None  # rows, in the source's basis
    transcripts: list | None = None
    note: str = ""

    def to_document(self) -> dict:
        doc = {"kind": self.kind, "source": self.source, "target": self.target}
        if self.kind == "closed-set":
            doc["spec"] = spec_to_document(self.spec)
            doc["basis"] = [[_fmt(x) for x in row] for row in self.basis]
            if self.transcripts is not None:
                doc["cells"] = self.transcripts
        if self.note:
            doc["note"] = self.note
        return doc

    @classmethod
    def from_document(cls, doc: dict) -> NonDegenerationCertificate:
        kind = doc.get("kind")
        if kind not in CERTIFICATE_KINDS:
            raise ValueError(f"unknown certificate kind {kind!r}")
        cert = cls(kind, doc["source"], doc["target"], note=doc.get("note", ""))
        if kind == "closed-set":
            cert.spec = spec_from_document(doc["spec"])
            cert.basis = [[Fraction(x) for x in row] for row in doc["basis"]]
            cert.transcripts = doc.get("cells")
        return cert


def _fmt(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass
class CertificateReport:
    ok: bool
    kind: str
    source: str
    target: str
    steps: list = field(default_factory=list)  # (name, passed, detail)
    undecided: bool = False
    exclusion: ExclusionResult | None = None

    def summary(self) -> str:
        status = "certified" if self.ok else ("UNDECIDED" if self.undecided else "FAILED")
        detail = "; ".join(f"{n}: {'ok' if p else 'fail'}" + (f" ({d})" if d else "")
                           for n, p, d in self.steps)
        return f"{self.source} -/-> {self.target} [{self.kind}]: {status}; {detail}"

    def as_dict(self) -> dict:
        return {"source": self.source, "target": self.target, "kind": self.kind,
                "ok": self.ok, "undecided": self.undecided,
                "steps": [{"name": n, "passed": p, "detail": d} for n, p, d in self.steps]}


def check_certificate(cert: NonDegenerationCertificate, budget: int | None = None
                      ) -> CertificateReport:
    from .degeneration import derivation_check

    A, B = catalog(cert.source), catalog(cert.target)
    src, tgt = canonical_label(cert.source), canonical_label(cert.target)
    rep = CertificateReport(False, cert.kind, src, tgt)
    if cert.kind == "derivation-dimension":
        chk = derivation_check(A, B)
        ok = chk.verdict == "obstructed"
        rep.steps.append(("derivation dimension", ok,
                          f"dim Der {chk.der_source} vs {chk.der_target}"))
        rep.ok = ok
        return rep
    if cert.kind == "peirce-obstruction":
        try:
            res = peirce_obstruction(A, B, budget)
        except NilpotentTarget as exc:
            rep.steps.append(("non-nilpotent target", False, str(exc)))
            return rep
        ok = res.verdict == "obstructed"
        rep.steps.append(("Peirce spectra disjoint", ok,
                          f"source {list(res.source_spectra)}, target {list(res.target_spectra)}"))
        rep.ok = ok
        return rep
    if cert.kind == "power-identity":
        res = power_identity_obstruction(A, B)
        ok = res.verdict == "obstructed"
        rep.steps.append(("monogenic rank drops", ok,
                          f"source {res.source_rank}, target {res.target_rank}"))
        rep.ok = ok
        return rep
    # closed set
    member = membership_in_basis(cert.spec, A, cert.basis)
    rep.steps.append(("membership of source", member, ""))
    stab = borel_stability(cert.spec)
    rep.steps.append(("Borel stability", stab.stable, "" if stab.stable else stab.summary()))
    try:
        excl = orbit_exclusion(cert.spec, B, budget, check_stability=False)
    except BudgetExceeded:  # pragma: no cover - handled per cell
        excl = ExclusionResult("undecided", [])
    rep.exclusion = excl
    rep.steps.append(("orbit exclusion on Bruhat cells", excl.verdict == "excluded",
                      excl.verdict))
    rep.undecided = excl.verdict == "undecided"
    rep.ok = member and stab.stable and excl.verdict == "excluded"
    return rep


def load_certificates(text: str) -> list[NonDegenerationCertificate]:
    data = json.loads(text)
    if isinstance(data, dict) and "certificates" in data:
        data = data["certificates"]
    if isinstance(data, dict):
        data = [data]
    return [NonDegenerationCertificate.from_document(d) for d in data]


def identity_basis(n: int):
    return identity(n)
