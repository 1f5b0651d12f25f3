"""Algebras given by structure constants.

``A.c[i][j][k]`` is the coefficient of basis element ``k`` in the product
of basis elements ``i`` and ``j`` (0-based internally).  Entries are
``Fraction`` for ordinary algebras and ``RatFunc`` for algebras over Q(t);
the basis-change routine below works for any ring element type.

Basis changes use the row convention: a matrix ``R`` describes the new
basis ``E_i = sum_j R[i][j] e_j``.
"""

from __future__ import annotations

import functools
import itertools
import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact.linalg import SingularMatrixError, determinant, inverse, span_basis, transpose
from .exact.poly import RatFunc, limit_at_zero, POLE

ZERO = Fraction(0)


class NotCommutativeError(ValueError):
    pass


@dataclass(frozen=True)
class Algebra:
    """Equality compares structure constants only, not names or labels."""

    c: tuple
    basis_names: tuple[str, ...] = field(default=(), compare=False)
    label: str | None = field(default=None, compare=False)
    tags: str = field(default="", compare=False)

    def __post_init__(self):
        n = len(self.c)
        c = tuple(tuple(tuple(row) for row in plane) for plane in self.c)
        if any(len(plane) != n or any(len(row) != n for row in plane) for plane in c):
            raise ValueError(f"structure constants must have shape {n}x{n}x{n}")
        object.__setattr__(self, "c", c)
        names = tuple(self.basis_names) or tuple(f"e{i + 1}" for i in range(n))
        if len(names) != n:
            raise ValueError(f"{len(names)} basis names for dimension {n}")
        object.__setattr__(self, "basis_names", names)

    @property
    def dim(self) -> int:
        return len(self.c)

    @classmethod
    def zero(cls, n: int, basis_names: Sequence[str] = (), label: str | None = None) -> Algebra:
        return cls(tuple(tuple((ZERO,) * n for _ in range(n)) for _ in range(n)),
                   tuple(basis_names), label)

    def with_label(self, label: str | None) -> Algebra:
        return Algebra(self.c, self.basis_names, label, self.tags)

    # -- arithmetic ----------------------------------------------------
    def mul(self, x: Sequence, y: Sequence) -> list:
        n = self.dim
        out = [ZERO] * n
        for i in range(n):
            if x[i] == 0:
                continue
            for j in range(n):
                if y[j] == 0:
                    continue
                f = x[i] * y[j]
                row = self.c[i][j]
                for k in range(n):
                    if row[k] != 0:
                        out[k] = out[k] + f * row[k]
        return out

    def product(self, i: int, j: int) -> list:
        return list(self.c[i][j])

    def left_mult(self, x: Sequence) -> list[list]:
        """Matrix of L_x acting on coordinate columns."""
        n = self.dim
        cols = [self.mul(x, unit(n, j)) for j in range(n)]
        return transpose(cols)

    def is_zero_algebra(self) -> bool:
        return all(v == 0 for plane in self.c for row in plane for v in row)

    def __str__(self):
        return format_table(self)


def unit(n: int, i: int) -> list:
    return [Fraction(int(k == i)) for k in range(n)]


# ------------------------------------------------------------------ identities

def is_commutative(A: Algebra) -> bool:
    n = A.dim
    return all(A.c[i][j] == A.c[j][i] for i in range(n) for j in range(i + 1, n))


def jordan_violation(A: Algebra):
    """First basis quadruple ``(i1, i2, i3, j)`` where the linearized Jordan
    identity fails, with the nonzero value; ``None`` for Jordan algebras.

    Linearizing (x^2 y) x = x^2 (y x) at x = x1 + x2 + x3 gives
    sum over permutations of ((x_a x_b) y) x_c - (x_a x_b)(y x_c).
    """
    if not is_commutative(A):
        raise NotCommutativeError("the Jordan identity is checked only for commutative algebras")
    n = A.dim
    mul = A.mul
    basis = [unit(n, i) for i in range(n)]
    sq = [[A.c[a][b] for b in range(n)] for a in range(n)]
    for trip in itertools.combinations_with_replacement(range(n), 3):
        for j in range(n):
            y = basis[j]
            total = [ZERO] * n
            # distinct orderings of the multiset, each weighted by its stabilizer
            w = _perm_weight(trip)
            for a, b, c in set(itertools.permutations(trip)):
                xab = list(sq[a][b])
                lhs = mul(mul(xab, y), basis[c])
                rhs = mul(xab, mul(y, basis[c]))
                total = [t + w * (l - r) for t, l, r in zip(total, lhs, rhs)]
            if any(v != 0 for v in total):
                return (*trip, j), total
    return None


def _perm_weight(trip) -> int:
    w = 1
    for v in set(trip):
        for m in range(2, trip.count(v) + 1):
            w *= m
    return w


def is_jordan(A: Algebra) -> bool:
    return is_commutative(A) and _jordan_by_constants(A.c)


@functools.lru_cache(maxsize=1024)
def _jordan_by_constants(c) -> bool:
    # invariants call is_jordan repeatedly on the same structure.  The
    # linearized identity is cubic in the constants, so clearing their
    # denominators keeps its zero set and lets the check run on ints.
    n = len(c)
    d = math.lcm(*(Fraction(v).denominator for plane in c for row in plane for v in row))
    ci = [[[int(Fraction(v) * d) for v in row] for row in plane] for plane in c]

    def right(v, i):
        out = [0] * n
        for m in range(n):
            if v[m]:
                for k in range(n):
                    if ci[m][i][k]:
                        out[k] += v[m] * ci[m][i][k]
        return out

    for trip in itertools.combinations_with_replacement(range(n), 3):
        for j in range(n):
            total = [0] * n
            for a, b, k in set(itertools.permutations(trip)):
                xab = ci[a][b]
                lhs = right(right(xab, j), k)
                yx = ci[j][k]
                rhs = [0] * n
                for m in range(n):
                    if yx[m]:
                        for q, v in enumerate(right(xab, m)):
                            rhs[q] += yx[m] * v
                total = [t + l - r for t, l, r in zip(total, lhs, rhs)]
            if any(total):
                return False
    return True


def jordan_identity_holds_at(A: Algebra, x: Sequence, y: Sequence) -> bool:
    """Direct evaluation of (x^2 y) x = x^2 (y x), used as a cross-check."""
    x2 = A.mul(x, x)
    return A.mul(A.mul(x2, y), x) == A.mul(x2, A.mul(y, x))


# ------------------------------------------------------------------ basis change

def constants_in_basis(c, R, Rinv=None):
    """Structure constants of ``c`` in the basis given by the rows of ``R``.

    Works for any entry type with ``+``, ``*`` and ``== 0``.  ``Rinv`` must
    be supplied when ``R`` has entries where exact inversion is not
    available (polynomial rings).
    """
    n = len(c)
    if Rinv is None:
        Rinv = inverse(R)
    # T[a][j][k] = sum_i R[a][i] c[i][j][k]
    T = [[[0] * n for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for i in range(n):
            r = R[a][i]
            if r == 0:
                continue
            for j in range(n):
                row = c[i][j]
                Taj = T[a][j]
                for k in range(n):
                    if row[k] != 0:
                        Taj[k] = Taj[k] + r * row[k]
    out = []
    for a in range(n):
        plane = []
        for b in range(n):
            v = [0] * n
            for j in range(n):
                r = R[b][j]
                if r == 0:
                    continue
                Taj = T[a][j]
                for k in range(n):
                    if Taj[k] != 0:
                        v[k] = v[k] + r * Taj[k]
            w = [0] * n
            for k in range(n):
                if v[k] == 0:
                    continue
                for m in range(n):
                    if Rinv[k][m] != 0:
                        w[m] = w[m] + v[k] * Rinv[k][m]
            plane.append(w)
        out.append(plane)
    return out


def in_basis(A: Algebra, R, basis_names: Sequence[str] | None = None) -> Algebra:
    """``A`` rewritten in the basis ``E_i = sum_j R[i][j] e_j`` (rational ``R``)."""
    R = [[Fraction(x) for x in row] for row in R]
    try:
        Rinv = inverse(R)
    except SingularMatrixError:
        raise SingularMatrixError("basis matrix is singular") from None
    c = constants_in_basis(A.c, R, Rinv)
    c = [[[Fraction(x) for x in row] for row in plane] for plane in c]
    return Algebra(c, tuple(basis_names) if basis_names else A.basis_names, None, A.tags)


def change_basis(A: Algebra, g) -> Algebra:
    """The algebra ``g * A`` with product g(A(g^-1 x, g^-1 y)).

    The constants of g * A in the standard basis are those of A in the
    basis of columns of g^-1, i.e. rows of (g^-1)^T.
    """
    g = [[Fraction(x) for x in row] for row in g]
    try:
        ginv = inverse(g)
    except SingularMatrixError:
        raise SingularMatrixError("basis change is singular") from None
    R = transpose(ginv)
    c = constants_in_basis(A.c, R, transpose(g))
    c = [[[Fraction(x) for x in row] for row in plane] for plane in c]
    return Algebra(c, A.basis_names, None, A.tags)


def permute(A: Algebra, order: Sequence[int]) -> Algebra:
    """New basis ``(e_order[0], e_order[1], ...)``."""
    n = A.dim
    if sorted(order) != list(range(n)):
        raise ValueError("not a permutation")
    c = [[[A.c[order[a]][order[b]][order[k]] for k in range(n)] for b in range(n)]
         for a in range(n)]
    return Algebra(c, tuple(A.basis_names[i] for i in order), None, A.tags)


def direct_sum(A: Algebra, B: Algebra, basis_names: Sequence[str] | None = None) -> Algebra:
    n, m = A.dim, B.dim
    N = n + m
    c = [[[ZERO] * N for _ in range(N)] for _ in range(N)]
    for blk, off in ((A, 0), (B, n)):
        d = blk.dim
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    c[off + i][off + j][off + k] = blk.c[i][j][k]
    names = tuple(basis_names) if basis_names else A.basis_names + B.basis_names
    if len(set(names)) != len(names):
        names = tuple(f"e{i + 1}" for i in range(N))
    return Algebra(c, names)


# ------------------------------------------------------------------ powers

def subspace_product(A: Algebra, U: list, V: list) -> list:
    return span_basis(A.mul(u, v) for u in U for v in V)


def _power_spaces(A: Algebra):
    n = A.dim
    powers = {1: span_basis(unit(n, i) for i in range(n))}
    k = 1
    while True:
        k += 1
        vecs = []
        for i in range(1, k // 2 + 1):
            U, V = powers[i], powers[k - i]
            vecs.extend(A.mul(u, v) for u in U for v in V)
        powers[k] = span_basis(vecs)
        if not powers[k]:
            return powers, k
        # A^m = A^(m-1) for all m in (s, 2s] forces stabilization from s on
        s = next((s for s in range(1, k) if 2 * s <= k
                  and all(len(powers[m]) == len(powers[s]) for m in range(s, 2 * s + 1))), None)
        if s is not None:
            return powers, s


def power_dims(A: Algebra) -> tuple[int, ...]:
    """Dimensions of A^1, A^2, ... up to the first power that equals all later ones."""
    powers, last = _power_spaces(A)
    return tuple(len(powers[k]) for k in range(1, last + 1))


def is_nilpotent(A: Algebra) -> tuple[bool, int | None]:
    """``(True, index)`` with the least k such that A^k = 0, else ``(False, None)``."""
    dims = power_dims(A)
    if dims[-1] == 0:
        return True, len(dims)
    return False, None


def square_dim(A: Algebra) -> int:
    n = A.dim
    return len(span_basis(A.c[i][j] for i in range(n) for j in range(n)))


# ------------------------------------------------------------------ algebras over Q(t)

@dataclass(frozen=True)
class AlgebraOverT:
    """Structure constants with entries in Q(t)."""

    c: tuple
    basis_names: tuple[str, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.c)

    def entries(self):
        n = self.dim
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    yield (i, j, k), self.c[i][j][k]

    def limit(self):
        """``(Algebra, poles)``: constants at t = 0, with pole coordinates listed."""
        n = self.dim
        poles = []
        c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (i, j, k), v in self.entries():
            lim = limit_at_zero(v)
            if lim is POLE:
                poles.append((i, j, k))
            else:
                c[i][j][k] = lim
        return Algebra(c, self.basis_names), poles


def transform_over_t(A: Algebra, E) -> AlgebraOverT:
    """Constants of ``A`` in the basis given by the rows of ``E`` (entries in Q(t))."""
    E = [[x if isinstance(x, RatFunc) else RatFunc(x) for x in row] for row in E]
    if determinant(E) == 0:
        raise SingularMatrixError("parametrized basis has zero determinant")
    Einv = inverse(E)
    c = constants_in_basis(A.c, E, Einv)
    c = tuple(tuple(tuple(x if isinstance(x, RatFunc) else RatFunc(x) for x in row)
                    for row in plane) for plane in c)
    return AlgebraOverT(c, A.basis_names)


# ------------------------------------------------------------------ file format

class AlgebraFormatError(ValueError):
    """Malformed algebra document; ``where`` locates the problem."""

    def __init__(self, message: str, where: str = "", pos: int | None = None):
        self.where = where
        self.pos = pos
        loc = where + (f", position {pos}" if pos is not None else "")
        super().__init__(f"{message} ({loc})" if loc else message)


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:\s*/\s*\d+)?)\s*\*\s*)?([A-Za-z_][A-Za-z0-9_']*)\s*")


def parse_combination(text: str, names: Sequence[str], where: str = "") -> list[Fraction]:
    """Parse ``"1/2*n1 - e2 + 3*e1"`` into a coordinate vector."""
    index = {nm: i for i, nm in enumerate(names)}
    vec = [ZERO] * len(names)
    s = text.strip()
    if s == "0" or s == "":
        return vec
    pos = 0
    first = True
    while pos < len(text):
        if not text[pos:].strip():
            break
        m = _TERM.match(text, pos)
        if not m or (not first and m.group(1) is None):
            raise AlgebraFormatError(f"cannot parse linear combination {text!r}", where, pos)
        sign = -1 if m.group(1) == "-" else 1
        coef = Fraction(re.sub(r"\s+", "", m.group(2))) if m.group(2) else Fraction(1)
        name = m.group(3)
        if name not in index:
            raise AlgebraFormatError(f"unknown basis element {name!r} (not among {len(names)} "
                                     f"basis elements)", where, m.start(3))
        vec[index[name]] += sign * coef
        pos = m.end()
        first = False
    return vec


def algebra_from_document(doc: dict, where: str = "") -> Algebra:
    if not isinstance(doc, dict):
        raise AlgebraFormatError("algebra document must be an object", where)
    if "dim" not in doc:
        raise AlgebraFormatError("missing field 'dim'", where)
    n = doc["dim"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise AlgebraFormatError("'dim' must be a non-negative integer", where + ".dim")
    names = doc.get("basis") or [f"e{i + 1}" for i in range(n)]
    if not isinstance(names, list) or not all(isinstance(x, str) for x in names):
        raise AlgebraFormatError("'basis' must be a list of names", where + ".basis")
    if len(names) != n:
        raise AlgebraFormatError(f"basis has {len(names)} names but dim is {n}", where + ".basis")
    if len(set(names)) != n:
        raise AlgebraFormatError("basis names must be distinct", where + ".basis")
    index = {nm: i for i, nm in enumerate(names)}
    products = doc.get("products", {})
    if isinstance(products, list):
        items = []
        for p in products:
            if not isinstance(p, dict):
                raise AlgebraFormatError("product entries must be objects", where + ".products")
            items.extend(p.items())
    elif isinstance(products, dict):
        items = list(products.items())
    else:
        raise AlgebraFormatError("'products' must be an object or list", where + ".products")
    c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    seen: dict[tuple, list] = {}
    for key, value in items:
        loc = f"{where}.products[{key!r}]"
        parts = key.split("*")
        if len(parts) != 2:
            raise AlgebraFormatError(f"product key {key!r} must look like 'a*b'", loc, 0)
        ij = []
        offset = 0
        for part in parts:
            nm = part.strip()
            if nm not in index:
                raise AlgebraFormatError(f"unknown basis element {nm!r} (index out of range "
                                         f"for dim {n})", loc, offset + part.find(nm))
            ij.append(index[nm])
            offset += len(part) + 1
        if not isinstance(value, str):
            if isinstance(value, int) and value == 0:
                value = "0"
            else:
                raise AlgebraFormatError("product value must be a string", loc)
        vec = parse_combination(value, names, loc)
        i, j = ij
        for pair in ((i, j), (j, i)):
            if pair in seen and seen[pair] != vec:
                raise AlgebraFormatError(f"conflicting products for {key!r}", loc)
            seen[pair] = vec
            c[pair[0]][pair[1]] = vec
    label = doc.get("label")
    return Algebra(c, tuple(names), label, doc.get("tags", ""))


def parse_algebra(text: str) -> Algebra:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFormatError(f"malformed document: {exc.msg}", f"line {exc.lineno}",
                                 exc.pos) from None
    return algebra_from_document(doc, "$")


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_combination(vec: Sequence, names: Sequence[str]) -> str:
    terms = [f"{_fmt(Fraction(v))}*{nm}" for v, nm in zip(vec, names) if v != 0]
    return " + ".join(terms) if terms else "0"


def algebra_to_document(A: Algebra) -> dict:
    doc: dict = {"dim": A.dim}
    if A.label is not None:
        doc["label"] = A.label
    if A.tags:
        doc["tags"] = A.tags
    doc["basis"] = list(A.basis_names)
    products = {}
    for i in range(A.dim):
        for j in range(i, A.dim):
            if any(v != 0 for v in A.c[i][j]):
                products[f"{A.basis_names[i]}*{A.basis_names[j]}"] = \
                    format_combination(A.c[i][j], A.basis_names)
    doc["products"] = products
    return doc


def serialize_algebra(A: Algebra) -> str:
    """Canonical text: products i <= j in index order, lowest-terms coefficients.

    Non-commutative tables cannot be written in this format.
    """
    if not is_commutative(A):
        raise NotCommutativeError("only commutative tables can be serialized")
    return json.dumps(algebra_to_document(A), indent=2, ensure_ascii=False) + "\n"


def format_table(A: Algebra) -> str:
    """Human-readable nonzero products, e.g. ``e1*e1 = e1, e1*n1 = 1/2*n1``."""
    doc = algebra_to_document(A) if is_commutative(A) else None
    if doc is None:
        parts = [f"{A.basis_names[i]}*{A.basis_names[j]} = "
                 f"{format_combination(A.c[i][j], A.basis_names)}"
                 for i in range(A.dim) for j in range(A.dim) if any(A.c[i][j])]
    else:
        parts = [f"{k} = {v}" for k, v in doc["products"].items()]
    return ", ".join(parts) if parts else "(zero multiplication)"
