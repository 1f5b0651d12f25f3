"""Sparse multivariate polynomials over Q with named variables."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence


class MultiPoly:
    """Polynomial stored as ``{exponent tuple: nonzero Fraction}``.

    Every polynomial carries its variable names; arithmetic requires the
    same names in the same order.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.vars: tuple[str, ...] = tuple(vars)
        n = len(self.vars)
        clean = {}
        for mono, c in (terms or {}).items():
            if len(mono) != n:
                raise ValueError(f"exponent {mono} does not match {n} variables")
            c = Fraction(c)
            if c:
                clean[tuple(mono)] = c
        self.terms: dict[tuple, Fraction] = clean

    @classmethod
    def const(cls, vars: Sequence[str], c) -> MultiPoly:
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, vars: Sequence[str], name: str) -> MultiPoly:
        vars = tuple(vars)
        i = vars.index(name)
        return cls(vars, {tuple(int(j == i) for j in range(len(vars))): 1})

    @classmethod
    def gens(cls, vars: Sequence[str]) -> list[MultiPoly]:
        return [cls.var(vars, v) for v in vars]

    @classmethod
    def _raw(cls, vars: tuple, terms: dict) -> MultiPoly:
        p = cls.__new__(cls)
        p.vars = vars
        p.terms = terms
        return p

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def used_vars(self) -> set[str]:
        return {self.vars[i] for m in self.terms for i, e in enumerate(m) if e}

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError("polynomials over different variables")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(self.vars, other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MultiPoly.const(self.vars, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return MultiPoly._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return MultiPoly._raw(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = MultiPoly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> MultiPoly:
        c = Fraction(c)
        if not c:
            return MultiPoly(self.vars)
        return MultiPoly._raw(self.vars, {m: v * c for m, v in self.terms.items()})

    # -- evaluation -------------------------------------------------------
    def subs(self, values: Mapping[str, object]) -> MultiPoly:
        """Substitute numbers or same-ring polynomials for some variables."""
        idx = {self.vars.index(k): v for k, v in values.items()}
        out = MultiPoly(self.vars)
        for m, c in self.terms.items():
            rest = tuple(0 if i in idx else e for i, e in enumerate(m))
            term = MultiPoly._raw(self.vars, {rest: c})
            for i, v in idx.items():
                if m[i]:
                    term = term * (v ** m[i] if isinstance(v, MultiPoly) else Fraction(v) ** m[i])
            out = out + term
        return out

    def __call__(self, values: Mapping[str, object]) -> Fraction:
        total = Fraction(0)
        vals = [Fraction(values[v]) for v in self.vars]
        for m, c in self.terms.items():
            term = c
            for x, e in zip(vals, m):
                if e:
                    term *= x ** e
            total += term
        return total

    def restrict(self, keep: Sequence[str]) -> MultiPoly:
        """Drop variables that do not occur, re-indexing to ``keep``."""
        keep = tuple(keep)
        pos = [self.vars.index(v) for v in keep]
        out = {}
        for m, c in self.terms.items():
            if any(e for i, e in enumerate(m) if i not in pos):
                raise ValueError("polynomial uses a dropped variable")
            out[tuple(m[i] for i in pos)] = c
        return MultiPoly._raw(keep, out)

    def __repr__(self):
        return f"MultiPoly({str(self)!r})"

    def __str__(self):
        return format_multipoly(self)


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_multipoly(p: MultiPoly, key=None) -> str:
    if p.is_zero():
        return "0"
    monos = sorted(p.terms, key=key or (lambda m: (sum(m), m)), reverse=True)
    parts = []
    for m in monos:
        c = p.terms[m]
        factors = [v if e == 1 else f"{v}^{e}" for v, e in zip(p.vars, m) if e]
        a = abs(c)
        if not factors:
            body = _fmt(a)
        elif a == 1:
            body = "*".join(factors)
        else:
            body = _fmt(a) + "*" + "*".join(factors)
        parts.append(("-" if c < 0 else "+", body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s
