"""Univariate polynomials and rational functions in ``t`` over Q."""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class UniPoly:
    """Dense polynomial, coefficients stored low degree first.

    The zero polynomial has no coefficients; otherwise the last stored
    coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c) -> UniPoly:
        return cls((c,))

    @classmethod
    def t(cls) -> UniPoly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def _coerce(self, other) -> UniPoly:
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

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
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out, base = UniPoly.const(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lc = other.lc()
        d = other.degree
        for shift in range(len(rem) - d - 1, -1, -1):
            c = rem[shift + d] / lc
            if c:
                q[shift] = c
                for j, y in enumerate(other.coeffs):
                    rem[shift + j] -= c * y
        return UniPoly(q), UniPoly(rem)

    def monic(self) -> UniPoly:
        if self.is_zero():
            return self
        lc = self.lc()
        return UniPoly([c / lc for c in self.coeffs])

    def derivative(self) -> UniPoly:
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def valuation(self) -> int:
        """Multiplicity of the root t = 0 (the zero polynomial raises)."""
        if self.is_zero():
            raise ValueError("valuation of the zero polynomial")
        return next(i for i, c in enumerate(self.coeffs) if c != 0)

    def __repr__(self):
        return f"UniPoly({format_unipoly(self)!r})"

    def __str__(self):
        return format_unipoly(self)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def _fmt_coef(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_unipoly(p: UniPoly, var: str = "t") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if mono and a == 1:
            body = mono
        elif mono:
            body = f"{_fmt_coef(a)}*{mono}"
        else:
            body = _fmt_coef(a)
        parts.append((sign, body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class Pole:
    """Marker returned by :func:`limit_at_zero` when the function blows up."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "POLE"

    def __reduce__(self):
        return (Pole, ())


POLE = Pole()


class RatFunc:
    """Reduced quotient numer/denom with monic denominator."""

    __slots__ = ("numer", "denom")

    def __init__(self, numer, denom=None):
        if not isinstance(numer, UniPoly):
            numer = UniPoly.const(numer)
        if denom is None:
            denom = UniPoly.const(1)
        elif not isinstance(denom, UniPoly):
            denom = UniPoly.const(denom)
        if denom.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if numer.is_zero():
            numer, denom = UniPoly(), UniPoly.const(1)
        else:
            g = poly_gcd(numer, denom)
            if g.degree > 0:
                numer, denom = numer.divmod(g)[0], denom.divmod(g)[0]
            lc = denom.lc()
            if lc != 1:
                numer = UniPoly([c / lc for c in numer.coeffs])
                denom = UniPoly([c / lc for c in denom.coeffs])
        self.numer: UniPoly = numer
        self.denom: UniPoly = denom

    @classmethod
    def t(cls) -> RatFunc:
        return cls(UniPoly.t())

    def is_zero(self) -> bool:
        return self.numer.is_zero()

    def is_polynomial(self) -> bool:
        return self.denom.degree == 0

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, UniPoly)):
            return RatFunc(other)
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.numer == other.numer and self.denom == other.denom

    def __hash__(self):
        if self.denom.degree == 0 and self.numer.degree <= 0:
            return hash(self.numer.coeffs[0] if self.numer.coeffs else Fraction(0))
        return hash((self.numer, self.denom))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.denom == other.denom:
            return RatFunc(self.numer + other.numer, self.denom)
        return RatFunc(self.numer * other.denom + other.numer * self.denom,
                       self.denom * other.denom)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.numer, self.denom)

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
        return RatFunc(self.numer * other.numer, self.denom * other.denom)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.numer * other.denom, self.denom * other.numer)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if k >= 0:
            return RatFunc(self.numer ** k, self.denom ** k)
        return RatFunc(1) / RatFunc(self.numer ** -k, self.denom ** -k)

    def __repr__(self):
        return f"RatFunc({str(self)!r})"

    def __str__(self):
        if self.denom.degree == 0:
            return format_unipoly(self.numer)
        return f"({format_unipoly(self.numer)})/({format_unipoly(self.denom)})"


def limit_at_zero(f: RatFunc):
    """Value of ``f`` at t = 0, or :data:`POLE`.

    ``f`` is reduced on construction, so a vanishing denominator at 0
    means the numerator does not vanish there.
    """
    d0 = f.denom(0)
    if d0 == 0:
        return POLE
    return f.numer(0) / d0


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def squarefree_part(p: UniPoly) -> UniPoly:
    if p.degree <= 0:
        return p.monic()
    return p.divmod(poly_gcd(p, p.derivative()))[0].monic()


def rational_roots(p: UniPoly) -> list[Fraction]:
    """Distinct rational roots of a nonzero polynomial, sorted."""
    if p.is_zero():
        raise ValueError("every number is a root of the zero polynomial")
    roots = []
    if p.coeffs[0] == 0:
        roots.append(Fraction(0))
        p = UniPoly(p.coeffs[p.valuation():])
    if p.degree <= 0:
        return roots
    den = 1
    for c in p.coeffs:
        den = math.lcm(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    for q in _divisors(ints[-1]):
        for r in _divisors(ints[0]):
            for x in (Fraction(r, q), Fraction(-r, q)):
                if x not in roots and p(x) == 0:
                    roots.append(x)
    return sorted(roots)
