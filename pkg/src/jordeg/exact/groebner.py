"""Buchberger's algorithm and what we need from it.

Emptiness over C is decided by the weak Nullstellensatz: the variety of an
ideal over Q is empty over C iff the reduced Groebner basis is ``[1]``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .mpoly import MultiPoly
from .poly import UniPoly, rational_roots, squarefree_part

DEFAULT_BUDGET = 200_000


class BudgetExceeded(RuntimeError):
    """The configured work budget ran out before a decision was reached."""

    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"Groebner work budget of {budget} reduction steps exhausted")


class Emptiness(enum.Enum):
    EMPTY = "empty-over-C"
    NONEMPTY = "nonempty-over-C"


def grevlex_key(m: tuple) -> tuple:
    return (sum(m), tuple(-e for e in reversed(m)))


def grlex_key(m: tuple) -> tuple:
    return (sum(m), m)


def lex_key(m: tuple) -> tuple:
    return m


ORDERS: dict[str, Callable[[tuple], tuple]] = {
    "grevlex": grevlex_key,
    "grlex": grlex_key,
    "lex": lex_key,
}


def _key(order) -> Callable[[tuple], tuple]:
    return ORDERS[order] if isinstance(order, str) else order


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


class _Budget:
    def __init__(self, limit: int | None):
        self.limit = DEFAULT_BUDGET if limit is None else limit
        self.used = 0

    def spend(self, n: int = 1):
        self.used += n
        if self.used > self.limit:
            raise BudgetExceeded(self.limit)


def _lm(p: dict, key) -> tuple:
    return max(p, key=key)


def _normal_form(f: dict, basis: list[tuple[tuple, dict]], key, budget: _Budget) -> dict:
    p = dict(f)
    rem: dict[tuple, Fraction] = {}
    while p:
        m = _lm(p, key)
        c = p[m]
        for lm, g in basis:
            if _divides(lm, m):
                budget.spend()
                shift = tuple(a - b for a, b in zip(m, lm))
                f_ = c / g[lm]
                for gm, gc in g.items():
                    mm = tuple(a + b for a, b in zip(gm, shift))
                    v = p.get(mm, 0) - f_ * gc
                    if v:
                        p[mm] = v
                    else:
                        p.pop(mm, None)
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _monic(p: dict, key) -> dict:
    lc = p[_lm(p, key)]
    return {m: c / lc for m, c in p.items()}


def groebner_basis(gens: Sequence[MultiPoly], order="grevlex",
                   budget: int | None = None) -> list[MultiPoly]:
    """Reduced Groebner basis, sorted by decreasing leading monomial.

    Raises :class:`BudgetExceeded` when more than ``budget`` reduction
    steps are needed.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    vars = gens[0].vars
    if any(g.vars != vars for g in gens):
        raise ValueError("generators over different variables")
    key = _key(order)
    work = _Budget(budget)

    basis: list[tuple[tuple, dict]] = []
    for g in gens:
        r = _normal_form(g.terms, basis, key, work)
        if r:
            r = _monic(r, key)
            basis.append((_lm(r, key), r))
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    while pairs:
        # normal strategy: smallest lcm first
        pairs.sort(key=lambda ij: key(tuple(map(max, basis[ij[0]][0], basis[ij[1]][0]))),
                   reverse=True)
        i, j = pairs.pop()
        lmi, fi = basis[i]
        lmj, fj = basis[j]
        lcm = tuple(map(max, lmi, lmj))
        if all(a == 0 or b == 0 for a, b in zip(lmi, lmj)):
            continue  # coprime leading monomials
        if any(k not in (i, j) and _divides(basis[k][0], lcm)
               and (max(i, k), min(i, k)) not in pairs and (max(j, k), min(j, k)) not in pairs
               for k in range(len(basis))):
            continue  # chain criterion
        s = {}
        for sign, lm, f in ((1, lmi, fi), (-1, lmj, fj)):
            shift = tuple(a - b for a, b in zip(lcm, lm))
            for m, c in f.items():
                mm = tuple(a + b for a, b in zip(m, shift))
                v = s.get(mm, 0) + sign * c
                if v:
                    s[mm] = v
                else:
                    s.pop(mm, None)
        work.spend()
        r = _normal_form(s, basis, key, work)
        if r:
            r = _monic(r, key)
            lm = _lm(r, key)
            if not any(lm):
                return [MultiPoly.const(vars, 1)]
            basis.append((lm, r))
            k = len(basis) - 1
            pairs.extend((k, j) for j in range(k))
    return [MultiPoly._raw(vars, g) for _, g in _reduce_basis(basis, key, work)]


def _reduce_basis(basis, key, work):
    minimal = []
    for i, (lm, g) in enumerate(basis):
        if any(_divides(lm2, lm) and (lm2 != lm or j < i)
               for j, (lm2, _) in enumerate(basis) if j != i):
            continue
        minimal.append((lm, g))
    out = []
    for i, (lm, g) in enumerate(minimal):
        others = [b for j, b in enumerate(minimal) if j != i]
        r = _normal_form(g, others, key, work)
        out.append((lm, _monic(r, key)))
    out.sort(key=lambda b: key(b[0]), reverse=True)
    return out


def leading_monomial(p: MultiPoly, order="grevlex") -> tuple:
    return _lm(p.terms, _key(order))


def normal_form(f: MultiPoly, basis: Sequence[MultiPoly], order="grevlex",
                budget: int | None = None) -> MultiPoly:
    key = _key(order)
    b = [(_lm(g.terms, key), g.terms) for g in basis if not g.is_zero()]
    return MultiPoly._raw(f.vars, _normal_form(f.terms, b, key, _Budget(budget)))


def is_unit_ideal(gb: Sequence[MultiPoly]) -> bool:
    return any(g.is_constant() and not g.is_zero() for g in gb)


@dataclass(frozen=True)
class EmptinessResult:
    verdict: Emptiness
    generators: tuple[MultiPoly, ...]
    basis: tuple[MultiPoly, ...]
    order: str

    @property
    def empty(self) -> bool:
        return self.verdict is Emptiness.EMPTY


def decide_emptiness(generators: Sequence[MultiPoly], order="grevlex",
                     budget: int | None = None) -> EmptinessResult:
    """Emptiness over C of the common zero set, with the basis as transcript."""
    gb = groebner_basis(generators, order=order, budget=budget)
    verdict = Emptiness.EMPTY if is_unit_ideal(gb) else Emptiness.NONEMPTY
    name = order if isinstance(order, str) else getattr(order, "__name__", "custom")
    return EmptinessResult(verdict, tuple(generators), tuple(gb), name)


def groebner_emptiness(generators: Sequence[MultiPoly], order="grevlex",
                       budget: int | None = None) -> Emptiness:
    return decide_emptiness(generators, order, budget).verdict


def ideal_dimension(gb: Sequence[MultiPoly], order="grevlex") -> int:
    """Krull dimension of the ideal generated by a Groebner basis ``gb``.

    -1 for the unit ideal. Uses the largest set of variables containing no
    leading monomial of ``gb``.
    """
    if not gb:
        raise ValueError("dimension of the zero ideal needs the variable count")
    if is_unit_ideal(gb):
        return -1
    n = len(gb[0].vars)
    lms = [leading_monomial(g, order) for g in gb]
    supports = [{i for i, e in enumerate(m) if e} for m in lms]
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            s = set(subset)
            if not any(sup <= s for sup in supports):
                return size
    return 0


class PositiveDimensional(ValueError):
    pass


class NonRationalSolutions(ValueError):
    pass


def _univariate(p: MultiPoly, i: int) -> UniPoly:
    deg = max(m[i] for m in p.terms)
    coeffs = [Fraction(0)] * (deg + 1)
    for m, c in p.terms.items():
        coeffs[m[i]] += c
    return UniPoly(coeffs)


def rational_solutions(generators: Sequence[MultiPoly],
                       budget: int | None = None) -> list[dict[str, Fraction]]:
    """All solutions over C of a zero-dimensional system, if they are rational.

    Raises :class:`PositiveDimensional` for infinite solution sets and
    :class:`NonRationalSolutions` if some solution is not rational.
    """
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        raise PositiveDimensional("no equations")
    vars = gens[0].vars
    gb = groebner_basis(gens, order="lex", budget=budget)
    if is_unit_ideal(gb):
        return []
    if ideal_dimension(gb, "lex") > 0:
        raise PositiveDimensional("solution set is infinite")
    if len(vars) == 0:
        return [{}]
    last = len(vars) - 1
    uni = [g for g in gb if all(not any(m[:last]) for m in g.terms)]
    # a lex basis of a zero-dimensional ideal has a univariate member in the last variable
    p = _univariate(uni[0], last)
    sf = squarefree_part(p)
    roots = rational_roots(sf)
    if len(roots) != sf.degree:
        raise NonRationalSolutions(f"{p} has non-rational roots")
    name = vars[-1]
    sols = []
    for r in roots:
        rest = [g.subs({name: r}).restrict(vars[:-1]) for g in gb]
        rest = [g for g in rest if not g.is_zero()]
        if any(g.is_constant() for g in rest):
            continue
        if not vars[:-1]:
            sols.append({name: r})
            continue
        for s in rational_solutions(rest, budget):
            sols.append({**s, name: r})
    return sols
