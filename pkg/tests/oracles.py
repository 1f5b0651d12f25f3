"""Independent sympy oracles shared by the tests."""

import sympy as sp

from jordeg.exact.mpoly import MultiPoly
from jordeg.exact.poly import RatFunc, UniPoly

T = sp.Symbol("t")


def unipoly_to_sympy(p: UniPoly):
    return sum((sp.Rational(c.numerator, c.denominator) * T ** i
                for i, c in enumerate(p.coeffs)), sp.Integer(0))


def ratfunc_to_sympy(f: RatFunc):
    return unipoly_to_sympy(f.numer) / unipoly_to_sympy(f.denom)


def mpoly_to_sympy(p: MultiPoly, syms):
    out = sp.Integer(0)
    for mono, c in p.terms.items():
        term = sp.Rational(c.numerator, c.denominator)
        for s, e in zip(syms, mono):
            term *= s ** e
        out += term
    return out


def sympy_mul(c, n):
    def mul(u, v):
        return [sp.expand(sum(u[i] * v[j] * c[i][j][k] for i in range(n) for j in range(n)))
                for k in range(n)]
    return mul


def constants_after(c, E):
    """Structure constants of the basis E_i = sum_j E[i][j] e_j, computed with sympy."""
    n = len(c)
    M = sp.Matrix(E)
    mul = sympy_mul(c, n)
    Minv = M.inv()
    out = [[[None] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            prod = sp.Matrix([mul(list(M.row(i)), list(M.row(j)))])
            coords = prod * Minv
            for k in range(n):
                out[i][j][k] = sp.simplify(coords[k])
    return out
