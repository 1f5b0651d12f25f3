import random

import pytest
import sympy as sp

from jordeg import golden
from jordeg.algebra import Algebra
from jordeg.catalog import DIM2, DIM3, catalog, marginal, non_jordan_example
from jordeg.cohomology import (SymBilinearMap, coboundary_of, cocycle_space, h2, is_cocycle,
                               sym_pairs)
from oracles import sympy_mul

ALL = DIM2 + DIM3


def sympy_z2_dim(A):
    """Cocycles from the cubic identity itself, with symbolic a and b (no linearization)."""
    n = A.dim
    a = list(sp.symbols(f"a1:{n + 1}"))
    b = list(sp.symbols(f"b1:{n + 1}"))
    hs = {}
    for p, q in sym_pairs(n):
        for r in range(n):
            hs[(p, q, r)] = sp.Symbol(f"h{p}{q}{r}")

    def h(x, y):
        return [sum(x[p] * y[q] * hs[(min(p, q), max(p, q), r)] for p in range(n)
                    for q in range(n)) for r in range(n)]

    mul = sympy_mul(A.c, n)
    a2 = mul(a, a)
    terms = [mul(mul(h(a, a), b), a), mul(h(a2, b), a), h(mul(a2, b), a)]
    neg = [mul(a2, h(b, a)), mul(h(a, a), mul(b, a)), h(a2, mul(b, a))]
    eqs = []
    for k in range(n):
        expr = sp.expand(sum(t[k] for t in terms) - sum(t[k] for t in neg))
        eqs += sp.Poly(expr, *(a + b)).coeffs() if expr != 0 else []
    unknowns = list(hs.values())
    if not eqs:
        return len(unknowns)
    M, _ = sp.linear_eq_to_matrix(eqs, unknowns)
    return len(unknowns) - M.rank()


@pytest.mark.parametrize("label", ["B1", "B3", "B4", "T05", "T13", "T17", "T19"])
def test_cocycles_match_unlinearized_oracle(label):
    A = catalog(label)
    assert h2(A).dim_Z2 == sympy_z2_dim(A)


@pytest.mark.parametrize("label", ALL)
def test_coboundaries_are_cocycles(label):
    A = catalog(label)
    rng = random.Random(label)
    n = A.dim
    for _ in range(50):
        mu = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        assert is_cocycle(A, coboundary_of(A, mu))


@pytest.mark.parametrize("label", ALL)
def test_coboundary_dimension(label):
    A = catalog(label)
    n = A.dim
    assert h2(A).dim_B2 == n * n - golden.DER[label]


@pytest.mark.parametrize("n", [2, 3])
def test_zero_algebra(n):
    rep = h2(Algebra.zero(n))
    assert rep.dim_H2 == n * n * (n + 1) // 2 and rep.dim_B2 == 0


@pytest.mark.parametrize("k", range(2, 7))
def test_marginal_family_rigid(k):
    rep = h2(marginal(k))
    assert rep.dim_H2 == 0 and rep.rigid


def test_catalog_values():
    got = {l: h2(catalog(l)).dim_H2 for l in ("B2", "B4", "T01", "T02", "T05", "T10", "T12")}
    assert all(v == 0 for v in got.values())
    assert h2(catalog("B3")).dim_H2 == 2
    assert h2(catalog("T19")).dim_H2 == 10


def test_witnesses_and_basis():
    A = catalog("T14")
    rep = h2(A, with_witnesses=True)
    assert len(rep.witness_basis) == rep.dim_H2 == 3
    assert all(is_cocycle(A, w) for w in rep.witness_basis)
    assert len(cocycle_space(A)) == rep.dim_Z2


def test_symmetric_map_roundtrip():
    h = SymBilinearMap.from_vector(2, list(range(6)))
    assert SymBilinearMap.from_vector(2, h.to_vector()) == h
    with pytest.raises(ValueError):
        SymBilinearMap([[[1, 0], [1, 0]], [[0, 0], [0, 0]]])


def test_non_jordan_rejected():
    with pytest.raises(ValueError):
        h2(non_jordan_example())


@pytest.mark.parametrize("label", ALL)
def test_integer_and_rational_paths_agree(label):
    A = catalog(label)
    fast, full = h2(A), h2(A, with_witnesses=True)
    assert (fast.dim_Z2, fast.dim_B2) == (full.dim_Z2, full.dim_B2)
