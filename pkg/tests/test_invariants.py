import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from jordeg import golden
from jordeg.algebra import change_basis
from jordeg.catalog import DIM2, DIM3, catalog, marginal, non_jordan_example
from jordeg.invariants import (NotJordanError, derivation_algebra, fingerprint,
                               idempotent_frames, idempotent_spectra, is_derivation,
                               peirce_decomposition, semisimple_part, trace_form_radical)
from oracles import sympy_mul
from test_algebra import invertible

ALL = DIM2 + DIM3


def sympy_der_dim(A):
    n = A.dim
    D = sp.Matrix(n, n, lambda i, j: sp.Symbol(f"d{i}{j}"))
    mul = sympy_mul(A.c, n)
    e = [[int(i == j) for j in range(n)] for i in range(n)]
    eqs = []
    for a in range(n):
        for b in range(n):
            lhs = D * sp.Matrix(mul(e[a], e[b]))
            r1 = mul(list(D * sp.Matrix(e[a])), e[b])
            r2 = mul(e[a], list(D * sp.Matrix(e[b])))
            eqs += [sp.expand(lhs[k] - r1[k] - r2[k]) for k in range(n)]
    M, _ = sp.linear_eq_to_matrix(eqs, list(D))
    return n * n - M.rank()


def sympy_rad_dim(A):
    n = A.dim
    mul = sympy_mul(A.c, n)
    e = [[int(i == j) for j in range(n)] for i in range(n)]

    def L(x):
        return sp.Matrix([mul(x, e[j]) for j in range(n)]).T

    tau = sp.Matrix(n, n, lambda i, j: L(mul(e[i], e[j])).trace())
    return n - tau.rank()


@pytest.mark.parametrize("label", ALL)
def test_derivations_match_table_and_oracle(label):
    A = catalog(label)
    der = derivation_algebra(A)
    assert der.dim == golden.DER[label] == sympy_der_dim(A)
    assert all(is_derivation(A, D) for D in der.basis)


@pytest.mark.parametrize("label", DIM3)
def test_radical_matches_table_and_oracle(label):
    A = catalog(label)
    assert len(trace_form_radical(A)) == golden.RAD[label] == sympy_rad_dim(A)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_marginal_derivations_oracle(k):
    assert derivation_algebra(marginal(k)).dim == k * k - k == sympy_der_dim(marginal(k))


def test_non_jordan_rejected():
    with pytest.raises(NotJordanError):
        trace_form_radical(non_jordan_example())


def sympy_idempotents(A):
    n = A.dim
    xs = sp.symbols(f"x1:{n + 1}")
    mul = sympy_mul(A.c, n)
    sq = mul(list(xs), list(xs))
    sols = sp.solve([sq[k] - xs[k] for k in range(n)], xs, dict=True)
    return {tuple(s.get(x, x) for x in xs) for s in sols} - {(0,) * n}


def sympy_spectrum(A, e):
    n = A.dim
    mul = sympy_mul(A.c, n)
    L = sp.Matrix([mul(list(e), [int(i == j) for i in range(n)]) for j in range(n)]).T
    ev = L.eigenvals()
    return (ev.get(0, 0), ev.get(sp.Rational(1, 2), 0), ev.get(1, 0))


@pytest.mark.parametrize("label", ["T01", "T03", "T05", "T06", "T07", "T08", "T09", "T13",
                                   "B1", "B2", "B4"])
def test_idempotents_against_sympy(label):
    A = catalog(label)
    data = idempotent_frames(A)
    ref = sympy_idempotents(A)
    if any(x.free_symbols for e in ref for x in e):
        assert not data.finite
        return
    assert data.finite
    assert {tuple(sp.Rational(x.numerator, x.denominator) for x in e)
            for e in data.idempotents} == ref
    assert idempotent_spectra(A) == {sympy_spectrum(A, e) for e in ref}


def test_idempotent_examples():
    assert idempotent_frames(catalog("T01")).count == 7
    assert len(idempotent_frames(catalog("T01")).frames) == 1
    assert not idempotent_frames(catalog("T02")).finite
    assert idempotent_frames(catalog("T19")).count == 0
    assert idempotent_spectra(catalog("T06")) == {(2, 0, 1), (1, 0, 2)}
    assert idempotent_spectra(catalog("T07")) == {(0, 0, 3)}
    assert idempotent_spectra(catalog("T17")) == frozenset()


def test_peirce_decomposition():
    J = marginal(4)
    pd = peirce_decomposition(J, [1, 0, 0, 0])
    assert pd.dims == (0, 3, 1)
    pd = peirce_decomposition(catalog("T05"), [1, 0, 0])
    assert pd.dims == (1, 1, 1)


@pytest.mark.parametrize("label", ["T01", "T03", "T06", "T08", "B4"])
def test_peirce_relations_hold_for_all_idempotents(label):
    A = catalog(label)
    for e in idempotent_frames(A).idempotents:
        pd = peirce_decomposition(A, e)
        assert sum(pd.dims) == A.dim


def test_semisimple_part():
    S = semisimple_part(catalog("T03"))
    assert len(S.radical_basis) == 1 and S.quotient.dim == 2


def test_fingerprints_distinct():
    fps = {l: fingerprint(catalog(l)) for l in DIM3}
    assert len(set(fps.values())) == len(DIM3)


@settings(max_examples=25)
@given(st.sampled_from(DIM3), st.data())
def test_fingerprint_invariant_under_basis_change(label, data):
    A = catalog(label)
    B = change_basis(A, data.draw(invertible(3)))
    assert fingerprint(B) == fingerprint(A)


def test_fingerprint_fields():
    f = fingerprint(catalog("T17"))
    assert f.nilpotent and f.nilindex == 4 and f.powers == (3, 2, 1, 0)
    assert f.as_dict()["der"] == 3
    assert fingerprint(catalog("T05")).spectra == ((0, 1, 2), (1, 1, 1), (2, 0, 1))
