from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from jordeg.algebra import (Algebra, AlgebraFormatError, NotCommutativeError, algebra_to_document,
                            change_basis, constants_in_basis, direct_sum, in_basis,
                            is_commutative, is_jordan, is_nilpotent, jordan_violation,
                            parse_algebra, permute, power_dims, serialize_algebra, square_dim,
                            transform_over_t)
from jordeg.catalog import (DIM2, DIM3, UnknownLabel, alternative_name, canonical_label, catalog,
                            marginal, non_jordan_example, pretty_label)
from jordeg.exact.linalg import inverse, mat_mul
from jordeg.exact.poly import RatFunc
from oracles import constants_after, ratfunc_to_sympy, sympy_mul

ALL = DIM2 + DIM3


def invertible(n):
    """Products of unit lower and upper triangular integer matrices with a nonzero diagonal."""
    entry = st.integers(-2, 2)
    diag = st.sampled_from([1, -1, 2, -2, 3])

    def build(parts):
        lo, up, d = parts
        L = [[1 if i == j else (lo[i * n + j] if j < i else 0) for j in range(n)]
             for i in range(n)]
        U = [[d[i] if i == j else (up[i * n + j] if j > i else 0) for j in range(n)]
             for i in range(n)]
        return mat_mul(L, U)
    return st.tuples(st.lists(entry, min_size=n * n, max_size=n * n),
                     st.lists(entry, min_size=n * n, max_size=n * n),
                     st.lists(diag, min_size=n, max_size=n)).map(build)


def sympy_jordan_holds(A):
    n = A.dim
    xs = sp.symbols(f"x1:{n + 1}")
    ys = sp.symbols(f"y1:{n + 1}")
    mul = sympy_mul(A.c, n)
    x, y = list(xs), list(ys)
    x2 = mul(x, x)
    lhs = mul(mul(x2, y), x)
    rhs = mul(x2, mul(y, x))
    return all(sp.expand(a - b) == 0 for a, b in zip(lhs, rhs))


@pytest.mark.parametrize("label", ALL + ("J4",))
def test_catalog_is_jordan(label):
    A = catalog(label)
    assert is_commutative(A)
    assert is_jordan(A)
    assert sympy_jordan_holds(A)


def test_non_jordan_example():
    A = non_jordan_example()
    assert is_commutative(A)
    assert not is_jordan(A)
    assert not sympy_jordan_holds(A)
    indices, value = jordan_violation(A)
    assert indices == (0, 0, 0, 0) and any(value)


def test_noncommutative_rejected():
    c = [[[0, 0], [1, 0]], [[0, 0], [0, 0]]]
    A = Algebra(c)
    assert not is_commutative(A)
    with pytest.raises(NotCommutativeError):
        jordan_violation(A)


@given(st.sampled_from(ALL), st.data())
def test_basis_change_keeps_identities(label, data):
    A = catalog(label)
    g = data.draw(invertible(A.dim))
    B = change_basis(A, g)
    assert is_commutative(B) and is_jordan(B)
    assert power_dims(B) == power_dims(A)


@given(st.sampled_from(DIM3), st.data())
def test_in_basis_matches_sympy(label, data):
    A = catalog(label)
    R = data.draw(invertible(3))
    B = in_basis(A, R)
    M = sp.Matrix(R)
    mul = sympy_mul(A.c, 3)
    for i in range(3):
        for j in range(3):
            prod = sp.Matrix([mul(list(M.row(i)), list(M.row(j)))])
            coords = prod * M.inv()
            assert [sp.Rational(x.numerator, x.denominator) for x in B.c[i][j]] == list(coords)


@given(st.sampled_from(DIM3), st.data())
def test_basis_change_composes(label, data):
    A = catalog(label)
    R, S = data.draw(invertible(3)), data.draw(invertible(3))
    assert in_basis(in_basis(A, R), S) == in_basis(A, mat_mul(S, R))
    assert in_basis(in_basis(A, R), inverse(R)) == A


def test_known_isomorphisms():
    # B3 is invariant under diag(2, 4); B4 under swapping its idempotents
    assert change_basis(catalog("B3"), [[2, 0], [0, 4]]) == catalog("B3")
    assert permute(catalog("B4"), [1, 0]) == catalog("B4")
    assert direct_sum(catalog("B2"), Algebra.zero(1)) == catalog("T14")


def test_power_dims():
    assert power_dims(catalog("T17")) == (3, 2, 1, 0)
    assert power_dims(catalog("T01")) == (3,)
    assert power_dims(Algebra.zero(3)) == (3, 0)
    assert is_nilpotent(catalog("T17")) == (True, 4)
    assert is_nilpotent(catalog("T01"))[0] is False
    assert square_dim(catalog("T19")) == 1


def test_transform_over_t_and_limit():
    t = RatFunc.t()
    A = catalog("B2")
    over = transform_over_t(A, [[t, RatFunc(0)], [RatFunc(0), t]])
    limit, poles = over.limit()
    assert poles == [] and limit.is_zero_algebra()


def test_constants_generic_over_ratfunc():
    t = RatFunc.t()
    one, zero = RatFunc(1), RatFunc(0)
    c = [[[RatFunc(v) for v in row] for row in plane] for plane in catalog("B1").c]
    R = [[one, zero], [zero, t]]
    Rinv = [[one, zero], [zero, 1 / t]]
    out = constants_in_basis(c, R, Rinv)
    T = sp.Symbol("t")
    ref = constants_after(catalog("B1").c, [[1, 0], [0, T]])
    for i in range(2):
        for j in range(2):
            for k in range(2):
                v = out[i][j][k]
                v = ratfunc_to_sympy(v) if isinstance(v, RatFunc) else sp.Integer(v)
                assert sp.cancel(v - ref[i][j][k]) == 0


# --------------------------------------------------------------- file format

@pytest.mark.parametrize("label", ALL)
def test_document_roundtrip(label):
    A = catalog(label)
    B = parse_algebra(serialize_algebra(A))
    assert B == A and B.label == label and B.basis_names == A.basis_names


def test_document_variants():
    doc = '{"dim": 2, "products": [{"e1*e1": "e1"}, {"e1*e2": "1/2*e2"}]}'
    A = parse_algebra(doc)
    assert A.c[0][1][1] == Fraction(1, 2) and A.c[1][0][1] == Fraction(1, 2)
    assert algebra_to_document(A)["basis"] == ["e1", "e2"]


@pytest.mark.parametrize("text, where", [
    ('{"dim": 2, "products": {"e1*e3": "e1"}}', "e1*e3"),
    ('{"dim": 2, "products": {"e1*e1": "2*x"}}', "e1*e1"),
    ('{"dim": 2, "products": {"e1*e2": "e1", "e2*e1": "e2"}}', "e2*e1"),
    ('{"products": {}}', "$"),
    ('not json', "line 1"),
])
def test_document_errors(text, where):
    with pytest.raises(AlgebraFormatError) as info:
        parse_algebra(text)
    assert where in info.value.where


# --------------------------------------------------------------- labels

def test_labels():
    assert canonical_label("𝕋₀₁") == "T01"
    assert canonical_label("t1") == "T01"
    assert canonical_label("T17^{AN}") == "T17"
    assert canonical_label("ℂ³") == "C3"
    assert canonical_label("𝔍₄") == "J4"
    assert pretty_label("T08") == "𝕋₀₈"
    assert alternative_name("T17")
    with pytest.raises(UnknownLabel):
        canonical_label("T20")
    with pytest.raises(ValueError):
        marginal(1)


def test_marginal_shape():
    J = marginal(4)
    assert J.dim == 4 and J.basis_names[0] == "e"
    assert marginal(3) == catalog("T12") or power_dims(marginal(3)) == power_dims(catalog("T12"))
