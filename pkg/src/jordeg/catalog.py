"""Catalogs of Jordan algebras of dimensions 2 and 3 and the family J_k.

Basis order is idempotents first, then nilpotents.  Labels are ASCII
(``T01``, ``B3``, ``C2``, ``J4``); Unicode spellings such as ``𝕋₀₁``,
``𝔅₃``, ``ℂ²`` or ``𝔍₄`` are accepted everywhere a label is.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import Algebra, algebra_from_document

# label: (basis, products, tags, alternative name in the older classification)
_TABLE: dict[str, tuple[tuple[str, ...], dict[str, str], str, str]] = {
    "B1": (("e1", "n1"), {"e1*e1": "e1", "e1*n1": "n1"}, "A", ""),
    "B2": (("e1", "n1"), {"e1*e1": "e1", "e1*n1": "1/2*n1"}, "", ""),
    "B3": (("n1", "n2"), {"n1*n1": "n2"}, "AN", ""),
    "B4": (("e1", "e2"), {"e1*e1": "e1", "e2*e2": "e2"}, "A", ""),
    "B5": (("e1", "n1"), {"e1*e1": "e1"}, "A", ""),
    "C2": (("n1", "n2"), {}, "", ""),
    "T01": (("e1", "e2", "e3"), {"e1*e1": "e1", "e2*e2": "e2", "e3*e3": "e3"}, "AUS", "A11"),
    "T02": (("e1", "e2", "e3"), {"e1*e1": "e1", "e2*e2": "e2", "e3*e3": "e1 + e2",
                                 "e1*e3": "1/2*e3", "e2*e3": "1/2*e3"}, "US", "J1"),
    "T03": (("e1", "e2", "n1"), {"e1*e1": "e1", "e2*e2": "e2", "e1*n1": "n1"}, "AU", "A12"),
    "T04": (("e1", "e2", "n1"), {"e1*e1": "e1", "e2*e2": "e2", "e1*n1": "1/2*n1",
                                 "e2*n1": "1/2*n1"}, "U", "J2"),
    "T05": (("e1", "e2", "n1"), {"e1*e1": "e1", "e2*e2": "e2", "e1*n1": "1/2*n1"}, "", "J3"),
    "T06": (("e1", "e2", "n1"), {"e1*e1": "e1", "e2*e2": "e2"}, "A", "A1"),
    "T07": (("e1", "n1", "n2"), {"e1*e1": "e1", "e1*n1": "n1", "e1*n2": "n2",
                                 "n1*n1": "n2"}, "AU", "A13"),
    "T08": (("e1", "n1", "n2"), {"e1*e1": "e1", "e1*n1": "n1", "e1*n2": "n2"}, "AU", "A14"),
    "T09": (("e1", "n1", "n2"), {"e1*e1": "e1", "e1*n1": "n1"}, "A", "A2"),
    "T10": (("e1", "n1", "n2"), {"e1*e1": "e1", "e1*n1": "1/2*n1", "e1*n2": "n2",
                                 "n1*n1": "n2"}, "", "J7"),
    "T11": (("e1", "n1", "n2"), {"e1*e1": "e1", "e1*n1": "1/2*n1", "e1*n2": "n2"}, "", "J4"),
    "T12": (("e1", "n1", "n2"), {"e1*e1": "e1", "e1*n1": "1/2*n1", "e1*n2": "1/2*n2"},
            "", "J5"),
    "T13": (("e1", "n1", "n2"), {"e1*e1": "e1", "e1*n1": "1/2*n1", "n1*n1": "n2"}, "", "J6"),
    "T14": (("e1", "n1", "n2"), {"e1*e1": "e1", "e1*n1": "1/2*n1"}, "", "J8"),
    "T15": (("e1", "n1", "n2"), {"e1*e1": "e1", "n1*n1": "n2"}, "A", "A3"),
    "T16": (("e1", "n1", "n2"), {"e1*e1": "e1"}, "A", "A5"),
    "T17": (("n1", "n2", "n3"), {"n1*n1": "n2", "n1*n2": "n3"}, "AN", "A4"),
    "T18": (("n1", "n2", "n3"), {"n1*n2": "n3"}, "AN", "A6"),
    "T19": (("n1", "n2", "n3"), {"n1*n1": "n2"}, "AN", "A7"),
    "C3": (("n1", "n2", "n3"), {}, "", ""),
}

DIM2 = ("B1", "B2", "B3", "B4", "B5", "C2")
DIM3 = tuple(f"T{i:02d}" for i in range(1, 20)) + ("C3",)
ZERO_LABEL = {2: "C2", 3: "C3"}

# the commutative, non-Jordan algebra e1^2 = e2, e1 e2 = e1, e2^2 = 0
NON_JORDAN_EXAMPLE = {"dim": 2, "label": "nonjordan", "basis": ["e1", "e2"],
                      "products": {"e1*e1": "e2", "e1*e2": "e1"}}


class UnknownLabel(KeyError):
    def __str__(self):
        return f"unknown catalog label {self.args[0]!r}"


_MATH = str.maketrans({"𝕋": "T", "𝔅": "B", "ℂ": "C", "𝔍": "J",
                       "₀": "0", "₁": "1", "₂": "2", "₃": "3", "₄": "4",
                       "₅": "5", "₆": "6", "₇": "7", "₈": "8", "₉": "9",
                       "²": "2", "³": "3"})


def canonical_label(name: str) -> str:
    """Normalize ``𝕋₀₁``, ``t1``, ``T01^AUS``, ``𝔍₄`` etc. to ASCII labels."""
    s = name.strip().translate(_MATH)
    s = re.sub(r"\^\{?[A-Z]*\}?$", "", s).replace("_", "")
    m = re.fullmatch(r"([TtBbCcJj])(\d+)", s)
    if not m:
        raise UnknownLabel(name)
    head, num = m.group(1).upper(), int(m.group(2))
    if head == "T" and 1 <= num <= 19:
        return f"T{num:02d}"
    if head == "B" and 1 <= num <= 5:
        return f"B{num}"
    if head == "C" and num in (2, 3):
        return f"C{num}"
    if head == "J" and num >= 2:
        return f"J{num}"
    raise UnknownLabel(name)


def is_label(name: str) -> bool:
    try:
        canonical_label(name)
    except UnknownLabel:
        return False
    return True


def marginal(k: int) -> Algebra:
    """J_k: e^2 = e, e n_i = 1/2 n_i, n_i n_j = 0, basis (e, n1, ..., n_{k-1})."""
    if k < 2:
        raise ValueError("the family J_k is defined for k >= 2")
    names = ["e"] + [f"n{i}" for i in range(1, k)]
    products = {"e*e": "e"}
    products.update({f"e*n{i}": f"1/2*n{i}" for i in range(1, k)})
    return algebra_from_document({"dim": k, "basis": names, "products": products,
                                  "label": f"J{k}"})


def catalog(name: str) -> Algebra:
    label = canonical_label(name)
    if label.startswith("J"):
        return marginal(int(label[1:]))
    basis, products, tags, _ = _TABLE[label]
    A = algebra_from_document({"dim": len(basis), "basis": list(basis), "products": products,
                               "label": label})
    return Algebra(A.c, A.basis_names, label, tags)


def alternative_name(label: str) -> str:
    return _TABLE[canonical_label(label)][3]


def catalog_labels(dim: int | None = None) -> tuple[str, ...]:
    if dim == 2:
        return DIM2
    if dim == 3:
        return DIM3
    return DIM2 + DIM3


def non_jordan_example() -> Algebra:
    return algebra_from_document(NON_JORDAN_EXAMPLE)


def pretty_label(label: str) -> str:
    """Unicode spelling of an ASCII label."""
    sub = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
    head, num = label[0], label[1:]
    if head == "C":
        return "ℂ" + num.translate(str.maketrans("23", "²³"))
    return {"T": "𝕋", "B": "𝔅", "J": "𝔍"}[head] + num.translate(sub)


def embedded_documents() -> dict[str, dict]:
    """Catalog entries as algebra documents (the shipped data files mirror these)."""
    out = {}
    for label in DIM2 + DIM3:
        basis, products, tags, _ = _TABLE[label]
        doc = {"dim": len(basis), "label": label}
        if tags:
            doc["tags"] = tags
        doc["basis"] = list(basis)
        doc["products"] = dict(products)
        out[label] = doc
    return out


__all__ = ["catalog", "canonical_label", "is_label", "marginal", "catalog_labels",
           "non_jordan_example", "pretty_label", "DIM2", "DIM3", "ZERO_LABEL", "UnknownLabel",
           "Fraction"]
