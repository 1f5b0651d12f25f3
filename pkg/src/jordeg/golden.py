"""Reference data: invariants of the catalogs, certified edges, components.

The JSON files under ``data/`` mirror these values; ``jordeg verify-all
--check-data`` compares the two.
"""

# dim Der and dim Rad of every catalog algebra
DER = {
    "B1": 1, "B2": 2, "B3": 2, "B4": 0, "B5": 1, "C2": 4,
    "T01": 0, "T02": 1, "T03": 1, "T04": 2, "T05": 2, "T06": 1, "T07": 2, "T08": 4,
    "T09": 2, "T10": 2, "T11": 3, "T12": 6, "T13": 2, "T14": 3, "T15": 2, "T16": 4,
    "T17": 3, "T18": 4, "T19": 5, "C3": 9,
}
RAD = {
    "T01": 0, "T02": 0, "T03": 1, "T04": 1, "T05": 1, "T06": 1,
    "T07": 2, "T08": 2, "T09": 2, "T10": 2, "T11": 2, "T12": 2, "T13": 2, "T14": 2,
    "T15": 2, "T16": 2, "T17": 3, "T18": 3, "T19": 3, "C3": 3,
}

# Witnesses: rows are E_i(t) in the source's catalog basis.
# "table": the printed table of primary degenerations; "constructed": built
# here for the inherited primary edges whose bases are not printed.
WITNESSES_DIM3 = [
    # source, target, basis, origin
    ("T03", "T09", [["1", "0", "0"], ["0", "0", "1"], ["0", "t", "0"]], "table"),
    ("T03", "T15", [["0", "1", "0"], ["t", "0", "1"], ["0", "0", "-t^2"]], "table"),
    ("T04", "T08", [["1", "1", "0"], ["t", "-t", "0"], ["0", "0", "t"]], "table"),
    ("T04", "T17", [["t^2", "t", "2*t-2"], ["0", "t^2", "-2*t"], ["0", "0", "t^2"]], "table"),
    ("T05", "T11", [["1", "1", "0"], ["0", "0", "1"], ["t", "0", "0"]], "table"),
    ("T05", "T14", [["1", "0", "0"], ["0", "0", "1"], ["0", "t", "0"]], "table"),
    ("T05", "T16", [["0", "1", "0"], ["t", "0", "0"], ["0", "0", "1"]], "table"),
    ("T05", "T17", [["t^2", "t", "0"], ["0", "t^2", "-1"], ["t", "0", "0"]], "table"),
    ("T07", "T17", [["t", "1", "0"], ["0", "t", "1"], ["0", "0", "t"]], "table"),
    ("T08", "T19", [["t", "1", "0"], ["0", "t", "0"], ["0", "0", "1"]], "table"),
    ("T09", "T17", [["t", "1", "1"], ["0", "t", "-t"], ["0", "t^2", "0"]], "table"),
    ("T11", "T18", [["t", "0", "0"], ["0", "1", "2"], ["0", "0", "t"]], "table"),
    ("T13", "T14", [["1", "0", "0"], ["0", "t", "0"], ["0", "0", "1"]], "table"),
    ("T14", "T18", [["t", "0", "0"], ["0", "1", "-2"], ["0", "0", "t"]], "table"),
    ("T16", "T19", [["t", "1", "0"], ["0", "t", "0"], ["0", "0", "1"]], "table"),
    ("T01", "T03", [["1", "0", "1"], ["0", "1", "0"], ["0", "0", "t"]], "constructed"),
    ("T01", "T06", [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "t"]], "constructed"),
    ("T02", "T04", [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "t"]], "constructed"),
    ("T02", "T13", [["1", "0", "0"], ["0", "0", "t"], ["0", "t^2", "0"]], "constructed"),
    ("T03", "T07", [["1", "1", "0"], ["0", "t", "1"], ["0", "t^2", "0"]], "constructed"),
    ("T04", "T14", [["1", "0", "0"], ["0", "0", "1"], ["0", "t", "0"]], "constructed"),
    ("T06", "T09", [["1", "1", "0"], ["0", "t", "0"], ["0", "0", "1"]], "constructed"),
    ("T06", "T15", [["1", "0", "0"], ["0", "t", "1"], ["0", "t^2", "0"]], "constructed"),
    ("T07", "T08", [["1", "0", "0"], ["0", "t", "0"], ["0", "0", "t"]], "constructed"),
    ("T10", "T11", [["1", "0", "0"], ["0", "t", "0"], ["0", "0", "1"]], "constructed"),
    ("T15", "T16", [["1", "0", "0"], ["0", "t", "0"], ["0", "0", "1"]], "constructed"),
    ("T15", "T17", [["t", "1", "0"], ["t^2", "0", "1"], ["t^3", "0", "0"]], "constructed"),
    ("T17", "T18", [["t", "0", "0"], ["0", "1", "0"], ["0", "0", "t"]], "constructed"),
    ("T18", "T19", [["1", "1", "0"], ["0", "0", "2"], ["0", "t", "0"]], "constructed"),
]

# Replacements for printed rows whose bases do not produce the stated target.
# T04 -> T17 and T05 -> T17 have none: both sources satisfy the identity
# x ∧ x^2 ∧ x^3 = 0, which T17 violates (see POWER_IDENTITY_PAIRS).
CORRECTED_WITNESSES = [
    ("T03", "T15", [["0", "1", "0"], ["t", "0", "1"], ["t^2", "0", "2*t"]], "corrected"),
    ("T16", "T19", [["t", "1", "0"], ["0", "-t", "0"], ["0", "0", "1"]], "corrected"),
]
SUPERSEDED = [("T03", "T15"), ("T04", "T17"), ("T05", "T17"), ("T16", "T19")]

WITNESSES_DIM2 = [
    ("B4", "B1", [["1", "1"], ["0", "t"]], "constructed"),
    ("B4", "B5", [["1", "0"], ["0", "t"]], "constructed"),
    ("B5", "B3", [["t", "1"], ["t^2", "0"]], "constructed"),
    ("B1", "B3", [["t", "1"], ["t^2", "2*t"]], "constructed"),
    ("B2", "C2", [["t", "0"], ["0", "t"]], "constructed"),
    ("B3", "C2", [["t", "0"], ["0", "t"]], "constructed"),
]

# non-degenerations obstructed by idempotent spectra
PEIRCE_PAIRS = [
    ("T02", "T09"), ("T02", "T11"), ("T02", "T16"), ("T05", "T08"), ("T06", "T07"),
    ("T06", "T08"), ("T07", "T16"), ("T09", "T16"), ("T10", "T08"), ("T10", "T14"),
    ("T10", "T16"), ("T13", "T08"),
]

# closed-set certificates: vanishing triples are 1-based (i, j, k) for c_ij^k
R1 = {"name": "R1", "dim": 3, "triples": [(1, 1, 2)],
      "flags": [("sub", 1, 3, 3), ("sub", 2, 2, 3), ("zero", 2, 3)]}
R2 = {"name": "R2", "dim": 3, "triples": [(1, 1, 2), (2, 3, 3), (1, 3, 3), (1, 3, 2)],
      "flags": [("sub", 2, 2, 2), ("sub", 3, 3, 3)]}
CLOSED_SET_PAIRS = [
    # spec, source, target, membership basis rows in the source's basis
    ("R1", "T10", "T17", [[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
    ("R1", "T13", "T17", [[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
    ("R2", "T02", "T07", [[0, 0, 1], [0, 1, 0], [1, 1, 0]]),
]

# non-degenerations obstructed by the closed identity x ∧ x^2 ∧ x^3 = 0
POWER_IDENTITY_PAIRS = [
    ("T02", "T07"), ("T10", "T17"), ("T13", "T17"), ("T04", "T17"), ("T05", "T17"),
]

RIGID = {2: ["B2", "B4"], 3: ["T01", "T02", "T05", "T10", "T12"]}
COMPONENTS = {
    2: {"B2": ["B2", "C2"], "B4": ["B1", "B3", "B4", "B5", "C2"]},
    3: {
        "T01": ["T01", "T03", "T06", "T07", "T08", "T09", "T15", "T16", "T17", "T18", "T19", "C3"],
        "T02": ["T02", "T04", "T08", "T13", "T14", "T17", "T18", "T19", "C3"],
        "T05": ["T05", "T11", "T14", "T16", "T17", "T18", "T19", "C3"],
        "T10": ["T10", "T11", "T18", "T19", "C3"],
        "T12": ["T12", "C3"],
    },
}
LEVELS = {"B2": 1, "T12": 1, "C2": 0, "C3": 0, "B4": 3}
MARGINAL_RANGE = (2, 8)
MARGINAL_H2_RANGE = (2, 6)
