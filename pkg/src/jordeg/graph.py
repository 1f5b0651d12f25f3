"""Degeneration graphs of the 2- and 3-dimensional catalogs.

Edges carry verified witnesses, non-edges carry checked certificates, and
every algebra implicitly degenerates to the zero algebra.  Because each
catalog has finitely many orbits, orbit closures are reachability sets.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import networkx as nx

from . import golden
from .catalog import ZERO_LABEL, canonical_label, catalog, catalog_labels, marginal
from .degeneration import (DegenerationWitness, ParametrizedBasis, WitnessReport,
                           verify_witness)
from .nondegeneration import (CertificateReport, ClosedSetSpec, NonDegenerationCertificate,
                              check_certificate, spec_from_document)


class GraphBuildError(RuntimeError):
    def __init__(self, message: str, item=None):
        super().__init__(message)
        self.item = item


# ------------------------------------------------------------------ shipped data

def _witness(row) -> DegenerationWitness:
    src, tgt, rows, origin = row
    return DegenerationWitness(src, tgt, ParametrizedBasis.parse(rows), origin)


def printed_witnesses(dim: int) -> list[DegenerationWitness]:
    """Witnesses exactly as tabulated, with the constructed inherited edges."""
    rows = golden.WITNESSES_DIM3 if dim == 3 else golden.WITNESSES_DIM2
    return [_witness(r) for r in rows]


def certified_witnesses(dim: int) -> list[DegenerationWitness]:
    """The witness set the graphs are built from: printed rows that verify,
    corrected rows replacing those that do not, and constructed rows."""
    if dim == 2:
        return printed_witnesses(2)
    bad = set(golden.SUPERSEDED)
    rows = [r for r in golden.WITNESSES_DIM3 if (r[0], r[1]) not in bad]
    return [_witness(r) for r in rows + golden.CORRECTED_WITNESSES]


def closed_set_spec(name: str) -> ClosedSetSpec:
    return spec_from_document(getattr(golden, name))


def printed_closed_set_certificates() -> list[NonDegenerationCertificate]:
    return [NonDegenerationCertificate("closed-set", src, tgt, closed_set_spec(name), basis)
            for name, src, tgt, basis in golden.CLOSED_SET_PAIRS]


def certified_certificates(dim: int) -> list[NonDegenerationCertificate]:
    if dim != 3:
        return []
    certs = [NonDegenerationCertificate("peirce-obstruction", a, b)
             for a, b in golden.PEIRCE_PAIRS]
    certs += [NonDegenerationCertificate("power-identity", a, b)
              for a, b in golden.POWER_IDENTITY_PAIRS]
    return certs


# ------------------------------------------------------------------ graph

@dataclass
class DegenerationGraph:
    dim: int
    nodes: list
    edges: dict = field(default_factory=dict)      # (a, b) -> witness or None (zero edge)
    non_edges: dict = field(default_factory=dict)  # (a, b) -> certificate
    fingerprints: dict = field(default_factory=dict)

    def digraph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.nodes)
        g.add_edges_from(self.edges)
        return g


def _order(labels, dim):
    ref = {l: i for i, l in enumerate(catalog_labels(dim))} if dim in (2, 3) else {}
    return sorted(labels, key=lambda l: (ref.get(l, len(ref)), l))


def _run(fn, items, parallel: int):
    if parallel and parallel > 1 and len(items) > 1:
        with ProcessPoolExecutor(parallel) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def build_graph(labels, witnesses, certificates, *, parallel: int = 1,
                with_fingerprints: bool = False) -> DegenerationGraph:
    labels = [canonical_label(l) for l in labels]
    dim = catalog(labels[0]).dim if labels else 0
    nodes = _order(set(labels), dim)
    G = DegenerationGraph(dim, nodes)
    for w, rep in zip(witnesses, _run(verify_witness, list(witnesses), parallel)):
        if not rep.ok:
            raise GraphBuildError(f"witness does not verify: {rep.summary()}", rep)
        if rep.source not in nodes or rep.target not in nodes:
            raise GraphBuildError(f"edge {rep.source} -> {rep.target} leaves the node set", rep)
        if rep.source != rep.target:
            G.edges[(rep.source, rep.target)] = w
    zero = ZERO_LABEL.get(dim)
    if zero in nodes:
        for a in nodes:
            if a != zero:
                G.edges.setdefault((a, zero), None)
    for c, rep in zip(certificates, _run(check_certificate, list(certificates), parallel)):
        if not rep.ok:
            raise GraphBuildError(f"certificate does not check: {rep.summary()}", rep)
        G.non_edges[(rep.source, rep.target)] = c
    for a, b in G.non_edges:
        if b in closure_set(G, a):
            raise GraphBuildError(f"{a} -/-> {b} is certified but {b} is in the closure of {a}",
                                  (a, b))
    if with_fingerprints:
        from .invariants import fingerprint
        G.fingerprints = {l: fingerprint(catalog(l)) for l in nodes}
    return G


def catalog_graph(dim: int, parallel: int = 1) -> DegenerationGraph:
    return build_graph(catalog_labels(dim), certified_witnesses(dim),
                       certified_certificates(dim), parallel=parallel)


def _check_node(G, A):
    A = canonical_label(A)
    if A not in G.nodes:
        raise KeyError(f"{A} is not a node of the graph")
    return A


def closure_set(G: DegenerationGraph, A) -> set:
    A = _check_node(G, A)
    return nx.descendants(G.digraph(), A) | {A}


@dataclass(frozen=True)
class ComponentReport:
    components: tuple  # (rigid label, sorted closure labels)
    rigid_set: tuple

    def as_dict(self) -> dict:
        return {"rigid": list(self.rigid_set),
                "components": {r: list(c) for r, c in self.components}}


def components_and_rigid(G: DegenerationGraph) -> ComponentReport:
    g = G.digraph()
    rigid = [a for a in G.nodes if not any(p != a for p in g.predecessors(a))]
    comps = tuple((r, tuple(_order(closure_set(G, r), G.dim))) for r in rigid)
    return ComponentReport(comps, tuple(rigid))


def level(G: DegenerationGraph, A) -> int:
    A = _check_node(G, A)
    g = G.digraph()
    best = {}
    for v in reversed(list(nx.topological_sort(g))):
        best[v] = max((best[w] + 1 for w in g.successors(v)), default=0)
    return best[A]


def primary_edges(G: DegenerationGraph) -> list[tuple[str, str]]:
    """Edges of the transitive reduction, in catalog order."""
    red = nx.transitive_reduction(G.digraph())
    pos = {l: i for i, l in enumerate(G.nodes)}
    return sorted(red.edges, key=lambda e: (pos[e[0]], pos[e[1]]))


def non_primary_witnesses(G: DegenerationGraph) -> list[tuple[str, str, str]]:
    """Witnessed edges A -> B factoring as A -> C -> B through another node."""
    out = []
    for (a, b), w in G.edges.items():
        if w is None:
            continue
        for c in G.nodes:
            if c in (a, b):
                continue
            if c in closure_set(G, a) and b in closure_set(G, c):
                out.append((a, b, c))
                break
    return out


def semicontinuity_violations(G: DegenerationGraph) -> list[tuple[str, str, str]]:
    """Check dim Der up, dim Rad not down, dim A^2 not up along witnessed edges."""
    from .algebra import square_dim
    from .invariants import derivation_algebra, trace_form_radical

    out = []
    for (a, b), w in G.edges.items():
        A, B = catalog(a), catalog(b)
        if derivation_algebra(A).dim >= derivation_algebra(B).dim:
            out.append((a, b, "Der"))
        if len(trace_form_radical(A)) > len(trace_form_radical(B)):
            out.append((a, b, "Rad"))
        if square_dim(A) < square_dim(B):
            out.append((a, b, "square"))
    return out


# ------------------------------------------------------------------ marginal family

@dataclass(frozen=True)
class MarginalLevelCertificate:
    k: int
    der: int
    bound: int
    level_one: bool

    def summary(self) -> str:
        if not self.level_one:
            return f"J{self.k}: dim Der = {self.der}, expected {self.bound}; no conclusion"
        return (f"J{self.k}: dim Der = {self.der} = k^2 - k, the maximum for a nonzero "
                f"product, so every proper degeneration has zero multiplication: level one")


def marginal_level_certificate(k: int) -> MarginalLevelCertificate:
    from .invariants import derivation_algebra

    if k < 2:
        raise ValueError("the marginal family starts at k = 2")
    der = derivation_algebra(marginal(k)).dim
    bound = k * k - k
    return MarginalLevelCertificate(k, der, bound, der == bound)


# ------------------------------------------------------------------ export

def graph_to_document(G: DegenerationGraph) -> dict:
    from .degeneration import witness_to_document
    from .nondegeneration import NonDegenerationCertificate

    comps = components_and_rigid(G)
    doc = {
        "dim": G.dim,
        "nodes": [{"label": l, **({"fingerprint": G.fingerprints[l].as_dict()}
                                  if l in G.fingerprints else {})} for l in G.nodes],
        "primary_edges": [],
        "non_edges": [],
        "components": comps.as_dict()["components"],
        "rigid": list(comps.rigid_set),
        "levels": {l: level(G, l) for l in G.nodes},
    }
    for a, b in primary_edges(G):
        w = G.edges.get((a, b))
        doc["primary_edges"].append({"source": a, "target": b,
                                     "witness": witness_to_document(w) if w else "zero-target"})
    for (a, b), c in sorted(G.non_edges.items(), key=lambda kv: kv[0]):
        assert isinstance(c, NonDegenerationCertificate)
        doc["non_edges"].append({"source": a, "target": b, "certificate": c.kind})
    return doc


def to_dot(G: DegenerationGraph) -> str:
    lines = [f"digraph jord{G.dim} {{"]
    lines += [f'  "{l}";' for l in G.nodes]
    lines += [f'  "{a}" -> "{b}";' for a, b in primary_edges(G)]
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "GraphBuildError", "DegenerationGraph", "ComponentReport", "MarginalLevelCertificate",
    "build_graph", "catalog_graph", "closure_set", "components_and_rigid", "level",
    "primary_edges", "non_primary_witnesses", "semicontinuity_violations",
    "marginal_level_certificate", "graph_to_document", "to_dot", "printed_witnesses",
    "certified_witnesses", "certified_certificates", "printed_closed_set_certificates",
    "closed_set_spec", "CertificateReport", "WitnessReport",
]
