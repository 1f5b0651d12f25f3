"""Command-line front end: ``jordeg <command> ...``.

Every command collects records (name, passed, detail) and prints them as a
table or as JSON.  Exit status: 0 all records pass, 1 some record fails,
2 usage or parse error, 3 undecided within the Groebner budget.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass, field

from . import golden
from .algebra import (AlgebraFormatError, format_combination, format_table, is_commutative,
                      is_jordan, is_nilpotent, jordan_violation, parse_algebra, power_dims)
from .catalog import (UnknownLabel, canonical_label, catalog, catalog_labels,
                      non_jordan_example, pretty_label, alternative_name, ZERO_LABEL)
from .exact.groebner import BudgetExceeded

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNDECIDED = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class Report:
    title: str
    records: list = field(default_factory=list)
    payload: dict = field(default_factory=dict)
    text: list = field(default_factory=list)  # extra human-readable lines

    def add(self, name: str, passed, detail: str = "") -> None:
        """``passed`` is True, False, or None for undecided."""
        self.records.append({"name": name, "passed": passed, "detail": detail})

    def status(self) -> int:
        if any(r["passed"] is False for r in self.records):
            return EXIT_FAIL
        if any(r["passed"] is None for r in self.records):
            return EXIT_UNDECIDED
        return EXIT_OK

    def render(self, fmt: str) -> str:
        if fmt == "json":
            doc = {"command": self.title, "records": self.records, "payload": self.payload,
                   "status": self.status()}
            return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
        lines = [self.title]
        lines += self.text
        for r in self.records:
            mark = {True: "PASS", False: "FAIL", None: "UNDECIDED"}[r["passed"]]
            lines.append(f"{mark:9} {r['name']}" + (f"  {r['detail']}" if r["detail"] else ""))
        if self.records:
            failed = sum(r["passed"] is False for r in self.records)
            undecided = sum(r["passed"] is None for r in self.records)
            lines.append(f"{len(self.records)} records, {failed} failed, {undecided} undecided")
        return "\n".join(lines) + "\n"


# ------------------------------------------------------------------ inputs

def load_target(target: str):
    """A catalog label (ASCII or Unicode), ``nonjordan``, or an algebra file."""
    if os.path.isfile(target):
        with open(target, encoding="utf-8") as fh:
            text = fh.read()
        try:
            return parse_algebra(text), None
        except AlgebraFormatError as exc:
            raise UsageError(f"{target}: {exc}") from None
    if target.lower() in ("nonjordan", "non-jordan"):
        return non_jordan_example(), None
    try:
        label = canonical_label(target)
        return catalog(label), label
    except UnknownLabel:
        raise UsageError(f"{target!r} is neither a file nor a catalog label") from None


def parse_pair(text: str) -> tuple[str, str]:
    parts = re.split(r"\s*(?:->|-/->|↛|→|,|:)\s*", text.strip())
    if len(parts) != 2:
        raise UsageError(f"expected a pair like T07->T17, got {text!r}")
    try:
        return canonical_label(parts[0]), canonical_label(parts[1])
    except UnknownLabel as exc:
        raise UsageError(str(exc)) from None


def parse_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)\s*(?:\.\.|-)\s*(\d+)", text.strip())
    if not m:
        raise UsageError(f"expected a range like 2..6, got {text!r}")
    a, b = int(m.group(1)), int(m.group(2))
    if a < 2 or b < a:
        raise UsageError("the marginal family needs 2 <= a <= b")
    return a, b


def _run(fn, items, parallel):
    if parallel and parallel > 1 and len(items) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(parallel) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


# ------------------------------------------------------------------ commands

def cmd_check(args) -> Report:
    A, label = load_target(args.target)
    rep = Report(f"check {label or A.label or args.target}")
    comm = is_commutative(A)
    rep.add("commutative", comm)
    if comm:
        v = jordan_violation(A)
        detail = "" if v is None else \
            "violated at (i1, i2, i3, j) = ({}, {}, {}, {}), value {}".format(
                *(x + 1 for x in v[0]), format_combination(v[1], A.basis_names))
        rep.add("Jordan identity", v is None, detail)
        rep.payload["violation"] = None if v is None else \
            {"indices": [x + 1 for x in v[0]], "value": [str(x) for x in v[1]]}
    return rep


def cmd_invariants(args) -> Report:
    from .cohomology import h2
    from .invariants import derivation_algebra, trace_form_radical, idempotent_spectra

    A, label = load_target(args.target)
    if not is_jordan(A):
        raise UsageError("invariants are computed for Jordan algebras only")
    rep = Report(f"invariants {label or A.label or args.target}")
    der = derivation_algebra(A).dim
    rad = len(trace_form_radical(A))
    nil, index = is_nilpotent(A)
    try:
        spectra = sorted(idempotent_spectra(A, args.budget))
    except BudgetExceeded:
        spectra = None
        rep.add("idempotent spectra", None, "budget exhausted")
    coh = h2(A)
    rep.payload = {"der": der, "rad": rad, "nilpotent": nil, "nilindex": index,
                   "powers": list(power_dims(A)),
                   "peirce_profiles": None if spectra is None else [list(s) for s in spectra],
                   "h2": coh.dim_H2, "z2": coh.dim_Z2, "b2": coh.dim_B2}
    rep.text += [f"  {k}: {v}" for k, v in rep.payload.items()]
    if label in golden.DER:
        rep.add("dim Der matches the table", der == golden.DER[label],
                f"computed {der}, table {golden.DER[label]}")
    if label in golden.RAD:
        rep.add("dim Rad matches the table", rad == golden.RAD[label],
                f"computed {rad}, table {golden.RAD[label]}")
    if label and label.startswith("J"):
        k = int(label[1:])
        rep.add("dim Der = k^2 - k", der == k * k - k, f"computed {der}")
        rep.add("H^2 = 0", coh.dim_H2 == 0, f"computed {coh.dim_H2}")
    return rep


def _witnesses_for_edge(a, b):
    from .graph import _witness

    rows = [r for r in golden.WITNESSES_DIM3 + golden.CORRECTED_WITNESSES + golden.WITNESSES_DIM2
            if (r[0], r[1]) == (a, b)]
    return [_witness(r) for r in rows]


def cmd_verify_deg(args) -> Report:
    from .degeneration import load_witnesses, scaling_witness, verify_witness

    if os.path.isfile(args.witness):
        with open(args.witness, encoding="utf-8") as fh:
            try:
                witnesses = load_witnesses(fh.read())
            except (ValueError, KeyError, UnknownLabel) as exc:
                raise UsageError(f"{args.witness}: {exc}") from None
        title = f"verify-deg {args.witness}"
    else:
        a, b = parse_pair(args.witness)
        witnesses = _witnesses_for_edge(a, b)
        if not witnesses and b == ZERO_LABEL.get(catalog(a).dim):
            witnesses = [scaling_witness(a)]
        if not witnesses:
            raise UsageError(f"no shipped witness for {a} -> {b}")
        title = f"verify-deg {a}->{b}"
    rep = Report(title)
    try:
        reports = _run(verify_witness, witnesses, args.parallel)
    except (ValueError, UnknownLabel) as exc:
        raise UsageError(str(exc)) from None
    for w, r in zip(witnesses, reports):
        origin = f" [{w.note}]" if w.note else ""
        rep.add(f"{r.source} -> {r.target}{origin}", r.ok, r.summary())
    rep.payload["witnesses"] = [r.as_dict() for r in reports]
    return rep


def _certificates_for_pair(a, b):
    from .shipped import render
    from .nondegeneration import NonDegenerationCertificate

    docs = render()["certificates.json"]["certificates"]
    return [NonDegenerationCertificate.from_document(d) for d in docs
            if (d["source"], d["target"]) == (a, b)]


def _check(cert_budget):
    from .nondegeneration import check_certificate
    cert, budget = cert_budget
    return check_certificate(cert, budget)


def cmd_verify_nondeg(args) -> Report:
    from .nondegeneration import (NonDegenerationCertificate, load_certificates)

    if os.path.isfile(args.certificate):
        with open(args.certificate, encoding="utf-8") as fh:
            try:
                certs = load_certificates(fh.read())
            except (ValueError, KeyError) as exc:
                raise UsageError(f"{args.certificate}: {exc}") from None
        title = f"verify-nondeg {args.certificate}"
    else:
        a, b = parse_pair(args.certificate)
        certs = _certificates_for_pair(a, b)
        title = f"verify-nondeg {a}-/->{b}"
        if not certs:
            # nothing shipped: try the automatic criteria in turn
            rep = Report(title)
            found = None
            for kind in ("derivation-dimension", "power-identity", "peirce-obstruction"):
                try:
                    r = _check((NonDegenerationCertificate(kind, a, b), args.budget))
                except ValueError:
                    continue
                if r.ok:
                    found = r
                    break
            rep.add(f"{a} -/-> {b}", found is not None,
                    found.summary() if found else "no automatic criterion applies")
            return rep
    rep = Report(title)
    try:
        results = _run(_check, [(c, args.budget) for c in certs], args.parallel)
    except BudgetExceeded:
        rep.add("certificates", None, "Groebner budget exhausted")
        return rep
    except (ValueError, UnknownLabel) as exc:
        raise UsageError(str(exc)) from None
    for c, r in zip(certs, results):
        name = f"{r.source} -/-> {r.target} [{r.kind}" + (f" {c.spec.name}]" if c.spec else "]")
        rep.add(name, None if r.undecided else r.ok, r.summary())
    rep.payload["certificates"] = [r.as_dict() for r in results]
    return rep


def _dim_of_scope(scope: str) -> int:
    if scope not in ("dim2", "dim3"):
        raise UsageError(f"scope must be dim2 or dim3, got {scope!r}")
    return int(scope[-1])


def cmd_graph(args) -> Report:
    from .graph import (GraphBuildError, catalog_graph, components_and_rigid, graph_to_document,
                        level, primary_edges, to_dot)

    dim = _dim_of_scope(args.scope)
    rep = Report(f"graph {args.scope}")
    try:
        G = catalog_graph(dim, args.parallel)
    except GraphBuildError as exc:
        rep.add("graph assembly", False, str(exc))
        return rep
    rep.add("graph assembly", True, f"{len(G.nodes)} nodes, {len(G.edges)} edges, "
                                    f"{len(G.non_edges)} certified non-edges")
    if args.dot:
        rep.text.append(to_dot(G).rstrip("\n"))
    else:
        comps = components_and_rigid(G)
        rep.text.append("  primary edges: " + ", ".join(f"{a}->{b}" for a, b in primary_edges(G)))
        rep.text.append("  rigid: " + ", ".join(comps.rigid_set))
        for r, closure in comps.components:
            rep.text.append(f"  closure({r}) = {{{', '.join(closure)}}}")
        rep.text.append("  levels: " + ", ".join(f"{l}={level(G, l)}" for l in G.nodes))
    rep.payload = graph_to_document(G)
    return rep


def cmd_cohomology(args) -> Report:
    from .cohomology import h2

    A, label = load_target(args.target)
    if not is_jordan(A):
        raise UsageError("cohomology is computed for Jordan algebras only")
    c = h2(A)
    rep = Report(f"cohomology {label or A.label or args.target}")
    rep.payload = {"z2": c.dim_Z2, "b2": c.dim_B2, "h2": c.dim_H2, "rigid_by_h2": c.rigid}
    rep.text += [f"  dim Z^2 = {c.dim_Z2}", f"  dim B^2 = {c.dim_B2}", f"  dim H^2 = {c.dim_H2}"]
    if c.rigid:
        rep.text.append("  H^2 = 0, so the algebra is rigid")
    return rep


def cmd_catalog(args) -> Report:
    if args.action == "show":
        if not args.label:
            raise UsageError("catalog show needs a label")
        A, label = load_target(args.label)
        rep = Report(f"catalog show {label}")
        rep.text.append(format_table(A))
        from .algebra import algebra_to_document
        rep.payload = algebra_to_document(A)
        return rep
    dims = (args.dim,) if args.dim else (2, 3)
    rep = Report("catalog list")
    entries = []
    for d in dims:
        for label in catalog_labels(d):
            A = catalog(label)
            entries.append({"label": label, "unicode": pretty_label(label), "dim": d,
                            "alternative": alternative_name(label),
                            "table": format_table(A)})
            rep.text.append(f"  {label:4} {pretty_label(label):4} {alternative_name(label):6} "
                            f"{format_table(A) or '(zero product)'}")
    rep.payload["algebras"] = entries
    return rep


# ------------------------------------------------------------------ verify-all

def _identity_record(rep, label):
    A = catalog(label)
    rep.add(f"identity {label}", is_commutative(A) and is_jordan(A))


def _verify_all_dim(rep: Report, dim: int, args) -> None:
    from .degeneration import verify_witness
    from .graph import (GraphBuildError, catalog_graph, components_and_rigid,
                        level, printed_witnesses)
    from .invariants import derivation_algebra, trace_form_radical

    labels = catalog_labels(dim)
    for l in labels:
        _identity_record(rep, l)
    if dim == 2:
        rep.add("non-Jordan example rejected", not is_jordan(non_jordan_example()))
    for l in labels:
        d = derivation_algebra(catalog(l)).dim
        rep.add(f"dim Der {l}", d == golden.DER[l], f"computed {d}, table {golden.DER[l]}")
    for l in labels:
        if l in golden.RAD:
            r = len(trace_form_radical(catalog(l)))
            rep.add(f"dim Rad {l}", r == golden.RAD[l], f"computed {r}, table {golden.RAD[l]}")

    ws = printed_witnesses(dim)
    if dim == 3:
        from .graph import _witness
        ws += [_witness(r) for r in golden.CORRECTED_WITNESSES]
    for w, r in zip(ws, _run(verify_witness, ws, args.parallel)):
        rep.add(f"witness {r.source} -> {r.target} [{w.note}]", r.ok, r.summary())
        if r.ok:
            da = derivation_algebra(catalog(r.source)).dim
            db = derivation_algebra(catalog(r.target)).dim
            rep.add(f"Der increases {r.source} -> {r.target}", da < db, f"{da} < {db}")

    if dim == 3:
        from .shipped import render
        from .nondegeneration import NonDegenerationCertificate
        certs = [NonDegenerationCertificate.from_document(d)
                 for d in render()["certificates.json"]["certificates"]]
        for c, r in zip(certs, _run(_check, [(c, args.budget) for c in certs], args.parallel)):
            tag = c.kind + (f" {c.spec.name}" if c.spec else "")
            rep.add(f"certificate {r.source} -/-> {r.target} [{tag}]",
                    None if r.undecided else r.ok, r.summary())

    try:
        G = catalog_graph(dim, args.parallel)
    except GraphBuildError as exc:
        rep.add("graph assembly", False, str(exc))
        return
    rep.add("graph assembly", True, f"{len(G.edges)} edges, {len(G.non_edges)} non-edges")
    comps = components_and_rigid(G)
    want_rigid = golden.RIGID[dim]
    rep.add("rigid set", list(comps.rigid_set) == want_rigid,
            f"computed {{{', '.join(comps.rigid_set)}}}, expected {{{', '.join(want_rigid)}}}")
    for r, closure in comps.components:
        want = golden.COMPONENTS[dim].get(r)
        if want is None:
            rep.add(f"component closure({r})", False, "not an expected component")
            continue
        got, exp = set(closure), set(want)
        diff = []
        if exp - got:
            diff.append("missing " + ", ".join(sorted(exp - got)))
        if got - exp:
            diff.append("extra " + ", ".join(sorted(got - exp)))
        rep.add(f"component closure({r})", got == exp, "; ".join(diff) or f"{len(got)} members")
    if dim == 3:
        inter = set(G.nodes)
        for _, closure in comps.components:
            inter &= set(closure)
        rep.add("intersection of components", inter == {"C3"},
                "{" + ", ".join(sorted(inter)) + "}")
    for l, want in golden.LEVELS.items():
        if l in G.nodes:
            got = level(G, l)
            rep.add(f"level {l}", got == want, f"computed {got}, expected {want}")
    rep.payload["components"] = comps.as_dict()


def _verify_all_marginal(rep: Report, a: int, b: int) -> None:
    from .cohomology import h2
    from .graph import marginal_level_certificate
    from .catalog import marginal

    for k in range(a, b + 1):
        A = marginal(k)
        rep.add(f"identity J{k}", is_commutative(A) and is_jordan(A))
        cert = marginal_level_certificate(k)
        rep.add(f"dim Der J{k} = {k * k - k}", cert.der == k * k - k, f"computed {cert.der}")
        rep.add(f"level one J{k}", cert.level_one, cert.summary())
        dim_h2 = h2(A).dim_H2
        rep.add(f"H^2 J{k} = 0", dim_h2 == 0, f"computed {dim_h2}")


def cmd_verify_all(args) -> Report:
    scope = args.scope
    if scope == "marginal":
        a, b = parse_range(args.range or "{}..{}".format(*golden.MARGINAL_H2_RANGE))
        rep = Report(f"verify-all marginal {a}..{b}")
        _verify_all_marginal(rep, a, b)
        return rep
    if args.range:
        raise UsageError("only the marginal scope takes a range")
    dim = _dim_of_scope(scope)
    rep = Report(f"verify-all {scope}")
    _verify_all_dim(rep, dim, args)
    return rep


# ------------------------------------------------------------------ entry point

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jordeg",
                                description="Degenerations of small Jordan algebras.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--budget", type=int, default=None,
                   help="Groebner work budget (S-polynomial reductions)")
    p.add_argument("--parallel", type=int, default=1, help="worker processes")
    p.add_argument("--check-data", action="store_true",
                   help="compare the shipped data files with the embedded copies")
    sub = p.add_subparsers(dest="command")

    s = sub.add_parser("check", help="commutativity and the Jordan identity")
    s.add_argument("target")
    s.set_defaults(func=cmd_check)
    s = sub.add_parser("invariants", help="Der, Rad, powers, Peirce profiles, H^2")
    s.add_argument("target")
    s.set_defaults(func=cmd_invariants)
    s = sub.add_parser("verify-deg", help="verify a witness file or a shipped edge")
    s.add_argument("witness")
    s.set_defaults(func=cmd_verify_deg)
    s = sub.add_parser("verify-nondeg", help="check a certificate file or a pair")
    s.add_argument("certificate")
    s.set_defaults(func=cmd_verify_nondeg)
    s = sub.add_parser("graph", help="assemble the certified degeneration graph")
    s.add_argument("scope", choices=("dim2", "dim3"))
    s.add_argument("--dot", action="store_true", help="print a dot edge list")
    s.set_defaults(func=cmd_graph)
    s = sub.add_parser("cohomology", help="dimensions of Z^2, B^2, H^2")
    s.add_argument("target")
    s.set_defaults(func=cmd_cohomology)
    s = sub.add_parser("catalog", help="list or show catalog algebras")
    s.add_argument("action", choices=("list", "show"))
    s.add_argument("label", nargs="?")
    s.add_argument("--dim", type=int, choices=(2, 3))
    s.set_defaults(func=cmd_catalog)
    s = sub.add_parser("verify-all", help="reproduce every check for a scope")
    s.add_argument("scope", choices=("dim2", "dim3", "marginal"))
    s.add_argument("range", nargs="?", help="for marginal: a..b")
    s.set_defaults(func=cmd_verify_all)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command is None and not args.check_data:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        rep = args.func(args) if args.command else Report("check-data")
        if args.check_data:
            from .shipped import check_data
            problems = check_data()
            rep.records.insert(0, {"name": "shipped data files", "passed": not problems,
                                   "detail": "; ".join(problems) or "match the embedded copies"})
    except UsageError as exc:
        print(f"jordeg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"jordeg: undecided: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    sys.stdout.write(rep.render(args.format))
    return rep.status()


if __name__ == "__main__":
    sys.exit(main())
