"""The JSON data files shipped under ``jordeg/data`` and their embedded source.

``render()`` produces every file from the embedded tables; ``check_data()``
compares the installed files against it.
"""

from __future__ import annotations

import json
from importlib import resources

from . import golden
from .catalog import NON_JORDAN_EXAMPLE, embedded_documents
from .nondegeneration import NonDegenerationCertificate

FILES = ("catalog.json", "witnesses_dim2.json", "witnesses_dim3.json",
         "certificates.json", "golden.json")


def _witness_docs(rows):
    return [{"source": s, "target": t, "basis": b, "note": origin} for s, t, b, origin in rows]


def _certificate_docs():
    from .graph import printed_closed_set_certificates

    certs = printed_closed_set_certificates()
    certs += [NonDegenerationCertificate("peirce-obstruction", a, b)
              for a, b in golden.PEIRCE_PAIRS]
    certs += [NonDegenerationCertificate("power-identity", a, b)
              for a, b in golden.POWER_IDENTITY_PAIRS]
    return [c.to_document() for c in certs]


def render() -> dict[str, object]:
    return {
        "catalog.json": {"algebras": embedded_documents(), "non_jordan": NON_JORDAN_EXAMPLE},
        "witnesses_dim2.json": {"witnesses": _witness_docs(golden.WITNESSES_DIM2)},
        "witnesses_dim3.json": {
            "witnesses": _witness_docs(golden.WITNESSES_DIM3 + golden.CORRECTED_WITNESSES),
            "superseded": [list(p) for p in golden.SUPERSEDED],
        },
        "certificates.json": {"certificates": _certificate_docs()},
        "golden.json": {
            "der": golden.DER, "rad": golden.RAD,
            "rigid": {str(k): v for k, v in golden.RIGID.items()},
            "components": {str(k): v for k, v in golden.COMPONENTS.items()},
            "levels": golden.LEVELS,
            "marginal_range": list(golden.MARGINAL_RANGE),
            "marginal_h2_range": list(golden.MARGINAL_H2_RANGE),
        },
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def read_text(name: str) -> str:
    return resources.files("jordeg").joinpath("data", name).read_text(encoding="utf-8")


def load(name: str):
    return json.loads(read_text(name))


def check_data() -> list[str]:
    """Names of shipped files that are missing or differ from the embedded data."""
    bad = []
    for name, obj in render().items():
        try:
            on_disk = json.loads(read_text(name))
        except (FileNotFoundError, json.JSONDecodeError):
            bad.append(f"{name}: missing or unreadable")
            continue
        if on_disk != json.loads(json.dumps(obj)):
            bad.append(f"{name}: differs from the embedded copy")
    return bad


def write_all(directory) -> None:
    """Regenerate the data files (used when the embedded tables change)."""
    from pathlib import Path

    for name, obj in render().items():
        Path(directory, name).write_text(dumps(obj), encoding="utf-8")
