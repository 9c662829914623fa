"""File formats: matrix text export, shares files, decode configs and reports.

Matrix files start with one ``# {json}`` header line followed by one row
per line of space-separated integer reps.  Reading a file back gives the
same header and an identical matrix.
"""

from __future__ import annotations

import json
from typing import IO, Iterable

import numpy as np

from .gf import Field
from .lattice import PointSet

COLUMN_ORDER = "columns are torus points (xi^i, xi^j) in lexicographic (i, j) order"


def matrix_header(field: Field, exponents: PointSet, kind: str = "generator",
                  support: Iterable | None = None) -> dict:
    head = {"kind": kind, "field": field.descriptor(), "exponents": exponents.to_list(),
            "column_order": COLUMN_ORDER}
    if support is not None:
        head["support"] = [list(p) for p in support]
    return head


def write_matrix(stream: IO[str], header: dict, rows: Iterable) -> None:
    """Stream rows one line at a time."""
    stream.write("# " + json.dumps(header, sort_keys=True, separators=(",", ":")) + "\n")
    for row in rows:
        stream.write(" ".join(str(int(v)) for v in row) + "\n")


def read_matrix(stream: IO[str]) -> tuple[dict, np.ndarray]:
    first = stream.readline()
    if not first.startswith("# "):
        raise ValueError("matrix file must start with a '# {json}' header line")
    header = json.loads(first[2:])
    rows = [[int(tok) for tok in line.split()] for line in stream if line.strip()]
    ncols = len(header["support"]) if "support" in header else (header["field"]["p"] ** header["field"]["m"] - 1) ** 2
    G = np.array(rows, dtype=np.int64).reshape(len(rows), ncols)
    return header, G


def parse_vector(text: str) -> np.ndarray:
    return np.array([int(tok) for tok in text.split()], dtype=np.int64)


def format_vector(v) -> str:
    return " ".join(str(int(x)) for x in v)


def shares_document(scheme, shares) -> dict:
    return {
        "scheme_hash": scheme.hash(),
        "scheme": scheme.descriptor(),
        "entries": [[int(p[0]), int(p[1]), int(v)] for p, v in shares],
    }


def load_shares(doc: dict, scheme=None):
    """``(scheme, shares)`` from a shares document; the embedded (or given)
    scheme must hash to ``scheme_hash``."""
    from .lsss import SharingScheme

    if scheme is None:
        if "scheme" not in doc:
            raise ValueError("shares file has no embedded scheme; pass one explicitly")
        scheme = SharingScheme.from_descriptor(doc["scheme"])
    if scheme.hash() != doc["scheme_hash"]:
        raise ValueError("scheme hash does not match the shares file")
    shares = [((int(i), int(j)), int(v)) for i, j, v in doc["entries"]]
    return scheme, shares


def decode_config_document(field: Field, U: PointSet, Utilde: PointSet, t: int) -> dict:
    return {"field": field.descriptor(), "U": U.to_list(), "Utilde": Utilde.to_list(), "t": int(t)}


def decode_report(status: str, result=None, detail: str = "") -> dict:
    if result is None:
        return {"message": None, "error_positions": None, "error_values": None, "status": status,
                "detail": detail}
    return {
        "message": [int(x) for x in result.message],
        "error_positions": result.error_positions,
        "error_values": result.error_values,
        "status": status,
    }
