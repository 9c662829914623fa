from __future__ import annotations

import io

import numpy as np
import pytest

from toricodes import io as tio
from toricodes import lsss
from toricodes.code import build_code, dual_code
from toricodes.decoder import DecodeResult
from toricodes.families import FamilySpec, family_points
from toricodes.gf import field_for_order


@pytest.mark.parametrize("q,poly", [(5, None), (8, None), (9, (2, 2, 1))])
def test_matrix_round_trip(q, poly):
    F = field_for_order(q, poly)
    C = build_code(F, family_points(FamilySpec.triangle(q, 2)))
    buf = io.StringIO()
    head = tio.matrix_header(F, C.exponents)
    tio.write_matrix(buf, head, C.G)
    text = buf.getvalue()
    assert text.startswith("# {")
    assert len(text.splitlines()) == C.k + 1
    back_head, G = tio.read_matrix(io.StringIO(text))
    assert back_head == head and np.array_equal(G, C.G)
    # writing again is byte-identical
    again = io.StringIO()
    tio.write_matrix(again, back_head, G)
    assert again.getvalue() == text


def test_zero_rows_and_restricted_support():
    F = field_for_order(3)
    Z = dual_code(build_code(F, [(0, 0), (0, 1), (1, 0), (1, 1)]))
    buf = io.StringIO()
    tio.write_matrix(buf, tio.matrix_header(F, Z.exponents, "dual"), Z.G)
    head, G = tio.read_matrix(io.StringIO(buf.getvalue()))
    assert G.shape == (0, 4) and head["kind"] == "dual"
    support = [(0, 0), (1, 1)]
    R = build_code(F, [(0, 0)], support=support)
    buf = io.StringIO()
    tio.write_matrix(buf, tio.matrix_header(F, R.exponents, support=support), R.G)
    _, G = tio.read_matrix(io.StringIO(buf.getvalue()))
    assert G.shape == (1, 2)


def test_missing_header():
    with pytest.raises(ValueError):
        tio.read_matrix(io.StringIO("1 2 3\n"))


def test_vectors():
    v = tio.parse_vector(" 1 0  4\n")
    assert v.tolist() == [1, 0, 4]
    assert tio.format_vector(v) == "1 0 4"


def test_shares_document():
    F = field_for_order(5)
    sch = lsss.SharingScheme(F, family_points(FamilySpec.xab(5, 2, 1)))
    shares = lsss.deal(sch, 3, np.random.default_rng(0))
    doc = tio.shares_document(sch, shares)
    assert set(doc) == {"scheme_hash", "scheme", "entries"}
    assert all(len(e) == 3 for e in doc["entries"])
    back, got = tio.load_shares(doc)
    assert back.hash() == sch.hash() and got == shares
    tampered = dict(doc, scheme_hash="0" * 64)
    with pytest.raises(ValueError):
        tio.load_shares(tampered)
    with pytest.raises(ValueError):
        tio.load_shares({"scheme_hash": doc["scheme_hash"], "entries": []})
    assert tio.load_shares({"scheme_hash": doc["scheme_hash"], "entries": []}, sch)[1] == []


def test_decode_report_schema():
    res = DecodeResult(np.array([1, 2]), np.array([0, 3, 0, 1]))
    rep = tio.decode_report("ok", res)
    assert rep == {"message": [1, 2], "error_positions": [1, 3], "error_values": [3, 1], "status": "ok"}
    fail = tio.decode_report("NoLocator", detail="x")
    assert fail["message"] is None and fail["status"] == "NoLocator"
