"""Command-line interface: ``toricodes <command> [options]``.

Every command prints JSON (``--format json``) or an aligned key/value
table (``--format table``, the default) built from the same record, so
both formats carry identical numbers.  Library errors exit with their
``exit_code``; usage errors exit with 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

import numpy as np

from . import io as tio
from .code import build_code, dual_code, encode
from .errors import ToricError
from .families import FamilySpec, certified_distance, family_params, family_points
from .gf import Field, field_for_order
from .lattice import PointSet


class UsageError(Exception):
    pass


# -- output -----------------------------------------------------------------

def _flatten(record, prefix=""):
    if isinstance(record, dict):
        for k, v in record.items():
            yield from _flatten(v, f"{prefix}{k}.")
    else:
        yield prefix[:-1], record


def _cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return " ".join(_cell(x) for x in v)
    if v is None:
        return "-"
    return str(v)


def emit(record: dict, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(record, sort_keys=True) + "\n")
        return
    rows = list(_flatten(record))
    width = max((len(k) for k, _ in rows), default=0)
    for k, v in rows:
        out.write(f"{k.ljust(width)}  {_cell(v)}\n")


# -- argument helpers ---------------------------------------------------------

def _field(args) -> Field:
    if args.q is None:
        raise UsageError("--q is required")
    poly = None
    if getattr(args, "poly", None):
        poly = [int(c) for c in args.poly.split(",")]
    return field_for_order(args.q, poly)


def _load_json_arg(text: str):
    if text.startswith("@"):
        return json.loads(Path(text[1:]).read_text())
    return json.loads(text)


def _family_spec(args) -> FamilySpec:
    q = args.q
    need = {"rs": ("k",), "hirzebruch": ("d", "e", "r"), "xab": ("a", "b"), "triangle": ("a",)}[args.family]
    vals = []
    for name in need:
        v = getattr(args, name)
        if v is None:
            raise UsageError(f"--family {args.family} needs --{name}")
        vals.append(v)
    return FamilySpec(args.family, q, tuple(vals))


def _exponents(args) -> tuple[PointSet, FamilySpec | None]:
    if (args.family is None) == (args.points is None):
        raise UsageError("give exactly one of --family or --points")
    if args.points is not None:
        return PointSet(_load_json_arg(args.points)), None
    spec = _family_spec(args)
    return family_points(spec), spec


def _point_list(text: str | None) -> list[tuple[int, int]]:
    if not text:
        return []
    out = []
    for item in text.replace(" ", "").split(";"):
        if item:
            i, j = item.split(",")
            out.append((int(i), int(j)))
    return out


def _vector_arg(text: str) -> np.ndarray:
    if text.startswith("@"):
        return tio.parse_vector(Path(text[1:]).read_text())
    return tio.parse_vector(text.replace(",", " "))


def _need_seed(args) -> int:
    if args.seed is None:
        raise UsageError(f"{args.command} is randomised and needs an explicit --seed")
    return args.seed


# -- commands ---------------------------------------------------------------

def cmd_params(args) -> dict:
    F = _field(args)
    U, spec = _exponents(args)
    if spec is not None:
        p = family_params(spec)
        rec = {"family": spec.label(), "q": F.q, **p.as_dict()}
        if p.d.advisory_lower is not None:
            rec["d"]["advisory_lower"] = p.d.advisory_lower
        if args.exact and spec.kind != "rs":
            code = build_code(F, U)
            rec["d"] = certified_distance(code, jobs=args.jobs, family=spec).as_dict()
        elif args.exact:
            code = build_code(F, U).rs_view()
            rec["d"] = certified_distance(code, jobs=args.jobs).as_dict()
        return rec
    code = build_code(F, U)
    d = certified_distance(code, jobs=args.jobs) if args.exact else None
    return {"family": "points", "q": F.q, "n": code.n, "k": code.k,
            "d": d.as_dict() if d else {"lower": 1, "exact": None, "source": "trivial"}}


def cmd_matrix(args) -> dict | None:
    F = _field(args)
    U, _ = _exponents(args)
    code = build_code(F, U)
    kind = "generator"
    if args.dual:
        code, kind = dual_code(code), "dual"
    header = tio.matrix_header(F, code.exponents, kind)
    if args.out:
        with open(args.out, "w") as fh:
            tio.write_matrix(fh, header, code.G)
        return {"written": args.out, "rows": code.k, "cols": code.n}
    tio.write_matrix(sys.stdout, header, code.G)
    return None


def cmd_encode(args) -> dict:
    F = _field(args)
    U, _ = _exponents(args)
    code = build_code(F, U)
    c = encode(code, _vector_arg(args.message))
    return {"codeword": [int(x) for x in c]}


def _decoder_inputs(args):
    from .decoder import check_assumptions
    from .lattice import lattice_points, triangle_polytope

    if args.fixture:
        root = resources.files("toricodes") / "fixtures"
        cfg = json.loads((root / f"{args.fixture}_config.json").read_text())
        y = tio.parse_vector((root / f"{args.fixture}_received.txt").read_text())
    else:
        if args.config:
            cfg = json.loads(Path(args.config).read_text())
        else:
            if None in (args.q, args.a, args.b, args.t):
                raise UsageError("decode needs --config, --fixture, or --q/--a/--b/--t")
            F = _field(args)
            cfg = tio.decode_config_document(F, lattice_points(triangle_polytope(args.a)),
                                             lattice_points(triangle_polytope(args.b)), args.t)
        if args.received is None:
            raise UsageError("decode needs --received")
        y = _vector_arg(args.received)
    F = Field.from_descriptor(cfg["field"])
    config = check_assumptions(PointSet(cfg["U"]), PointSet(cfg["Utilde"]), F, int(cfg["t"]), jobs=args.jobs)
    return config, y


def cmd_decode(args) -> dict:
    from .decoder import decode

    config, y = _decoder_inputs(args)
    try:
        res = decode(config, y)
    except ToricError as exc:
        rec = tio.decode_report(type(exc).__name__, detail=str(exc))
        emit(rec, args.format)
        raise _Reported(exc.exit_code)
    return tio.decode_report("ok", res)


def _scheme(args):
    from .lsss import SharingScheme

    if args.scheme:
        return SharingScheme.from_descriptor(_load_json_arg(args.scheme))
    F = _field(args)
    U, spec = _exponents(args)
    p0 = _point_list(args.p0)[0] if args.p0 else (0, 0)
    return SharingScheme(F, U, P0=p0, family=spec)


def cmd_share(args) -> dict:
    from .lsss import deal

    seed = _need_seed(args)
    sch = _scheme(args)
    shares = deal(sch, args.secret, np.random.default_rng(seed))
    doc = tio.shares_document(sch, shares)
    if args.out:
        Path(args.out).write_text(json.dumps(doc, sort_keys=True) + "\n")
        return {"written": args.out, "scheme_hash": doc["scheme_hash"], "players": len(shares)}
    return doc


def cmd_reconstruct(args) -> dict:
    from .lsss import reconstruct

    sch, shares = tio.load_shares(json.loads(Path(args.shares).read_text()))
    keep = _point_list(args.players)
    if keep:
        wanted = set(keep)
        shares = [s for s in shares if s[0] in wanted]
    return {"secret": reconstruct(sch, shares), "shares_used": len(shares)}


def cmd_product(args) -> dict:
    from .lsss import multiply_shares, reconstruct_product

    if (args.shares is None) == (args.product_shares is None):
        raise UsageError("give exactly one of --shares A B or --product-shares FILE")
    if args.shares:
        sch, a = tio.load_shares(json.loads(Path(args.shares[0]).read_text()))
        sch_b, b = tio.load_shares(json.loads(Path(args.shares[1]).read_text()))
        if sch_b.hash() != sch.hash():
            raise UsageError("--shares files belong to different schemes")
        prods = multiply_shares(sch.field, a, b)
    else:
        sch, prods = tio.load_shares(json.loads(Path(args.product_shares).read_text()))
    removed = set(_point_list(args.remove))
    prods = [s for s in prods if s[0] not in removed]
    return {"product": reconstruct_product(sch, prods), "removed": len(removed), "shares_used": len(prods)}


def cmd_quantum(args) -> dict:
    from .quantum import css_params

    r = css_params(args.q, args.a1, args.b1, args.a2, args.b2, exact=not args.no_exact, jobs=args.jobs)
    return r.as_dict()


def cmd_check(args) -> dict:
    from .checks import run_suite

    seed = args.seed
    if args.suite != "character-sums":
        seed = _need_seed(args)
    F = _field(args)
    results = run_suite(args.suite, F, seed or 0, args.samples)
    failed = [r.as_dict() for r in results if not r.ok]
    rec = {"suite": args.suite, "q": F.q, "checks": len(results), "failed": len(failed),
           "ok": not failed}
    if failed:
        rec["failures"] = failed
        emit(rec, args.format)
        raise _Reported(1)
    return rec


class _Reported(Exception):
    """Output already written; exit with this status."""

    def __init__(self, code: int):
        self.code = code


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="table")
    common.add_argument("--jobs", type=int, default=1, help="worker threads for exhaustive searches")
    common.add_argument("--seed", type=int, default=None)

    fieldp = argparse.ArgumentParser(add_help=False)
    fieldp.add_argument("--q", type=int, help="field order")
    fieldp.add_argument("--poly", help="reduction polynomial, ascending coefficients, comma separated")

    codep = argparse.ArgumentParser(add_help=False)
    codep.add_argument("--family", choices=("rs", "hirzebruch", "xab", "triangle"))
    codep.add_argument("--points", help="JSON list of exponent pairs, or @file")
    for name in ("k", "a", "b", "d", "e", "r"):
        codep.add_argument(f"--{name}", type=int)

    ap = argparse.ArgumentParser(prog="toricodes", description="Toric codes over finite fields.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", parents=[common, fieldp, codep], help="code parameters")
    p.add_argument("--exact", action="store_true", help="certify d by search where feasible")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("matrix", parents=[common, fieldp, codep], help="export a generator matrix")
    p.add_argument("--dual", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("encode", parents=[common, fieldp, codep], help="encode a message")
    p.add_argument("--message", required=True, help="space separated reps, or @file")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common, fieldp], help="decode a received word")
    p.add_argument("--config", help="decoder config JSON file")
    p.add_argument("--fixture", choices=("q8",), help="use a bundled config and received word")
    p.add_argument("--received", help="space separated reps, or @file")
    p.add_argument("--a", type=int, help="message triangle side")
    p.add_argument("--b", type=int, help="helper triangle side")
    p.add_argument("--t", type=int, help="number of errors to correct")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("share", parents=[common, fieldp, codep], help="deal shares of a secret")
    p.add_argument("--scheme", help="scheme JSON, or @file")
    p.add_argument("--p0", help="secret point as i,j (default 0,0)")
    p.add_argument("--secret", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_share)

    p = sub.add_parser("reconstruct", parents=[common], help="recover a secret from shares")
    p.add_argument("--shares", required=True)
    p.add_argument("--players", help="subset to use, as 'i,j;i,j;...'")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("product", parents=[common], help="recover a product of two secrets")
    p.add_argument("--shares", nargs=2, metavar=("A", "B"))
    p.add_argument("--product-shares")
    p.add_argument("--remove", help="players to drop, as 'i,j;i,j;...'")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("quantum", parents=[common], help="CSS parameters from two X_{a,b} codes")
    for name in ("q", "a1", "b1", "a2", "b2"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--no-exact", action="store_true", help="skip coset weight searches")
    p.set_defaults(func=cmd_quantum)

    p = sub.add_parser("check", parents=[common, fieldp], help="run an invariant suite")
    p.add_argument("suite", choices=("duality", "schur", "character-sums", "thresholds"))
    p.add_argument("--samples", type=int)
    p.set_defaults(func=cmd_check)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        rec = args.func(args)
    except UsageError as exc:
        ap.error(str(exc))
    except _Reported as exc:
        return exc.code
    except ToricError as exc:
        sys.stderr.write(f"toricodes: {type(exc).__name__}: {exc}\n")
        return exc.exit_code
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"toricodes: {exc}\n")
        return 2
    if rec is not None:
        emit(rec, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
