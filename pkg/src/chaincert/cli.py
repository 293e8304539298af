"""Command-line front end: run operations on fixture documents.

Every command emits a machine-readable JSON report on stdout.  Exit codes:
0 = the operation ran and any claim it makes is certified, 1 = a claim was
refuted (with a counterexample in the report), 2 = usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .certify import CertifyConfig, SUITES, run_suite
from .chains.cochain import dualize, dualize_map
from .chains.complexes import ChainMap, LiftingProblem
from .chains.homcx import hom_complex
from .chains.tensor import tensor_complex
from .chains.truncate import good_truncation, window_of_complex
from .exact.rings import RingSpec, ZZ, Zmod
from .io.document import (DocumentError, complex_to_json, document_to_json,
                          parse_document, simplicial_to_json)
from .io.reports import (bousfield_report, classification_report, dump,
                         lift_report, verify_report)
from .models.classify import bousfield_classify, classify
from .models.lifting import solve_lifting
from .simplicial.cotensor import ez_aw_dual_ops
from .simplicial.ez_aw import aw, ez, find_ez_aw_homotopy
from .simplicial.module import degreewise_tensor, gamma, normalize

USAGE_ERROR = 2


def _load_document(path: str):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        _fail(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        _fail(f"{path}: invalid JSON: {exc}")
    try:
        return parse_document(data)
    except DocumentError as exc:
        _fail(str(exc))


def _fail(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)
    raise SystemExit(USAGE_ERROR)


def _emit(report: dict, out: str | None) -> None:
    text = dump(report)
    sys.stdout.write(text)
    if out:
        with open(out, "w") as fh:
            fh.write(text)


def _ring_from_flag(value: str) -> RingSpec:
    if value in ("z", "Z"):
        return ZZ
    if value.startswith("z/"):
        return Zmod(int(value[2:]))
    _fail(f"unknown ring {value!r}; use 'z' or 'z/<m>'")


def cmd_validate(args) -> int:
    doc = _load_document(args.document)
    report = {"kind": "validate", "ok": True,
              "objects": sorted(doc.objects), "maps": sorted(doc.maps)}
    _emit(report, args.out)
    return 0


def cmd_classify(args) -> int:
    doc = _load_document(args.document)
    try:
        entry = doc.map(args.map)
    except DocumentError as exc:
        _fail(str(exc))
    if args.flavor == "bousfield":
        if entry.kind != "cochain":
            _fail(f"maps.{args.map}: bousfield flavor needs cochain data")
        verdict = bousfield_classify(entry.value)
        report = bousfield_report(entry.value, verdict)
    else:
        if entry.kind == "cochain":
            _fail(f"maps.{args.map}: flavor {args.flavor} needs chain data")
        verdict = classify(entry.value, args.flavor)
        report = classification_report(entry.value, args.flavor, verdict)
    _emit(report, args.out)
    return 0


def cmd_lift(args) -> int:
    doc = _load_document(args.document)
    legs = {}
    for leg in ("left", "right", "top", "bottom"):
        entry = doc.map(getattr(args, leg))
        if entry.kind == "cochain":
            _fail(f"maps.{entry.name}: lifting needs chain data")
        legs[leg] = entry.value
    try:
        problem = LiftingProblem(legs["left"], legs["right"],
                                 legs["top"], legs["bottom"])
    except ValueError as exc:
        _fail(str(exc))
    outcome = solve_lifting(problem, args.flavor, args.acyclic_leg)
    _emit(lift_report(problem, outcome, args.flavor), args.out)
    return 0 if outcome.found else 1


def cmd_tensor(args) -> int:
    doc = _load_document(args.document)
    X = doc.chain_complex(args.x)
    Y = doc.chain_complex(args.y)
    T = tensor_complex(X, Y)
    _emit({"kind": "tensor", "ring": doc.ring.to_json(),
           "result": complex_to_json(T)}, args.out)
    return 0


def cmd_hom(args) -> int:
    doc = _load_document(args.document)
    X = doc.chain_complex(args.x)
    Y = doc.chain_complex(args.y)
    H = hom_complex(X, Y)
    _emit({"kind": "hom", "ring": doc.ring.to_json(),
           "result": complex_to_json(H)}, args.out)
    return 0


def cmd_truncate(args) -> int:
    doc = _load_document(args.document)
    obj = doc.objects.get(args.object)
    if obj is None:
        _fail(f"objects.{args.object}: no such object")
    kind = doc.object_kinds[args.object]
    if kind == "window_complex":
        window = obj
    elif kind == "chain_complex":
        window = window_of_complex(obj)
    else:
        _fail(f"objects.{args.object}: cannot truncate a {kind}")
    trunc = good_truncation(window)
    _emit({"kind": "truncate", "ring": doc.ring.to_json(),
           "result": complex_to_json(trunc.complex)}, args.out)
    return 0


def cmd_normalize(args) -> int:
    doc = _load_document(args.document)
    A = doc.simplicial(args.object)
    N = normalize(A)
    _emit({"kind": "normalize", "ring": doc.ring.to_json(),
           "result": complex_to_json(N)}, args.out)
    return 0


def cmd_denormalize(args) -> int:
    doc = _load_document(args.document)
    C = doc.chain_complex(args.complex)
    A = gamma(C, cap=args.cap)
    level_ranks = [A.level_rank(n) for n in range(A.cap + 1)]
    _emit({"kind": "denormalize", "ring": doc.ring.to_json(),
           "result": simplicial_to_json(A), "level_ranks": level_ranks},
          args.out)
    return 0


def cmd_ez_aw(args) -> int:
    doc = _load_document(args.document)
    A = doc.simplicial(args.a)
    B = doc.simplicial(args.b)
    T = degreewise_tensor(A, B)
    E = ez(A, B, T)
    W = aw(A, B, T)
    from .chains.complexes import chain_map_equal

    identity_ok = chain_map_equal(W.compose(E), ChainMap.identity(E.source))
    homotopy = find_ez_aw_homotopy(A, B, T, E, W)
    report = {
        "kind": "ez_aw",
        "ring": doc.ring.to_json(),
        "aw_ez_identity": identity_ok,
        "ez": E.to_json(),
        "aw": W.to_json(),
        "homotopy": homotopy.to_json(),
        "homotopy_degrees": list(range(T.normalized.top + 1)),
    }
    if args.dual:
        dual = ez_aw_dual_ops(A, B, through=args.through)
        report["dual"] = {
            "ez_star": dual.ez_star.to_json(),
            "aw_star": dual.aw_star.to_json(),
            "homotopy": dual.homotopy.to_json(),
        }
    _emit(report, args.out)
    return 0 if identity_ok else 1


def cmd_bousfield(args) -> int:
    doc = _load_document(args.document)
    entry = doc.map(args.map)
    if entry.kind == "cochain":
        g = entry.value
    else:
        g = dualize_map(entry.value)
    verdict = bousfield_classify(g)
    _emit(bousfield_report(g, verdict), args.out)
    return 0


def cmd_certify(args) -> int:
    config = CertifyConfig(args.suite, seed=args.seed, cases=args.cases,
                           max_rank=args.max_rank,
                           ring=_ring_from_flag(args.ring),
                           shrink=not args.no_shrink)
    report = run_suite(config)
    _emit(report, args.out)
    return 0 if report["ok"] else 1


def cmd_verify(args) -> int:
    path = args.witness if args.witness else args.verify
    if not path:
        _fail("verify needs a witness file")
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        _fail(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        _fail(f"{path}: invalid JSON: {exc}")
    ok, problems = verify_report(data)
    _emit({"kind": "verify", "ok": ok, "problems": problems}, args.out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chaincert",
        description="exact-arithmetic model-structure certification "
                    "for chain complexes and simplicial modules")
    parser.add_argument("--format", choices=["json"], default="json",
                        help="report format (json only)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_doc(p):
        p.add_argument("--doc", dest="document", required=True,
                       help="fixture document (JSON)")
        p.add_argument("--out", help="also write the report to this file")

    p = sub.add_parser("validate", help="parse and validate a document")
    p.add_argument("document")
    p.add_argument("--out")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classify", help="classify a map in a model structure")
    add_doc(p)
    p.add_argument("--map", required=True)
    p.add_argument("--flavor", choices=["h", "q", "m", "bousfield"],
                   default="h")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("lift", help="solve a lifting square")
    add_doc(p)
    for leg in ("left", "right", "top", "bottom"):
        p.add_argument(f"--{leg}", required=True)
    p.add_argument("--flavor", choices=["h", "q", "m"], default="h")
    p.add_argument("--acyclic-leg", choices=["left", "right"], default="left")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("tensor", help="tensor product of two complexes")
    add_doc(p)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("hom", help="the enriching hom complex")
    add_doc(p)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("truncate", help="good truncation of a window complex")
    add_doc(p)
    p.add_argument("--object", required=True)
    p.set_defaults(func=cmd_truncate)

    p = sub.add_parser("normalize", help="normalized complex from level data")
    add_doc(p)
    p.add_argument("--object", required=True)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("denormalize", help="levels of the denormalization")
    add_doc(p)
    p.add_argument("--complex", required=True)
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_denormalize)

    p = sub.add_parser("ez-aw", help="shuffle and front-back comparison maps")
    add_doc(p)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--dual", action="store_true",
                   help="also compute the cotensor-side comparison")
    p.add_argument("--through", type=int, default=3,
                   help="degree bound for the dual comparison")
    p.set_defaults(func=cmd_ez_aw)

    p = sub.add_parser("bousfield", help="classify in the dual structure")
    add_doc(p)
    p.add_argument("--map", required=True)
    p.set_defaults(func=cmd_bousfield)

    p = sub.add_parser("certify", help="run a randomized certification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=50)
    p.add_argument("--max-rank", type=int, default=3)
    p.add_argument("--ring", default="z", help="'z' or 'z/<m>'")
    p.add_argument("--no-shrink", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="re-verify an emitted witness file")
    p.add_argument("witness", nargs="?", help="witness report (JSON)")
    p.add_argument("--verify", dest="verify", help="witness report (JSON)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
