"""Self-contained witness reports and their re-verification.

A report embeds the inputs it talks about, so `verify` can re-check every
certificate by direct arithmetic (sections, retractions, homotopy data)
or by honest recomputation (kernel and homology vanishing claims) without
any other file.
"""

from __future__ import annotations

import json
from typing import Any

from ..chains.cochain import CochainComplex, CochainMap, undualize_map
from ..chains.complexes import ChainComplex, ChainHomotopy, ChainMap, \
    chain_map_equal
from ..chains.homotopy import quasi_iso
from ..exact.matrix import Matrix
from ..exact.modules import ModuleMap, map_equal
from ..exact.rings import RingSpec
from ..models.classify import bousfield_classify, classify
from ..models.verdict import Verdict
from .document import (chain_map_from_json, chain_map_to_json, cochain_to_json,
                       parse_cochain_complex, DocumentError)


def classification_report(f: ChainMap, flavor: str, verdict: Verdict) -> dict:
    return {
        "kind": "classification",
        "flavor": flavor,
        "ring": f.source.ring.to_json(),
        "data": "chain",
        "map": chain_map_to_json(f),
        "verdict": verdict.to_json(),
    }


def bousfield_report(g: CochainMap, verdict: Verdict) -> dict:
    return {
        "kind": "classification",
        "flavor": "bousfield",
        "ring": g.source.ring.to_json(),
        "data": "cochain",
        "map": {"source": cochain_to_json(g.source),
                "target": cochain_to_json(g.target),
                "components": [p.action.to_json() for p in g.parts]},
        "verdict": verdict.to_json(),
    }


def lift_report(problem, outcome, flavor: str) -> dict:
    ring = problem.left.source.ring
    data = {
        "kind": "lift",
        "flavor": flavor,
        "ring": ring.to_json(),
        "left": chain_map_to_json(problem.left),
        "right": chain_map_to_json(problem.right),
        "top": chain_map_to_json(problem.top),
        "bottom": chain_map_to_json(problem.bottom),
        "found": outcome.found,
        "prechecks": outcome.prechecks,
    }
    if outcome.found:
        data["lift"] = [p.action.to_json() for p in outcome.lift.parts]
    else:
        data["obstruction_degree"] = outcome.obstruction_degree
    return data


def dump(report: dict) -> str:
    return json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n"


# -- verification -------------------------------------------------------


def _cochain_map_from_json(ring: RingSpec, data: dict) -> CochainMap:
    src = parse_cochain_complex(ring, data["source"], "map.source")
    tgt = parse_cochain_complex(ring, data["target"], "map.target")
    comps = []
    top = max(src.top, tgt.top)
    for n in range(top + 1):
        raw = data["components"][n] if n < len(data["components"]) else []
        action = Matrix(ring, tgt.module(n).generators,
                        src.module(n).generators,
                        raw if raw else None)
        comps.append(ModuleMap(src.module(n), tgt.module(n), action))
    return CochainMap(src, tgt, comps)


def _witness_matrix(ring, data, rows, cols) -> Matrix:
    return Matrix(ring, rows, cols, data if (rows and cols) else None)


def _check_retractions(f, degrees_data: dict, expected: set[int],
                       problems: list[str], *, component) -> None:
    stored = {int(k) for k in degrees_data}
    if stored != expected:
        problems.append(f"retraction degrees {sorted(stored)} do not match "
                        f"the convention {sorted(expected)}")
    for key, mat in degrees_data.items():
        n = int(key)
        fn = component(n)
        r = ModuleMap(fn.target, fn.source,
                      _witness_matrix(fn.source.ring, mat,
                                      fn.source.generators,
                                      fn.target.generators))
        if not map_equal(r.compose(fn), ModuleMap.identity(fn.source)):
            problems.append(f"retraction at degree {n} fails")


def _check_sections(f, degrees_data: dict, expected: set[int],
                    problems: list[str], *, component) -> None:
    stored = {int(k) for k in degrees_data}
    if stored != expected:
        problems.append(f"section degrees {sorted(stored)} do not match "
                        f"the convention {sorted(expected)}")
    for key, mat in degrees_data.items():
        n = int(key)
        fn = component(n)
        s = ModuleMap(fn.target, fn.source,
                      _witness_matrix(fn.source.ring, mat,
                                      fn.source.generators,
                                      fn.target.generators))
        if not map_equal(fn.compose(s), ModuleMap.identity(fn.target)):
            problems.append(f"section at degree {n} fails")


def _check_homotopy_equivalence(f: ChainMap, witness: dict,
                                problems: list[str]) -> None:
    ring = f.source.ring
    try:
        inv = chain_map_from_json(ring, witness["inverse"], "witness.inverse")
        src_h = witness["homotopy_source"]["components"]
        tgt_h = witness["homotopy_target"]["components"]
        X, Y = f.source, f.target
        h_parts = [ModuleMap(X.module(n), X.module(n + 1),
                             _witness_matrix(ring, src_h[n],
                                             X.module(n + 1).generators,
                                             X.module(n).generators))
                   for n in range(len(src_h))]
        k_parts = [ModuleMap(Y.module(n), Y.module(n + 1),
                             _witness_matrix(ring, tgt_h[n],
                                             Y.module(n + 1).generators,
                                             Y.module(n).generators))
                   for n in range(len(tgt_h))]
        g = ChainMap(X if inv.source == X else inv.source, inv.target,
                     list(inv.parts))
        ChainHomotopy(g.compose(f), ChainMap.identity(X), h_parts)
        ChainHomotopy(f.compose(g), ChainMap.identity(Y), k_parts)
    except (ValueError, KeyError, IndexError) as exc:
        problems.append(f"homotopy equivalence witness fails: {exc}")


def _check_surjectivity(f, degrees_data: dict, expected: set[int],
                        problems: list[str]) -> None:
    stored = {int(k) for k in degrees_data}
    if stored != expected:
        problems.append(f"surjectivity degrees {sorted(stored)} do not match "
                        f"{sorted(expected)}")
    for key, cert in degrees_data.items():
        n = int(key)
        fn = f.component(n)
        ring = fn.source.ring
        gY, gX = fn.target.generators, fn.source.generators
        X = _witness_matrix(ring, cert["preimages"], gX, gY)
        Z = _witness_matrix(ring, cert["relation_part"],
                            fn.target.relations.cols, gY)
        got = fn.action @ X + fn.target.relations @ Z
        if got != Matrix.identity(ring, gY):
            problems.append(f"surjectivity certificate at degree {n} fails")


def _check_q_cofibration(f, degrees_data: dict, problems: list[str]) -> None:
    from ..exact.modules import PresentedModule, cokernel, kernel

    for key, cert in degrees_data.items():
        n = int(key)
        fn = f.component(n)
        ring = fn.source.ring
        ker, incl = kernel(fn)
        if not ker.is_zero_module():
            problems.append(f"kernel is nonzero at degree {n}")
            continue
        gens = incl.action
        if gens.cols:
            fact = _witness_matrix(ring, cert["kernel_factorization"],
                                   fn.source.relations.cols, gens.cols)
            if fn.source.relations @ fact != gens:
                problems.append(f"kernel factorization fails at degree {n}")
        coker_data = cert["cokernel"]
        coker = PresentedModule(
            ring, coker_data["generators"],
            _witness_matrix(ring, coker_data["relations"],
                            coker_data["generators"],
                            len(coker_data["relations"][0])
                            if coker_data["relations"] else 0))
        recomputed, _ = cokernel(fn)
        if not recomputed.is_isomorphic(coker):
            problems.append(f"stored cokernel mismatches at degree {n}")
        section = ModuleMap(coker, PresentedModule.free(ring, coker.generators),
                            _witness_matrix(ring, cert["cokernel_section"],
                                            coker.generators, coker.generators))
        projection = ModuleMap(PresentedModule.free(ring, coker.generators),
                               coker, Matrix.identity(ring, coker.generators),
                               check=False)
        if not map_equal(projection.compose(section),
                         ModuleMap.identity(coker)):
            problems.append(f"cokernel section fails at degree {n}")
        r = ModuleMap(fn.target, fn.source,
                      _witness_matrix(ring, cert["retraction"],
                                      fn.source.generators,
                                      fn.target.generators))
        if not map_equal(r.compose(fn), ModuleMap.identity(fn.source)):
            problems.append(f"q-cofibration retraction fails at degree {n}")


def verify_classification(data: dict) -> list[str]:
    problems: list[str] = []
    ring = RingSpec.from_json(data["ring"])
    flavor = data["flavor"]
    if data.get("data") == "cochain":
        g = _cochain_map_from_json(ring, data["map"])
        recomputed = bousfield_classify(g)
        top = max(g.source.top, g.target.top)
        conventions = {"fibration": set(range(top + 1)),
                       "cofibration": set(range(1, top + 1))}
        f_for_bits = g
        component = g.component
        he_map = undualize_map(g)
    else:
        f = chain_map_from_json(ring, data["map"])
        recomputed = classify(f, flavor)
        top = max(f.source.top, f.target.top)
        conventions = {"fibration": set(range(1, top + 1)),
                       "cofibration": set(range(top + 1))}
        f_for_bits = f
        component = f.component
        he_map = f

    stored = Verdict.from_json(data["verdict"])
    for bit_name in ("cofibration", "fibration", "weak_equivalence"):
        bit = getattr(stored, bit_name)
        fresh = getattr(recomputed, bit_name)
        if bit.status != fresh.status:
            problems.append(f"{bit_name} status {bit.status!r} disagrees with "
                            f"recomputation {fresh.status!r}")
        if bit.status != "yes" or bit.witness is None:
            continue
        wtype = bit.witness.get("type")
        if wtype == "degreewise_retractions":
            _check_retractions(f_for_bits, bit.witness["degrees"],
                               conventions["cofibration"], problems,
                               component=component)
        elif wtype == "degreewise_sections":
            _check_sections(f_for_bits, bit.witness["degrees"],
                            conventions["fibration"], problems,
                            component=component)
        elif wtype in ("homotopy_equivalence", "cochain_homotopy_equivalence"):
            _check_homotopy_equivalence(he_map, bit.witness, problems)
        elif wtype == "degreewise_surjectivity":
            _check_surjectivity(f_for_bits, bit.witness["degrees"],
                                conventions["fibration"], problems)
        elif wtype == "q_cofibration":
            _check_q_cofibration(f_for_bits, bit.witness["degrees"], problems)
        elif wtype == "cone_exactness":
            if not quasi_iso(he_map):
                problems.append("cone exactness claim fails recomputation")
        else:
            problems.append(f"unknown witness type {wtype!r}")
    return problems


def verify_lift(data: dict) -> list[str]:
    problems: list[str] = []
    ring = RingSpec.from_json(data["ring"])
    left = chain_map_from_json(ring, data["left"], "left")
    right = chain_map_from_json(ring, data["right"], "right")
    top = chain_map_from_json(ring, data["top"], "top")
    bottom = chain_map_from_json(ring, data["bottom"], "bottom")
    if not chain_map_equal(right.compose(top), bottom.compose(left)):
        problems.append("stored square does not commute")
    if not data.get("found"):
        return problems
    comps = []
    X, E = left.target, right.source
    for n in range(max(X.top, E.top) + 1):
        raw = data["lift"][n] if n < len(data["lift"]) else []
        comps.append(ModuleMap(X.module(n), E.module(n),
                               _witness_matrix(ring, raw,
                                               E.module(n).generators,
                                               X.module(n).generators)))
    try:
        lift = ChainMap(X, E, comps)
    except ValueError as exc:
        problems.append(f"stored lift is not a chain map: {exc}")
        return problems
    if not chain_map_equal(lift.compose(left), top):
        problems.append("lift does not restrict to the top leg")
    if not chain_map_equal(right.compose(lift), bottom):
        problems.append("lift does not project to the bottom leg")
    return problems


def verify_report(data: dict) -> tuple[bool, list[str]]:
    kind = data.get("kind")
    if kind == "classification":
        problems = verify_classification(data)
    elif kind == "lift":
        problems = verify_lift(data)
    elif kind == "certify":
        problems = [] if data.get("ok") else ["suite reported failures"]
    else:
        problems = [f"unknown report kind {kind!r}"]
    return (not problems, problems)
