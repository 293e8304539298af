"""The JSON fixture format: named objects and maps over one ring.

Matrices are nested integer arrays (row major); names are the only
cross-reference mechanism.  Parsing validates everything it touches and
raises DocumentError with the location of the offending entry, so a bad
fixture names its own degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..chains.build import pad_to_top
from ..chains.cochain import CochainComplex, CochainMap
from ..chains.complexes import ChainComplex, ChainMap
from ..chains.truncate import WindowComplex
from ..exact.matrix import Matrix
from ..exact.modules import ModuleMap, PresentedModule
from ..exact.rings import RingSpec
from ..simplicial.module import SimplicialModule, gamma

FORMAT_VERSION = "1"


class DocumentError(ValueError):
    def __init__(self, location: str, message: str):
        self.location = location
        super().__init__(f"{location}: {message}")


def _matrix(ring: RingSpec, data: Any, rows: int, cols: int,
            location: str) -> Matrix:
    if not isinstance(data, list):
        raise DocumentError(location, "matrix must be a list of rows")
    if rows == 0 or cols == 0:
        return Matrix.zero(ring, rows, cols)
    if len(data) != rows:
        raise DocumentError(location, f"expected {rows} rows, got {len(data)}")
    for r, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            raise DocumentError(f"{location}[{r}]", f"expected {cols} entries")
        for x in row:
            if not isinstance(x, int):
                raise DocumentError(f"{location}[{r}]", "entries must be integers")
    return Matrix(ring, rows, cols, data)


def _module(ring: RingSpec, data: Any, location: str) -> PresentedModule:
    if not isinstance(data, dict) or "generators" not in data:
        raise DocumentError(location, "module needs a 'generators' field")
    gens = data["generators"]
    if not isinstance(gens, int) or gens < 0:
        raise DocumentError(location, "'generators' must be a natural number")
    rel_data = data.get("relations", [])
    cols = len(rel_data[0]) if rel_data and gens else 0
    rel = _matrix(ring, rel_data, gens if rel_data else 0, cols,
                  f"{location}.relations")
    if rel.rows != gens:
        rel = Matrix.zero(ring, gens, 0)
    return PresentedModule(ring, gens, rel)


def _complex_data(ring: RingSpec, data: dict, location: str
                  ) -> tuple[list[PresentedModule], list[Matrix]]:
    degrees = data.get("degrees")
    if not isinstance(degrees, list) or not degrees:
        raise DocumentError(location, "complex needs a non-empty 'degrees' list")
    mods = [_module(ring, d, f"{location}.degrees[{n}]")
            for n, d in enumerate(degrees)]
    raw_diffs = data.get("differentials", [])
    if len(raw_diffs) != len(mods) - 1:
        raise DocumentError(f"{location}.differentials",
                            f"expected {len(mods) - 1} matrices, "
                            f"got {len(raw_diffs)}")
    return mods, raw_diffs


def parse_chain_complex(ring: RingSpec, data: dict, location: str
                        ) -> ChainComplex:
    mods, raw_diffs = _complex_data(ring, data, location)
    diffs = []
    for n, raw in enumerate(raw_diffs, start=1):
        action = _matrix(ring, raw, mods[n - 1].generators, mods[n].generators,
                         f"{location}.differentials[{n - 1}]")
        try:
            diffs.append(ModuleMap(mods[n], mods[n - 1], action))
        except ValueError as exc:
            raise DocumentError(f"{location}.differentials[{n - 1}]", str(exc))
    try:
        return ChainComplex(ring, mods, diffs)
    except ValueError as exc:
        raise DocumentError(location, str(exc))


def parse_cochain_complex(ring: RingSpec, data: dict, location: str
                          ) -> CochainComplex:
    mods, raw_diffs = _complex_data(ring, data, location)
    diffs = []
    for n, raw in enumerate(raw_diffs):
        action = _matrix(ring, raw, mods[n + 1].generators, mods[n].generators,
                         f"{location}.differentials[{n}]")
        try:
            diffs.append(ModuleMap(mods[n], mods[n + 1], action))
        except ValueError as exc:
            raise DocumentError(f"{location}.differentials[{n}]", str(exc))
    try:
        return CochainComplex(ring, mods, diffs)
    except ValueError as exc:
        raise DocumentError(location, str(exc))


def parse_window_complex(ring: RingSpec, data: dict, location: str
                         ) -> WindowComplex:
    mods, raw_diffs = _complex_data(ring, data, location)
    minus_one = _module(ring, data.get("minus_one", {"generators": 0}),
                        f"{location}.minus_one")
    d0_raw = data.get("d0", [])
    d0 = _matrix(ring, d0_raw, minus_one.generators, mods[0].generators,
                 f"{location}.d0")
    modules = {-1: minus_one}
    modules.update({n: m for n, m in enumerate(mods)})
    diffs = {0: ModuleMap(mods[0], minus_one, d0, check=False)}
    for n, raw in enumerate(raw_diffs, start=1):
        action = _matrix(ring, raw, mods[n - 1].generators, mods[n].generators,
                         f"{location}.differentials[{n - 1}]")
        diffs[n] = ModuleMap(mods[n], mods[n - 1], action, check=False)
    try:
        return WindowComplex(ring, modules, diffs)
    except ValueError as exc:
        raise DocumentError(location, str(exc))


def parse_simplicial(ring: RingSpec, data: dict, location: str
                     ) -> SimplicialModule:
    normalized = parse_chain_complex(ring, data.get("normalized", {}),
                                     f"{location}.normalized")
    cap = data.get("cap", normalized.top + 1)
    if not isinstance(cap, int) or cap < normalized.top:
        raise DocumentError(f"{location}.cap",
                            "cap must be an integer >= the top degree")
    try:
        return gamma(normalized, cap=cap)
    except AssertionError as exc:
        raise DocumentError(location, str(exc))


@dataclass
class MapEntry:
    name: str
    source_name: str
    target_name: str
    value: Any  # ChainMap | CochainMap | SimplicialMap-normalized ChainMap
    kind: str   # "chain" | "cochain" | "simplicial"


@dataclass
class Document:
    ring: RingSpec
    objects: dict[str, Any] = field(default_factory=dict)
    object_kinds: dict[str, str] = field(default_factory=dict)
    maps: dict[str, MapEntry] = field(default_factory=dict)

    def chain_complex(self, name: str) -> ChainComplex:
        obj = self._get(name)
        if self.object_kinds[name] == "simplicial_module":
            return obj.normalized
        if not isinstance(obj, ChainComplex):
            raise DocumentError(f"objects.{name}", "not a chain complex")
        return obj

    def simplicial(self, name: str) -> SimplicialModule:
        obj = self._get(name)
        if isinstance(obj, SimplicialModule):
            return obj
        if isinstance(obj, ChainComplex):
            return gamma(obj, verify=False)
        raise DocumentError(f"objects.{name}", "not a simplicial module")

    def _get(self, name: str):
        if name not in self.objects:
            raise DocumentError(f"objects.{name}", "no such object")
        return self.objects[name]

    def map(self, name: str) -> MapEntry:
        if name not in self.maps:
            raise DocumentError(f"maps.{name}", "no such map")
        return self.maps[name]


_OBJECT_PARSERS = {
    "chain_complex": parse_chain_complex,
    "cochain_complex": parse_cochain_complex,
    "window_complex": parse_window_complex,
    "simplicial_module": parse_simplicial,
}


def parse_document(data: dict) -> Document:
    if not isinstance(data, dict):
        raise DocumentError("$", "document must be a JSON object")
    version = data.get("version")
    if version != FORMAT_VERSION:
        raise DocumentError("version", f"unsupported version {version!r}")
    ring_data = data.get("ring")
    try:
        ring = RingSpec.from_json(ring_data)
    except (TypeError, ValueError, KeyError, AttributeError) as exc:
        raise DocumentError("ring", f"invalid ring: {exc}")
    doc = Document(ring)
    for name, odata in sorted(data.get("objects", {}).items()):
        loc = f"objects.{name}"
        if not isinstance(odata, dict) or "type" not in odata:
            raise DocumentError(loc, "object needs a 'type' field")
        parser = _OBJECT_PARSERS.get(odata["type"])
        if parser is None:
            raise DocumentError(loc, f"unknown object type {odata['type']!r}")
        doc.objects[name] = parser(ring, odata, loc)
        doc.object_kinds[name] = odata["type"]
    for name, mdata in sorted(data.get("maps", {}).items()):
        loc = f"maps.{name}"
        doc.maps[name] = _parse_map(doc, name, mdata, loc)
    return doc


def _parse_map(doc: Document, name: str, data: Any, location: str) -> MapEntry:
    if not isinstance(data, dict):
        raise DocumentError(location, "map must be an object")
    for fieldname in ("source", "target", "components"):
        if fieldname not in data:
            raise DocumentError(location, f"map needs a '{fieldname}' field")
    src_name, tgt_name = data["source"], data["target"]
    for ref in (src_name, tgt_name):
        if ref not in doc.objects:
            raise DocumentError(location, f"dangling reference {ref!r}")
    src_kind = doc.object_kinds[src_name]
    tgt_kind = doc.object_kinds[tgt_name]
    if src_kind != tgt_kind:
        raise DocumentError(location, "maps must relate objects of one kind")
    ring = doc.ring
    src, tgt = doc.objects[src_name], doc.objects[tgt_name]
    if src_kind == "simplicial_module":
        src_c, tgt_c = src.normalized, tgt.normalized
    else:
        src_c, tgt_c = src, tgt
    comps_raw = data["components"]
    top = max(src_c.top, tgt_c.top)
    comps = []
    for n in range(top + 1):
        raw = comps_raw[n] if n < len(comps_raw) else []
        action = _matrix(ring, raw, tgt_c.module(n).generators,
                         src_c.module(n).generators,
                         f"{location}.components[{n}]")
        try:
            comps.append(ModuleMap(src_c.module(n), tgt_c.module(n), action))
        except ValueError as exc:
            raise DocumentError(f"{location}.components[{n}]", str(exc))
    try:
        if src_kind == "cochain_complex":
            value = CochainMap(src, tgt, comps)
            kind = "cochain"
        else:
            value = ChainMap(src_c, tgt_c, comps)
            kind = "simplicial" if src_kind == "simplicial_module" else "chain"
    except ValueError as exc:
        raise DocumentError(location, str(exc))
    return MapEntry(name, src_name, tgt_name, value, kind)


# -- serialization ------------------------------------------------------


def module_to_json(m: PresentedModule) -> dict:
    return {"generators": m.generators, "relations": m.relations.to_json()}


def complex_to_json(C: ChainComplex) -> dict:
    return {"type": "chain_complex", "degrees": [module_to_json(m) for m in C.mods],
            "differentials": [d.action.to_json() for d in C.diffs]}


def cochain_to_json(C: CochainComplex) -> dict:
    return {"type": "cochain_complex",
            "degrees": [module_to_json(m) for m in C.mods],
            "differentials": [d.action.to_json() for d in C.diffs]}


def simplicial_to_json(A: SimplicialModule) -> dict:
    return {"type": "simplicial_module",
            "normalized": {"degrees": [module_to_json(m)
                                       for m in A.normalized.mods],
                           "differentials": [d.action.to_json()
                                             for d in A.normalized.diffs]},
            "cap": A.cap}


def chain_map_to_json(f: ChainMap) -> dict:
    return {"source": complex_to_json(f.source),
            "target": complex_to_json(f.target),
            "components": [p.action.to_json() for p in f.parts]}


def chain_map_from_json(ring: RingSpec, data: dict, location: str = "map"
                        ) -> ChainMap:
    src = parse_chain_complex(ring, data["source"], f"{location}.source")
    tgt = parse_chain_complex(ring, data["target"], f"{location}.target")
    comps = []
    top = max(src.top, tgt.top)
    for n in range(top + 1):
        raw = data["components"][n] if n < len(data["components"]) else []
        action = _matrix(ring, raw, tgt.module(n).generators,
                         src.module(n).generators,
                         f"{location}.components[{n}]")
        comps.append(ModuleMap(src.module(n), tgt.module(n), action))
    return ChainMap(src, tgt, comps)


def document_to_json(doc: Document) -> dict:
    objects = {}
    for name, obj in doc.objects.items():
        kind = doc.object_kinds[name]
        if kind == "chain_complex":
            objects[name] = complex_to_json(obj)
        elif kind == "cochain_complex":
            objects[name] = cochain_to_json(obj)
        elif kind == "simplicial_module":
            objects[name] = simplicial_to_json(obj)
        else:
            continue
    maps = {}
    for name, entry in doc.maps.items():
        value = entry.value
        maps[name] = {"source": entry.source_name, "target": entry.target_name,
                      "components": [p.action.to_json() for p in value.parts]}
    return {"version": FORMAT_VERSION, "ring": doc.ring.to_json(),
            "objects": objects, "maps": maps}
