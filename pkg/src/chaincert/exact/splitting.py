"""Split epi/mono decisions with explicit sections and retractions."""

from __future__ import annotations

from .equations import MapVariable, MatrixRelation, solve_map_relations
from .matrix import Matrix
from .modules import ModuleMap, PresentedModule, map_equal


def _wellformedness(ring, name: str, var: MapVariable) -> MatrixRelation:
    src, tgt = var.source, var.target
    return MatrixRelation(
        terms=[(1, Matrix.identity(ring, tgt.generators), name, src.relations)],
        rhs=Matrix.zero(ring, tgt.generators, src.relations.cols),
        mod=tgt.relations,
    )


def is_split_epi(f: ModuleMap) -> ModuleMap | None:
    """A section s with f o s = id, or None; decided by one linear system."""
    ring = f.source.ring
    C, B = f.target, f.source
    s = MapVariable("s", C, B)
    main = MatrixRelation(
        terms=[(1, f.action, "s", Matrix.identity(ring, C.generators))],
        rhs=Matrix.identity(ring, C.generators),
        mod=C.relations,
    )
    sol = solve_map_relations(ring, [s], [main, _wellformedness(ring, "s", s)])
    if sol is None:
        return None
    section = ModuleMap(C, B, sol["s"])
    assert map_equal(f.compose(section), ModuleMap.identity(C))
    return section


def is_split_mono(f: ModuleMap) -> ModuleMap | None:
    """A retraction r with r o f = id, or None."""
    ring = f.source.ring
    B, C = f.source, f.target
    r = MapVariable("r", C, B)
    main = MatrixRelation(
        terms=[(1, Matrix.identity(ring, B.generators), "r", f.action)],
        rhs=Matrix.identity(ring, B.generators),
        mod=B.relations,
    )
    sol = solve_map_relations(ring, [r], [main, _wellformedness(ring, "r", r)])
    if sol is None:
        return None
    retraction = ModuleMap(C, B, sol["r"])
    assert map_equal(retraction.compose(f), ModuleMap.identity(B))
    return retraction


def is_projective(M: PresentedModule) -> bool:
    """True iff the canonical surjection R^g -> M splits."""
    projection = ModuleMap(PresentedModule.free(M.ring, M.generators), M,
                           Matrix.identity(M.ring, M.generators), check=False)
    return is_split_epi(projection) is not None


def projective_section(M: PresentedModule) -> ModuleMap | None:
    """Section of the canonical surjection R^g -> M when M is projective."""
    projection = ModuleMap(PresentedModule.free(M.ring, M.generators), M,
                           Matrix.identity(M.ring, M.generators), check=False)
    return is_split_epi(projection)
