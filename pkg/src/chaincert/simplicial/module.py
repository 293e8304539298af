"""Simplicial modules: the denormalization, normalization, and tensors.

The canonical representation of a simplicial module is its normalized
complex; levels are derived data.  Normalization is computed two ways:
the fast path reads off the non-degenerate coordinates (valid because
levels decompose as normalized part plus the degenerate coordinate
block), the generic path intersects kernels of the positive faces and
returns explicit inclusion matrices.  Both are cross-checked in tests
and agree with the canonical projector.
"""

from __future__ import annotations

from ..chains.complexes import ChainComplex, ChainMap
from ..exact.matrix import Matrix
from ..exact.modules import (ModuleMap, PresentedModule, direct_sum,
                             factor_through, kernel)
from ..exact.rings import RingSpec
from ..exact.snf import solve
from .levels import (GammaLevels, TensorLevels, normalized_projector,
                     verify_simplicial_identities)


def full_injection(levels, n: int) -> Matrix:
    full = levels.nondegenerate_coords(n)
    g = levels.module(n).generators
    cols = [[0] * len(full) for _ in range(g)]
    for j, idx in enumerate(full):
        cols[idx][j] = 1
    return Matrix(levels.ring, g, len(full), cols)


def full_projection(levels, n: int) -> Matrix:
    return full_injection(levels, n).transpose()


def _restricted_relations(levels, n: int) -> Matrix:
    full = levels.nondegenerate_coords(n)
    rel = levels.module(n).relations
    restricted = rel.submatrix(full, range(rel.cols))
    keep = [j for j in range(restricted.cols)
            if any(restricted[i, j] != 0 for i in range(restricted.rows))]
    return restricted.columns(keep)


def moore_differential(levels, n: int) -> Matrix:
    """Alternating face sum at level n."""
    out = levels.face(n, 0)
    for i in range(1, n + 1):
        term = levels.face(n, i)
        out = out - term if i % 2 else out + term
    return out


def normalized_quotient(levels, top: int) -> ChainComplex:
    """Normalized complex on the non-degenerate coordinates.

    The degenerate coordinates span a subcomplex of the Moore complex, so
    the alternating face sum descends to the coordinate quotient; the
    descent condition is verified exactly during construction.
    """
    ring = levels.ring
    mods = [PresentedModule(ring, len(levels.nondegenerate_coords(n)),
                            _restricted_relations(levels, n))
            for n in range(top + 1)]
    diffs: list[ModuleMap] = []
    for n in range(1, top + 1):
        M = moore_differential(levels, n)
        full_src = levels.nondegenerate_coords(n)
        full_tgt = levels.nondegenerate_coords(n - 1)
        action = M.submatrix(full_tgt, full_src)
        degenerate = [idx for idx in range(levels.module(n).generators)
                      if idx not in set(full_src)]
        if degenerate:
            leak = M.submatrix(full_tgt, degenerate)
            if solve(mods[n - 1].relations, leak) is None:
                raise ValueError(f"degenerate part is not a subcomplex "
                                 f"at level {n}")
        diffs.append(ModuleMap(mods[n], mods[n - 1], action))
    return ChainComplex(ring, mods, diffs)


def normalized_kernel(levels, top: int
                      ) -> tuple[ChainComplex, list[ModuleMap]]:
    """Normalization as the intersection of kernels of d_1..d_n.

    Returns the complex together with explicit inclusions into the levels;
    the differential is induced by d_0.
    """
    ring = levels.ring
    mods: list[PresentedModule] = [levels.module(0)]
    inclusions: list[ModuleMap] = [ModuleMap.identity(levels.module(0))]
    for n in range(1, top + 1):
        stacked = levels.face(n, 1)
        for i in range(2, n + 1):
            stacked = stacked.vstack(levels.face(n, i))
        targets = [levels.module(n - 1)] * n
        total, _, _ = direct_sum(targets)
        ker, incl = kernel(ModuleMap(levels.module(n), total, stacked,
                                     check=False))
        mods.append(ker)
        inclusions.append(incl)
    diffs: list[ModuleMap] = []
    for n in range(1, top + 1):
        u = ModuleMap(mods[n], levels.module(n - 1),
                      levels.face(n, 0) @ inclusions[n].action, check=False)
        w = factor_through(inclusions[n - 1], u)
        if w is None:
            raise ValueError(f"d_0 does not restrict to the normalization "
                             f"at level {n}")
        diffs.append(w)
    return ChainComplex(ring, mods, diffs), inclusions


class SimplicialModule:
    """A simplicial module, canonically its normalized complex plus levels."""

    def __init__(self, normalized: ChainComplex, levels, cap: int):
        self.normalized = normalized
        self.levels = levels
        self.cap = cap

    @property
    def ring(self) -> RingSpec:
        return self.normalized.ring

    @property
    def top(self) -> int:
        return self.normalized.top

    def level_module(self, n: int) -> PresentedModule:
        return self.levels.module(n)

    def level_rank(self, n: int) -> int:
        return self.levels.module(n).generators

    def face(self, n: int, i: int) -> Matrix:
        return self.levels.face(n, i)

    def degeneracy(self, n: int, j: int) -> Matrix:
        return self.levels.degeneracy(n, j)

    def to_json(self) -> dict:
        return {"normalized": self.normalized.to_json(), "cap": self.cap}

    def __repr__(self) -> str:
        return f"SimplicialModule(top={self.top}, cap={self.cap})"


def gamma(C: ChainComplex, cap: int | None = None, *,
          verify: bool = True) -> SimplicialModule:
    """Denormalization with levels materialized and verified through cap."""
    if cap is None:
        cap = C.top + 1
    levels = GammaLevels(C)
    if verify:
        verify_simplicial_identities(levels, cap)
        roundtrip = normalized_quotient(levels, C.top)
        if roundtrip != C:
            raise AssertionError("denormalization failed to normalize back")
    return SimplicialModule(C, levels, cap)


def normalize(A: SimplicialModule) -> ChainComplex:
    """Recompute the normalized complex from the level data."""
    return normalized_quotient(A.levels, A.normalized.top)


def normalize_with_inclusions(A: SimplicialModule
                              ) -> tuple[ChainComplex, list[ModuleMap]]:
    return normalized_kernel(A.levels, A.normalized.top)


def degreewise_tensor(A: SimplicialModule, B: SimplicialModule, *,
                      verify: bool = False) -> SimplicialModule:
    """(A (x) B)_n = A_n (x) B_n with diagonal faces and degeneracies."""
    if A.ring != B.ring:
        raise ValueError("ring mismatch")
    levels = TensorLevels(A.levels, B.levels)
    top = A.top + B.top
    if verify:
        verify_simplicial_identities(levels, top + 1)
    normalized = normalized_quotient(levels, top)
    return SimplicialModule(normalized, levels, top + 1)


class SimplicialMap:
    """A map of simplicial modules, canonically its normalized chain map."""

    def __init__(self, source: SimplicialModule, target: SimplicialModule,
                 normalized_map: ChainMap):
        if (normalized_map.source != source.normalized
                or normalized_map.target != target.normalized):
            raise ValueError("normalized map endpoints mismatch")
        self.source = source
        self.target = target
        self.normalized_map = normalized_map

    def level_matrix(self, n: int) -> Matrix:
        """Induced matrix on level n (denormalization-backed levels only)."""
        src, tgt = self.source.levels, self.target.levels
        if not isinstance(src, GammaLevels) or not isinstance(tgt, GammaLevels):
            raise NotImplementedError(
                "level matrices are materialized on denormalization levels")
        from . import surjections as sj

        rows = [[0] * src.module(n).generators
                for _ in range(tgt.module(n).generators)]
        for eta in src.summands(n):
            k = sj.degree_of(eta)
            blk = self.normalized_map.component(k).action
            r0 = tgt.offsets(n)[eta]
            c0 = src.offsets(n)[eta]
            for a in range(blk.rows):
                for b in range(blk.cols):
                    if blk[a, b]:
                        rows[r0 + a][c0 + b] = blk[a, b]
        return Matrix(src.ring, tgt.module(n).generators,
                      src.module(n).generators, rows)

    def __repr__(self) -> str:
        return f"SimplicialMap({self.normalized_map!r})"


def gamma_map(f: ChainMap, source: SimplicialModule | None = None,
              target: SimplicialModule | None = None) -> SimplicialMap:
    if source is None:
        source = gamma(f.source, verify=False)
    if target is None:
        target = gamma(f.target, verify=False)
    return SimplicialMap(source, target, f)


def tensor_normalized_map(f: SimplicialMap, g: SimplicialMap,
                          srcT: SimplicialModule, tgtT: SimplicialModule
                          ) -> ChainMap:
    """N(f (x) g) between degreewise tensors, via the level matrices."""
    comps = []
    top = max(srcT.top, tgtT.top)
    for n in range(top + 1):
        if n <= srcT.top:
            lvl = f.level_matrix(n).kron(g.level_matrix(n))
            action = (full_projection(tgtT.levels, n) @ lvl
                      @ full_injection(srcT.levels, n))
        else:
            action = Matrix.zero(srcT.ring,
                                 tgtT.normalized.module(n).generators,
                                 srcT.normalized.module(n).generators)
        comps.append(ModuleMap(srcT.normalized.module(n),
                               tgtT.normalized.module(n), action, check=False))
    return ChainMap(srcT.normalized, tgtT.normalized, comps)


def constant_module(ring: RingSpec) -> SimplicialModule:
    """c(R), the tensor unit: every level is R."""
    from ..chains.build import unit_complex

    return gamma(unit_complex(ring))


def interval_object(ring: RingSpec) -> SimplicialModule:
    """The simplicial interval, i.e. the denormalization of N(Z Delta^1)."""
    from ..chains.build import interval

    return gamma(interval(ring))


def end_inclusion(A: SimplicialModule, T: SimplicialModule, end: int
                  ) -> SimplicialMap:
    """iota_end : A -> A (x) interval at the vertex e0 or e1.

    T must be degreewise_tensor(A, interval_object(ring)); at level n the
    inclusion is a (x) s_0^n(e_end), the constant degeneracy of the vertex.
    """
    ring = A.ring
    comps = []
    for n in range(A.top + 1):
        gA = A.level_module(n).generators
        gI = T.levels.B.module(n).generators
        vertex = [[0] for _ in range(gI)]
        vertex[end][0] = 1  # the constant summand sits first, gens (e0, e1)
        lvl = Matrix.identity(ring, gA).kron(Matrix(ring, gI, 1, vertex))
        action = (full_projection(T.levels, n) @ lvl
                  @ full_injection(A.levels, n))
        comps.append(ModuleMap(A.normalized.module(n), T.normalized.module(n),
                               action, check=False))
    return SimplicialMap(A, T, ChainMap(A.normalized, T.normalized, comps))
