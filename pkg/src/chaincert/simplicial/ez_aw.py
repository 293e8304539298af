"""The shuffle and front-back comparison maps of the tensor normalization.

EZ sends x (x) y in bidegree (p, q) to the signed sum over (p, q)-shuffles
of paired degeneracies; AW sends a level element to the sum of its front
face tensor back face.  Both are chain maps, AW o EZ is the identity on
the nose, and EZ o AW is homotopic to the identity by a solver-produced
witness; all three facts are verified exactly on every instance.
"""

from __future__ import annotations

from ..chains.complexes import ChainComplex, ChainHomotopy, ChainMap
from ..chains.homotopy import nullhomotopy
from ..chains.tensor import TensorLayout
from ..exact.matrix import Matrix
from ..exact.modules import ModuleMap
from .module import SimplicialModule, full_injection, full_projection
from .surjections import shuffles


def _degeneracy_composite(levels, start: int, indices) -> Matrix:
    """s_{j_r} ... s_{j_1} with j_1 < ... < j_r, applied bottom up."""
    M = Matrix.identity(levels.ring, levels.module(start).generators)
    level = start
    for j in sorted(indices):
        M = levels.degeneracy(level, j) @ M
        level += 1
    return M


def _front_face(levels, n: int, p: int) -> Matrix:
    """d_{p+1} ... d_n : level n -> level p (apply d_n first)."""
    M = Matrix.identity(levels.ring, levels.module(n).generators)
    for level in range(n, p, -1):
        M = levels.face(level, level) @ M
    return M


def _back_face(levels, n: int, q: int) -> Matrix:
    """d_0^{n-q} : level n -> level q."""
    M = Matrix.identity(levels.ring, levels.module(n).generators)
    for level in range(n, q, -1):
        M = levels.face(level, 0) @ M
    return M


def ez(A: SimplicialModule, B: SimplicialModule,
       T: SimplicialModule) -> ChainMap:
    """The shuffle map N(A) (x) N(B) -> N(A (x) B)."""
    lay = TensorLayout(A.normalized, B.normalized)
    source = lay.complex()
    target = T.normalized
    ring = A.ring
    comps = []
    for n in range(max(source.top, target.top) + 1):
        tgt_gens = target.module(n).generators
        blocks = []
        for (p, q) in lay.pairs(n):
            inj_a = full_injection(A.levels, p)
            inj_b = full_injection(B.levels, q)
            block = Matrix.zero(ring, T.levels.module(n).generators,
                                inj_a.cols * inj_b.cols)
            for sh in shuffles(p, q):
                left = _degeneracy_composite(A.levels, p, sh.nu) @ inj_a
                right = _degeneracy_composite(B.levels, q, sh.mu) @ inj_b
                term = left.kron(right)
                block = block + (term if sh.sign == 1 else -term)
            blocks.append(full_projection(T.levels, n) @ block)
        action = Matrix.zero(ring, tgt_gens, 0)
        for blk in blocks:
            action = action.hstack(blk)
        if not blocks:
            action = Matrix.zero(ring, tgt_gens, source.module(n).generators)
        comps.append(ModuleMap(source.module(n), target.module(n), action,
                               check=False))
    return ChainMap(source, target, comps)


def aw(A: SimplicialModule, B: SimplicialModule,
       T: SimplicialModule) -> ChainMap:
    """The front-back map N(A (x) B) -> N(A) (x) N(B)."""
    lay = TensorLayout(A.normalized, B.normalized)
    source = T.normalized
    target = lay.complex()
    ring = A.ring
    comps = []
    for n in range(max(source.top, target.top) + 1):
        inj = full_injection(T.levels, n)
        blocks = []
        for (p, q) in lay.pairs(n):
            proj_a = full_projection(A.levels, p)
            proj_b = full_projection(B.levels, q)
            front = proj_a @ _front_face(A.levels, n, p)
            back = proj_b @ _back_face(B.levels, n, q)
            blocks.append(front.kron(back) @ inj)
        action = Matrix.zero(ring, 0, source.module(n).generators)
        for blk in blocks:
            action = action.vstack(blk)
        if not blocks:
            action = Matrix.zero(ring, target.module(n).generators,
                                 source.module(n).generators)
        comps.append(ModuleMap(source.module(n), target.module(n), action,
                               check=False))
    return ChainMap(source, target, comps)


def find_ez_aw_homotopy(A: SimplicialModule, B: SimplicialModule,
                        T: SimplicialModule,
                        ez_map: ChainMap | None = None,
                        aw_map: ChainMap | None = None) -> ChainHomotopy:
    """H with d H + H d = id - EZ o AW on N(A (x) B); must always exist."""
    if ez_map is None:
        ez_map = ez(A, B, T)
    if aw_map is None:
        aw_map = aw(A, B, T)
    composite = ez_map.compose(aw_map)
    ident = ChainMap.identity(T.normalized)
    h = nullhomotopy(ident - composite)
    if h is None:
        raise AssertionError("EZ o AW is not homotopic to the identity; "
                             "this indicates corrupted level data")
    return ChainHomotopy(composite, ident, list(h.parts))
