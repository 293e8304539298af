"""Representable-functor surjectivity tests, the independent split-epi oracle.

A module map f is a split epimorphism iff Hom(P, f) is surjective for the
test object P = target(f); applying this degreewise gives a second route to
the Hurewicz fibration bit that never touches the section solver.
"""

from __future__ import annotations

from ..chains.complexes import ChainMap
from ..exact.modules import HomSpace, ModuleMap, PresentedModule, cokernel


def p_epic_check(P: PresentedModule, f: ModuleMap) -> bool:
    """Is Hom(P, f) : Hom(P, B) -> Hom(P, C) surjective?"""
    src = HomSpace(P, f.source)
    tgt = HomSpace(P, f.target)
    induced = src.postcompose(f, tgt)
    coker, _ = cokernel(induced)
    return coker.is_zero_module()


def split_epi_via_yoneda(g: ChainMap) -> dict[int, bool]:
    """Degreewise split-epi decisions using only p_epic_check with P = Y_n."""
    out: dict[int, bool] = {}
    for n in range(max(g.source.top, g.target.top) + 1):
        gn = g.component(n)
        out[n] = p_epic_check(gn.target, gn)
    return out
