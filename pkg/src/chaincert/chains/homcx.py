"""Hom complexes, chain-map modules, and evaluation maps.

The hom complex of bounded X, Y lives in degrees -topX .. topY, but its
good truncation only ever looks at degrees >= -1, so the window stops
there.  Degree n >= 1 is the sum over i of Hom(X_i, Y_{i+n}) with the
differential (df)_i = d(f_i) - (-1)^n f_{i-1} d; degree 0 of the
truncation is the module of chain maps X -> Y.
"""

from __future__ import annotations

from ..exact.matrix import Matrix
from ..exact.modules import (HomSpace, ModuleMap, PresentedModule, direct_sum,
                             kernel, map_equal)
from ..exact.snf import solve
from .complexes import ChainComplex, ChainMap
from .truncate import Truncation, WindowComplex, good_truncation


class HomWindow:
    """Window of the hom complex with per-summand HomSpace bookkeeping."""

    def __init__(self, X: ChainComplex, Y: ChainComplex):
        if X.ring != Y.ring:
            raise ValueError("ring mismatch")
        self.X = X
        self.Y = Y
        self.ring = X.ring
        self.top = Y.top
        self._spaces: dict[tuple[int, int], HomSpace] = {}
        self._mods: dict[int, PresentedModule] = {}
        self._offsets: dict[int, list[tuple[int, int]]] = {}

    def summand_indices(self, n: int) -> list[int]:
        return [i for i in range(self.X.top + 1) if 0 <= i + n <= self.Y.top]

    def space(self, i: int, n: int) -> HomSpace:
        key = (i, n)
        if key not in self._spaces:
            self._spaces[key] = HomSpace(self.X.module(i), self.Y.module(i + n))
        return self._spaces[key]

    def module(self, n: int) -> PresentedModule:
        if n in self._mods:
            return self._mods[n]
        idxs = self.summand_indices(n)
        offsets = []
        pos = 0
        mods = []
        for i in idxs:
            sp = self.space(i, n)
            offsets.append((i, pos))
            pos += sp.module.generators
            mods.append(sp.module)
        if mods:
            total, _, _ = direct_sum(mods)
        else:
            total = PresentedModule.zero(self.ring)
        self._mods[n] = total
        self._offsets[n] = offsets
        return total

    def offsets(self, n: int) -> list[tuple[int, int]]:
        self.module(n)
        return self._offsets[n]

    def differential(self, n: int) -> ModuleMap:
        """d : Hom_n -> Hom_{n-1}."""
        src = self.module(n)
        tgt = self.module(n - 1)
        sidx = self.summand_indices(n)
        tidx = self.summand_indices(n - 1)
        row_sizes = [self.space(i, n - 1).module.generators for i in tidx]
        col_sizes = [self.space(i, n).module.generators for i in sidx]
        blocks: dict[tuple[int, int], Matrix] = {}
        sign = -1 if n % 2 == 0 else 1  # -(-1)^n
        for s_pos, i in enumerate(sidx):
            sp = self.space(i, n)
            if i in tidx:
                t_pos = tidx.index(i)
                post = sp.postcompose(self.Y.differential(i + n),
                                      self.space(i, n - 1))
                blocks[(t_pos, s_pos)] = post.action
            if (i + 1) in tidx:
                t_pos = tidx.index(i + 1)
                pre = sp.precompose(self.X.differential(i + 1),
                                    self.space(i + 1, n - 1))
                blocks[(t_pos, s_pos)] = pre.action.scale(sign)
        action = Matrix.assemble(self.ring, row_sizes, col_sizes, blocks)
        return ModuleMap(src, tgt, action, check=False)

    def window(self) -> WindowComplex:
        mods = {n: self.module(n) for n in range(-1, self.top + 1)}
        diffs = {n: self.differential(n) for n in range(0, self.top + 1)}
        return WindowComplex(self.ring, mods, diffs)


def hom_truncation(X: ChainComplex, Y: ChainComplex) -> tuple[Truncation, HomWindow]:
    hw = HomWindow(X, Y)
    return good_truncation(hw.window()), hw


def hom_complex(X: ChainComplex, Y: ChainComplex) -> ChainComplex:
    """tau_{>=0} Hom(X, Y): the enriching hom of Ch_{>=0}."""
    return hom_truncation(X, Y)[0].complex


class ChainMapsSpace:
    """The module of chain maps X -> Y with explicit encode/decode."""

    def __init__(self, X: ChainComplex, Y: ChainComplex):
        self.X = X
        self.Y = Y
        self.ring = X.ring
        self.window = HomWindow(X, Y)
        ker, incl = kernel(self.window.differential(0))
        self.module = ker
        self.inclusion = incl  # into the degree-0 window module

    def chain_map(self, coords: Matrix) -> ChainMap:
        """Decode a coefficient column into an actual chain map."""
        v = self.inclusion.action @ coords
        comps: list[ModuleMap] = []
        offsets = dict(self.window.offsets(0))
        top = max(self.X.top, self.Y.top)
        for n in range(top + 1):
            if n in offsets or (0 <= n <= min(self.X.top, self.Y.top)):
                sp = self.window.space(n, 0)
                off = offsets[n]
                g = sp.module.generators
                c = v.submatrix(range(off, off + g), [0])
                comps.append(ModuleMap(self.X.module(n), self.Y.module(n),
                                       sp.element(c), check=False))
            else:
                comps.append(ModuleMap.zero_map(self.X.module(n), self.Y.module(n)))
        return ChainMap(self.X, self.Y, comps)

    def coords(self, f: ChainMap) -> Matrix:
        """Encode a chain map as a coefficient column (mod relations)."""
        cols: list[Matrix] = []
        for i in self.window.summand_indices(0):
            sp = self.window.space(i, 0)
            cols.append(sp.coords(f.component(i).action))
        stacked = Matrix.zero(self.ring, 0, 1)
        for c in cols:
            stacked = stacked.vstack(c)
        amb = self.inclusion.target
        sol = solve(self.inclusion.action.hstack(amb.relations), stacked)
        if sol is None:
            raise ValueError("chain map does not lie in the chain-maps module")
        return sol.submatrix(range(self.module.generators), [0])


def evaluation_matrix(hs: HomSpace, element: Matrix) -> Matrix:
    """Matrix of Hom(M, N) -> N, phi -> phi(element)."""
    ring = hs.source.ring
    out = Matrix.zero(ring, hs.target.generators, 0)
    for g in hs.gens:
        out = out.hstack(g @ element)
    return out


def map_from_truncation(source: Truncation, target: ChainComplex,
                        window_components: dict[int, ModuleMap],
                        *, check: bool = True) -> ChainMap:
    """Build a chain map out of a truncation from window-level components."""
    comps = [window_components[0].compose(source.kernel_inclusion)]
    top = max(source.complex.top, target.top)
    for n in range(1, top + 1):
        comps.append(window_components.get(
            n, ModuleMap.zero_map(source.complex.module(n), target.module(n))))
    return ChainMap(source.complex, target, comps, check=check)


def map_into_truncation(source: ChainComplex, target: Truncation,
                        window_components: dict[int, ModuleMap],
                        *, check: bool = True) -> ChainMap:
    """Build a chain map into a truncation; degree 0 must hit ker(d_0)."""
    from ..exact.modules import factor_through

    w0 = factor_through(target.kernel_inclusion, window_components[0])
    if w0 is None:
        raise ValueError("degree-0 component does not land in ker(d_0)")
    comps = [w0]
    top = max(source.top, target.complex.top)
    for n in range(1, top + 1):
        comps.append(window_components.get(
            n, ModuleMap.zero_map(source.module(n), target.complex.module(n))))
    return ChainMap(source, target.complex, comps, check=check)
