"""Tensor product of complexes with the Koszul sign rule.

Degree n of X (x) Y is the direct sum of X_i (x) Y_j over i + j = n,
summands ordered by ascending i; within a summand the generator pair
(a, b) sits at index a * gens(Y_j) + b.  The differential is
d(x (x) y) = d(x) (x) y + (-1)^{|x|} x (x) d(y).
"""

from __future__ import annotations

from ..exact.matrix import Matrix
from ..exact.modules import ModuleMap, PresentedModule, direct_sum, tensor_module
from .complexes import ChainComplex, ChainMap


class TensorLayout:
    """Summand bookkeeping for X (x) Y, shared by every construction
    that needs to address individual bidegree blocks."""

    def __init__(self, X: ChainComplex, Y: ChainComplex):
        if X.ring != Y.ring:
            raise ValueError("tensor factors must share their ring")
        self.X = X
        self.Y = Y
        self.ring = X.ring
        self.top = X.top + Y.top
        self._modules: dict[int, PresentedModule] = {}
        self._summands: dict[int, list[PresentedModule]] = {}
        self._complex: ChainComplex | None = None

    def pairs(self, n: int) -> list[tuple[int, int]]:
        lo = max(0, n - self.Y.top)
        hi = min(n, self.X.top)
        return [(i, n - i) for i in range(lo, hi + 1)]

    def summand(self, n: int, i: int) -> PresentedModule:
        self.module(n)
        return self._summands[n][self.pairs(n).index((i, n - i))]

    def module(self, n: int) -> PresentedModule:
        if n in self._modules:
            return self._modules[n]
        if n < 0 or n > self.top:
            z = PresentedModule.zero(self.ring)
            return z
        summands = [tensor_module(self.X.module(i), self.Y.module(j))
                    for i, j in self.pairs(n)]
        if summands:
            total, _, _ = direct_sum(summands)
        else:
            total = PresentedModule.zero(self.ring)
        self._modules[n] = total
        self._summands[n] = summands
        return total

    def offset(self, n: int, i: int) -> int:
        off = 0
        for (ii, jj) in self.pairs(n):
            if ii == i:
                return off
            off += self.X.module(ii).generators * self.Y.module(jj).generators
        raise KeyError(f"pair ({i},{n - i}) absent in degree {n}")

    def address(self, n: int, i: int, a: int, b: int) -> int:
        gy = self.Y.module(n - i).generators
        return self.offset(n, i) + a * gy + b

    def differential(self, n: int) -> ModuleMap:
        src, tgt = self.module(n), self.module(n - 1)
        spairs, tpairs = self.pairs(n), self.pairs(n - 1)
        row_sizes = [self.X.module(i).generators * self.Y.module(j).generators
                     for i, j in tpairs]
        col_sizes = [self.X.module(i).generators * self.Y.module(j).generators
                     for i, j in spairs]
        blocks: dict[tuple[int, int], Matrix] = {}
        for sidx, (i, j) in enumerate(spairs):
            gx = self.X.module(i).generators
            gy = self.Y.module(j).generators
            if i >= 1 and (i - 1, j) in tpairs:
                tidx = tpairs.index((i - 1, j))
                blk = self.X.differential(i).action.kron(
                    Matrix.identity(self.ring, gy))
                blocks[(tidx, sidx)] = blk
            if j >= 1 and (i, j - 1) in tpairs:
                tidx = tpairs.index((i, j - 1))
                blk = Matrix.identity(self.ring, gx).kron(
                    self.Y.differential(j).action)
                if i % 2:
                    blk = -blk
                blocks[(tidx, sidx)] = blocks.get(
                    (tidx, sidx), Matrix.zero(self.ring, row_sizes[tidx],
                                              col_sizes[sidx])) + blk
        action = Matrix.assemble(self.ring, row_sizes, col_sizes, blocks)
        return ModuleMap(src, tgt, action, check=False)

    def complex(self) -> ChainComplex:
        if self._complex is None:
            mods = [self.module(n) for n in range(self.top + 1)]
            diffs = [self.differential(n) for n in range(1, self.top + 1)]
            self._complex = ChainComplex(self.ring, mods, diffs, check=False)
        return self._complex

    def pair_injection(self, n: int, i: int) -> Matrix:
        """Column injection of the (i, n-i) summand into degree n."""
        g = (self.X.module(i).generators
             * self.Y.module(n - i).generators)
        total = self.module(n).generators
        off = self.offset(n, i)
        cols = [[0] * g for _ in range(total)]
        for k in range(g):
            cols[off + k][k] = 1
        return Matrix(self.ring, total, g, cols)

    def pair_projection(self, n: int, i: int) -> Matrix:
        return self.pair_injection(n, i).transpose()


def tensor_complex(X: ChainComplex, Y: ChainComplex) -> ChainComplex:
    return TensorLayout(X, Y).complex()


def tensor_chain_maps(f: ChainMap, g: ChainMap,
                      source: TensorLayout | None = None,
                      target: TensorLayout | None = None) -> ChainMap:
    """f (x) g on the tensor complexes."""
    if source is None:
        source = TensorLayout(f.source, g.source)
    if target is None:
        target = TensorLayout(f.target, g.target)
    ring = source.ring
    comps = []
    for n in range(max(source.top, target.top) + 1):
        spairs = source.pairs(n)
        tpairs = target.pairs(n)
        row_sizes = [target.X.module(i).generators * target.Y.module(j).generators
                     for i, j in tpairs]
        col_sizes = [source.X.module(i).generators * source.Y.module(j).generators
                     for i, j in spairs]
        blocks = {}
        for sidx, (i, j) in enumerate(spairs):
            if (i, j) in tpairs:
                tidx = tpairs.index((i, j))
                blocks[(tidx, sidx)] = f.component(i).action.kron(
                    g.component(j).action)
        action = Matrix.assemble(ring, row_sizes, col_sizes, blocks)
        comps.append(ModuleMap(source.module(n), target.module(n), action,
                               check=False))
    return ChainMap(source.complex(), target.complex(), comps, check=False)


def braiding(X: ChainComplex, Y: ChainComplex) -> ChainMap:
    """The symmetry X (x) Y -> Y (x) X with its Koszul sign (-1)^{ij}."""
    src = TensorLayout(X, Y)
    tgt = TensorLayout(Y, X)
    ring = src.ring
    comps = []
    for n in range(src.top + 1):
        total_s = src.module(n).generators
        total_t = tgt.module(n).generators
        rows = [[0] * total_s for _ in range(total_t)]
        for (i, j) in src.pairs(n):
            gx = X.module(i).generators
            gy = Y.module(j).generators
            sign = -1 if (i * j) % 2 else 1
            for a in range(gx):
                for b in range(gy):
                    rows[tgt.address(n, j, b, a)][src.address(n, i, a, b)] = sign
        comps.append(ModuleMap(src.module(n), tgt.module(n),
                               Matrix(ring, total_t, total_s, rows), check=False))
    return ChainMap(src.complex(), tgt.complex(), comps, check=False)


def interval_cylinder(X: ChainComplex, I: ChainComplex
                      ) -> tuple[TensorLayout, ChainMap, ChainMap, ChainMap]:
    """X (x) I with the two end inclusions i0, i1 and the projection r.

    The interval generators are ordered (e0, e1) in degree 0 and (e) in
    degree 1 with d e = e1 - e0, so i0 includes at e0 and r collapses the
    cylinder by sending both ends to x and the middle to 0.
    """
    lay = TensorLayout(X, I)
    cyl = lay.complex()
    ring = X.ring
    i0_parts, i1_parts, r_parts = [], [], []
    for n in range(lay.top + 1):
        gx = X.module(n).generators
        total = lay.module(n).generators
        inj0 = [[0] * gx for _ in range(total)]
        inj1 = [[0] * gx for _ in range(total)]
        proj = [[0] * total for _ in range(gx)]
        if n <= X.top:
            for a in range(gx):
                inj0[lay.address(n, n, a, 0)][a] = 1
                inj1[lay.address(n, n, a, 1)][a] = 1
                proj[a][lay.address(n, n, a, 0)] = 1
                proj[a][lay.address(n, n, a, 1)] = 1
        i0_parts.append(ModuleMap(X.module(n), lay.module(n),
                                  Matrix(ring, total, gx, inj0), check=False))
        i1_parts.append(ModuleMap(X.module(n), lay.module(n),
                                  Matrix(ring, total, gx, inj1), check=False))
        r_parts.append(ModuleMap(lay.module(n), X.module(n),
                                 Matrix(ring, gx, total, proj), check=False))
    i0 = ChainMap(X, cyl, i0_parts)
    i1 = ChainMap(X, cyl, i1_parts)
    r = ChainMap(cyl, X, r_parts)
    return lay, i0, i1, r
