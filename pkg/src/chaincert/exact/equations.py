"""One flattened linear system for every "solve for an unknown map" question.

Sections, retractions, homotopies, contractions and lifts all reduce to
relations of the form

    sum_k  c_k * L_k @ X_{v_k} @ R_k  =  rhs   (modulo columns of `mod`)

in several unknown matrices X_v at once.  Each relation is vectorized
column-major (vec(L X R) = (R^T kron L) vec X), the modulo part gets its
own slack unknown, and the whole block system goes to the exact solver.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import Matrix
from .rings import RingSpec
from .snf import solve


@dataclass(frozen=True)
class MapVariable:
    """Unknown map between two presented modules (shape target x source)."""

    name: str
    source: object  # PresentedModule
    target: object  # PresentedModule

    @property
    def rows(self) -> int:
        return self.target.generators

    @property
    def cols(self) -> int:
        return self.source.generators


@dataclass
class MatrixRelation:
    """sum of (coeff, L, varname, R) terms = rhs, modulo colspan(mod)."""

    terms: list[tuple[int, Matrix, str, Matrix]]
    rhs: Matrix
    mod: Matrix | None = None


def solve_map_relations(ring: RingSpec, variables: list[MapVariable],
                        relations: list[MatrixRelation],
                        ) -> dict[str, Matrix] | None:
    """Solve all relations simultaneously; None when inconsistent."""
    var_shape = {v.name: (v.rows, v.cols) for v in variables}
    var_offset: dict[str, int] = {}
    width = 0
    for v in variables:
        var_offset[v.name] = width
        width += v.rows * v.cols
    slack_offset: list[int] = []
    for rel in relations:
        slack_offset.append(width)
        if rel.mod is not None and rel.mod.cols:
            width += rel.mod.cols * rel.rhs.cols

    height = sum(rel.rhs.rows * rel.rhs.cols for rel in relations)
    rows: list[list[int]] = [[0] * width for _ in range(height)]
    rhs_col: list[list[int]] = [[0] for _ in range(height)]

    row0 = 0
    for ridx, rel in enumerate(relations):
        p, q = rel.rhs.rows, rel.rhs.cols
        block_h = p * q
        for coeff, L, name, R in rel.terms:
            vr, vc = var_shape[name]
            if L.cols != vr or R.rows != vc:
                raise ValueError(f"term shapes do not match variable {name}")
            if L.rows != p or R.cols != q:
                raise ValueError("term result shape does not match rhs")
            blk = R.transpose().kron(L)
            off = var_offset[name]
            for i in range(block_h):
                trow = rows[row0 + i]
                brow = blk.data[i]
                for j in range(vr * vc):
                    if brow[j]:
                        trow[off + j] += coeff * brow[j]
        if rel.mod is not None and rel.mod.cols:
            if rel.mod.rows != p:
                raise ValueError("mod matrix has wrong height")
            blk = Matrix.identity(ring, q).kron(rel.mod)
            off = slack_offset[ridx]
            for i in range(block_h):
                trow = rows[row0 + i]
                brow = blk.data[i]
                for j in range(blk.cols):
                    if brow[j]:
                        trow[off + j] -= brow[j]
        v = rel.rhs.vec()
        for i in range(block_h):
            rhs_col[row0 + i][0] = v[i, 0]
        row0 += block_h

    system = Matrix(ring, height, width, rows)
    target = Matrix(ring, height, 1, rhs_col)
    sol = solve(system, target)
    if sol is None:
        return None
    out: dict[str, Matrix] = {}
    for v in variables:
        off = var_offset[v.name]
        vec = sol.submatrix(range(off, off + v.rows * v.cols), [0])
        out[v.name] = Matrix.unvec(ring, vec, v.rows, v.cols)
    return out
