"""Finitely presented modules over Z and Z/m, and their morphisms.

A module is the cokernel of its relations matrix (generators x relations);
a morphism is a matrix on generators that carries relations into relations,
which is verified at construction time.  Kernels, cokernels, sums, tensor
and hom are all computed as new presentations together with the canonical
structure maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .matrix import Matrix
from .rings import RingSpec
from .snf import kernel_matrix, snf, solve


class PresentedModule:
    __slots__ = ("ring", "generators", "relations")

    def __init__(self, ring: RingSpec, generators: int, relations: Matrix | None = None):
        if relations is None:
            relations = Matrix.zero(ring, generators, 0)
        if relations.ring != ring:
            raise ValueError("relations ring mismatch")
        if relations.rows != generators:
            raise ValueError(f"relations must have {generators} rows, "
                             f"got {relations.rows}")
        self.ring = ring
        self.generators = generators
        self.relations = relations

    # -- constructors -------------------------------------------------

    @staticmethod
    def free(ring: RingSpec, n: int) -> "PresentedModule":
        return PresentedModule(ring, n)

    @staticmethod
    def zero(ring: RingSpec) -> "PresentedModule":
        return PresentedModule(ring, 0)

    @staticmethod
    def cyclic(ring: RingSpec, d: int) -> "PresentedModule":
        """The quotient R/(d)."""
        return PresentedModule(ring, 1, Matrix(ring, 1, 1, [[d]]))

    # -- structure ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, PresentedModule) and self.ring == other.ring
                and self.generators == other.generators
                and self.relations == other.relations)

    def __hash__(self) -> int:
        return hash((self.ring, self.generators, self.relations))

    def __repr__(self) -> str:
        return (f"PresentedModule({self.ring}, gens={self.generators}, "
                f"rels={self.relations.to_lists()})")

    def minimal_invariants(self) -> tuple[int, tuple[int, ...]]:
        """(free rank, nontrivial invariant factors) - an isomorphism invariant."""
        diag = snf(self.relations).diagonal
        nonzero = [d for d in diag if d != 0]
        rank = self.generators - len(nonzero)
        factors = tuple(d for d in nonzero if not self.ring.is_unit(d))
        return rank, factors

    def is_zero_module(self) -> bool:
        rank, factors = self.minimal_invariants()
        return rank == 0 and not factors

    def is_isomorphic(self, other: "PresentedModule") -> bool:
        return (self.ring == other.ring
                and self.minimal_invariants() == other.minimal_invariants())

    def minimal_presentation(self) -> "PresentedModule":
        rank, factors = self.minimal_invariants()
        n = rank + len(factors)
        rel = Matrix.diagonal(self.ring, n, len(factors), list(factors))
        return PresentedModule(self.ring, n, rel)

    def element_is_zero(self, column: Matrix) -> bool:
        """True iff the generator-coefficient column lies in the relations."""
        return solve(self.relations, column) is not None

    def to_json(self) -> dict:
        return {"generators": self.generators, "relations": self.relations.to_json()}


class ModuleMap:
    __slots__ = ("source", "target", "action")

    def __init__(self, source: PresentedModule, target: PresentedModule,
                 action: Matrix, *, check: bool = True):
        if source.ring != target.ring:
            raise ValueError("module ring mismatch")
        if action.rows != target.generators or action.cols != source.generators:
            raise ValueError(f"action must be {target.generators}x"
                             f"{source.generators}, got {action.rows}x{action.cols}")
        if check and source.relations.cols:
            image_of_relations = action @ source.relations
            if solve(target.relations, image_of_relations) is None:
                raise ValueError("map does not carry relations into relations")
        self.source = source
        self.target = target
        self.action = action

    # -- constructors -------------------------------------------------

    @staticmethod
    def identity(module: PresentedModule) -> "ModuleMap":
        return ModuleMap(module, module,
                         Matrix.identity(module.ring, module.generators), check=False)

    @staticmethod
    def zero_map(source: PresentedModule, target: PresentedModule) -> "ModuleMap":
        return ModuleMap(source, target,
                         Matrix.zero(source.ring, target.generators, source.generators),
                         check=False)

    # -- algebra ------------------------------------------------------

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self o other (apply other first)."""
        if other.target is not self.source and other.target != self.source:
            raise ValueError("composition endpoint mismatch")
        return ModuleMap(other.source, self.target, self.action @ other.action,
                         check=False)

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        self._same_endpoints(other)
        return ModuleMap(self.source, self.target, self.action + other.action,
                         check=False)

    def __sub__(self, other: "ModuleMap") -> "ModuleMap":
        self._same_endpoints(other)
        return ModuleMap(self.source, self.target, self.action - other.action,
                         check=False)

    def __neg__(self) -> "ModuleMap":
        return ModuleMap(self.source, self.target, -self.action, check=False)

    def _same_endpoints(self, other: "ModuleMap") -> None:
        if self.source != other.source or self.target != other.target:
            raise ValueError("maps do not share endpoints")

    def is_zero(self) -> bool:
        return solve(self.target.relations, self.action) is not None

    def __repr__(self) -> str:
        return f"ModuleMap({self.action.to_lists()})"


def map_equal(f: ModuleMap, g: ModuleMap) -> bool:
    """Equality in Hom: f - g factors through the target relations."""
    f._same_endpoints(g)
    return (f - g).is_zero()


# -- submodules, kernels, cokernels -----------------------------------


def present_submodule(ambient: PresentedModule, gens: Matrix
                      ) -> tuple[PresentedModule, ModuleMap]:
    """Present the submodule of `ambient` generated by the columns of `gens`.

    Returns the module together with its inclusion.
    """
    ring = ambient.ring
    s = gens.cols
    combined = gens.hstack(ambient.relations)
    K = kernel_matrix(combined)
    relations = K.submatrix(range(s), range(K.cols))
    relations = _drop_zero_columns(relations)
    sub = PresentedModule(ring, s, relations)
    incl = ModuleMap(sub, ambient, gens, check=False)
    return sub, incl


def _drop_zero_columns(M: Matrix) -> Matrix:
    keep = [j for j in range(M.cols) if any(M[i, j] != 0 for i in range(M.rows))]
    return M.columns(keep)


def kernel(f: ModuleMap) -> tuple[PresentedModule, ModuleMap]:
    """Kernel submodule with its inclusion into the source."""
    ring = f.source.ring
    system = f.action.hstack(-f.target.relations)
    K = kernel_matrix(system)
    gens = K.submatrix(range(f.source.generators), range(K.cols))
    gens = _drop_zero_columns(gens)
    return present_submodule(f.source, gens)


def cokernel(f: ModuleMap) -> tuple[PresentedModule, ModuleMap]:
    """Cokernel with the canonical projection from the target."""
    relations = f.target.relations.hstack(f.action)
    coker = PresentedModule(f.source.ring, f.target.generators,
                            _drop_zero_columns(relations))
    proj = ModuleMap(f.target, coker,
                     Matrix.identity(f.source.ring, f.target.generators), check=False)
    return coker, proj


def factor_through(incl: ModuleMap, u: ModuleMap) -> ModuleMap | None:
    """Find w with incl o w = u (e.g. factor a map through a submodule)."""
    from .equations import MapVariable, MatrixRelation, solve_map_relations

    if incl.target != u.target:
        raise ValueError("maps must share the ambient target")
    ring = incl.source.ring
    w = MapVariable("w", u.source, incl.source)
    rel = MatrixRelation(
        terms=[(1, incl.action, "w", Matrix.identity(ring, u.source.generators))],
        rhs=u.action,
        mod=incl.target.relations,
    )
    sol = solve_map_relations(ring, [w], [rel])
    if sol is None:
        return None
    return ModuleMap(u.source, incl.source, sol["w"])


# -- sums, tensor, hom -------------------------------------------------


def direct_sum(modules: Sequence[PresentedModule]
               ) -> tuple[PresentedModule, list[ModuleMap], list[ModuleMap]]:
    """Direct sum with injections and projections."""
    if not modules:
        raise ValueError("empty direct sum: pass the zero module explicitly")
    ring = modules[0].ring
    if any(m.ring != ring for m in modules):
        raise ValueError("ring mismatch")
    total = sum(m.generators for m in modules)
    rel = Matrix.block_diagonal(ring, [m.relations for m in modules])
    out = PresentedModule(ring, total, rel)
    injections, projections = [], []
    offset = 0
    for m in modules:
        inj = Matrix.zero(ring, total, m.generators).to_lists()
        proj = Matrix.zero(ring, m.generators, total).to_lists()
        for i in range(m.generators):
            inj[offset + i][i] = 1
            proj[i][offset + i] = 1
        injections.append(ModuleMap(m, out, Matrix(ring, total, m.generators, inj),
                                    check=False))
        projections.append(ModuleMap(out, m, Matrix(ring, m.generators, total, proj),
                                     check=False))
        offset += m.generators
    return out, injections, projections


def tensor_module(M: PresentedModule, N: PresentedModule) -> PresentedModule:
    """M (x) N: generator pairs, relations from each factor."""
    if M.ring != N.ring:
        raise ValueError("ring mismatch")
    ring = M.ring
    gens = M.generators * N.generators
    rel_left = M.relations.kron(Matrix.identity(ring, N.generators))
    rel_right = Matrix.identity(ring, M.generators).kron(N.relations)
    return PresentedModule(ring, gens, _drop_zero_columns(rel_left.hstack(rel_right)))


def tensor_map(f: ModuleMap, g: ModuleMap, *, source: PresentedModule | None = None,
               target: PresentedModule | None = None) -> ModuleMap:
    if source is None:
        source = tensor_module(f.source, g.source)
    if target is None:
        target = tensor_module(f.target, g.target)
    return ModuleMap(source, target, f.action.kron(g.action), check=False)


class HomSpace:
    """Hom_R(M, N) as a presented module with explicit generator matrices.

    ``module`` has one generator per column of ``gens``; each generator is a
    well-defined map M -> N encoded by its action matrix.
    """

    __slots__ = ("source", "target", "module", "gens", "_gen_matrix", "_zero_matrix")

    def __init__(self, source: PresentedModule, target: PresentedModule):
        ring = source.ring
        if target.ring != ring:
            raise ValueError("ring mismatch")
        gS, gT = source.generators, target.generators
        rS, rT = source.relations.cols, target.relations.cols
        # well-definedness: phi @ relS = relT @ Y for some Y, flattened
        lhs = source.relations.transpose().kron(Matrix.identity(ring, gT))
        rhs = Matrix.identity(ring, rS).kron(target.relations)
        system = lhs.hstack(-rhs) if rS else Matrix.zero(ring, 0, gT * gS + rS * rT)
        K = kernel_matrix(system)
        phi_part = K.submatrix(range(gT * gS), range(K.cols))
        phi_part = _drop_zero_columns(phi_part)
        # maps that are zero in Hom: phi = relT @ Z columnwise
        zero_maps = Matrix.identity(ring, gS).kron(target.relations)
        relations = Matrix.zero(ring, phi_part.cols, 0)
        if phi_part.cols:
            Krel = kernel_matrix(phi_part.hstack(-zero_maps))
            relations = _drop_zero_columns(
                Krel.submatrix(range(phi_part.cols), range(Krel.cols)))
        self.source = source
        self.target = target
        self.module = PresentedModule(ring, phi_part.cols, relations)
        self._gen_matrix = phi_part
        self._zero_matrix = zero_maps
        self.gens = [Matrix.unvec(ring, phi_part.column_at(j), gT, gS)
                     for j in range(phi_part.cols)]

    def coords(self, action: Matrix) -> Matrix:
        """Coefficient column of a hom element in the chosen generators."""
        v = action.vec()
        sol = solve(self._gen_matrix.hstack(self._zero_matrix), v)
        if sol is None:
            raise ValueError("matrix is not a well-defined hom element")
        return sol.submatrix(range(self._gen_matrix.cols), [0])

    def element(self, coords: Matrix) -> Matrix:
        ring = self.source.ring
        v = self._gen_matrix @ coords
        return Matrix.unvec(ring, v, self.target.generators, self.source.generators)

    def postcompose(self, h: ModuleMap, target_space: "HomSpace") -> ModuleMap:
        """Induced map Hom(M, N) -> Hom(M, N') sending phi to h o phi."""
        cols = [target_space.coords(h.action @ g) for g in self.gens]
        return _map_from_columns(self.module, target_space.module, cols)

    def precompose(self, h: ModuleMap, target_space: "HomSpace") -> ModuleMap:
        """Induced map Hom(M, N) -> Hom(M', N) sending phi to phi o h."""
        cols = [target_space.coords(g @ h.action) for g in self.gens]
        return _map_from_columns(self.module, target_space.module, cols)


def _map_from_columns(source: PresentedModule, target: PresentedModule,
                      cols: list[Matrix]) -> ModuleMap:
    ring = source.ring
    action = Matrix.zero(ring, target.generators, 0)
    for c in cols:
        action = action.hstack(c)
    return ModuleMap(source, target, action)


def hom_module(M: PresentedModule, N: PresentedModule) -> PresentedModule:
    return HomSpace(M, N).module


# -- pushouts and pullbacks of module maps ------------------------------


def pushout_modules(f: ModuleMap, g: ModuleMap
                    ) -> tuple[PresentedModule, ModuleMap, ModuleMap]:
    """Pushout of B <-f- A -g-> C: cokernel of (f, -g) into B + C."""
    if f.source != g.source:
        raise ValueError("pushout legs must share their source")
    ring = f.source.ring
    total, (injB, injC), _ = _sum2(f.target, g.target)
    diff = ModuleMap(f.source, total,
                     f.action.vstack(-g.action), check=False)
    P, proj = cokernel(diff)
    return P, proj.compose(injB), proj.compose(injC)


def pushout_induced_map(P: PresentedModule, u: ModuleMap, v: ModuleMap
                        ) -> ModuleMap:
    """Map out of a pushout presented on the generators of B + C."""
    if u.target != v.target:
        raise ValueError("cone legs must share their target")
    return ModuleMap(P, u.target, u.action.hstack(v.action))


def pullback_modules(p: ModuleMap, q: ModuleMap
                     ) -> tuple[PresentedModule, ModuleMap, ModuleMap]:
    """Pullback of E -p-> B <-q- X: kernel of (p, -q) out of E + X."""
    if p.target != q.target:
        raise ValueError("pullback legs must share their target")
    total, _, (projE, projX) = _sum2(p.source, q.source)
    diff = ModuleMap(total, p.target,
                     p.action.hstack(-q.action), check=False)
    P, incl = kernel(diff)
    return P, projE.compose(incl), projX.compose(incl)


def _sum2(A: PresentedModule, B: PresentedModule):
    out, injs, projs = direct_sum([A, B])
    return out, injs, projs
