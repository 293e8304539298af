"""Lifting problems and chain-level sections/retractions.

The diagonal of a lifting square is one unknown chain map; its square
conditions, the chain condition and well-definedness all flatten into a
single linear system over the base ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..chains.complexes import ChainComplex, ChainMap, LiftingProblem, \
    chain_map_equal
from ..exact.equations import MapVariable, MatrixRelation, solve_map_relations
from ..exact.matrix import Matrix
from ..exact.modules import ModuleMap


def _unknown_chain_map(X: ChainComplex, Y: ChainComplex, prefix: str, top: int
                       ) -> tuple[list[MapVariable], list[MatrixRelation]]:
    """Variables h_0..h_top with chain-map and well-definedness relations."""
    ring = X.ring
    variables = [MapVariable(f"{prefix}{n}", X.module(n), Y.module(n))
                 for n in range(top + 1)]
    relations: list[MatrixRelation] = []
    for n in range(1, top + 1):
        relations.append(MatrixRelation(
            terms=[(1, Matrix.identity(ring, Y.module(n - 1).generators),
                    f"{prefix}{n - 1}", X.differential(n).action),
                   (-1, Y.differential(n).action, f"{prefix}{n}",
                    Matrix.identity(ring, X.module(n).generators))],
            rhs=Matrix.zero(ring, Y.module(n - 1).generators,
                            X.module(n).generators),
            mod=Y.module(n - 1).relations,
        ))
    for v in variables:
        relations.append(MatrixRelation(
            terms=[(1, Matrix.identity(ring, v.target.generators), v.name,
                    v.source.relations)],
            rhs=Matrix.zero(ring, v.target.generators, v.source.relations.cols),
            mod=v.target.relations,
        ))
    return variables, relations


def _composition_relations(ring, prefix: str, top: int, *, pre: ChainMap | None,
                           post: ChainMap | None, equals: ChainMap
                           ) -> list[MatrixRelation]:
    """Relations (post o h o pre) = equals, degreewise."""
    out = []
    for n in range(top + 1):
        tgt = equals.component(n).target
        L = (post.component(n).action if post is not None
             else Matrix.identity(ring, tgt.generators))
        if pre is not None:
            src_gens = pre.component(n).source.generators
            R = pre.component(n).action
        else:
            src_gens = equals.component(n).source.generators
            R = Matrix.identity(ring, src_gens)
        out.append(MatrixRelation(
            terms=[(1, L, f"{prefix}{n}", R)],
            rhs=equals.component(n).action,
            mod=tgt.relations,
        ))
    return out


def find_lift(problem: LiftingProblem) -> ChainMap | None:
    """The diagonal h with h o left = top and right o h = bottom, if any."""
    X = problem.left.target
    E = problem.right.source
    ring = X.ring
    top_deg = max(X.top, E.top, problem.left.source.top,
                  problem.right.target.top)
    variables, relations = _unknown_chain_map(X, E, "h", top_deg)
    relations += _composition_relations(ring, "h", top_deg,
                                        pre=problem.left, post=None,
                                        equals=problem.top)
    relations += _composition_relations(ring, "h", top_deg,
                                        pre=None, post=problem.right,
                                        equals=problem.bottom)
    sol = solve_map_relations(ring, variables, relations)
    if sol is None:
        return None
    comps = [ModuleMap(X.module(n), E.module(n), sol[f"h{n}"], check=False)
             for n in range(top_deg + 1)]
    lift = ChainMap(X, E, comps)
    assert chain_map_equal(lift.compose(problem.left), problem.top)
    assert chain_map_equal(problem.right.compose(lift), problem.bottom)
    return lift


@dataclass
class LiftOutcome:
    lift: ChainMap | None
    obstruction_degree: int | None = None
    prechecks: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.lift is not None


def solve_lifting(problem: LiftingProblem, flavor: str = "h",
                  acyclic_leg: str = "left", *, precheck: bool = True
                  ) -> LiftOutcome:
    """Solve a model-structure lifting problem.

    The legs are classified first (cofibration on the left, fibration on
    the right, the designated leg also acyclic); failed prechecks are
    reported but the solve is still attempted.  When no lift exists the
    smallest degree whose truncated subsystem is inconsistent is reported.
    """
    from .classify import classify

    prechecks: dict = {}
    if precheck:
        left_v = classify(problem.left, flavor)
        right_v = classify(problem.right, flavor)
        prechecks = {
            "left_cofibration": left_v.cofibration.status,
            "right_fibration": right_v.fibration.status,
            "acyclic_leg": acyclic_leg,
            "acyclic": (left_v if acyclic_leg == "left"
                        else right_v).weak_equivalence.status,
        }
    lift = find_lift(problem)
    if lift is not None:
        return LiftOutcome(lift, prechecks=prechecks)
    return LiftOutcome(None, obstruction_degree=_obstruction_degree(problem),
                       prechecks=prechecks)


def _obstruction_degree(problem: LiftingProblem) -> int:
    """Smallest k whose degree-<=k subsystem already has no solution."""
    X = problem.left.target
    E = problem.right.source
    ring = X.ring
    top_deg = max(X.top, E.top, problem.left.source.top,
                  problem.right.target.top)
    for k in range(top_deg + 1):
        variables, relations = _unknown_chain_map(X, E, "h", k)
        relations += _composition_relations(ring, "h", k, pre=problem.left,
                                            post=None, equals=problem.top)
        relations += _composition_relations(ring, "h", k, pre=None,
                                            post=problem.right,
                                            equals=problem.bottom)
        if solve_map_relations(ring, variables, relations) is None:
            return k
    return top_deg


def chain_section(q: ChainMap) -> ChainMap | None:
    """A chain map s with q o s = id on the target of q."""
    B, A = q.target, q.source
    ring = B.ring
    top_deg = max(A.top, B.top)
    variables, relations = _unknown_chain_map(B, A, "s", top_deg)
    relations += _composition_relations(ring, "s", top_deg, pre=None, post=q,
                                        equals=ChainMap.identity(B))
    sol = solve_map_relations(ring, variables, relations)
    if sol is None:
        return None
    comps = [ModuleMap(B.module(n), A.module(n), sol[f"s{n}"], check=False)
             for n in range(top_deg + 1)]
    section = ChainMap(B, A, comps)
    assert chain_map_equal(q.compose(section), ChainMap.identity(B))
    return section


def chain_retraction(j: ChainMap) -> ChainMap | None:
    """A chain map r with r o j = id on the source of j."""
    A, X = j.source, j.target
    ring = A.ring
    top_deg = max(A.top, X.top)
    variables, relations = _unknown_chain_map(X, A, "r", top_deg)
    relations += _composition_relations(ring, "r", top_deg, pre=j, post=None,
                                        equals=ChainMap.identity(A))
    sol = solve_map_relations(ring, variables, relations)
    if sol is None:
        return None
    comps = [ModuleMap(X.module(n), A.module(n), sol[f"r{n}"], check=False)
             for n in range(top_deg + 1)]
    retraction = ChainMap(X, A, comps)
    assert chain_map_equal(retraction.compose(j), ChainMap.identity(A))
    return retraction
