"""Transferred classifiers and lifting solvers for simplicial modules.

Everything is decided on normalized complexes: a simplicial map is a
fibration / cofibration / weak equivalence exactly when its normalization
is one in the Hurewicz structure.  The homotopy lifting and extension
solvers follow the proof pipeline literally: normalize, lift against the
shuffle comparison (or its dual), and denormalize.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..chains.build import interval
from ..chains.complexes import (ChainComplex, ChainHomotopy, ChainMap,
                                LiftingProblem, chain_map_equal)
from ..chains.cones import pushout_complexes, pushout_induced_chain_map
from ..chains.homotopy import (chain_homotopic, is_chain_homotopy_equivalence,
                               nullhomotopy)
from ..chains.tensor import TensorLayout, interval_cylinder
from ..exact.matrix import Matrix
from ..exact.modules import ModuleMap
from ..models.classify import classify
from ..models.lifting import find_lift, solve_lifting
from ..models.pushout import pushout_product
from ..models.verdict import Verdict
from .cotensor import CotensorData, cotensor, ez_aw_dual_ops
from .ez_aw import aw, ez
from .module import (SimplicialMap, SimplicialModule, constant_module,
                     degreewise_tensor, end_inclusion, gamma, gamma_map,
                     interval_object, tensor_normalized_map)


def simplicial_classify(f: SimplicialMap) -> Verdict:
    """Classify through the normalization, Hurewicz flavor."""
    return classify(f.normalized_map, "h")


def simplicial_homotopic(f: SimplicialMap, g: SimplicialMap
                         ) -> tuple[ChainHomotopy, SimplicialMap] | None:
    """Decide on normalizations; transport to a cylinder map when homotopic.

    The transported simplicial homotopy A (x) interval -> B restricts to f
    at the e0 end and to g at the e1 end, which is re-verified exactly.
    """
    if f.source is not g.source and f.source.normalized != g.source.normalized:
        raise ValueError("homotopy endpoints mismatch")
    H = chain_homotopic(f.normalized_map, g.normalized_map)
    if H is None:
        return None
    A, B = f.source, f.target
    ring = A.ring
    NA, NB = A.normalized, B.normalized
    lay, c0, c1, _ = interval_cylinder(NA, interval(ring))
    # G(x (x) e0) = f(x), G(x (x) e1) = g(x), G(x (x) e) = (-1)^{|x|} H(x)
    parts = []
    for m in range(lay.top + 1):
        rows = NB.module(m).generators
        cols = lay.module(m).generators
        out = [[0] * cols for _ in range(rows)]
        for (i, j) in lay.pairs(m):
            off = lay.offset(m, i)
            gx = NA.module(i).generators
            if j == 0:
                fb = f.normalized_map.component(i).action
                gb = g.normalized_map.component(i).action
                for a in range(rows):
                    for b in range(gx):
                        out[a][off + 2 * b] = fb[a, b]
                        out[a][off + 2 * b + 1] = gb[a, b]
            else:
                hb = H.component(i).action
                sign = -1 if i % 2 else 1
                for a in range(rows):
                    for b in range(gx):
                        out[a][off + b] = sign * hb[a, b]
        parts.append(ModuleMap(lay.module(m), NB.module(m),
                               Matrix(ring, rows, cols, out), check=False))
    G = ChainMap(lay.complex(), NB, parts)
    T = degreewise_tensor(A, interval_object(ring))
    aw_map = aw(A, interval_object(ring), T)
    transported = SimplicialMap(T, B, G.compose(aw_map))
    i0 = end_inclusion(A, T, 0)
    i1 = end_inclusion(A, T, 1)
    assert chain_map_equal(transported.normalized_map.compose(i0.normalized_map),
                           f.normalized_map)
    assert chain_map_equal(transported.normalized_map.compose(i1.normalized_map),
                           g.normalized_map)
    return H, transported


@dataclass
class SimplicialLiftReport:
    lift: SimplicialMap | None
    obstruction_degree: int | None = None

    @property
    def found(self) -> bool:
        return self.lift is not None


def solve_hlp_simplicial(p: SimplicialMap, top: SimplicialMap,
                         bottom: SimplicialMap) -> SimplicialLiftReport:
    """Lift a homotopy along p: the square has left leg iota_0 : A -> A (x) I.

    Pipeline: normalize, lift the e0 end against N(p), then lift that
    against the shuffle comparison EZ (a trivial Hurewicz cofibration),
    and denormalize.  The returned map re-verifies against the original
    square.
    """
    A = top.source
    T = bottom.source          # A (x) interval
    E, B = p.source, p.target
    ring = A.ring
    I_obj = interval_object(ring)
    i0 = end_inclusion(A, T, 0)
    if not chain_map_equal(p.normalized_map.compose(top.normalized_map),
                           bottom.normalized_map.compose(i0.normalized_map)):
        raise ValueError("HLP square does not commute")
    obstruction = _first_nonsplit_degree(p)
    if obstruction is not None:
        return SimplicialLiftReport(None, obstruction)
    lay, c0, c1, _ = interval_cylinder(A.normalized, interval(ring))
    ez_map = ez(A, I_obj, T)
    assert chain_map_equal(ez_map.compose(c0), i0.normalized_map)
    aux = LiftingProblem(c0, p.normalized_map, top.normalized_map,
                         bottom.normalized_map.compose(ez_map))
    h = find_lift(aux)
    assert h is not None, "fibration failed the first pipeline lift"
    final = LiftingProblem(ez_map, p.normalized_map, h,
                           bottom.normalized_map)
    H = find_lift(final)
    assert H is not None, "shuffle comparison failed the second pipeline lift"
    lift = SimplicialMap(T, E, H)
    assert chain_map_equal(H.compose(i0.normalized_map), top.normalized_map)
    assert chain_map_equal(p.normalized_map.compose(H), bottom.normalized_map)
    return SimplicialLiftReport(lift)


def _first_nonsplit_degree(p: SimplicialMap) -> int | None:
    from ..exact.splitting import is_split_epi

    N = p.normalized_map
    for n in range(1, max(N.source.top, N.target.top) + 1):
        if is_split_epi(N.component(n)) is None:
            return n
    return None


@dataclass
class IntervalCotensor:
    """B^interval as a simplicial module with its two evaluations."""

    object: SimplicialModule
    data: CotensorData
    ev0: SimplicialMap
    ev1: SimplicialMap
    unit_iso: list[Matrix]  # cotensor-by-unit degree n -> N(B)_n


def interval_cotensor(B: SimplicialModule) -> IntervalCotensor:
    ring = B.ring
    I_obj = interval_object(ring)
    data = cotensor(I_obj, B, through=B.normalized.top + 1)
    P = SimplicialModule(data.complex,
                         _gamma_levels_of(data.complex), data.complex.top + 1)
    ev0 = _evaluation_map(data, B, P, end=0)
    ev1 = _evaluation_map(data, B, P, end=1)
    return IntervalCotensor(P, data, ev0, ev1, [])


def _gamma_levels_of(C: ChainComplex):
    from .levels import GammaLevels

    return GammaLevels(C)


def _evaluation_map(data: CotensorData, B: SimplicialModule,
                    P: SimplicialModule, end: int) -> SimplicialMap:
    """ev_end : B^I -> B by precomposing the vertex inclusion."""
    ring = B.ring
    I_obj = data.A
    NB = B.normalized
    comps = []
    vertex_chain = ChainMap(
        constant_module(ring).normalized, I_obj.normalized,
        [ModuleMap(constant_module(ring).normalized.module(0),
                   I_obj.normalized.module(0),
                   Matrix(ring, 2, 1, [[1 - end], [end]]), check=False)])
    vertex = SimplicialMap(constant_module(ring), I_obj, vertex_chain)
    for n in range(data.complex.top + 1):
        cot_mod = data.complex.module(n)
        unit_tensor = degreewise_tensor(constant_module(ring), data.disks[n])
        u = tensor_normalized_map(vertex, _id_sm(data.disks[n]),
                                  unit_tensor, data.tensors[n])
        cols = []
        for j in range(cot_mod.generators):
            F = data.spaces[n].chain_map(
                Matrix(ring, cot_mod.generators, 1,
                       [[1 if i == j else 0] for i in range(cot_mod.generators)]))
            G = F.compose(u)  # chain map N(c (x) Gamma D^n) = D^n -> N(B)
            cols.append(G.component(n).action)  # evaluate at the disk generator
        action = Matrix.zero(ring, NB.module(n).generators, 0)
        for c in cols:
            action = action.hstack(c)
        comps.append(ModuleMap(cot_mod, NB.module(n), action, check=False))
    return SimplicialMap(P, B, ChainMap(data.complex, NB, comps))


def _id_sm(A: SimplicialModule) -> SimplicialMap:
    return SimplicialMap(A, A, ChainMap.identity(A.normalized))


def solve_hep_simplicial(i: SimplicialMap, top: SimplicialMap,
                         bottom: SimplicialMap,
                         cot: IntervalCotensor) -> SimplicialLiftReport:
    """Extend a homotopy along i: the square's right leg is ev_0 : B^I -> B.

    Pipeline: normalize, push the top leg through EZ* (a trivial Hurewicz
    fibration), lift twice, denormalize; the result re-verifies.
    """
    A, X = i.source, i.target
    B = bottom.target
    if not chain_map_equal(
            cot.ev0.normalized_map.compose(top.normalized_map),
            bottom.normalized_map.compose(i.normalized_map)):
        raise ValueError("HEP square does not commute")
    obstruction = _first_nonretract_degree(i)
    if obstruction is not None:
        return SimplicialLiftReport(None, obstruction)
    dual = ez_aw_dual_ops(cot.data.A, B, through=cot.data.complex.top)
    ez_star = dual.ez_star
    # hom-side evaluation at e0 and the triangle ev0 = ev0_hom o EZ*
    ev0_hom = _hom_side_evaluation(dual.hom_side, B, end=0)
    assert chain_map_equal(ev0_hom.compose(ez_star),
                           cot.ev0.normalized_map)
    aux = LiftingProblem(i.normalized_map, ev0_hom,
                         ez_star.compose(top.normalized_map),
                         bottom.normalized_map)
    h = find_lift(aux)
    assert h is not None, "cofibration failed the first pipeline lift"
    final = LiftingProblem(i.normalized_map, ez_star, top.normalized_map, h)
    H = find_lift(final)
    assert H is not None, "dual shuffle comparison failed the second lift"
    lift = SimplicialMap(X, cot.object, H)
    assert chain_map_equal(H.compose(i.normalized_map), top.normalized_map)
    assert chain_map_equal(cot.ev0.normalized_map.compose(H),
                           bottom.normalized_map)
    return SimplicialLiftReport(lift)


def _first_nonretract_degree(i: SimplicialMap) -> int | None:
    from ..exact.splitting import is_split_mono

    N = i.normalized_map
    for n in range(max(N.source.top, N.target.top) + 1):
        if is_split_mono(N.component(n)) is None:
            return n
    return None


def _hom_side_evaluation(trunc, B: SimplicialModule, end: int) -> ChainMap:
    """ev_end : tau_{>=0} Hom(I, N(B)) -> N(B) on the enriching hom."""
    from ..chains.cones import _evaluation_window_matrix
    from ..chains.homcx import HomWindow, map_from_truncation

    ring = B.ring
    NB = B.normalized
    hw = HomWindow(interval(ring), NB)
    at = Matrix(ring, 2, 1, [[1 - end], [end]])
    comps = {n: ModuleMap(hw.module(n), NB.module(n),
                          _evaluation_window_matrix(hw, n, at), check=False)
             for n in range(0, max(hw.top, 0) + 1)}
    return map_from_truncation(trunc, NB, comps)


@dataclass
class SimplicialPushoutProduct:
    map: SimplicialMap
    verdict: Verdict
    chain_level_cofibration: bool      # N(i) [] N(k) is an h-cofibration
    chain_level_acyclic: bool | None   # ... and acyclic, when expected
    ez_legs_are_equivalences: bool | None
    acyclic: bool | None
    ok: bool


def pushout_product_simplicial(i: SimplicialMap, k: SimplicialMap,
                               *, expect_acyclic: bool = False
                               ) -> SimplicialPushoutProduct:
    """i [] k on the degreewise tensor, classified through normalization.

    When a leg is acyclic the report records the two-out-of-three route:
    the chain-level pushout-product of the normalizations is an acyclic
    cofibration and the shuffle comparison legs are equivalences, hence
    N(i [] k) is one too; the direct certificate is also produced.
    """
    if k.source.ring != i.source.ring:
        k = _change_ring_simplicial(k, i.source.ring)
    X, Y = i.source, i.target
    V, W = k.source, k.target
    xw = degreewise_tensor(X, W)
    yv = degreewise_tensor(Y, V)
    xv = degreewise_tensor(X, V)
    yw = degreewise_tensor(Y, W)
    leg_xw = tensor_normalized_map(_id_sm(X), k, xv, xw)
    leg_yv = tensor_normalized_map(i, _id_sm(V), xv, yv)
    P, inj_xw, inj_yv = pushout_complexes(leg_xw, leg_yv)
    u = tensor_normalized_map(i, _id_sm(W), xw, yw)
    v = tensor_normalized_map(_id_sm(Y), k, yv, yw)
    induced = pushout_induced_chain_map(P, u, v)
    source_obj = SimplicialModule(P, _gamma_levels_of(P), P.top + 1)
    product = SimplicialMap(source_obj, yw, induced)
    from ..models.classify import h_cofibration_bit, h_fibration_bit, \
        homotopy_equivalence_bit
    from ..models.verdict import unknown

    cof = h_cofibration_bit(induced)
    fib = h_fibration_bit(induced)
    we = (homotopy_equivalence_bit(induced) if expect_acyclic
          else unknown("weak equivalence not evaluated for this report"))
    verdict = Verdict("h", cof, fib, we)

    chain_pp = pushout_product(i.normalized_map, k.normalized_map)
    chain_cof = h_cofibration_bit(chain_pp.map).holds
    chain_acyclic = None
    ez_ok = None
    acyclic = None
    if expect_acyclic:
        chain_acyclic = is_chain_homotopy_equivalence(chain_pp.map) is not None
        ez_yw = ez(Y, W, yw)
        ez_corner = _pushout_of_ez_legs(chain_pp, i, k, xw, yv, xv, P,
                                        inj_xw, inj_yv)
        square_ok = chain_map_equal(induced.compose(ez_corner),
                                    ez_yw.compose(chain_pp.map))
        ez_ok = (square_ok
                 and is_chain_homotopy_equivalence(ez_yw) is not None
                 and is_chain_homotopy_equivalence(ez_corner) is not None)
        acyclic = we.holds
    ok = verdict.cofibration.holds and (acyclic is not False)
    return SimplicialPushoutProduct(product, verdict, chain_cof,
                                    chain_acyclic, ez_ok, acyclic, ok)


def _pushout_of_ez_legs(chain_pp, i, k, xw, yv, xv, P, inj_xw, inj_yv):
    """EZ u_EZ EZ between the chain corner and the simplicial corner."""
    X, Y = i.source, i.target
    V, W = k.source, k.target
    ez_xw = ez(X, W, xw)
    ez_yv = ez(Y, V, yv)
    return pushout_induced_chain_map(chain_pp.source,
                                     inj_xw.compose(ez_xw),
                                     inj_yv.compose(ez_yv))


def _change_ring_simplicial(k: SimplicialMap, ring) -> SimplicialMap:
    from ..chains.build import change_ring_map

    nm = change_ring_map(k.normalized_map, ring)
    return gamma_map(nm)
