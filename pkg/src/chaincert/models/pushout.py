"""Pushout-products and the pushout-product axiom checks."""

from __future__ import annotations

from dataclasses import dataclass

from ..chains.build import change_ring, change_ring_map
from ..chains.complexes import ChainComplex, ChainMap
from ..chains.cones import pushout_complexes, pushout_induced_chain_map
from ..chains.homotopy import is_chain_homotopy_equivalence, quasi_iso
from ..chains.tensor import TensorLayout, tensor_chain_maps
from .verdict import Verdict

pushout = pushout_complexes


@dataclass
class PushoutProduct:
    """i [] k : (X x W) u_{X x V} (Y x V)  ->  Y x W, with its corners."""

    map: ChainMap
    source: ChainComplex
    target: ChainComplex
    inj_xw: ChainMap
    inj_yv: ChainMap
    corner_xw: TensorLayout
    corner_yv: TensorLayout
    corner_xv: TensorLayout
    corner_yw: TensorLayout


def pushout_product(i: ChainMap, k: ChainMap) -> PushoutProduct:
    """Compute i [] k; k may live over Z when i lives over Z/m."""
    if k.source.ring != i.source.ring:
        # the enriched case: coerce the Z-side complex into the module ring
        k = change_ring_map(k, i.source.ring)
    X, Y = i.source, i.target
    V, W = k.source, k.target
    xw = TensorLayout(X, W)
    yv = TensorLayout(Y, V)
    xv = TensorLayout(X, V)
    yw = TensorLayout(Y, W)
    id_x = ChainMap.identity(X)
    id_y = ChainMap.identity(Y)
    id_v = ChainMap.identity(V)
    id_w = ChainMap.identity(W)
    leg_xw = tensor_chain_maps(id_x, k, xv, xw)   # X x V -> X x W
    leg_yv = tensor_chain_maps(i, id_v, xv, yv)   # X x V -> Y x V
    P, inj_xw, inj_yv = pushout_complexes(leg_xw, leg_yv)
    u = tensor_chain_maps(i, id_w, xw, yw)        # X x W -> Y x W
    v = tensor_chain_maps(id_y, k, yv, yw)        # Y x V -> Y x W
    induced = pushout_induced_chain_map(P, u, v)
    return PushoutProduct(induced, P, yw.complex(), inj_xw, inj_yv,
                          xw, yv, xv, yw)


@dataclass
class PushoutProductReport:
    product: PushoutProduct
    verdict: Verdict
    acyclicity_expected: bool
    acyclic: bool | None   # None when not expected/checked
    ok: bool


def check_pushout_product_axiom(i: ChainMap, k: ChainMap, flavor: str = "h",
                                *, expect_acyclic: bool = False
                                ) -> PushoutProductReport:
    """Classify i [] k and, when a leg is acyclic, certify acyclicity.

    The cofibration and fibration bits are always evaluated; the expensive
    weak-equivalence bit is evaluated only when acyclicity is expected and
    reported as unevaluated otherwise.  For the h flavor acyclicity means a
    chain homotopy equivalence with a verified contraction witness; for q
    and m it means a quasi-isomorphism.
    """
    from .classify import (_degree_range, h_cofibration_bit, h_fibration_bit,
                           homotopy_equivalence_bit, q_cofibration_bit,
                           quasi_iso_bit, split_epi_bit, surjectivity_bit)
    from .verdict import unknown

    pp = pushout_product(i, k)
    f = pp.map
    positive = [n for n in _degree_range(f) if n >= 1]
    if flavor == "h":
        cof, fib = h_cofibration_bit(f), h_fibration_bit(f)
    elif flavor == "q":
        cof, fib = q_cofibration_bit(f), surjectivity_bit(f, positive)
    else:
        cof = unknown("m-cofibrations need a factorization witness")
        fib = split_epi_bit(f, positive)
    acyclic: bool | None = None
    if expect_acyclic:
        we = (homotopy_equivalence_bit(f) if flavor == "h"
              else quasi_iso_bit(f))
        acyclic = we.holds
    else:
        we = unknown("weak equivalence not evaluated for this report")
    verdict = Verdict(flavor, cof, fib, we)
    ok = verdict.cofibration.holds and (acyclic is not False)
    return PushoutProductReport(pp, verdict, expect_acyclic, acyclic, ok)
