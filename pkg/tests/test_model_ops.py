"""Lifting, pushout-products, HLP/HEP, the Yoneda oracle, factorizations."""

import random

from chaincert.chains.build import (brutal_truncation, concentrated, disk,
                                    interval, sphere, unit_complex, zero_complex)
from chaincert.chains.complexes import (ChainComplex, ChainMap, LiftingProblem,
                                        chain_map_equal)
from chaincert.chains.homotopy import is_chain_homotopy_equivalence
from chaincert.chains.tensor import interval_cylinder
from chaincert.exact.matrix import Matrix
from chaincert.exact.modules import ModuleMap, PresentedModule, map_equal
from chaincert.exact.rings import ZZ
from chaincert.exact.splitting import is_split_epi
from chaincert.models.classify import classify
from chaincert.models.factorize import factorize_h
from chaincert.models.hlp_hep import hep_check, hlp_check
from chaincert.models.lifting import chain_retraction, chain_section, solve_lifting
from chaincert.models.pushout import check_pushout_product_axiom, pushout_product
from chaincert.models.generators import (random_complex, random_map_for_agreement,
                                         random_split_epi, random_split_mono)
from chaincert.models.yoneda import p_epic_check, split_epi_via_yoneda


def from_zero(X):
    return ChainMap.zero(zero_complex(X.ring), X)


def to_zero(X):
    return ChainMap.zero(X, zero_complex(X.ring))


def test_lift_cylinder_end_vs_fibration():
    # i0 : A -> A (x) I is an acyclic h-cofibration; lift against a fibration
    rng = random.Random(3)
    A = random_complex(ZZ, rng, max_rank=2)
    lay, i0, i1, r = interval_cylinder(A, interval(ZZ))
    p = random_split_epi(ZZ, rng, max_rank=2)
    # square: top = arbitrary map A -> E, bottom = p o top o r
    from chaincert.models.generators import random_chain_map
    top = random_chain_map(A, p.source, rng, bound=1)
    bottom = p.compose(top).compose(r)
    problem = LiftingProblem(i0, p, top, bottom)
    outcome = solve_lifting(problem, "h", "left")
    assert outcome.found


def test_lift_cofibrant_object_vs_acyclic_fibration():
    X = disk(ZZ, 1)
    q = to_zero(X)  # acyclic h-fibration: X contractible
    v = classify(q, "h")
    assert v.fibration.holds and v.weak_equivalence.holds
    left = from_zero(sphere(ZZ, 1))
    problem = LiftingProblem(left, q,
                             ChainMap.zero(left.source, X),
                             ChainMap.zero(left.target, q.target))
    assert solve_lifting(problem, "h", "right").found


def test_lift_failure_reports_obstruction_degree():
    # no diagonal h with 2h = id: parity obstruction at degree 0
    U = unit_complex(ZZ)
    two = ChainMap(U, U, [ModuleMap(U.module(0), U.module(0),
                                    Matrix(ZZ, 1, 1, [[2]]))])
    problem = LiftingProblem(from_zero(U), two,
                             ChainMap.zero(zero_complex(ZZ), U),
                             ChainMap.identity(U))
    outcome = solve_lifting(problem, "h", "left", precheck=False)
    assert not outcome.found
    assert outcome.obstruction_degree == 0


def test_brutal_truncation_lifted_homotopy():
    """The lifted homotopy forces H~ = H and g~_0 = f~_0 + d H_0."""
    C = disk(ZZ, 1)
    quotient, q = brutal_truncation(C)
    A = sphere(ZZ, 0)
    # f = g = 0 : A -> C/C_0 with the nonzero homotopy H_0 = [1]
    lay, i0, i1, r = interval_cylinder(A, interval(ZZ))
    f_tilde = ChainMap.zero(A, C)
    H0 = Matrix(ZZ, 1, 1, [[1]])
    # homotopy as a map A (x) I -> C/C_0: e0, e1 -> 0; the middle -> H
    parts = []
    for n in range(lay.top + 1):
        rows = quotient.module(n).generators
        cols = lay.module(n).generators
        out = [[0] * cols for _ in range(rows)]
        if n == 1:
            # x (x) e with |x| = 0 carries H_0
            out[0][lay.address(1, 0, 0, 0)] = 1
        parts.append(ModuleMap(lay.module(n), quotient.module(n),
                               Matrix(ZZ, rows, cols, out), check=False))
    G = ChainMap(lay.complex(), quotient, parts)
    problem = LiftingProblem(i0, q, f_tilde, G)
    outcome = solve_lifting(problem, "h", "left")
    assert outcome.found
    lift = outcome.lift
    # H~_0 is the middle component of the lift; it must equal H_0 exactly
    h_tilde = lift.component(1).action.columns([lay.address(1, 0, 0, 0)])
    assert h_tilde == H0
    # g~_0 = lift o i1 at degree 0 must equal f~_0 + d(H_0) = 0 + [1]
    g_tilde0 = lift.compose(i1).component(0).action
    d1 = C.differential(1).action
    assert g_tilde0 == (f_tilde.component(0).action + d1 @ H0)


def test_pushout_product_of_unit_with_L_is_L():
    # i : 0 -> R[0], k : 0 -> L[0]  gives  i [] k = k
    L = concentrated(PresentedModule.cyclic(ZZ, 2), 0)
    i = from_zero(unit_complex(ZZ))
    k = from_zero(L)
    pp = pushout_product(i, k)
    assert pp.source.module(0).is_zero_module()
    assert pp.target.module(0).minimal_invariants() == (0, (2,))
    v_h = classify(pp.map, "h")
    v_q = classify(pp.map, "q")
    assert v_h.cofibration.holds
    assert not v_q.cofibration.holds


def test_pushout_product_disk_disk():
    i = from_zero(disk(ZZ, 1))
    report = check_pushout_product_axiom(i, i, "h", expect_acyclic=True)
    assert report.verdict.cofibration.holds
    assert report.acyclic
    pp = report.product
    assert pp.target.module(1).generators == 2  # disk (x) disk degree 1


def test_pushout_product_random_split_monos():
    rng = random.Random(17)
    for _ in range(3):
        i = random_split_mono(ZZ, rng, max_rank=2)
        k = random_split_mono(ZZ, rng, max_rank=2)
        report = check_pushout_product_axiom(i, k, "h")
        assert report.verdict.cofibration.holds


def test_hlp_examples():
    assert hlp_check(to_zero(disk(ZZ, 1)))
    C = disk(ZZ, 1)
    _, q = brutal_truncation(C)
    assert hlp_check(q)
    # Z --mod 2--> Z/2 concentrated in degree 1: epi but not split
    free = PresentedModule.free(ZZ, 1)
    E = ChainComplex(ZZ, [PresentedModule.zero(ZZ), free],
                     [ModuleMap.zero_map(free, PresentedModule.zero(ZZ))])
    B = concentrated(PresentedModule.cyclic(ZZ, 2), 1)
    p = ChainMap(E, B, [ModuleMap.zero_map(E.module(0), B.module(0)),
                        ModuleMap(free, B.module(1), Matrix(ZZ, 1, 1, [[1]]))])
    assert not hlp_check(p)


def test_hep_examples():
    assert hep_check(from_zero(disk(ZZ, 1)))
    # Z --x2--> Z in degree 0 is not split mono, so no HEP
    U = unit_complex(ZZ)
    two = ChainMap(U, U, [ModuleMap(U.module(0), U.module(0),
                                    Matrix(ZZ, 1, 1, [[2]]))])
    assert not hep_check(two)


def test_hlp_hep_match_classifier_bits():
    rng = random.Random(29)
    for _ in range(6):
        f = random_map_for_agreement(ZZ, rng, max_top=1, max_rank=2)
        v = classify(f, "h")
        assert hlp_check(f) == v.fibration.holds
        assert hep_check(f) == v.cofibration.holds


def test_p_epic_examples():
    free = PresentedModule.free(ZZ, 1)
    Z2 = PresentedModule.cyclic(ZZ, 2)
    quotient = ModuleMap(free, Z2, Matrix(ZZ, 1, 1, [[1]]))
    assert p_epic_check(free, quotient)       # R detects nothing
    assert not p_epic_check(Z2, quotient)     # id_{Z/2} does not lift


def test_yoneda_agrees_with_split_epi():
    rng = random.Random(41)
    for _ in range(5):
        f = random_map_for_agreement(ZZ, rng, max_top=1, max_rank=2)
        ora = split_epi_via_yoneda(f)
        for n, expected in ora.items():
            assert (is_split_epi(f.component(n)) is not None) == expected


def test_factorize_h_identity():
    U = unit_complex(ZZ)
    rep = factorize_h(ChainMap.identity(U))
    assert rep.cylinder.composes_to(ChainMap.identity(U))
    assert rep.cylinder.first_verdict.cofibration.holds
    assert rep.cylinder.second_verdict.fibration.holds
    assert rep.cylinder.second_verdict.weak_equivalence.holds
    assert rep.cocylinder.first_verdict.cofibration.holds
    assert rep.cocylinder.first_verdict.weak_equivalence.holds
    assert rep.cocylinder.second_verdict.fibration.holds


def test_factorize_h_sphere_to_zero():
    f = to_zero(sphere(ZZ, 1))
    rep = factorize_h(f)
    assert rep.cylinder.composes_to(f)
    assert rep.cocylinder.composes_to(f)
    assert rep.cylinder.first_verdict.cofibration.holds
    assert rep.cocylinder.second_verdict.fibration.holds


def test_chain_section_retraction_helpers():
    U = unit_complex(ZZ)
    cylf = factorize_h(ChainMap.identity(U))
    assert chain_section(cylf.cylinder.second) is not None
    assert chain_retraction(cylf.cocylinder.first) is not None
