"""Denormalization, normalization, degreewise tensor, EZ/AW identities."""

import random
from math import comb

import pytest

from chaincert.chains.build import disk, interval, sphere, unit_complex
from chaincert.chains.complexes import ChainMap, chain_map_equal
from chaincert.chains.tensor import TensorLayout
from chaincert.exact.matrix import Matrix
from chaincert.exact.modules import map_equal, ModuleMap
from chaincert.exact.rings import ZZ, Zmod
from chaincert.models.generators import random_complex
from chaincert.simplicial.levels import (GammaLevels, normalized_projector,
                                         verify_simplicial_identities)
from chaincert.simplicial.module import (SimplicialMap, constant_module,
                                         degreewise_tensor, end_inclusion,
                                         full_injection, gamma, gamma_map,
                                         interval_object, normalize,
                                         normalize_with_inclusions,
                                         tensor_normalized_map)
from chaincert.simplicial.ez_aw import aw, ez, find_ez_aw_homotopy
from chaincert.simplicial.surjections import shuffles, surjections


def test_surjection_counts():
    for n in range(5):
        assert len(surjections(n)) == 2 ** n
        for k in range(n + 1):
            count = sum(1 for eta in surjections(n) if eta[-1] == k)
            assert count == comb(n, k)


def test_gamma_constant_module():
    c = constant_module(ZZ)
    for n in range(4):
        assert c.level_rank(n) == 1


def test_gamma_sphere_level_ranks():
    A = gamma(sphere(ZZ, 1), cap=4)
    assert [A.level_rank(n) for n in range(5)] == [0, 1, 2, 3, 4]


def test_gamma_disk_level_ranks():
    A = gamma(disk(ZZ, 1), cap=4)
    assert [A.level_rank(n) for n in range(5)] == [1, 2, 3, 4, 5]


def test_simplicial_identities_on_gamma():
    for C in (disk(ZZ, 1), sphere(ZZ, 2), interval(ZZ)):
        verify_simplicial_identities(GammaLevels(C), 4)


def test_roundtrip_exact_on_examples():
    for C in (disk(ZZ, 1), sphere(ZZ, 2), interval(ZZ)):
        A = gamma(C)
        assert normalize(A) == C


def test_roundtrip_exact_on_random_complexes():
    rng = random.Random(99)
    for ring in (ZZ, Zmod(6)):
        for _ in range(5):
            C = random_complex(ring, rng, max_top=3, max_rank=3)
            A = gamma(C)
            assert normalize(A) == C


def test_kernel_normalization_agrees_with_quotient():
    rng = random.Random(5)
    for _ in range(3):
        C = random_complex(ZZ, rng, max_top=2, max_rank=3)
        A = gamma(C)
        K, incls = normalize_with_inclusions(A)
        Q = normalize(A)
        assert K.top >= Q.top or all(
            K.module(n).is_zero_module() for n in range(Q.top + 1, K.top + 1))
        for n in range(Q.top + 1):
            assert K.module(n).minimal_invariants() == \
                Q.module(n).minimal_invariants()
        # the inclusions really land in every positive-face kernel
        for n in range(1, K.top + 1):
            for i in range(1, n + 1):
                img = A.levels.face(n, i) @ incls[n].action
                assert (ModuleMap(K.module(n), A.levels.module(n - 1), img,
                                  check=False)).is_zero()


def test_projector_properties():
    C = disk(ZZ, 1)
    lev = GammaLevels(C)
    for n in range(1, 4):
        P = normalized_projector(lev, n)
        g = lev.module(n).generators
        assert P @ P == P
        # kills every degeneracy image
        for j in range(n):
            assert (P @ lev.degeneracy(n - 1, j)).is_zero()
        # restricts to the identity on the non-degenerate block
        inj = full_injection(lev, n)
        assert P @ inj == inj


def test_gamma_map_levels_commute_with_structure():
    C, D = disk(ZZ, 1), sphere(ZZ, 1)
    A, B = gamma(C, cap=3), gamma(D, cap=3)
    cms_map = ChainMap(C, D, [
        ModuleMap.zero_map(C.module(0), D.module(0)),
        ModuleMap(C.module(1), D.module(1), Matrix(ZZ, 1, 1, [[5]])),
    ])
    f = gamma_map(cms_map, A, B)
    for n in range(1, 3):
        for i in range(n + 1):
            lhs = f.level_matrix(n - 1) @ A.face(n, i)
            rhs = B.face(n, i) @ f.level_matrix(n)
            assert lhs == rhs
    for n in range(2):
        for j in range(n + 1):
            lhs = f.level_matrix(n + 1) @ A.degeneracy(n, j)
            rhs = B.degeneracy(n, j) @ f.level_matrix(n)
            assert lhs == rhs


def test_tensor_unit_law_is_literal():
    A = gamma(disk(ZZ, 1))
    T = degreewise_tensor(constant_module(ZZ), A)
    assert T.normalized == A.normalized


def test_tensor_sphere_sphere_ranks():
    S = gamma(sphere(ZZ, 1), cap=4)
    T = degreewise_tensor(S, S)
    assert T.level_rank(2) == 4
    ranks = [T.normalized.module(n).generators for n in range(T.top + 1)]
    assert ranks == [0, 1, 2]
    # rank transform: level ranks match binomial-weighted normalized ranks
    for n in range(4):
        expected = sum(comb(n, k) * T.normalized.module(k).generators
                       for k in range(n + 1))
        assert T.level_rank(n) == expected


def test_tensor_rank_transform_with_torsion():
    rng = random.Random(12)
    A = gamma(random_complex(Zmod(6), rng, max_top=1, max_rank=2))
    B = gamma(random_complex(Zmod(6), rng, max_top=1, max_rank=2))
    T = degreewise_tensor(A, B)
    for n in range(T.top + 2):
        lvl = T.level_module(n).minimal_invariants()
        pieces = []
        for k in range(min(n, T.top) + 1):
            pieces += [T.normalized.module(k)] * comb(n, k)
        rank = sum(p.minimal_invariants()[0] for p in pieces)
        factors = sorted(f for p in pieces for f in p.minimal_invariants()[1])
        assert lvl == (rank, tuple(factors))


def test_ez_aw_degree_zero_identity():
    A = gamma(disk(ZZ, 1))
    B = gamma(disk(ZZ, 1))
    T = degreewise_tensor(A, B)
    E, W = ez(A, B, T), aw(A, B, T)
    assert E.component(0).action.is_identity()
    assert W.component(0).action.is_identity()


def test_ez_bidegree_1_0_single_shuffle():
    assert len(shuffles(1, 0)) == 1
    sh = shuffles(1, 0)[0]
    assert sh.mu == (0,) and sh.nu == () and sh.sign == 1
    A = gamma(sphere(ZZ, 1), cap=3)
    B = constant_module(ZZ)
    T = degreewise_tensor(A, B)
    E = ez(A, B, T)
    # x (x) y -> x (x) s_0 y, a single unsigned block
    assert E.component(1).action == Matrix(ZZ, 1, 1, [[1]])


def test_aw_ez_is_identity():
    pairs = [(disk(ZZ, 1), disk(ZZ, 1)), (sphere(ZZ, 1), sphere(ZZ, 1)),
             (disk(ZZ, 1), sphere(ZZ, 1))]
    for CA, CB in pairs:
        A, B = gamma(CA), gamma(CB)
        T = degreewise_tensor(A, B)
        E, W = ez(A, B, T), aw(A, B, T)
        composite = W.compose(E)
        assert chain_map_equal(composite, ChainMap.identity(E.source))


def test_ez_aw_homotopy_witness():
    A = gamma(disk(ZZ, 1))
    B = gamma(sphere(ZZ, 1))
    T = degreewise_tensor(A, B)
    H = find_ez_aw_homotopy(A, B, T)  # constructor validates the relation
    assert H is not None


def test_ez_aw_constant_pair_needs_no_homotopy():
    c = constant_module(ZZ)
    T = degreewise_tensor(c, c)
    E, W = ez(c, c, T), aw(c, c, T)
    assert chain_map_equal(E.compose(W), ChainMap.identity(T.normalized))
    H = find_ez_aw_homotopy(c, c, T, E, W)
    for part in H.parts:
        assert part.action.is_zero()


def test_end_inclusions_and_ez_compatibility():
    A = gamma(disk(ZZ, 1))
    I_obj = interval_object(ZZ)
    T = degreewise_tensor(A, I_obj)
    i0 = end_inclusion(A, T, 0)
    i1 = end_inclusion(A, T, 1)
    # EZ composed with the chain-level end inclusion equals N(iota_end)
    from chaincert.chains.tensor import interval_cylinder

    lay, c0, c1, r = interval_cylinder(A.normalized, interval(ZZ))
    E = ez(A, I_obj, T)
    assert chain_map_equal(E.compose(c0), i0.normalized_map)
    assert chain_map_equal(E.compose(c1), i1.normalized_map)


def test_tensor_normalized_map_functorial():
    C, D = disk(ZZ, 1), sphere(ZZ, 1)
    A, B = gamma(C), gamma(D)
    f = gamma_map(ChainMap.identity(C), A, A)
    g = gamma_map(ChainMap.identity(D), B, B)
    T = degreewise_tensor(A, B)
    n_map = tensor_normalized_map(f, g, T, T)
    assert chain_map_equal(n_map, ChainMap.identity(T.normalized))
