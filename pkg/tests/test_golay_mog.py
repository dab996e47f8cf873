from __future__ import annotations

import numpy as np
import pytest

from mmreduce import golay_mog as gm


def test_weight_distribution():
    assert gm.weight_distribution() == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}
    assert len(gm.octads()) == 759
    assert len(gm.dodecads()) == 2576


def test_basis_ends_with_omega():
    assert gm.GOLAY_BASIS[11] == gm.OMEGA_VEC
    assert gm.golay_coords(gm.OMEGA_VEC) == gm.OMEGA_COORD


def test_mog_columns_pairwise_octads():
    for i in range(6):
        for j in range(i + 1, 6):
            assert gm.is_codeword(gm.MOG_COLUMNS[i] | gm.MOG_COLUMNS[j])


def test_coords_round_trip(rng):
    for c in rng.integers(4096, size=200):
        assert gm.golay_coords(gm.golay_vector(int(c))) == int(c)


def test_non_codeword_rejected():
    with pytest.raises(ValueError):
        gm.golay_coords(0b111)


def test_cocode_weights():
    w = [gm.cocode_weight(c) for c in range(4096)]
    assert {k: w.count(k) for k in set(w)} == {0: 1, 1: 24, 2: 276, 3: 2024, 4: 1771}


def test_syndrome_is_coset_rep(rng):
    for v in rng.integers(1 << 24, size=300):
        v = int(v)
        s = gm.syndrome_vector(gm.cocode_coords(v))
        assert gm.is_codeword(s ^ v)
        assert s.bit_count() <= 4


def test_sextet_partitions_points():
    for c in range(4096):
        if gm.cocode_weight(c) != 4:
            continue
        tet = gm.sextet(c)
        assert len(tet) == 6
        acc = 0
        for t in tet:
            assert t.bit_count() == 4 and gm.cocode_coords(t) == c
            assert acc & t == 0
            acc |= t
        assert acc == gm.OMEGA_VEC
        break


def test_sextet_rejects_small_weight():
    with pytest.raises(ValueError):
        gm.sextet(gm.cocode_coords(0b11))


def test_octad_of_five_points():
    o = gm.octad_of([0, 1, 2, 3, 4])
    assert o & 0x1F == 0x1F and o in gm.octads()
    with pytest.raises(ValueError):
        gm.octad_of([0, 1, 2])


def test_scalar_matches_intersection_parity(rng):
    for _ in range(200):
        d = int(rng.integers(4096))
        v = int(rng.integers(1 << 24))
        par = (gm.golay_vector(d) & v).bit_count() & 1
        assert gm.scalar(d, gm.cocode_coords(v)) == par


def test_value_types_text():
    w = gm.GolayWord.parse("ffffff")
    assert w.coords == gm.OMEGA_COORD and w.weight == 24 and str(w) == "ffffff"
    c = gm.CocodeWord.from_vector(gm.BETA_VEC)
    assert c.weight == 2 and c.syndrome == 0b1100 and str(c) == "00000c"


def test_m24_chain_order_and_membership(rng):
    ch = gm.m24_chain()
    assert ch.order() == gm.M24_ORDER
    for _ in range(20):
        p = ch.chain.random_element(rng)
        assert gm.m24_member(p) and ch.contains(p)
    bad = tuple([1, 0] + list(range(2, 24)))
    assert not gm.m24_member(bad)


def test_m24_from_tuples(rng):
    for _ in range(20):
        src = tuple(int(x) for x in rng.choice(24, 5, replace=False))
        dst = tuple(int(x) for x in rng.choice(24, 5, replace=False))
        p = gm.m24_from_tuples(src, dst)
        assert gm.m24_member(p)
        assert all(p[a] == b for a, b in zip(src, dst))


def test_pair_stabilizer_fixes_beta():
    for g in gm.m24_stabilizer_of_pair():
        assert gm.perm_vec(g, gm.BETA_VEC) == gm.BETA_VEC
    assert gm.pair_stabilizer_chain().order() == gm.M24_ORDER // 276


def test_perm_text_round_trip(rng):
    p = gm.m24_chain().chain.random_element(rng)
    assert gm.parse_perm(gm.perm_str(p)) == tuple(p)


def test_perm_preserves_code(rng):
    p = gm.m24_chain().chain.random_element(rng)
    ws = np.array([gm.perm_vec(p, int(v)) for v in gm.CODE_WORDS[:64]])
    assert all(gm.is_codeword(int(v)) for v in ws)
