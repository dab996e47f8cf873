from __future__ import annotations

from mmreduce import golay_mog as gm
from mmreduce import parker_loop as pl

B = [1 << i for i in range(12)]


def _w(a: int) -> int:
    return gm.golay_vector(a & 0xFFF)


def test_square_law():
    for c in range(4096):
        sq = pl.mul(c, c)
        assert sq & 0xFFF == 0
        assert sq >> 12 == (_w(c).bit_count() // 4) & 1


def test_commutator_law(rng):
    for _ in range(2000):
        d, e = (int(x) for x in rng.integers(8192, size=2))
        assert pl.commutator(d, e) == ((_w(d) & _w(e)).bit_count() // 2) & 1


def test_associator_law(rng):
    for _ in range(2000):
        d, e, f = (int(x) for x in rng.integers(8192, size=3))
        lhs = pl.mul(pl.mul(d, e), f)
        rhs = pl.mul(d, pl.mul(e, f))
        assert (lhs ^ rhs) == (((_w(d) & _w(e) & _w(f)).bit_count() & 1) << 12)


def test_omega_central_and_signed():
    assert pl.mul(pl.OMEGA, pl.OMEGA) == pl.ONE
    for c in range(0, 4096, 7):
        assert pl.mul(pl.OMEGA, c) == pl.mul(c, pl.OMEGA)


def test_inverse_and_power(rng):
    for a in rng.integers(8192, size=200):
        a = int(a)
        assert pl.mul(a, pl.inv(a)) == pl.ONE
        assert pl.power(a, 4) == pl.ONE


def test_text_round_trip(rng):
    for a in rng.integers(8192, size=100):
        assert pl.parse(pl.to_text(int(a))) == int(a)
    assert pl.parse("-Omega") == pl.NEG_OMEGA
    assert pl.parse("-1") == pl.NEG_ONE


def test_element_wrapper():
    a = pl.PloopElement.parse("-ffffff")
    assert a.sign == 1 and a.word.coords == gm.OMEGA_COORD
    assert (a * a).value == pl.ONE
    assert (-a).value == pl.OMEGA


def test_autpl_is_automorphism(rng):
    ch = gm.m24_chain().chain
    for _ in range(10):
        a = pl.AutPl(ch.random_element(rng), int(rng.integers(4096)))
        assert pl.is_automorphism(a)
        for _ in range(50):
            d, e = (int(x) for x in rng.integers(8192, size=2))
            assert a.apply(pl.mul(d, e)) == pl.mul(a.apply(d), a.apply(e))


def test_autpl_composition(rng):
    ch = gm.m24_chain().chain
    a = pl.AutPl(ch.random_element(rng), int(rng.integers(4096)))
    b = pl.AutPl(ch.random_element(rng), int(rng.integers(4096)))
    for d in rng.integers(8192, size=50):
        d = int(d)
        assert (a * b).apply(d) == b.apply(a.apply(d))
        assert a.inverse().apply(a.apply(d)) == d


def test_diagonal_automorphism_signs():
    delta = gm.cocode_coords(0b1)
    a = pl.AutPl.diagonal(delta)
    for c in B:
        assert a.apply(c) >> 12 == gm.scalar(c, delta)
    assert a.parity == 1
    assert pl.AutPl.diagonal(gm.BETA_COORD).parity == 0
