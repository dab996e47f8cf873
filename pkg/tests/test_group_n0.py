from __future__ import annotations

import pytest

from mmreduce import gx0_action as gx
from mmreduce import group_n0 as n0
from mmreduce import leech2 as l2
from mmreduce import parker_loop as pl

from n0_relations import relation_failures


def _q(rng):
    return int(rng.integers(8192)), int(rng.integers(4096))


def test_relations():
    assert relation_failures() == []


def test_associativity(rng):
    for _ in range(300):
        a, b, c = (n0.random_element(rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_inverse(rng):
    for _ in range(200):
        a = n0.random_element(rng)
        assert (a * n0.n0_inv(a)).is_identity()
        assert (n0.n0_inv(a) * a).is_identity()


def test_power_and_tau():
    t = n0.gen_tau(1)
    assert n0.n0_pow(t, 3).is_identity()
    assert n0.n0_pow(t, -1) == n0.gen_tau(2)


def test_text_round_trip(rng):
    for _ in range(300):
        a = n0.random_element(rng)
        assert n0.from_text(a.to_text()) == a


def test_normal_form_of_word():
    assert n0.normal_form("t:1 t:1 t:1").is_identity()
    assert n0.normal_form("y:Omega") == n0.gen_x(pl.NEG_ONE)
    assert n0.normal_form("x:-1 x:-1").is_identity()


def test_bad_tokens():
    for tok in ("l:1", "q:3", "nocolon"):
        with pytest.raises(ValueError):
            n0.parse_token(tok)


def test_q_law(rng):
    for _ in range(500):
        r, s = _q(rng), _q(rng)
        sq = n0.q_mul(r, r)
        assert sq == (l2.qform(n0.lambda_q(r)) << 12, 0)
        rs, sr = n0.q_mul(r, s), n0.q_mul(s, r)
        sgn = l2.scalar2(n0.lambda_q(r), n0.lambda_q(s))
        assert rs == (sr[0] ^ (sgn << 12), sr[1])


def test_equivariance(rng):
    for _ in range(300):
        g = n0.random_element(rng, t=0)
        q = _q(rng)
        lhs = n0.lambda_q(n0.conj_q(g, q))
        rhs = gx.apply_mod2_word(n0.ortho_image(g), n0.lambda_q(q))
        assert lhs == rhs


def test_conj_q_rejects_tau(rng):
    with pytest.raises(ValueError):
        n0.conj_q(n0.gen_tau(1), (1, 0))
    with pytest.raises(ValueError):
        n0.ortho_image(n0.gen_tau(2))
