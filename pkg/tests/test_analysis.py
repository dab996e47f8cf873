from __future__ import annotations

from fractions import Fraction

import pytest

from mmreduce import analysis as an
from mmreduce import leech2 as l2


def test_trivial_chain():
    d = an.corank_chain(3, 0)
    assert d.p == (Fraction(1),) and d[5] == 0


@pytest.mark.parametrize("q,n", [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3)])
def test_chain_matches_brute_force(q, n):
    assert an.corank_chain(q, n).p == an.corank_brute(q, n).p


def test_two_by_two_over_f2():
    d = an.corank_brute(2, 2)
    # 8 matrices: 4 invertible, 3 of rank 1, the zero matrix
    assert d.p == (Fraction(4, 8), Fraction(3, 8), Fraction(1, 8))


def test_mass_conservation():
    for n in range(30):
        assert an.corank_chain(3, n).total() == 1


def test_bad_arguments():
    with pytest.raises(ValueError):
        an.corank_chain(1, 3)
    with pytest.raises(ValueError):
        an.corank_chain(3, -1)


def test_corank1_value():
    assert abs(float(an.corank_chain(3, 24)[1]) - 0.31950) < 1e-5


def test_type4_report():
    r = an.type4_probabilities()
    assert r.type4_ratio == Fraction(398034000, 3 ** 24 - 1)
    assert abs(r.type4_reciprocal - 709.56) < 0.01
    assert abs(r.combined_reciprocal - 2221) < 1
    assert abs(float(r.expected_ops) - 155000) < 1000
    keys = [k for k, _ in r.rows()]
    assert keys == ["p3_24_1", "1/type4_ratio", "1/combined", "expected_ops"]


def test_type4_count_from_census():
    assert 48 * l2.type_census()[4] == an.TYPE4_VECTORS
