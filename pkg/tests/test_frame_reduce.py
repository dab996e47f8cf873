from __future__ import annotations

import numpy as np
import pytest

from mmreduce import frame_reduce as fr
from mmreduce import gx0_action as gx
from mmreduce import leech2 as l2


@pytest.fixture(scope="module")
def table():
    return l2.subtype_table()


def test_type4_sample(rng, table):
    xs = np.flatnonzero(table // 10 == 4)
    seen = set()
    for x in rng.choice(xs, 300):
        tr = fr.reduce_type4(int(x))
        assert tr.target_reached and tr.replay() == l2.LAMBDA_OMEGA
        assert tr.xi_steps <= 3
        seen.add(l2.subtype(int(x)))
    assert seen >= {42, 43, 44, 46}


@pytest.mark.parametrize("st", [40, 42, 43, 44, 46])
def test_type4_subtype_chain(rng, table, st):
    x = int(rng.choice(np.flatnonzero(table == st)))
    tr = fr.reduce_type4(x)
    subs = [s for s in tr.subtypes()]
    # subtypes along the word never leave type 4 and end at 48
    assert all(s // 10 == 4 for s in subs) and subs[-1] == 48


def test_type4_identity():
    tr = fr.reduce_type4(l2.LAMBDA_OMEGA)
    assert tr.word == [] and tr.target_reached


def test_type2_sample(rng):
    short = l2.short_classes()
    for x in rng.choice(short, 300):
        tr = fr.reduce_type2(int(x))
        assert tr.replay() == l2.LAMBDA_BETA and tr.xi_steps <= 2


def test_feasible_sample(rng):
    short = l2.short_classes()
    feas = [int(x) for x in short if fr.is_feasible(int(x))]
    assert len(feas) == 46575
    for x in rng.choice(feas, 300):
        tr = fr.reduce_feasible(int(x))
        assert tr.replay() == l2.LAMBDA_STD_FEASIBLE
        assert fr.check_beta_stable(tr)


def test_wrong_type_rejected():
    with pytest.raises(ValueError):
        fr.reduce_type4(l2.LAMBDA_BETA)
    with pytest.raises(ValueError):
        fr.reduce_type2(l2.LAMBDA_OMEGA)
    with pytest.raises(ValueError):
        fr.reduce_feasible(l2.LAMBDA_BETA)


def test_trace_text(rng, table):
    x = int(rng.choice(np.flatnonzero(table == 46)))
    tr = fr.reduce_type4(x)
    txt = tr.to_text()
    assert txt.startswith("start ") and "reached=True" in txt
    assert gx.apply_mod2_word(gx.parse_word(tr.word_text()), x) == l2.LAMBDA_OMEGA


def test_accepts_value_type():
    tr = fr.reduce_type2(l2.LeechMod2(l2.LAMBDA_BETA))
    assert tr.word == []
