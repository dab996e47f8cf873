from __future__ import annotations

import numpy as np
import pytest

from mmreduce import axis_engine as ax
from mmreduce import golay_mog as gm
from mmreduce import gx0_action as gx
from mmreduce import leech2 as l2


def _random_word(rng, n=4):
    out = []
    for _ in range(n):
        r = int(rng.integers(3))
        if r == 0:
            out.append(gx.perm(gm.m24_chain().chain.random_element(rng)))
        elif r == 1:
            out.append(gx.signs(int(gm.CODE_WORDS[rng.integers(4096)])))
        else:
            out.append(gx.xi(int(rng.choice([1, 2]))))
    return out


def test_abs15():
    assert [ax.abs15(x) for x in (0, 1, 7, 8, 14, -2)] == [0, 1, 7, 7, 1, 2]


def test_standard_axes():
    vp, vm = ax.v_plus(), ax.v_minus()
    assert ax.norm_M(vp) == 4 and ax.eval_M(vp, l2.LAMBDA_BETA) == 4
    assert ax.classify(vp) == "2A" and ax.classify(vm) == "2A"
    assert ax.s_set(vp, 2) == [l2.LAMBDA_BETA]
    assert ax.axis_2A(l2.LAMBDA_BETA) == vp
    assert ax.axis_2A(l2.LAMBDA_BETA, sign=1) == vm
    assert ax.classify_feasible(vm) == "2A1"


def test_reduce_standard():
    assert ax.reduce_axis_2A(ax.v_plus()) == []
    w = ax.reduce_axis_2A(ax.v_minus())
    assert len(w) == 1 and w[0].kind == "x"
    d = gm.golay_coords(int(w[0].arg))
    assert gm.scalar(d, gm.BETA_COORD) == 1
    assert ax.v_minus().apply(w) == ax.v_plus()


def test_2A_sample(rng):
    short = l2.short_classes()
    for x in rng.choice(short, 100):
        for s in (1, -1):
            v = ax.axis_2A(int(x), s)
            assert ax.classify(v) == "2A"
            assert v.apply(ax.reduce_axis_2A(v)) == ax.v_plus()


def test_conjugation_of_2A_axis(rng):
    short = l2.short_classes()
    for x in rng.choice(short, 40):
        x = int(x)
        g = _random_word(rng)
        v = ax.axis_2A(x).apply(g)
        y = gx.apply_mod2_word(g, x)
        assert np.array_equal(v.A, ax.axis_2A(y).A)
        assert list(v.S) == [y]
        assert ax.classify(v) == "2A"


def test_text_round_trip(tmp_path):
    v = ax.axis_2A(int(l2.short_classes()[123]), 1)
    p = tmp_path / "a.axis"
    v.write(p)
    assert ax.AxisVector.read(p) == v
    assert p.read_text().startswith("AXIS mod15\n")


@pytest.mark.parametrize("text", [
    "nope\n",
    "AXIS mod15\nA 3 2 1\n",
    "AXIS mod15\nS d:800/δ:000 1\n",
    "AXIS mod15\nB 1 2\n",
])
def test_bad_files(text):
    with pytest.raises(ValueError):
        ax.AxisVector.from_text(text)


def test_asymmetric_matrix_rejected():
    A = np.zeros((24, 24), dtype=int)
    A[0, 1] = 1
    with pytest.raises(ValueError):
        ax.AxisVector(A)


def test_span_and_radical():
    b, f = l2.LAMBDA_BETA, l2.LAMBDA_STD_FEASIBLE
    assert ax.span2([b, f, b ^ f]) == sorted([0, b, f, b ^ f])
    assert l2.scalar2(b, f) == 0
    assert ax.radical([b, f]) == sorted([0, b, f, b ^ f])
    o = next(int(x) for x in l2.short_classes()
             if l2.scalar2(int(x), b) and not l2.scalar2(int(x), f))
    assert ax.radical([b, o]) == [0]
    assert ax.radical([b, o, f]) == [0, f]


def test_radical_is_orthogonal(rng):
    vecs = [int(x) for x in rng.choice(l2.short_classes(), 6)]
    R = ax.radical(vecs)
    sp = ax.span2(vecs)
    for r in R:
        assert r in sp
        assert all(l2.scalar2(r, s) == 0 for s in sp)


def test_sumset_and_type4():
    b, f = l2.LAMBDA_BETA, l2.LAMBDA_STD_FEASIBLE
    assert ax.sumset([b], [f, b]) == sorted([0, b ^ f])
    assert ax.type4([0, b, b ^ f]) == [l2.LAMBDA_OMEGA]


def _synthetic_2B() -> ax.AxisVector:
    A = np.zeros((24, 24), dtype=int)
    for i in range(8):
        A[i, i] = 1
    return ax.AxisVector(A, {l2.LAMBDA_BETA: 4, l2.LAMBDA_STD_FEASIBLE: 11})


def test_synthetic_predicates():
    v = _synthetic_2B()
    assert ax.norm_M(v) == 8 and ax.rank3(v) == 8
    assert ax.classify(v) == "2B"
    U, U4 = ax.u_sets(v)
    assert len(U) == 4 and U4 == [l2.LAMBDA_OMEGA]


def test_synthetic_next_step():
    st = ax.next_step(_synthetic_2B())
    assert st.label == "2B" and st.lam == l2.LAMBDA_OMEGA
    assert st.targets == ("2A",) and st.word == []
    assert "orbit 2B" in st.to_text()


def test_no_orbit():
    A = np.zeros((24, 24), dtype=int)
    A[0, 0] = 1
    with pytest.raises(ValueError):
        ax.classify(ax.AxisVector(A))


def test_terminal_next_step():
    with pytest.raises(ValueError):
        ax.next_step(ax.v_plus())
    with pytest.raises(ValueError):
        ax.next_step(ax.v_minus(), mode="H")


def test_tables_consistent():
    assert set(ax.NORMS) == set(ax.LABELS)
    assert set(ax.U4_SIZES) == set(ax.LABELS) - {"2A"}
    assert all(t in ax.LABELS for ts in ax.TARGETS.values() for t in ts)
    for lab, ts in ax.TARGETS.items():
        assert all(ax.DEPTH[t] < ax.DEPTH[lab] for t in ts)
    for lab, ts in ax.FEASIBLE_TARGETS.items():
        assert all(ax.FEASIBLE_DEPTH[t] < ax.FEASIBLE_DEPTH[lab] for t in ts)


def test_2A_requires_type2():
    with pytest.raises(ValueError):
        ax.axis_2A(l2.LAMBDA_OMEGA)


def test_orbit_classifier():
    X = [ax.v_plus(), ax.v_minus(), _synthetic_2B()]
    clf = ax.OrbitClassifier()
    assert clf.fit(X) is clf
    assert clf.predict(X) == ["2A", "2A", "2B"]
    assert clf.get_params() == {"feasible": False}
    assert ax.OrbitClassifier(feasible=True).fit_predict(X[:2]) == ["2A1", "2A1"]
    with pytest.raises(ValueError):
        clf.set_params(depth=3)
