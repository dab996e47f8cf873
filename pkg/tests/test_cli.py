from __future__ import annotations

import subprocess
import sys

import pytest

from mmreduce import axis_engine as ax
from mmreduce import group_n0 as n0
from mmreduce import leech2 as l2
from mmreduce.cli import main, selftest

BETA = l2.to_text(l2.LAMBDA_BETA)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_subtype(capsys):
    assert run(capsys, "subtype", BETA)[:2] == (0, "20\n")
    assert run(capsys, "subtype", "d:800/δ:000")[1] == "48\n"


def test_bad_vector_exit_1(capsys):
    code, _, err = run(capsys, "subtype", "d:xyz")
    assert code == 1 and "error" in err


def test_missing_flag_exit_1(capsys):
    with pytest.raises(SystemExit) as e:
        main(["reduce-frame", "--type", "4"])
    assert e.value.code == 1


def test_reduce_frame(capsys):
    code, out, _ = run(capsys, "reduce-frame", "--type", "2", "--vector", BETA)
    assert code == 0 and "reached=True" in out
    code, _, _ = run(capsys, "reduce-frame", "--type", "4", "--vector", BETA)
    assert code == 1


def test_n0_tau_cubed(capsys):
    code, out, _ = run(capsys, "n0", "mul", "t:1", "t:1", "t:1")
    assert code == 0 and out.strip() == n0.IDENTITY.to_text()


def test_n0_inv_and_pow(capsys):
    code, out, _ = run(capsys, "n0", "pow", "t:1 y:ffffff", "--n", "6")
    assert code == 0
    assert n0.from_text(out.strip()) == n0.n0_pow(n0.normal_form("t:1 y:ffffff"), 6)
    code, out, _ = run(capsys, "n0", "inv", "y:-1")
    assert n0.from_text(out.strip()) == n0.normal_form("y:-1")
    assert run(capsys, "n0", "inv", "t:1", "t:2")[0] == 1
    assert run(capsys, "n0", "mul", "l:1")[0] == 1


def test_census_subtypes_csv(capsys):
    code, out, err = run(capsys, "census", "subtypes")
    rows = dict(line.split(",") for line in out.strip().splitlines()[1:])
    assert code == 0 and rows["type2"] == "98280"
    assert "census" in err and "census" not in out


def test_census_text_format(capsys):
    code, out, _ = run(capsys, "census", "golay", "--format", "text")
    assert code == 0 and out.split() == ["weight", "count", "0", "1", "8", "759",
                                          "12", "2576", "16", "759", "24", "1"]


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", "v71-cost", "--format", "csv")
    assert code == 0 and "p3_24_1,0.31950" in out
    code, out, _ = run(capsys, "analyze", "corank", "--q", "2", "--n", "2", "--digits", "3")
    assert out.split()[-2:] == ["2", "0.125"]


def test_axis_commands(capsys, tmp_path):
    p = tmp_path / "v.axis"
    ax.axis_2A(int(l2.short_classes()[999]), 1).write(p)
    code, out, _ = run(capsys, "axis", "classify", "--file", str(p), "--format", "csv")
    assert code == 0 and "orbit,2A" in out
    code, out, _ = run(capsys, "axis", "reduce-2a", "--file", str(p))
    assert code == 0 and out.strip()
    code, _, err = run(capsys, "axis", "next", "--file", str(p))
    assert code == 2 and "failure" in err
    assert run(capsys, "axis", "classify", "--file", str(tmp_path / "none"))[0] == 1


def test_selftest_clean(capsys):
    assert selftest(samples=20, seed=3) == []
    assert run(capsys, "selftest", "--samples", "10")[0] == 0


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "mmreduce", "subtype", BETA],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "20\n"
