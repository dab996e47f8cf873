"""Command line front end.

Exit codes: 0 success, 1 bad input, 2 algorithmic failure.
"""

from __future__ import annotations

import argparse
import csv
import sys
from typing import Sequence

import numpy as np

from . import analysis as an
from . import axis_engine as ax
from . import frame_reduce as fr
from . import golay_mog as gm
from . import group_n0 as n0
from . import gx0_action as gx
from . import leech2 as l2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(rows, header, fmt: str) -> None:
    if fmt == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return
    cells = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    for r in cells:
        print("  ".join(c.rjust(wd) for c, wd in zip(r, widths)))


def _vector(text: str) -> int:
    try:
        return l2.parse(text)
    except (ValueError, KeyError) as exc:
        raise InputError(f"bad vector {text!r}: {exc}") from None


def _load_axis(path: str) -> ax.AxisVector:
    try:
        return ax.AxisVector.read(path)
    except (OSError, ValueError) as exc:
        raise InputError(str(exc)) from None


# ---------------------------------------------------------------------------

def cmd_subtype(a) -> int:
    x = _vector(a.vector)
    print(f"{l2.subtype(x):02d}")
    return 0


def cmd_reduce_frame(a) -> int:
    x = _vector(a.vector)
    func = {"2": fr.reduce_type2, "4": fr.reduce_type4, "feasible": fr.reduce_feasible}[a.type]
    try:
        tr = func(x)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    print(tr.to_text())
    return 0


def cmd_n0(a) -> int:
    try:
        elems = [n0.normal_form(w) for w in a.words]
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if a.op == "mul":
        g = n0.product(elems)
    elif a.op == "inv":
        if len(elems) != 1:
            raise InputError("inv takes one word")
        g = n0.n0_inv(elems[0])
    else:
        if len(elems) != 1:
            raise InputError("pow takes one word")
        g = n0.n0_pow(elems[0], a.n)
    print(g.to_text())
    return 0


def cmd_axis(a) -> int:
    v = _load_axis(a.file)
    if a.op == "classify":
        label = ax.classify_feasible(v) if a.feasible else ax.classify(v)
        rows = [("orbit", label), ("norm_M", ax.norm_M(v))]
        if label not in ("2A", "2A0", "2A1"):
            if a.feasible:
                rows.append(("U_f", len(ax.u_feasible(v, label))))
            else:
                U, U4 = ax.u_sets(v, label)
                rows += [("U", len(U)), ("U4", len(U4))]
        _emit(rows, ("key", "value"), a.format)
    elif a.op == "next":
        step = ax.next_step(v, "H" if a.feasible else "monster")
        print(step.to_text())
        if a.out:
            step.axis.write(a.out)
    else:
        word = ax.reduce_axis_2A(v)
        print(gx.word_to_text(word))
    return 0


def cmd_census(a) -> int:
    print("census: sweeping 2^24 classes", file=sys.stderr)
    if a.what == "subtypes":
        c = l2.census()
        rows = [(f"{k:02d}", c[k]) for k in sorted(c)]
        rows.append(("type2", sum(v for k, v in c.items() if k // 10 == 2)))
        _emit(rows, ("subtype", "count"), a.format)
    elif a.what == "types":
        c = l2.type_census()
        _emit(sorted(c.items()), ("type", "count"), a.format)
    else:
        _emit(sorted(gm.weight_distribution().items()), ("weight", "count"), a.format)
    return 0


def cmd_analyze(a) -> int:
    if a.what == "corank":
        d = an.corank_chain(a.q, a.n)
        _emit(d.rows(a.digits), ("corank", "probability"), a.format)
    else:
        _emit(an.type4_probabilities().rows(), ("quantity", "value"), a.format)
    return 0


def selftest(samples: int = 200, seed: int = 1) -> list[str]:
    """Cross-module checks; returns the list of failures."""
    rng = np.random.default_rng(seed)
    bad = []
    for i in range(samples):
        g = n0.random_element(rng, t=0)
        q = (int(rng.integers(8192)), int(rng.integers(4096)))
        lhs = n0.lambda_q(n0.conj_q(g, q))
        rhs = gx.apply_mod2_word(n0.ortho_image(g), n0.lambda_q(q))
        if lhs != rhs:
            bad.append(f"equivariance {g.to_text()} {q}")
        a, b, c = (n0.random_element(rng) for _ in range(3))
        if (a * b) * c != a * (b * c):
            bad.append(f"associativity #{i}")
    tab = l2.subtype_table()
    t4 = np.flatnonzero(tab // 10 == 4)
    for x in rng.choice(t4, samples):
        if fr.reduce_type4(int(x)).replay() != l2.LAMBDA_OMEGA:
            bad.append(f"reduce_type4 {l2.to_text(int(x))}")
    return bad


def cmd_selftest(a) -> int:
    bad = selftest(a.samples, a.seed)
    for line in bad:
        print("FAIL", line)
    print("selftest", "ok" if not bad else f"{len(bad)} failures")
    return 2 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mmreduce", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("subtype", help="subtype of a vector of Lambda/2Lambda")
    s.add_argument("vector", help="d:<hex>/δ:<hex>")
    s.set_defaults(func=cmd_subtype)

    s = sub.add_parser("reduce-frame", help="map a vector to its standard form")
    s.add_argument("--type", choices=("2", "4", "feasible"), required=True)
    s.add_argument("--vector", required=True)
    s.set_defaults(func=cmd_reduce_frame)

    s = sub.add_parser("n0", help="arithmetic in N_0")
    s.add_argument("op", choices=("mul", "inv", "pow"))
    s.add_argument("words", nargs="*", help="words such as 't:1 y:000fff p:...'")
    s.add_argument("--n", type=int, default=2, help="exponent for pow")
    s.set_defaults(func=cmd_n0)

    s = sub.add_parser("axis", help="classify or reduce an axis file")
    s.add_argument("op", choices=("classify", "next", "reduce-2a"))
    s.add_argument("--file", required=True)
    s.add_argument("--feasible", action="store_true")
    s.add_argument("--out", help="write v*h here (next)")
    s.add_argument("--format", choices=("text", "csv"), default="text")
    s.set_defaults(func=cmd_axis)

    s = sub.add_parser("census", help="exhaustive counts")
    s.add_argument("what", choices=("subtypes", "types", "golay"))
    s.add_argument("--format", choices=("text", "csv"), default="csv")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("analyze", help="corank statistics")
    s.add_argument("what", choices=("corank", "v71-cost"))
    s.add_argument("--q", type=int, default=3)
    s.add_argument("--n", type=int, default=24)
    s.add_argument("--digits", type=int, default=6)
    s.add_argument("--format", choices=("text", "csv"), default="text")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("selftest", help="run the cross-module checks")
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--seed", type=int, default=1)
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, AssertionError) as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
