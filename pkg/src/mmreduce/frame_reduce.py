"""Mapping vectors of Lambda/2Lambda to standard ones.

Three reductions are provided, each returning a word in the generators
x_pi, y_d and xi^k of Co_1:

* ``reduce_type4``:   type-4 vector -> lambda_Omega, along 46->44->40->48
  or 43->42->40->48;
* ``reduce_type2``:   type-2 vector -> lambda_beta, along 21->22->20;
* ``reduce_feasible``: feasible type-2 vector -> lambda_Omega + lambda_beta,
  using only permutations fixing {2, 3} and powers of xi, so that
  lambda_beta is fixed throughout.

Each step first moves the relevant octad, dodecad or cocode word into a
position relative to the MOG columns where one of xi, xi^-1 changes the
subtype as required, then tries k = 1 and k = -1.  Exactly one of the
two must succeed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import golay_mog as gm
from . import gx0_action as gx
from . import leech2 as l2

_COLS = [0xF << (4 * i) for i in range(6)]

_TYPE4_NEXT = {46: 44, 44: 40, 43: 42, 42: 40, 40: 48}
_TYPE2_NEXT = {21: 22, 22: 20}


@dataclass
class ReductionTrace:
    start: int
    steps: list = field(default_factory=list)   # (subtype before, OrthoGen)
    word: list = field(default_factory=list)
    target: int = 0
    target_reached: bool = False

    @property
    def xi_steps(self) -> int:
        return sum(1 for g in self.word if g.kind == "l")

    def subtypes(self) -> list[int]:
        out, x = [], self.start
        for g in self.word:
            out.append(l2.subtype(x))
            x = gx.apply_mod2(g, x)
        out.append(l2.subtype(x))
        return out

    def replay(self, x: int | None = None) -> int:
        return gx.apply_mod2_word(self.word, self.start if x is None else x)

    def word_text(self) -> str:
        return gx.word_to_text(self.word)

    def to_text(self) -> str:
        lines = [f"start {l2.to_text(self.start)} subtype {l2.subtype(self.start):02d}"]
        for st, g in self.steps:
            lines.append(f"  {st:02d}  {g.to_text()}")
        lines.append(f"target {l2.to_text(self.target)} reached={self.target_reached}")
        lines.append("word " + self.word_text())
        return "\n".join(lines)


class _Run:
    def __init__(self, x: int, target: int):
        self.x = x
        self.trace = ReductionTrace(start=x, target=target)

    def apply(self, g: gx.OrthoGen) -> None:
        self.trace.steps.append((l2.subtype(self.x), g))
        self.trace.word.append(g)
        self.x = gx.apply_mod2(g, self.x)

    def perm(self, p) -> None:
        if tuple(p) != tuple(range(24)):
            self.apply(gx.perm(p))

    def xi_to(self, want, extra=None) -> None:
        """Apply the unique xi^k (k = 1 or 2) landing in subtype ``want``."""
        ok = []
        for k in (1, 2):
            y = gx.apply_mod2(gx.xi(k), self.x)
            if l2.subtype(y) == want and (extra is None or extra(y)):
                ok.append(k)
        if len(ok) != 1:
            raise AssertionError(f"xi step from {l2.subtype(self.x)} to {want}: k in {ok}")
        self.apply(gx.xi(ok[0]))

    def done(self) -> ReductionTrace:
        self.trace.target_reached = self.x == self.trace.target
        if not self.trace.target_reached:
            raise AssertionError("reduction did not reach its target")
        return self.trace


def _parts(x: int) -> tuple[int, int]:
    d, delta = l2.unpack_natural(x)
    return gm.golay_vector(d), delta


def _points(v: int) -> list[int]:
    return gm.bits_of(v)


def _octad(dv: int) -> int:
    return dv if dv.bit_count() == 8 else dv ^ gm.OMEGA_VEC


def _two_columns(o: int) -> bool:
    full = [c for c in _COLS if o & c == c]
    return len(full) == 2 and o == full[0] | full[1]


def _column_of(p: int) -> int:
    return p >> 2


def _heptad_map(c0: int, c1: int, o: int) -> tuple:
    """A permutation taking c0, c1 to 2, 3 and o to a union of two columns."""
    o0, o1, o2 = _points(o)[:3]
    sigma = gm.syndrome_vector(gm.cocode_coords((1 << c0) | (1 << c1) | (1 << o0) | (1 << o1) | (1 << o2)))
    meet = sigma & o
    assert sigma.bit_count() == 3 and meet.bit_count() == 1, "syndrome must meet the octad once"
    o3 = meet.bit_length() - 1
    p = gm.m24_from_tuples((c0, c1, o0, o1, o2, o3), (2, 3, 4, 5, 6, 7))
    assert _two_columns(gm.perm_vec(p, o))
    return p


def _map_octad_to_first(o: int) -> tuple:
    pts = _points(o)[:5]
    return gm.m24_from_tuples(pts, (0, 1, 2, 3, 4))


def _pair_outside(o: int, delta: int) -> tuple[int, int]:
    """c0, c1 for the 44->40 step: a duad or half a tetrad outside o."""
    if gm.cocode_weight(delta) == 2:
        c = gm.syndrome_vector(delta)
        assert c & o == 0
        return tuple(_points(c))
    for t in gm.sextet(delta):
        if (t & o).bit_count() == 2:
            return tuple(_points(t & ~o))
    raise AssertionError("no tetrad meets the octad in two points")


# ---------------------------------------------------------------------------

def _step4(run: _Run) -> None:
    st = l2.subtype(run.x)
    dv, delta = _parts(run.x)
    if st == 46:
        if not any(dv & c == c for c in _COLS):
            run.perm(gm.m24_from_tuples(_points(dv)[:4], (0, 1, 2, 3)))
    elif st == 43:
        pts = _points(gm.syndrome_vector(delta))
        if len({_column_of(p) for p in pts}) != 1:
            run.perm(gm.m24_from_tuples(pts, (0, 1, 2)))
    elif st == 44:
        o = _octad(dv)
        c0, c1 = _pair_outside(o, delta)
        if not (_two_columns(o) and _column_of(c0) == _column_of(c1)):
            run.perm(_heptad_map(c0, c1, o))
    elif st == 42:
        o = _octad(dv)
        if not _two_columns(o):
            run.perm(_map_octad_to_first(o))
    elif st == 40:
        if delta != gm.cocode_coords(0xF):
            run.perm(gm.m24_from_tuples(_points(gm.sextet(delta)[0]), (0, 1, 2, 3)))
    else:
        raise AssertionError(f"unexpected subtype {st}")
    run.xi_to(_TYPE4_NEXT[st])


def reduce_type4(x) -> ReductionTrace:
    x = _value(x)
    if l2.leech_type(x) != 4:
        raise ValueError("reduce_type4 needs a type-4 vector")
    run = _Run(x, l2.LAMBDA_OMEGA)
    for _ in range(3):
        if run.x == l2.LAMBDA_OMEGA:
            break
        _step4(run)
    return run.done()


def _value(x) -> int:
    return x.value if isinstance(x, l2.LeechMod2) else int(x)


def _first_code_word(pred) -> int:
    for c in range(1, 4096):
        if pred(c):
            return gm.golay_vector(c)
    raise AssertionError


def reduce_type2(x) -> ReductionTrace:
    x = _value(x)
    if l2.leech_type(x) != 2:
        raise ValueError("reduce_type2 needs a type-2 vector")
    run = _Run(x, l2.LAMBDA_BETA)
    if l2.subtype(run.x) == 21:
        run.xi_to(22)
    if l2.subtype(run.x) == 22:
        o = _octad(_parts(run.x)[0])
        if not _two_columns(o):
            run.perm(_map_octad_to_first(o))
        run.xi_to(20)
    if run.x != l2.LAMBDA_BETA:
        dv, delta = _parts(run.x)
        c = _points(gm.syndrome_vector(delta))
        run.perm(gm.m24_from_tuples(c, (2, 3)))
        if run.x != l2.LAMBDA_BETA:
            # lambda_Omega + lambda_beta: y_d with <d, beta> = 1 removes lambda_Omega
            run.apply(gx.signs(_first_code_word(lambda c: gm.scalar(c, gm.BETA_COORD))))
    return run.done()


def is_feasible(x) -> bool:
    x = _value(x)
    return l2.leech_type(x) == 2 and l2.leech_type(x ^ l2.LAMBDA_BETA) == 4


def reduce_feasible(x) -> ReductionTrace:
    x = _value(x)
    if not is_feasible(x):
        raise ValueError("reduce_feasible needs a feasible type-2 vector")
    run = _Run(x, l2.LAMBDA_STD_FEASIBLE)
    if l2.subtype(run.x) == 21:
        run.xi_to(22)
    if l2.subtype(run.x) == 22:
        o = _octad(_parts(run.x)[0])
        beta = gm.BETA_VEC
        if not _two_columns(o):
            if o & beta == beta:
                rest = [p for p in _points(o) if p not in (2, 3)][:3]
                run.perm(gm.m24_from_tuples((2, 3) + tuple(rest), (2, 3, 0, 1, 4)))
            else:
                assert o & beta == 0, "feasible octad must contain or avoid {2,3}"
                run.perm(_heptad_map(2, 3, o))
        run.xi_to(20)
    if run.x != l2.LAMBDA_STD_FEASIBLE:
        dv, delta = _parts(run.x)
        c = _points(gm.syndrome_vector(delta))
        assert not set(c) & {2, 3}
        run.perm(gm.m24_from_tuples((2, 3) + tuple(c), (2, 3, 0, 1)))
        alpha = 1 if _parts(run.x)[0] else 0
        run.apply(gx.xi(2 - alpha))
    return run.done()


def check_beta_stable(trace: ReductionTrace) -> bool:
    """Every prefix of the word fixes lambda_beta."""
    y = l2.LAMBDA_BETA
    for g in trace.word:
        y = gx.apply_mod2(g, y)
        if y != l2.LAMBDA_BETA:
            return False
    return True
