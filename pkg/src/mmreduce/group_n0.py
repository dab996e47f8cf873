"""Exact arithmetic in N_0 = 2^(2+11+22).(M24 x Sym3).

Every element is stored in the normal form

    tau^t * y_f * x_e * x_delta * x_pi

with ``t`` in {0,1,2}, ``f`` a positive Parker loop element whose code
coordinates do not involve Omega (a transversal of P / {+-1, +-Omega}),
``(e, delta)`` an element of Q_x0, and ``pi`` the canonical lift of a
permutation in M24 (all basis images positive).  Products are computed
by moving the factors of the right operand leftwards with the rewriting
rules below; every rule follows from the defining relations

    x_d x_e = x_de x_(d&e),   y_d y_e = y_de x_(d&e),   [x_d, y_e] = x_(d&e) x_Omega^(|d&e|/2),
    [x_d, x_delta] = x_-1^<d,delta>,   y_d x_delta = x_delta Z_d Z_-1^<d,delta>,
    y_Omega = x_-1,   y_-1 = x_-Omega,   x_a^-1 x_d x_a = x_(d^a),
    tau^3 = 1,   x_d tau = tau y_d,   y_d tau = tau (x_d y_d)^-1,

with even automorphisms commuting with tau and odd ones inverting it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import _perm
from . import golay_mog as gm
from . import leech2 as l2
from . import parker_loop as pl
from ._gf2 import parity

_ID24 = _perm.identity(24)
_OMEGA_BIT = gm.OMEGA_COORD

# elements of Q_x0 are pairs (e, delta): e a 13-bit loop element, delta 12-bit cocode
Q_ONE = (0, 0)


def _cap(a: int, b: int) -> int:
    """Cocode coordinates of the intersection of two loop elements."""
    return gm.cocode_coords(gm.golay_vector(a & 0xFFF) & gm.golay_vector(b & 0xFFF))


def q_mul(q1: tuple[int, int], q2: tuple[int, int]) -> tuple[int, int]:
    e1, d1 = q1
    e2, d2 = q2
    e = pl.mul(e1, e2) ^ (parity(e2 & d1 & 0xFFF) << 12)
    return e, d1 ^ d2 ^ _cap(e1, e2)


def q_mul_many(*qs: tuple[int, int]) -> tuple[int, int]:
    out = Q_ONE
    for q in qs:
        out = q_mul(out, q)
    return out


def q_inv(q: tuple[int, int]) -> tuple[int, int]:
    e, d = q
    return q_mul((0, d), (pl.inv(e), 0))


def _x_omega_pow(k: int, neg: bool = False) -> tuple[int, int]:
    if not k & 1:
        return Q_ONE
    return (pl.NEG_OMEGA if neg else pl.OMEGA, 0)


def q_conj_y(f: int, q: tuple[int, int]) -> tuple[int, int]:
    """y_f^-1 x_e x_delta y_f."""
    e, d = q
    ce = gm.golay_vector(e & 0xFFF) & gm.golay_vector(f & 0xFFF)
    # y_f^-1 x_e y_f = x_e x_(e&f) x_Omega^(|e&f|/2)
    xe = q_mul_many((e, 0), (0, gm.cocode_coords(ce)), _x_omega_pow(ce.bit_count() >> 1))
    s = parity(f & d & 0xFFF)
    if gm.cocode_weight(d) & 1:
        xd = q_mul_many((0, d), _x_omega_pow(s), (f, 0),
                        _x_omega_pow(int(gm.CODE_WEIGHTS[f & 0xFFF]) >> 2, neg=True))
    else:
        xd = q_mul((0, d), _x_omega_pow(s, neg=True))
    return q_mul(xe, xd)


def q_conj_aut(a: pl.AutPl, q: tuple[int, int]) -> tuple[int, int]:
    """x_a^-1 x_e x_delta x_a."""
    e, d = q
    dv = gm.perm_vec(a.perm, gm.syndrome_vector(d))
    return a.apply(e), gm.cocode_coords(dv)


def y_split(g: int) -> tuple[int, tuple[int, int]]:
    """Write y_g = y_f * q with f in the transversal and q in Q_x0."""
    f = g & 0xFFF & ~_OMEGA_BIT
    z = pl.mul(pl.inv(f), g)
    if z == pl.ONE:
        return f, Q_ONE
    if z == pl.NEG_ONE:        # y_-1 = x_-Omega
        return f, (pl.NEG_OMEGA, 0)
    if z == pl.OMEGA:          # y_Omega = x_-1
        return f, (pl.NEG_ONE, 0)
    if z == pl.NEG_OMEGA:      # y_-Omega = x_Omega
        return f, (pl.OMEGA, 0)
    raise AssertionError("bad transversal split")


def y_conj_aut(a: pl.AutPl, f: int) -> tuple[int, tuple[int, int]]:
    """x_a^-1 y_f x_a, as (transversal, Q part)."""
    g = a.apply(f)
    if a.parity == 0:
        return y_split(g)
    gi = pl.inv(g)               # (x_g y_g)^-1 = y_(g^-1) x_(g^-1)
    h, z = y_split(gi)
    return h, q_mul(z, (gi, 0))


@dataclass(frozen=True)
class N0Element:
    t: int = 0
    f: int = 0
    e: int = 0
    delta: int = 0
    perm: tuple = _ID24

    @property
    def q(self) -> tuple[int, int]:
        return self.e, self.delta

    @property
    def aut(self) -> pl.AutPl:
        return pl.AutPl(self.perm, 0)

    def __mul__(self, other: "N0Element") -> "N0Element":
        return n0_mul(self, other)

    def is_identity(self) -> bool:
        return self == IDENTITY

    def to_text(self) -> str:
        return (f"t:{self.t} f:{pl.vector(self.f):06x} e:{pl.to_text(self.e)} "
                f"d:{gm.syndrome_vector(self.delta):06x} p:{gm.perm_str(self.perm)}")

    def __str__(self) -> str:
        return self.to_text()


IDENTITY = N0Element()


def _make(t: int, f: int, q: tuple[int, int], perm: tuple) -> N0Element:
    return N0Element(t % 3, f, q[0], q[1], perm)


# ---------------------------------------------------------------------------
# the normal 2-group part y_f * q

def _k_mul_y(k: tuple[int, tuple[int, int]], g: int) -> tuple[int, tuple[int, int]]:
    """(y_f q) * y_g."""
    f, q = k
    q2 = q_conj_y(g, q)
    h, z = y_split(pl.mul(f, g))
    return h, q_mul_many(z, (0, _cap(f, g)), q2)


def _k_mul_q(k, q2):
    f, q = k
    return f, q_mul(q, q2)


def _tau_conj(f: int, e: int, j: int) -> tuple[int, tuple[int, int]]:
    """tau^-j (y_f x_e) tau^j."""
    j %= 3
    if j == 0:
        return f, (e, 0)
    if j == 1:
        # y_(f^-1) x_(f^-1) y_e
        fi = pl.inv(f)
        k = _k_mul_q(y_split(fi), (fi, 0))
        return _k_mul_y(k, e)
    # x_f y_(e^-1) x_(e^-1)
    ei = pl.inv(e)
    k = _k_mul_y((0, (f, 0)), ei)
    return _k_mul_q(k, (ei, 0))


def _mul_t0(f1, q1, p1, f2, q2, p2) -> tuple[int, tuple[int, int], tuple]:
    a1 = pl.AutPl(p1, 0)
    b = a1.inverse()
    ya, qa = y_conj_aut(b, f2)          # x_p1 y_f2 x_p1^-1 = y_ya qa
    q2c = q_conj_aut(b, q2)             # x_p1 q2 x_p1^-1
    c = a1 * pl.AutPl(p2, 0)
    q1c = q_conj_y(ya, q1)              # q1 y_ya = y_ya q1c
    h, z = y_split(pl.mul(f1, ya))
    q = q_mul_many(z, (0, _cap(f1, ya)), q1c, qa, q2c, (0, c.eps))
    return h, q, c.perm


def n0_mul(a: N0Element, b: N0Element) -> N0Element:
    f1, e1, d1, p1 = a.f, a.e, a.delta, a.perm
    k = b.t
    if k:
        s = pl.AutPl(p1, 0).parity ^ (gm.cocode_weight(d1) & 1)
        j = (-k if s else k) % 3
        f1, q0 = _tau_conj(f1, e1, j)
        q1 = q_mul(q0, (0, d1))
        t = a.t + j
    else:
        q1 = a.q
        t = a.t
    h, q, p = _mul_t0(f1, q1, p1, b.f, b.q, b.perm)
    return _make(t, h, q, p)


def n0_inv(a: N0Element) -> N0Element:
    ai = pl.AutPl(a.perm, 0).inverse()
    out = _make(0, 0, (0, ai.eps), ai.perm)
    out = n0_mul(out, _make(0, 0, q_inv(a.q), _ID24))
    out = n0_mul(out, gen_y(pl.inv(a.f)))
    if a.t:
        out = n0_mul(out, gen_tau(-a.t))
    return out


def n0_pow(a: N0Element, n: int) -> N0Element:
    if n < 0:
        a, n = n0_inv(a), -n
    out, base = IDENTITY, a
    while n:
        if n & 1:
            out = n0_mul(out, base)
        base = n0_mul(base, base)
        n >>= 1
    return out


def n0_comm(a: N0Element, b: N0Element) -> N0Element:
    """[a, b] = a^-1 b^-1 a b."""
    return n0_mul(n0_mul(n0_inv(a), n0_inv(b)), n0_mul(a, b))


# ---------------------------------------------------------------------------
# generators and words

def gen_x(e: int) -> N0Element:
    return N0Element(0, 0, e & 0x1FFF, 0, _ID24)


def gen_y(g: int) -> N0Element:
    f, q = y_split(g & 0x1FFF)
    return _make(0, f, q, _ID24)


def gen_delta(delta: int) -> N0Element:
    return N0Element(0, 0, 0, delta & 0xFFF, _ID24)


def gen_aut(a: pl.AutPl) -> N0Element:
    return N0Element(0, 0, 0, a.eps, a.perm)


def gen_perm(p) -> N0Element:
    return gen_aut(pl.AutPl.from_perm(p))


def gen_tau(k: int = 1) -> N0Element:
    return N0Element(k % 3, 0, 0, 0, _ID24)


def gen_q(q: tuple[int, int]) -> N0Element:
    return N0Element(0, 0, q[0] & 0x1FFF, q[1] & 0xFFF, _ID24)


def _ploop_arg(text: str) -> int:
    t = text.strip()
    neg = t.startswith("-")
    core = t[1:] if neg or t.startswith("+") else t
    if core in ("1",):
        val = pl.ONE
    elif core in ("O", "Omega", "Ω", "o"):
        val = pl.OMEGA
    else:
        val = pl.from_vector(int(core, 16))
    return val ^ (pl.SIGN if neg else 0)


def parse_token(tok: str) -> N0Element:
    kind, sep, arg = tok.partition(":")
    if not sep:
        raise ValueError(f"bad token {tok!r}")
    if kind == "t":
        return gen_tau(int(arg))
    if kind in ("x", "e"):
        return gen_x(_ploop_arg(arg))
    if kind in ("y", "f"):
        return gen_y(_ploop_arg(arg))
    if kind == "d":
        return gen_delta(gm.cocode_coords(int(arg, 16)))
    if kind == "p":
        return gen_perm(gm.parse_perm(arg))
    if kind == "l":
        raise ValueError("xi is not an element of N_0")
    raise ValueError(f"bad token {tok!r}")


def normal_form(text: str) -> N0Element:
    out = IDENTITY
    for tok in text.split():
        out = n0_mul(out, parse_token(tok))
    return out


def product(elems: Iterable[N0Element]) -> N0Element:
    out = IDENTITY
    for g in elems:
        out = n0_mul(out, g)
    return out


def from_text(text: str) -> N0Element:
    return normal_form(text)


# ---------------------------------------------------------------------------
# Q_x0 and the frame-level image

def conj_q(g: N0Element, q: tuple[int, int]) -> tuple[int, int]:
    """g^-1 x_e x_delta g for g in N_x0."""
    if g.t:
        raise ValueError("conj_q needs an element of N_x0 (t = 0)")
    r = n0_mul(n0_mul(n0_inv(g), gen_q(q)), g)
    assert r.t == 0 and r.f == 0 and r.perm == _ID24
    return r.q


def lambda_q(q: tuple[int, int]) -> int:
    return l2.lambda_of(q[0], q[1])


def ortho_image(g: N0Element):
    """The image of g in Co_0 as a word of OrthoGen (up to sign)."""
    from . import gx0_action as gx
    if g.t:
        raise ValueError("tau has no image in Co_0")
    word = []
    if g.f:
        word.append(gx.signs(pl.vector(g.f)))
    if g.perm != _ID24:
        word.append(gx.perm(g.perm))
    return word


def random_element(rng: np.random.Generator, t: int | None = None) -> N0Element:
    p = gm.m24_chain().chain.random_element(rng)
    return N0Element(int(rng.integers(3)) if t is None else t,
                     int(rng.integers(2048)), int(rng.integers(8192)),
                     int(rng.integers(4096)), p)
