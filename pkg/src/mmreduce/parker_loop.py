"""The Parker loop and its standard automorphisms.

A loop element is packed into 13 bits: the 12 code coordinates of its
Golay word and the sign in bit 12.  The product is
``(d, m) * (e, n) = (d + e, m + n + theta(d, e))`` with
``theta(d, e) = <e, theta(d)>`` for a quadratic map ``theta`` from the
code to the cocode, found once by solving a small F2 system.

Standard automorphisms are stored as ``(perm, eps)``: the M24 element
together with the signs of the images of the 12 basis elements.  The
pair ``(identity, delta)`` is the diagonal automorphism of the cocode
element ``delta`` because code and cocode coordinates are dual.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import _perm
from . import golay_mog as gm
from ._gf2 import parity, solve

SIGN = 1 << 12
ONE = 0
NEG_ONE = SIGN
OMEGA = gm.OMEGA_COORD
NEG_OMEGA = SIGN | gm.OMEGA_COORD

_PAR12 = np.array([bin(i).count("1") & 1 for i in range(4096)], dtype=np.uint8)


def _solve_theta() -> list[int]:
    B = gm.GOLAY_BASIS
    rows, rhs = [], []
    for i in range(12):                      # squaring law
        rows.append(1 << (12 * i + i))
        rhs.append((B[i].bit_count() // 4) & 1)
    for i in range(12):                      # commutator law
        for j in range(i + 1, 12):
            rows.append((1 << (12 * i + j)) | (1 << (12 * j + i)))
            rhs.append(((B[i] & B[j]).bit_count() // 2) & 1)
    x = solve(rows, rhs, 144)
    assert x is not None
    return [(x >> (12 * i)) & 0xFFF for i in range(12)]


def _theta_table() -> np.ndarray:
    base = _solve_theta()
    B = gm.GOLAY_BASIS
    th = np.zeros(4096, dtype=np.uint16)    # theta(d) as cocode coordinates
    for i in range(12):
        k = 1 << i
        th[k:2 * k] = th[:k] ^ base[i]
        # correction term cocode(d & b_i) for every d < 2^i
        for c in range(k):
            th[k + c] ^= gm.cocode_coords(int(gm.CODE_WORDS[c]) & B[i])
    return th


THETA = _theta_table()
_THETA = [int(x) for x in THETA]


def theta(d: int, e: int) -> int:
    """Cocycle value on code coordinates d, e."""
    return parity(e & _THETA[d & 0xFFF])


def mul(a: int, b: int) -> int:
    return (a ^ b) ^ (theta(a, b) << 12)


def inv(a: int) -> int:
    # d * d = (-1)^{|d|/4}, so d^-1 differs from d by that sign
    return a ^ (_quarter_weight(a) << 12)


def _quarter_weight(a: int) -> int:
    return (int(gm.CODE_WEIGHTS[a & 0xFFF]) >> 2) & 1


def power(a: int, n: int) -> int:
    out = ONE
    for _ in range(n % 4):
        out = mul(out, a)
    return out


def associator(d: int, e: int, f: int) -> int:
    """|d & e & f| mod 2, checked against both bracketings."""
    s = (gm.golay_vector(d) & gm.golay_vector(e) & gm.golay_vector(f)).bit_count() & 1
    lhs, rhs = mul(mul(d, e), f), mul(d, mul(e, f))
    assert lhs ^ rhs == s << 12
    return s


def commutator(d: int, e: int) -> int:
    """Sign bit c with d*e = (-1)^c e*d."""
    return (mul(d, e) ^ mul(e, d)) >> 12


def vector(a: int) -> int:
    return gm.golay_vector(a)


def from_vector(v: int, sign: int = 0) -> int:
    return gm.golay_coords(v) | ((sign & 1) << 12)


def to_text(a: int) -> str:
    return ("-" if a & SIGN else "") + f"{vector(a):06x}"


def parse(text: str) -> int:
    t = text.strip()
    sign = 0
    if t.startswith("-"):
        sign, t = 1, t[1:]
    elif t.startswith("+"):
        t = t[1:]
    if t in ("1",):
        return sign << 12
    if t in ("O", "Omega", "Ω"):
        return OMEGA | (sign << 12)
    return from_vector(int(t, 16), sign)


@dataclass(frozen=True)
class PloopElement:
    value: int

    @classmethod
    def parse(cls, text: str) -> "PloopElement":
        return cls(parse(text))

    @property
    def word(self) -> gm.GolayWord:
        return gm.GolayWord(self.value & 0xFFF)

    @property
    def sign(self) -> int:
        return self.value >> 12

    def __mul__(self, other: "PloopElement") -> "PloopElement":
        return PloopElement(mul(self.value, other.value))

    def __neg__(self) -> "PloopElement":
        return PloopElement(self.value ^ SIGN)

    def inverse(self) -> "PloopElement":
        return PloopElement(inv(self.value))

    def __str__(self) -> str:
        return to_text(self.value)


# ---------------------------------------------------------------------------
# standard automorphisms

class _PermData:
    """Action of a permutation on code coordinates and its sign form.

    ``bmask[i]`` has bit j set iff theta(b_j, b_i) + theta(b_j P, b_i P) = 1;
    this alternating form is the polarization of the sign function.
    """

    __slots__ = ("perm", "img", "bmask")

    def __init__(self, perm: tuple):
        self.perm = perm
        self.img = [gm.golay_coords(gm.perm_vec(perm, b)) for b in gm.GOLAY_BASIS]
        bm = []
        for i in range(12):
            m = 0
            for j in range(12):
                if theta(1 << j, 1 << i) ^ theta(self.img[j], self.img[i]):
                    m |= 1 << j
            bm.append(m)
        self.bmask = bm

    def code_image(self, c: int) -> int:
        out = 0
        i = 0
        while c:
            if c & 1:
                out ^= self.img[i]
            c >>= 1
            i += 1
        return out

    def quad(self, c: int) -> int:
        s = 0
        for i in range(1, 12):
            if (c >> i) & 1:
                s ^= parity(c & self.bmask[i] & ((1 << i) - 1))
        return s


@lru_cache(maxsize=8192)
def _perm_data(perm: tuple) -> _PermData:
    if not gm.m24_member(perm):
        raise ValueError("permutation is not in M24")
    return _PermData(perm)


_ID24 = _perm.identity(24)


@dataclass(frozen=True)
class AutPl:
    """Standard automorphism: basis element b_i maps to (b_i P, eps_i)."""

    perm: tuple = _ID24
    eps: int = 0

    @classmethod
    def from_perm(cls, perm: Sequence[int]) -> "AutPl":
        """Canonical lift: all basis images positive."""
        p = tuple(perm)
        _perm_data(p)
        return cls(p, 0)

    @classmethod
    def diagonal(cls, delta: int) -> "AutPl":
        return cls(_ID24, delta & 0xFFF)

    @property
    def _data(self) -> _PermData:
        return _perm_data(self.perm)

    def sign_of(self, c: int) -> int:
        """Sign of the image of the positive element with coordinates c."""
        return parity(c & self.eps) ^ self._data.quad(c)

    def apply(self, a: int) -> int:
        c = a & 0xFFF
        return self._data.code_image(c) | (((a >> 12) ^ self.sign_of(c)) << 12)

    def basis_images(self) -> list[int]:
        return [self.apply(1 << i) for i in range(12)]

    @property
    def parity(self) -> int:
        """0 if Omega is fixed (even), 1 if it is negated (odd)."""
        return self.sign_of(OMEGA)

    def __mul__(self, other: "AutPl") -> "AutPl":
        # apply self first, then other
        d1 = self._data
        eps = 0
        for i in range(12):
            s = ((self.eps >> i) & 1) ^ other.sign_of(d1.img[i])
            eps |= s << i
        return AutPl(_perm.mul(self.perm, other.perm), eps)

    def inverse(self) -> "AutPl":
        pinv = _perm.inv(self.perm)
        dinv = _perm_data(pinv)
        eps = 0
        for i in range(12):
            eps |= self.sign_of(dinv.img[i]) << i
        return AutPl(pinv, eps)

    def split(self) -> tuple[int, "AutPl"]:
        """(delta, canonical lift) with self = diagonal(delta) * lift."""
        return self.eps, AutPl(self.perm, 0)

    def is_identity(self) -> bool:
        return self.perm == _ID24 and self.eps == 0

    def to_text(self) -> str:
        return gm.perm_str(self.perm) + ";" + " ".join(to_text(x) for x in self.basis_images())


IDENTITY = AutPl()


def autpl_apply(pi: AutPl, a: int) -> int:
    return pi.apply(a)


def autpl_mul(p1: AutPl, p2: AutPl) -> AutPl:
    return p1 * p2


def autpl_inv(p: AutPl) -> AutPl:
    return p.inverse()


def autpl_parity(p: AutPl) -> int:
    return p.parity


def is_automorphism(pi: AutPl, pairs=None) -> bool:
    """Check (d*e)^pi = d^pi * e^pi on basis pairs (or the given pairs)."""
    if pairs is None:
        pairs = [(1 << i, 1 << j) for i in range(12) for j in range(12)]
    return all(pi.apply(mul(d, e)) == mul(pi.apply(d), pi.apply(e)) for d, e in pairs)
