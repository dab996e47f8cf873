"""The images of x_pi, y_d and xi^k in Co_0, acting on the Leech lattice,
on Lambda/2Lambda, and on symmetric 24x24 matrices mod 15.

All actions are right actions.  x_pi moves coordinate i to pi(i), y_d
negates the coordinates in the Golay word d, and xi multiplies each MOG
column by the 4x4 block AB (BA for xi^-1), with
A = (J - 2I)/2 and B = diag(-1, 1, 1, 1).  Elements of Q_x0 (x_d, x_delta)
act as +-1 on the lattice and are accepted as no-ops.  Global signs are
not tracked.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import _perm
from . import golay_mog as gm
from . import leech2 as l2

_POW2 = (1 << np.arange(24)).astype(np.int64)


@dataclass(frozen=True)
class OrthoGen:
    """One generator: kind 'p' (perm), 'y' (Golay vector), 'l' (xi^k, k = 1, 2),
    or 'x' / 'd' (elements of Q_x0, trivial here)."""

    kind: str
    arg: object = None

    def __post_init__(self):
        if self.kind == "p":
            if not gm.m24_member(self.arg):
                raise ValueError("permutation is not in M24")
        elif self.kind == "y":
            if not gm.is_codeword(int(self.arg)):
                raise ValueError("y needs a Golay code word")
        elif self.kind == "l":
            object.__setattr__(self, "arg", int(self.arg) % 3)
        elif self.kind not in ("x", "d"):
            raise ValueError(f"unknown generator kind {self.kind!r}")

    def inverse(self) -> "OrthoGen":
        if self.kind == "p":
            return OrthoGen("p", _perm.inv(self.arg))
        if self.kind == "l":
            return OrthoGen("l", -self.arg)
        return self

    def to_text(self) -> str:
        if self.kind == "p":
            return "p:" + gm.perm_str(self.arg)
        if self.kind in ("y", "x", "d"):
            return f"{self.kind}:{int(self.arg):06x}"
        return f"l:{self.arg}"


def perm(p: Sequence[int]) -> OrthoGen:
    return OrthoGen("p", tuple(int(x) for x in p))


def signs(dvec: int) -> OrthoGen:
    return OrthoGen("y", int(dvec))


def xi(k: int) -> OrthoGen:
    return OrthoGen("l", k)


OrthoWord = list  # list[OrthoGen]


def word_to_text(word: Iterable[OrthoGen]) -> str:
    return " ".join(g.to_text() for g in word)


def parse_word(text: str) -> list[OrthoGen]:
    out = []
    for tok in text.split():
        kind, _, arg = tok.partition(":")
        if kind == "p":
            out.append(OrthoGen("p", gm.parse_perm(arg)))
        elif kind in ("y", "x", "d", "f", "e"):
            from . import parker_loop as pl
            if kind in ("d",):
                out.append(OrthoGen("d", int(arg, 16)))
            else:
                k = "y" if kind in ("y", "f") else "x"
                out.append(OrthoGen(k, pl.vector(pl.parse(arg) & 0xFFF)))
        elif kind == "l":
            out.append(OrthoGen("l", int(arg)))
        elif kind == "t":
            raise ValueError("tau does not act on the Leech lattice")
        else:
            raise ValueError(f"bad token {tok!r}")
    return out


def inverse_word(word: Sequence[OrthoGen]) -> list[OrthoGen]:
    return [g.inverse() for g in reversed(word)]


# ---------------------------------------------------------------------------
# integer action

def xi_columns(U: np.ndarray, k: int) -> np.ndarray:
    """Columnwise xi^k on an (..., 24) integer array, with exact halving."""
    k %= 3
    if k == 0:
        return U.copy()
    W = np.asarray(U, dtype=np.int64).reshape(U.shape[:-1] + (6, 4))
    if k == 1:          # w A B
        s = W.sum(-1, keepdims=True)
        W2 = s - 2 * W
        if (W2 & 1).any():
            raise ArithmeticError("halving is not exact")
        W2 = W2 >> 1
        W2[..., 0] = -W2[..., 0]
    else:               # w B A
        W = W.copy()
        W[..., 0] = -W[..., 0]
        s = W.sum(-1, keepdims=True)
        W2 = s - 2 * W
        if (W2 & 1).any():
            raise ArithmeticError("halving is not exact")
        W2 = W2 >> 1
    return W2.reshape(U.shape)


def apply_int(g: OrthoGen, v: np.ndarray) -> np.ndarray:
    """Image v * g of lattice vector(s) v (rows of an array)."""
    v = np.asarray(v, dtype=np.int64)
    if g.kind == "p":
        out = np.empty_like(v)
        out[..., list(g.arg)] = v
        return out
    if g.kind == "y":
        sgn = 1 - 2 * ((int(g.arg) >> np.arange(24)) & 1)
        return v * sgn
    if g.kind == "l":
        return xi_columns(v, g.arg)
    return v.copy()


def apply_int_word(word: Iterable[OrthoGen], v: np.ndarray) -> np.ndarray:
    for g in word:
        v = apply_int(g, v)
    return v


def ortho_matrix(g: OrthoGen) -> np.ndarray:
    """The rational 24x24 matrix of g, scaled by 2 (so it is integral)."""
    return apply_int(g, 2 * np.eye(24, dtype=np.int64)) if g.kind != "l" else \
        _xi_matrix2(g.arg)


def _xi_matrix2(k: int) -> np.ndarray:
    A2 = np.ones((4, 4), dtype=np.int64) - 2 * np.eye(4, dtype=np.int64)
    B = np.diag([-1, 1, 1, 1])
    blk = A2 @ B if k % 3 == 1 else (B @ A2 if k % 3 == 2 else 2 * np.eye(4, dtype=np.int64))
    out = np.zeros((24, 24), dtype=np.int64)
    for c in range(6):
        out[4 * c:4 * c + 4, 4 * c:4 * c + 4] = blk
    return out


# ---------------------------------------------------------------------------
# action on Lambda / 2 Lambda as byte tables of a 24x24 F2 matrix

def _tables_from_images(imgs: Sequence[int]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    tabs = []
    for k in range(3):
        t = np.zeros(256, dtype=np.int64)
        for b in range(8):
            m = 1 << b
            t[m:2 * m] = t[:m] ^ imgs[8 * k + b]
        tabs.append(t)
    return tuple(tabs)


@lru_cache(maxsize=None)
def _unit_preimages() -> np.ndarray:
    return np.array([l2.natural_vector(1 << i) for i in range(24)], dtype=np.int64)


def _images_via_lattice(g: OrthoGen) -> list[int]:
    V = _unit_preimages()
    return l2.reduce_vectors(apply_int(g, V)).tolist()


@lru_cache(maxsize=4096)
def _mod2_tables(g: OrthoGen):
    if g.kind in ("x", "d") or (g.kind == "l" and g.arg == 0):
        imgs = [1 << i for i in range(24)]
    else:
        imgs = _images_via_lattice(g)
    return _tables_from_images(imgs)


def apply_mod2(g: OrthoGen, x):
    """Image of class(es) x under g; x may be an int or an integer array."""
    t0, t1, t2 = _mod2_tables(g)
    if isinstance(x, (int, np.integer)):
        x = int(x)
        return int(t0[x & 0xFF] ^ t1[(x >> 8) & 0xFF] ^ t2[(x >> 16) & 0xFF])
    x = np.asarray(x, dtype=np.int64)
    return t0[x & 0xFF] ^ t1[(x >> 8) & 0xFF] ^ t2[(x >> 16) & 0xFF]


def apply_mod2_word(word: Iterable[OrthoGen], x):
    for g in word:
        x = apply_mod2(g, x)
    return x


def perm_mod2_natural(p: Sequence[int], x: int) -> int:
    """x_pi on Lambda/2Lambda by permuting d and a representative of delta."""
    d, delta = l2.unpack_natural(x)
    d2 = gm.golay_coords(gm.perm_vec(p, gm.golay_vector(d)))
    e2 = gm.cocode_coords(gm.perm_vec(p, gm.syndrome_vector(delta)))
    return l2.pack_natural(d2, e2)


# ---------------------------------------------------------------------------
# symmetric matrices mod 15

_HALF15 = 8  # 2 * 8 = 1 (mod 15)


def conj_sym300(g, M: np.ndarray) -> np.ndarray:
    """M_g^T M M_g (mod 15) for a generator or a word."""
    if isinstance(g, OrthoGen):
        g = [g]
    M = np.asarray(M, dtype=np.int64) % 15
    for h in g:
        if h.kind == "p":
            q = list(h.arg)
            out = np.empty_like(M)
            out[np.ix_(q, q)] = M
            M = out
        elif h.kind == "y":
            s = 1 - 2 * ((int(h.arg) >> np.arange(24)) & 1)
            M = (M * s[:, None] * s[None, :]) % 15
        elif h.kind == "l" and h.arg:
            X = (_xi_matrix2(h.arg) * _HALF15) % 15
            M = (X.T @ M @ X) % 15
    return M
