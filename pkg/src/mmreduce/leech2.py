"""The Leech lattice, Leech lattice mod 2, and some linear algebra mod 3.

Lattice vectors are integer vectors in the basis eta_i of norm 1/8, so
``type(u) = sum(u_i^2) / 16``.  A class of Lambda/2Lambda is packed into
24 bits as ``(d << 12) | e`` where ``d`` are the code coordinates and
``e = delta + theta(d)`` is a "linearized" cocode part.  With this
choice addition in Lambda/2Lambda is XOR; the natural decomposition
``lambda_d + lambda_delta`` is recovered by undoing the theta shift.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import golay_mog as gm
from . import parker_loop as pl
from ._gf2 import parity, solve

THETA = pl._THETA
_PAR12 = pl._PAR12

SUBTYPES = (0, 20, 21, 22, 31, 33, 34, 36, 40, 42, 43, 44, 46, 48)

SHAPES: dict[int, tuple[tuple[tuple[int, int], ...], ...]] = {
    0: (((0, 24),),),
    20: (((4, 2), (0, 22)),),
    21: (((3, 1), (1, 23)),),
    22: (((2, 8), (0, 16)),),
    31: (((5, 1), (1, 23)),),
    33: (((3, 3), (1, 21)),),
    34: (((4, 1), (2, 8), (0, 15)),),
    36: (((2, 12), (0, 12)),),
    40: (((4, 4), (0, 20)),),
    42: (((6, 1), (2, 7), (0, 16)), ((2, 16), (0, 8))),
    43: (((5, 1), (3, 2), (1, 21)), ((3, 5), (1, 19))),
    44: (((4, 2), (2, 8), (0, 14)), ((2, 16), (0, 8))),
    46: (((4, 1), (2, 12), (0, 11)),),
    48: (((8, 1), (0, 23)),),
}


# ---------------------------------------------------------------------------
# packing

def pack_natural(d: int, delta: int) -> int:
    """Class lambda_d + lambda_delta from code and cocode coordinates."""
    d &= 0xFFF
    return (d << 12) | ((delta ^ THETA[d]) & 0xFFF)


def unpack_natural(x: int) -> tuple[int, int]:
    d = (x >> 12) & 0xFFF
    return d, (x & 0xFFF) ^ THETA[d]


def lambda_of(d: int, delta: int = 0) -> int:
    """lambda(x_d x_delta); d may be a signed Parker loop element."""
    return pack_natural(d & 0xFFF, delta)


LAMBDA_OMEGA = pack_natural(gm.OMEGA_COORD, 0)
LAMBDA_BETA = pack_natural(0, gm.BETA_COORD)
LAMBDA_STD_FEASIBLE = LAMBDA_OMEGA ^ LAMBDA_BETA


def to_text(x: int) -> str:
    d, delta = unpack_natural(x)
    return f"d:{d:03x}/δ:{delta:03x}"


def parse(text: str) -> int:
    t = text.strip().replace("delta:", "δ:").replace("e:", "δ:")
    try:
        a, b = t.split("/")
        if not (a.startswith("d:") and b.startswith("δ:")):
            raise ValueError
        return pack_natural(int(a[2:], 16), int(b[2:], 16))
    except ValueError:
        raise ValueError(f"bad Leech mod 2 vector {text!r}") from None


def scalar2(x: int, y: int) -> int:
    """Symplectic form on Lambda/2Lambda."""
    return parity((x >> 12) & y & 0xFFF) ^ parity((y >> 12) & x & 0xFFF)


def qform(x: int) -> int:
    """type(x) mod 2."""
    return parity((x >> 12) & x & 0xFFF)


# ---------------------------------------------------------------------------
# subtypes

def _inside_table() -> tuple[dict[int, int], np.ndarray]:
    """Even cocode elements with a representative inside each octad."""
    octs = gm.octads()
    index = {}
    tab = np.zeros((len(octs), 4096), dtype=bool)
    for k, o in enumerate(octs):
        index[gm.golay_coords(o)] = k
        pts = gm.bits_of(o)
        span = {0}
        for p in pts[1:]:
            c = gm.cocode_coords((1 << pts[0]) | (1 << p))
            span |= {s ^ c for s in span}
        assert len(span) == 64
        tab[k, list(span)] = True
    return index, tab


_OCT_INDEX, _INSIDE = _inside_table()


def _subtype_nat(d: int, delta: int) -> int:
    wd = int(gm.CODE_WEIGHTS[d])
    we = int(gm.COCODE_WEIGHT[delta])
    sc = parity(d & delta)
    if we & 1:
        q = (wd >> 2) & 1
        if we == 1:
            return 21 if sc == q else 31
        # type parity is |d|/4 + <d, delta>; so for |delta| = 3 the
        # condition <d, delta> = |d|/4 gives type 4, not type 3
        return 43 if sc == q else 33
    if wd == 0:
        return (0, 20, 40)[we >> 1]
    if wd == 24:
        return (48, 20, 40)[we >> 1]
    if wd == 12:
        return 46 if sc else 36
    if sc:
        return 34
    o = d if wd == 8 else d ^ gm.OMEGA_COORD
    if _INSIDE[_OCT_INDEX[o], delta]:
        return 22 if ((we >> 1) & 1) == ((1 + (wd >> 3)) & 1) else 42
    return 44


def subtype(x: int) -> int:
    return _subtype_nat(*unpack_natural(x))


def leech_type(x: int) -> int:
    return subtype(x) // 10


def subtype_str(st: int) -> str:
    return f"{st:02d}"


def _subtypes_for_code(d: int) -> np.ndarray:
    """Subtypes of lambda_d + lambda_delta for all natural delta."""
    we = gm.COCODE_WEIGHT.astype(np.int64)
    wd = int(gm.CODE_WEIGHTS[d])
    sc = _PAR12[d & np.arange(4096)].astype(np.int64)
    out = np.zeros(4096, dtype=np.uint8)
    q = (wd >> 2) & 1
    odd = (we & 1) == 1
    out[(we == 1) & (sc == q)] = 21
    out[(we == 1) & (sc != q)] = 31
    out[(we == 3) & (sc == q)] = 43
    out[(we == 3) & (sc != q)] = 33
    ev = ~odd
    if wd in (0, 24):
        out[we == 0] = 0 if wd == 0 else 48
        out[we == 2] = 20
        out[we == 4] = 40
    elif wd == 12:
        out[ev & (sc == 1)] = 46
        out[ev & (sc == 0)] = 36
    else:
        out[ev & (sc == 1)] = 34
        o = d if wd == 8 else d ^ gm.OMEGA_COORD
        ins = _INSIDE[_OCT_INDEX[o]]
        rem1 = ((we >> 1) & 1) == ((1 + (wd >> 3)) & 1)
        base = ev & (sc == 0)
        out[base & ins & rem1] = 22
        out[base & ins & ~rem1] = 42
        out[base & ~ins] = 44
    return out


@lru_cache(maxsize=None)
def subtype_table() -> np.ndarray:
    """Subtype of every packed class, as a uint8 array of length 2^24."""
    tab = np.empty(1 << 24, dtype=np.uint8)
    idx = np.arange(4096)
    for d in range(4096):
        nat = _subtypes_for_code(d)
        tab[d << 12:(d + 1) << 12] = nat[idx ^ THETA[d]]
    return tab


def census() -> dict[int, int]:
    """Number of classes of each subtype, over all 2^24 classes."""
    counts = np.zeros(49, dtype=np.int64)
    for d in range(4096):
        counts += np.bincount(_subtypes_for_code(d), minlength=49)
    return {st: int(counts[st]) for st in SUBTYPES}


def type_census() -> dict[int, int]:
    out = {0: 0, 2: 0, 3: 0, 4: 0}
    for st, n in census().items():
        out[st // 10] += n
    return out


def type2_count_census() -> int:
    return type_census()[2]


# ---------------------------------------------------------------------------
# lattice vectors

def _code_coord_masks() -> list[int]:
    """Masks P_i with parity(b_j & P_i) = [i == j]; linear code coordinates."""
    rows = list(gm.GOLAY_BASIS)
    out = []
    for i in range(12):
        x = solve(rows, [int(i == j) for j in range(12)], 24)
        assert x is not None
        out.append(x)
    return out


def _byte_tables(masks: Sequence[int]) -> np.ndarray:
    tab = np.zeros((3, 256), dtype=np.int64)
    for k in range(3):
        for byte in range(256):
            v = byte << (8 * k)
            tab[k, byte] = sum(parity(m & v) << i for i, m in enumerate(masks))
    return tab


_CODE_TAB = _byte_tables(_code_coord_masks())
_COC_TAB = _byte_tables(gm.GOLAY_BASIS)
_POW2 = (1 << np.arange(24)).astype(np.int64)
_THETA_NP = np.array(THETA, dtype=np.int64)
_LIN_D = (np.arange(4096, dtype=np.int64) << 12) | _THETA_NP
_LAMBDA_0 = np.ones(24, dtype=np.int64)
_LAMBDA_0[0] = -3
_COC_PT0 = gm.cocode_coords(1)


def _lin(vecs: np.ndarray, tab: np.ndarray) -> np.ndarray:
    return tab[0][vecs & 0xFF] ^ tab[1][(vecs >> 8) & 0xFF] ^ tab[2][(vecs >> 16) & 0xFF]


def in_leech(u: Sequence[int]) -> bool:
    u = np.asarray(u, dtype=np.int64)
    if u.shape != (24,):
        return False
    m = int(u[0]) & 1
    if ((u - m) & 1).any():
        return False
    dv = int((((u - m) >> 1) & 1) @ _POW2)
    return gm.is_codeword(dv) and (int(u.sum()) - 4 * m) % 8 == 0


def int_type(u: Sequence[int]) -> int:
    s = int(np.dot(u, u))
    assert s % 16 == 0
    return s // 16


def reduce_vectors(U: np.ndarray) -> np.ndarray:
    """Classes in Lambda/2Lambda of the rows of U (assumed in Lambda)."""
    U = np.atleast_2d(np.asarray(U, dtype=np.int64))
    m = U[:, 0] & 1
    out = np.where(m == 1, _COC_PT0, 0).astype(np.int64)
    U = U - m[:, None] * _LAMBDA_0
    dv = (((U >> 1) & 1) * _POW2).sum(1)
    dc = _lin(dv, _CODE_TAB)
    wd = gm.CODE_WEIGHTS.astype(np.int64)[dc]
    dodec = wd == 12
    out ^= _LIN_D[dc] ^ np.where(dodec, _LIN_D[gm.OMEGA_COORD], 0)
    diag = np.where(dodec, 16, wd // 2)
    U = U - diag[:, None] + 2 * ((dv[:, None] >> np.arange(24)) & 1)
    if (U & 3).any():
        raise ValueError("vector is not in the Leech lattice")
    Z = U >> 2
    tv = ((Z & 1) * _POW2).sum(1)
    out ^= _lin(tv, _COC_TAB)
    s = Z.sum(1)
    if (s & 1).any():
        raise ValueError("vector is not in the Leech lattice")
    out ^= np.where((s >> 1) & 1, _LIN_D[gm.OMEGA_COORD], 0)
    return out


def reduce_vector(u: Sequence[int]) -> int:
    return int(reduce_vectors(np.asarray(u)[None, :])[0])


def natural_vector(x: int) -> np.ndarray:
    """Some (usually long) lattice vector in the class x."""
    d, delta = unpack_natural(x)
    dv = gm.golay_vector(d)
    u = np.full(24, dv.bit_count() // 2, dtype=np.int64)
    u -= 2 * ((dv >> np.arange(24)) & 1)
    for i in gm.bits_of(gm.syndrome_vector(delta)):
        u += 1
        u[i] -= 4
    return u


# ---------------------------------------------------------------------------
# minimal vectors and shortest preimages

@lru_cache(maxsize=None)
def minimal_vectors() -> np.ndarray:
    """All 196560 vectors of type 2, as an int8 array."""
    out = []
    for i, j in itertools.combinations(range(24), 2):
        for si, sj in ((4, 4), (4, -4), (-4, 4), (-4, -4)):
            v = np.zeros(24, dtype=np.int8)
            v[i], v[j] = si, sj
            out.append(v)
    even = [s for s in range(256) if bin(s).count("1") % 2 == 0]
    signs = np.array([[1 - 2 * ((s >> k) & 1) for k in range(8)] for s in even], dtype=np.int8)
    for o in gm.octads():
        pts = gm.bits_of(o)
        block = np.zeros((128, 24), dtype=np.int8)
        block[:, pts] = 2 * signs
        out.extend(block)
    for c in range(4096):
        dv = int(gm.CODE_WORDS[c])
        base = np.where((dv >> np.arange(24)) & 1, -1, 1).astype(np.int8)
        for i in range(24):
            v = base.copy()
            v[i] = -3 * base[i]
            out.append(v)
    arr = np.array(out, dtype=np.int8)
    assert arr.shape == (196560, 24)
    return arr


@lru_cache(maxsize=None)
def _short_index() -> dict[int, int]:
    """Type-2 class -> row of one of its two minimal preimages."""
    mv = minimal_vectors()
    cls = reduce_vectors(mv.astype(np.int64))
    out: dict[int, int] = {}
    for k, c in enumerate(cls.tolist()):
        out.setdefault(c, k)
    assert len(out) == 98280
    return out


@lru_cache(maxsize=None)
def short_classes() -> np.ndarray:
    """Sorted array of the 98280 type-2 classes."""
    return np.array(sorted(_short_index()), dtype=np.int64)


def short_preimage(x: int) -> np.ndarray:
    k = _short_index().get(x)
    if k is None:
        raise ValueError("not a type-2 class")
    return minimal_vectors()[k].astype(np.int64)


def _pair_preimage(x: int, norm: int) -> np.ndarray:
    """A vector of the given squared norm in class x, written as s + t or s - t."""
    sc = short_classes()
    other = sc ^ x
    pos = np.searchsorted(sc, other)
    pos[pos >= len(sc)] = 0
    hit = np.nonzero(sc[pos] == other)[0]
    idx = _short_index()
    mv = minimal_vectors()
    a = np.array([idx[int(c)] for c in sc[hit]])
    b = np.array([idx[int(c)] for c in other[hit]])
    ip = np.einsum("ij,ij->i", mv[a].astype(np.int64), mv[b].astype(np.int64))
    want = (norm - 64) // 2
    k = np.nonzero(np.abs(ip) == abs(want))[0]
    if len(k) == 0:
        raise AssertionError("no decomposition found")
    k = int(k[0])
    s, t = mv[a[k]].astype(np.int64), mv[b[k]].astype(np.int64)
    return s + t if ip[k] == want else s - t


def shortest_preimages(x: int) -> list[np.ndarray]:
    """All shortest lattice vectors in the class x (2 for types 2, 3; 48 for type 4)."""
    t = leech_type(x)
    if t == 0:
        return [np.zeros(24, dtype=np.int64)]
    if t == 2:
        v = short_preimage(x)
        return [v, -v]
    v = _pair_preimage(x, 16 * t)
    if t == 3:
        return [v, -v]
    mv = minimal_vectors().astype(np.int64)
    hit = np.nonzero(mv @ v == 32)[0]
    frame = [v, -v] + [v - 2 * mv[k] for k in hit]
    assert len(frame) == 48
    return frame


def shape(v: Sequence[int]) -> tuple[tuple[int, int], ...]:
    vals, cnt = np.unique(np.abs(np.asarray(v)), return_counts=True)
    return tuple(sorted(((int(a), int(b)) for a, b in zip(vals, cnt)), reverse=True))


def shape_str(sh: Iterable[tuple[int, int]]) -> str:
    return "(" + " ".join(f"{a}^{b}" for a, b in sh) + ")"


@dataclass(frozen=True)
class LeechMod2:
    value: int

    @classmethod
    def parse(cls, text: str) -> "LeechMod2":
        return cls(parse(text))

    @classmethod
    def natural(cls, d: int, delta: int) -> "LeechMod2":
        return cls(pack_natural(d, delta))

    @property
    def d(self) -> gm.GolayWord:
        return gm.GolayWord(unpack_natural(self.value)[0])

    @property
    def delta(self) -> gm.CocodeWord:
        return gm.CocodeWord(unpack_natural(self.value)[1])

    @property
    def subtype(self) -> int:
        return subtype(self.value)

    @property
    def type(self) -> int:
        return self.subtype // 10

    def __add__(self, other: "LeechMod2") -> "LeechMod2":
        return LeechMod2(self.value ^ other.value)

    def __str__(self) -> str:
        return to_text(self.value)


def leech_int_str(u: Sequence[int]) -> str:
    return ",".join(str(int(x)) for x in u)


def parse_leech_int(text: str) -> np.ndarray:
    u = np.array([int(x) for x in text.split(",")], dtype=np.int64)
    if not in_leech(u):
        raise ValueError("vector is not in the Leech lattice")
    return u


# ---------------------------------------------------------------------------
# linear algebra over F3, rows packed as pairs of bit masks

def _f3_rows(M: np.ndarray) -> list[tuple[int, int]]:
    M = np.asarray(M, dtype=np.int64) % 3
    p = ((M == 1) * _POW2[: M.shape[1]]).sum(1)
    n = ((M == 2) * _POW2[: M.shape[1]]).sum(1)
    return list(zip(p.tolist(), n.tolist()))


def _f3_add(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    a1, a2 = a
    b1, b2 = b
    t = (a1 | b2) ^ (a2 | b1)
    return (a2 | b2) ^ t, (a1 | b1) ^ t


def _f3_rref(rows: list[tuple[int, int]], ncols: int) -> tuple[list[tuple[int, int]], list[int]]:
    P = [r[0] for r in rows]
    N = [r[1] for r in rows]
    m = len(P)
    piv: list[int] = []
    r = 0
    for c in range(ncols):
        bit = 1 << c
        k = r
        while k < m and not (P[k] | N[k]) & bit:
            k += 1
        if k == m:
            continue
        P[r], P[k] = P[k], P[r]
        N[r], N[k] = N[k], N[r]
        if N[r] & bit:
            P[r], N[r] = N[r], P[r]
        b1, b2 = P[r], N[r]
        for i in range(m):
            if i == r:
                continue
            a1, a2 = P[i], N[i]
            if a1 & bit:       # subtract the pivot row
                t = (a1 | b1) ^ (a2 | b2)
                P[i], N[i] = (a2 | b1) ^ t, (a1 | b2) ^ t
            elif a2 & bit:     # add the pivot row
                t = (a1 | b2) ^ (a2 | b1)
                P[i], N[i] = (a2 | b2) ^ t, (a1 | b1) ^ t
        piv.append(c)
        r += 1
        if r == m:
            break
    return list(zip(P[:r], N[:r])), piv


_RREF_MEMO: dict = {}


def _rref_shift(M: np.ndarray, k: int):
    M = np.asarray(M, dtype=np.int64)
    key = (M.tobytes(), M.shape, k % 3)
    hit = _RREF_MEMO.get(key)
    if hit is None:
        n = M.shape[0]
        hit = _f3_rref(_f3_rows(M - k * np.eye(n, dtype=np.int64)), n)
        if len(_RREF_MEMO) > 256:
            _RREF_MEMO.clear()
        _RREF_MEMO[key] = hit
    return hit


def rank3(M: np.ndarray, k: int = 0) -> int:
    """Rank of M - k*I over F3."""
    return len(_rref_shift(M, k)[1])


def kernel3(M: np.ndarray, k: int = 0) -> np.ndarray:
    """Basis (rows, entries 0..2) of the F3 kernel of M - k*I."""
    n = np.shape(M)[0]
    R, piv = _rref_shift(M, k)
    out = []
    for f in range(n):
        if f in piv:
            continue
        x = np.zeros(n, dtype=np.int64)
        x[f] = 1
        bit = 1 << f
        for (p, q), c in zip(R, piv):
            x[c] = (2 if p & bit else 1 if q & bit else 0)  # -R[c, f]
        out.append(x)
    return np.array(out, dtype=np.int64).reshape(len(out), n)


def _res_key(p: int, n: int) -> int:
    return p | (n << 24)


@lru_cache(maxsize=None)
def _min_res() -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    mv = minimal_vectors().astype(np.int64) % 3
    p = ((mv == 1) * _POW2).sum(1)
    n = ((mv == 2) * _POW2).sum(1)
    keys = p | (n << 24)
    order = np.argsort(keys)
    return p, n, keys[order], order


def lift3(w3: Sequence[int]) -> np.ndarray | None:
    """The unique lattice vector of type 2, 3 or 4 congruent to w3 mod 3, if any."""
    w3 = np.asarray(w3, dtype=np.int64) % 3
    wp = int(((w3 == 1) * _POW2).sum())
    wn = int(((w3 == 2) * _POW2).sum())
    if wp == 0 and wn == 0:
        return None
    P, N, keys, order = _min_res()
    mv = minimal_vectors()
    key = _res_key(wp, wn)
    j = np.searchsorted(keys, key)
    if j < len(keys) and keys[j] == key:
        return mv[order[j]].astype(np.int64)
    # w3 - s for every minimal s, computed bitwise
    a1, a2 = np.int64(wp), np.int64(wn)
    b1, b2 = N, P                      # -s
    t = (a1 | b2) ^ (a2 | b1)
    r1, r2 = (a2 | b2) ^ t, (a1 | b1) ^ t
    rk = r1 | (r2 << 24)
    pos = np.searchsorted(keys, rk)
    pos[pos >= len(keys)] = 0
    hit = np.nonzero(keys[pos] == rk)[0]
    for s in hit:
        v = mv[s].astype(np.int64) + mv[order[pos[s]]].astype(np.int64)
        if int(v @ v) <= 64:
            return v
    return None


def ker3(M: np.ndarray, k: int = 0) -> frozenset[int]:
    """Classes mod 2 of lattice vectors of type 2..4 in the kernel of M - kI mod 3.

    Empty unless the kernel over F3 is one-dimensional.
    """
    return ker3_info(M, k)[1]


def ker3_info(M: np.ndarray, k: int = 0) -> tuple[int, frozenset[int]]:
    """(kernel dimension, lifted classes)."""
    K = kernel3(M, k)
    if len(K) != 1:
        return len(K), frozenset()
    v = lift3(K[0])
    if v is None:
        return 1, frozenset()
    return 1, frozenset({reduce_vector(v)})
