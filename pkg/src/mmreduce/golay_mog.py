"""The binary Golay code in MOG co-ordinates, its cocode, and M24.

Points are numbered ``4*col + row`` for the 6 columns and 4 rows of the
MOG, with the rows labelled 0, 1, w, w^2 in F4.  A 24-bit vector lies in
the code iff every column has the parity of the top row and the column
"scores" (sum of the row labels of set bits) form a hexacode word.  With
this numbering the union of any two columns is an octad.

Code and cocode are represented by 12-bit coordinate vectors.  The code
basis ``GOLAY_BASIS`` ends with Omega (the all-one word), and the cocode
coordinates of a vector ``v`` are the parities ``|b_i & v|``; so the two
bases are dual and the scalar product is a plain parity of ``d & delta``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import _perm
from ._gf2 import echelon, nullspace, parity

OMEGA_VEC = 0xFFFFFF
N_POINTS = 24
MOG_COLUMNS = tuple(0xF << (4 * c) for c in range(6))


# ---------------------------------------------------------------------------
# hexacode and code construction

def _f4_mul(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    log = {1: 0, 2: 1, 3: 2}
    return (1, 2, 3)[(log[a] + log[b]) % 3]


def hexacode_words() -> list[tuple[int, ...]]:
    """The 64 words (a,b,c,d,e,f) with a+b = c+d = e+f = s and a+c+e = w*s."""
    out = []
    for w in itertools.product(range(4), repeat=6):
        a, b, c, d, e, f = w
        s = a ^ b
        if c ^ d == s and e ^ f == s and a ^ c ^ e == _f4_mul(2, s):
            out.append(w)
    return out


def _mog_constraints() -> list[int]:
    rows = []
    top = sum(1 << (4 * c) for c in range(6))
    for c in range(6):
        rows.append(top ^ MOG_COLUMNS[c])
    hexa = [sum(x << (2 * i) for i, x in enumerate(w)) for w in hexacode_words()]
    for h in nullspace(hexa, 12):
        r = 0
        for c in range(6):
            for j in (1, 2, 3):
                if parity(h & (j << (2 * c))):
                    r |= 1 << (4 * c + j)
        rows.append(r)
    return rows


def _build_basis() -> list[int]:
    rows = echelon(nullspace(_mog_constraints(), 24))
    assert len(rows) == 12
    # full reduced echelon: Omega is the sum of all rows, so it may replace
    # the row with the highest leading bit
    rows.sort(key=lambda r: r.bit_length())
    return rows[:-1] + [OMEGA_VEC]


GOLAY_BASIS: tuple[int, ...] = tuple(_build_basis())
OMEGA_COORD = 1 << 11


def _span_table(basis: Sequence[int]) -> np.ndarray:
    out = np.zeros(1 << len(basis), dtype=np.uint32)
    for i, b in enumerate(basis):
        k = 1 << i
        out[k:2 * k] = out[:k] ^ b
    return out


CODE_WORDS = _span_table(GOLAY_BASIS)
_CODE_INDEX = {int(v): i for i, v in enumerate(CODE_WORDS)}
CODE_WEIGHTS = np.array([bin(int(v)).count("1") for v in CODE_WORDS], dtype=np.int8)


def _cocode_tables() -> list[list[int]]:
    tabs = []
    for k in range(3):
        t = []
        for byte in range(256):
            v = byte << (8 * k)
            t.append(sum(parity(b & v) << i for i, b in enumerate(GOLAY_BASIS)))
        tabs.append(t)
    return tabs


_COC_T0, _COC_T1, _COC_T2 = _cocode_tables()


def golay_vector(coords: int) -> int:
    return int(CODE_WORDS[coords & 0xFFF])


def golay_coords(v: int) -> int:
    try:
        return _CODE_INDEX[v]
    except KeyError:
        raise ValueError(f"{v:06x} is not a Golay code word") from None


def is_codeword(v: int) -> bool:
    return v in _CODE_INDEX


def cocode_coords(v: int) -> int:
    return _COC_T0[v & 0xFF] ^ _COC_T1[(v >> 8) & 0xFF] ^ _COC_T2[(v >> 16) & 0xFF]


def _syndrome_table() -> tuple[np.ndarray, np.ndarray]:
    rep = np.full(4096, -1, dtype=np.int64)
    for w in range(4):
        for pts in itertools.combinations(range(24), w):
            v = sum(1 << p for p in pts)
            c = cocode_coords(v)
            assert rep[c] < 0
            rep[c] = v
    # the remaining cosets are sextets; keep the tetrad through point 0
    for pts in itertools.combinations(range(1, 24), 3):
        v = 1 | sum(1 << p for p in pts)
        c = cocode_coords(v)
        if rep[c] < 0:
            rep[c] = v
    assert (rep >= 0).all()
    wt = np.array([bin(int(x)).count("1") for x in rep], dtype=np.int8)
    return rep.astype(np.uint32), wt


SYNDROME_REP, COCODE_WEIGHT = _syndrome_table()


def syndrome_vector(coords: int) -> int:
    """Minimum weight representative of a cocode element."""
    return int(SYNDROME_REP[coords & 0xFFF])


def cocode_weight(coords: int) -> int:
    return int(COCODE_WEIGHT[coords & 0xFFF])


def sextet(coords: int) -> list[int]:
    """The six tetrads of a weight-4 cocode element, sorted by least point."""
    t = syndrome_vector(coords)
    if bin(t).count("1") != 4:
        raise ValueError("cocode element has weight < 4")
    out = [t]
    rest = OMEGA_VEC ^ t
    while rest:
        low = rest & -rest
        # the tetrad through the lowest free point
        p = low.bit_length() - 1
        for tt in _tetrads_through(p, coords):
            if tt & rest == tt:
                out.append(tt)
                rest ^= tt
                break
        else:  # pragma: no cover
            raise AssertionError("sextet decomposition failed")
    return sorted(out, key=lambda x: x & -x)


def _tetrads_through(p: int, coords: int) -> Iterable[int]:
    # v has the same coset as {p} + weight-3 syndrome of (coords + {p})
    r = syndrome_vector(coords ^ cocode_coords(1 << p))
    yield r | (1 << p)


def octad_of(points: Iterable[int]) -> int:
    """The unique octad containing five given points."""
    v = sum(1 << p for p in points)
    if bin(v).count("1") != 5:
        raise ValueError("need exactly five distinct points")
    o = v | syndrome_vector(cocode_coords(v))
    assert bin(o).count("1") == 8
    return o


def weight(v: int) -> int:
    return v.bit_count()


def bits_of(v: int) -> list[int]:
    return [i for i in range(24) if (v >> i) & 1]


def vector_of(points: Iterable[int]) -> int:
    v = 0
    for p in points:
        v |= 1 << p
    return v


def scalar(d_coords: int, delta_coords: int) -> int:
    """<d, delta> from code and cocode coordinates."""
    return parity(d_coords & delta_coords)


@lru_cache(maxsize=None)
def octads() -> tuple[int, ...]:
    return tuple(int(v) for v, w in zip(CODE_WORDS, CODE_WEIGHTS) if w == 8)


@lru_cache(maxsize=None)
def dodecads() -> tuple[int, ...]:
    return tuple(int(v) for v, w in zip(CODE_WORDS, CODE_WEIGHTS) if w == 12)


def weight_distribution() -> dict[int, int]:
    vals, cnt = np.unique(CODE_WEIGHTS, return_counts=True)
    return {int(a): int(b) for a, b in zip(vals, cnt)}


# ---------------------------------------------------------------------------
# value types

@dataclass(frozen=True)
class GolayWord:
    coords: int

    @classmethod
    def from_vector(cls, v: int) -> "GolayWord":
        return cls(golay_coords(v))

    @classmethod
    def parse(cls, text: str) -> "GolayWord":
        return cls.from_vector(int(text, 16))

    @property
    def bits(self) -> int:
        return golay_vector(self.coords)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def __str__(self) -> str:
        return f"{self.bits:06x}"


@dataclass(frozen=True)
class CocodeWord:
    coords: int

    @classmethod
    def from_vector(cls, v: int) -> "CocodeWord":
        return cls(cocode_coords(v))

    @classmethod
    def parse(cls, text: str) -> "CocodeWord":
        return cls.from_vector(int(text, 16))

    @property
    def syndrome(self) -> int:
        return syndrome_vector(self.coords)

    @property
    def weight(self) -> int:
        return cocode_weight(self.coords)

    def tetrads(self) -> list[int]:
        return sextet(self.coords) if self.weight == 4 else [self.syndrome]

    def __str__(self) -> str:
        return f"{self.syndrome:06x}"


def syndrome(v: int) -> CocodeWord:
    return CocodeWord(cocode_coords(v))


BETA_VEC = 0b1100            # the pair {2, 3}
BETA_COORD = cocode_coords(BETA_VEC)


# ---------------------------------------------------------------------------
# permutations

Perm24 = tuple


def perm_vec(p: Sequence[int], v: int) -> int:
    """Image of the bit vector v under the point map i -> p[i]."""
    out = 0
    while v:
        low = v & -v
        out |= 1 << p[low.bit_length() - 1]
        v ^= low
    return out


def perm_str(p: Sequence[int]) -> str:
    return ",".join(str(x) for x in p)


def parse_perm(text: str) -> Perm24:
    p = tuple(int(x) for x in text.split(","))
    if not _perm.is_perm(p, 24):
        raise ValueError("not a permutation of 0..23")
    return p


def preserves_code(p: Sequence[int]) -> bool:
    return all(perm_vec(p, b) in _CODE_INDEX for b in GOLAY_BASIS)


def _complete(images: dict[int, int]) -> Perm24 | None:
    """Extend a partial map on 7 points to an automorphism, if possible.

    Every further point is pinned down by which octads through five of
    the given points contain it; candidates are tried with backtracking.
    """
    src = list(images)
    subsets = list(itertools.combinations(src, 5))
    oct_src = [octad_of(s) for s in subsets]
    oct_dst = [octad_of([images[x] for x in s]) for s in subsets]
    used = set(images.values())
    cand = {}
    for z in range(24):
        if z in images:
            continue
        pat = [(o >> z) & 1 for o in oct_src]
        cand[z] = [y for y in range(24) if y not in used
                   and all(((o >> y) & 1) == b for o, b in zip(oct_dst, pat))]
    order = sorted(cand, key=lambda z: len(cand[z]))
    full = dict(images)

    def rec(k: int) -> Perm24 | None:
        if k == len(order):
            p = tuple(full[i] for i in range(24))
            return p if preserves_code(p) else None
        z = order[k]
        taken = set(full.values())
        for y in cand[z]:
            if y not in taken:
                full[z] = y
                r = rec(k + 1)
                if r is not None:
                    return r
                del full[z]
        return None

    return rec(0)


_BASE7 = (0, 1, 2, 3, 4, 5, 8)   # six points of the octad {0..7} and one outside


def _random_automorphism(rng: np.random.Generator) -> Perm24:
    while True:
        t = [int(x) for x in rng.permutation(24)[:5]]
        o = octad_of(t)
        inside = [x for x in bits_of(o) if x not in t]
        outside = bits_of(OMEGA_VEC ^ o)
        t.append(inside[rng.integers(len(inside))])
        t.append(outside[rng.integers(len(outside))])
        p = _complete(dict(zip(_BASE7, t)))
        if p is not None:
            return p


M24_ORDER = 244823040


class M24Chain:
    """Stabilizer chain of M24 with base beginning 0, 1, 2, 3, 4, 5."""

    def __init__(self, seed: int = 24):
        rng = np.random.default_rng(seed)
        gens = [_random_automorphism(rng) for _ in range(2)]
        chain = _perm.StabChain(24, gens)
        while chain.order() != M24_ORDER:
            gens.append(_random_automorphism(rng))
            chain = _perm.StabChain(24, gens)
        self.gens = gens
        self.chain = chain

    def order(self) -> int:
        return self.chain.order()

    def contains(self, p: Sequence[int]) -> bool:
        return self.chain.contains(tuple(p))

    def to_base(self, pts: Sequence[int]) -> Perm24 | None:
        """An element mapping the base prefix onto the tuple ``pts``."""
        return self.chain.base_image(pts)


@lru_cache(maxsize=None)
def m24_chain() -> M24Chain:
    return M24Chain()


def m24_member(p: Sequence[int]) -> bool:
    p = tuple(p)
    return _perm.is_perm(p, 24) and preserves_code(p)


def m24_from_tuples(src: Sequence[int], dst: Sequence[int]) -> Perm24:
    """Some p in M24 with p(src[i]) = dst[i].

    Works for any tuples of at most five points, and for six-point tuples
    contained in octads (M24 is transitive on such ordered hexads).
    """
    src, dst = tuple(src), tuple(dst)
    if len(src) != len(dst) or len(set(src)) != len(src) or len(set(dst)) != len(dst):
        raise ValueError("tuples must be of equal length with distinct points")
    if src == dst:
        return _perm.identity(24)
    ch = m24_chain()
    hs, hd = ch.to_base(src), ch.to_base(dst)
    if hs is None or hd is None:
        raise ValueError("no such permutation")
    p = _perm.mul(_perm.inv(hs), hd)
    assert all(p[a] == b for a, b in zip(src, dst))
    return p


@lru_cache(maxsize=None)
def m24_stabilizer_of_pair(pair: tuple[int, int] = (2, 3)) -> tuple[Perm24, ...]:
    """Generators of the setwise stabilizer of a pair of points."""
    a, b = pair
    sub = _perm.StabChain(24, m24_chain().gens, prefix=(a, b))
    gens = sub.strong_gens(2)
    swap = m24_from_tuples((a, b), (b, a))
    return tuple(gens) + (swap,)


def pair_stabilizer_chain(pair: tuple[int, int] = (2, 3)) -> _perm.StabChain:
    return _perm.StabChain(24, m24_stabilizer_of_pair(pair), prefix=pair)
