"""Axes of 2A involutions, reduced modulo 15.

An axis is stored through its two visible parts: the symmetric matrix
``A`` (the 300_x component, entries mod 15) and a sparse map ``S`` from
type-2 classes of Lambda/2Lambda to the 98280_x coordinates mod 15.
The coordinate of a class refers to the basis vector X_r with
x_r = x_d x_delta, d the positive Parker loop element over the natural
code word of the class.

The classifier identifies the twelve G_x0-orbits from norm_M, ranks mod
3, the mod-3 kernel and the sets S_k; the ten H-orbits of feasible axes
add the digit M(v, lambda_beta) != 0.  Each non-terminal orbit comes with
a set U(v) of classes from which a frame-reduction word h is built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import frame_reduce as fr
from . import golay_mog as gm
from . import group_n0 as n0
from . import gx0_action as gx
from . import leech2 as l2
from . import parker_loop as pl
from ._gf2 import echelon, nullspace

LABELS = ("2A", "2B", "4A", "4B", "4C", "6A", "6C", "6F", "8B", "10A", "10B", "12C")
FEASIBLE_LABELS = ("2A0", "2A1", "2B0", "2B1", "4A1", "4B1", "4C1", "6A1", "6C1", "10A1")
NORMS = dict(zip(LABELS, (4, 8, 14, 13, 3, 4, 5, 14, 2, 4, 8, 10)))

# number of type-4 vectors in U(v), and |U_f(v)|
U4_SIZES = {"2B": 135, "4A": 1, "4B": 63, "4C": 15, "6A": 891, "6C": 27,
            "6F": 135, "8B": 1, "10A": 100, "10B": 135, "12C": 135}
UF_SIZES = {"2B0": 15, "2B1": 63, "4A1": 1, "4B1": 31, "4C1": 15,
            "6A1": 891, "6C1": 27, "10A1": 100}

# orbits reachable by v h tau^(+-1)
TARGETS = {"2B": ("2A",), "4A": ("2A",), "4B": ("2B",), "4C": ("2B",),
           "6A": ("4A",), "6C": ("4A",), "6F": ("4C",), "8B": ("4A",),
           "10A": ("6A",), "10B": ("4B", "4C"), "12C": ("4B", "6A")}
FEASIBLE_TARGETS = {"2A0": ("2A1",), "2B0": ("2A0",), "2B1": ("2A0",),
                    "4A1": ("2A0",), "4B1": ("2B0", "2B1"), "4C1": ("2B0",),
                    "6A1": ("4A1",), "6C1": ("4A1",), "10A1": ("6A1",)}
DEPTH = {"2A": 0, "2B": 1, "4A": 1, "4B": 2, "4C": 2, "6A": 2, "6C": 2, "8B": 2,
         "6F": 3, "10A": 3, "10B": 3, "12C": 3}
FEASIBLE_DEPTH = {"2A1": 0, "2A0": 1, "2B0": 2, "2B1": 2, "4A1": 2, "4B1": 3,
                  "4C1": 3, "6A1": 3, "6C1": 3, "10A1": 4}


def abs15(x: int) -> int:
    x %= 15
    return min(x, 15 - x)


@dataclass
class AxisVector:
    A: np.ndarray
    S: dict = field(default_factory=dict)

    def __post_init__(self):
        A = np.asarray(self.A, dtype=np.int64) % 15
        if A.shape != (24, 24) or not np.array_equal(A, A.T):
            raise ValueError("A must be a symmetric 24x24 matrix")
        self.A = A
        self.S = {int(k): int(v) % 15 for k, v in self.S.items() if int(v) % 15}

    def copy(self) -> "AxisVector":
        return AxisVector(self.A.copy(), dict(self.S))

    def __eq__(self, other) -> bool:
        return (isinstance(other, AxisVector) and np.array_equal(self.A, other.A)
                and self.S == other.S)

    def apply(self, g) -> "AxisVector":
        """v * g for a generator or a word."""
        word = [g] if isinstance(g, gx.OrthoGen) else list(g)
        A, S = self.A, self.S
        for h in word:
            A = gx.conj_sym300(h, A)
            S = _apply_S(h, S)
        return AxisVector(A, S)

    # -- text format ---------------------------------------------------
    def to_text(self) -> str:
        lines = ["AXIS mod15"]
        for i in range(24):
            for j in range(i, 24):
                if self.A[i, j]:
                    lines.append(f"A {i} {j} {int(self.A[i, j])}")
        for k in sorted(self.S):
            lines.append(f"S {l2.to_text(k)} {self.S[k]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "AxisVector":
        rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not rows or " ".join(rows[0]) != "AXIS mod15":
            raise ValueError("missing 'AXIS mod15' header")
        A = np.zeros((24, 24), dtype=np.int64)
        S: dict[int, int] = {}
        for r in rows[1:]:
            if r[0] == "A" and len(r) == 4:
                i, j, val = int(r[1]), int(r[2]), int(r[3])
                if not (0 <= i <= j < 24):
                    raise ValueError(f"bad matrix index in {' '.join(r)!r}")
                A[i, j] = A[j, i] = val % 15
            elif r[0] == "S" and len(r) == 3:
                key = l2.parse(r[1])
                if l2.leech_type(key) != 2:
                    raise ValueError(f"S key {r[1]} is not of type 2")
                S[key] = int(r[2]) % 15
            else:
                raise ValueError(f"bad axis line {' '.join(r)!r}")
        return cls(A, S)

    @classmethod
    def read(cls, path) -> "AxisVector":
        return cls.from_text(Path(path).read_text())

    def write(self, path) -> None:
        Path(path).write_text(self.to_text())


def _canon(q: tuple[int, int]) -> tuple[int, bool]:
    e, d = q
    return l2.pack_natural(e & 0xFFF, d), bool(e & pl.SIGN)


def _rep(key: int) -> tuple[int, int]:
    d, delta = l2.unpack_natural(key)
    return d, delta


def _apply_S(h: gx.OrthoGen, S: dict) -> dict:
    if not S:
        return S
    k = h.kind
    if k == "l":
        if h.arg == 0:
            return S
        keys = np.fromiter(S.keys(), dtype=np.int64, count=len(S))
        img = gx.apply_mod2(h, keys)
        return dict(zip(img.tolist(), S.values()))
    out = {}
    if k == "x" or k == "d":
        other = l2.lambda_of(gm.golay_coords(int(h.arg))) if k == "x" else l2.lambda_of(0, gm.cocode_coords(int(h.arg)))
        for key, val in S.items():
            out[key] = (-val) % 15 if l2.scalar2(key, other) else val
        return out
    if k == "p":
        a = pl.AutPl.from_perm(h.arg)
        conj = lambda q: n0.q_conj_aut(a, q)
    else:  # 'y'
        f = pl.from_vector(int(h.arg))
        conj = lambda q: n0.q_conj_y(f, q)
    for key, val in S.items():
        nk, neg = _canon(conj(_rep(key)))
        out[nk] = (-val) % 15 if neg else val
    return out


# ---------------------------------------------------------------------------
# basic invariants

def norm_M(v: AxisVector) -> int:
    return int((v.A * v.A).sum() % 15)


def eval_M(v: AxisVector, lam) -> int:
    lam = int(getattr(lam, "value", lam))
    if l2.leech_type(lam) != 2:
        raise ValueError("eval_M needs a type-2 vector")
    w = l2.short_preimage(lam).astype(np.int64)
    return int(w @ v.A @ w % 15)


def s_set(v: AxisVector, k: int) -> list[int]:
    return sorted(key for key, val in v.S.items() if abs15(val) == k % 15)


def rank3(v: AxisVector, k: int = 0) -> int:
    return l2.rank3(v.A, k)


def ker3(v: AxisVector, k: int = 0) -> frozenset[int]:
    return l2.ker3(v.A, k)


# ---------------------------------------------------------------------------
# subsets of Lambda/2Lambda

def span_basis(vecs: Iterable[int]) -> list[int]:
    return echelon(list(vecs))


def _combos(basis: Sequence[int]) -> list[int]:
    out = [0]
    for b in basis:
        out += [x ^ b for x in out]
    return sorted(out)


def span2(vecs: Iterable[int]) -> list[int]:
    """All elements of the F2-span."""
    return _combos(span_basis(vecs))


def radical_basis(vecs: Iterable[int]) -> list[int]:
    B = span_basis(vecs)
    n = len(B)
    # Gram matrix rows as bit masks; the radical is its null space
    rows = [sum(l2.scalar2(B[i], B[j]) << j for j in range(n)) for i in range(n)]
    out = []
    for c in nullspace(rows, n):
        x = 0
        for j in range(n):
            if c >> j & 1:
                x ^= B[j]
        out.append(x)
    return echelon(out)


def radical(vecs: Iterable[int]) -> list[int]:
    return _combos(radical_basis(vecs))


def sumset(U1: Iterable[int], U2: Iterable[int]) -> list[int]:
    U2 = list(U2)
    return sorted({a ^ b for a in U1 for b in U2})


def type4(U: Iterable[int]) -> list[int]:
    return sorted(x for x in U if l2.leech_type(x) == 4)


# ---------------------------------------------------------------------------
# classification

def _ker_single(v: AxisVector, k: int, t: int) -> int | None:
    K = ker3(v, k)
    if len(K) != 1:
        return None
    (lam,) = K
    return lam if l2.leech_type(lam) == t else None


def classify(v: AxisVector) -> str:
    nm = norm_M(v)
    label = None
    if nm == 4:
        r = rank3(v, 2)
        if r == 23:
            lam = _ker_single(v, 2, 2)
            if lam is not None:
                label = {4: "2A", 7: "6A"}.get(eval_M(v, lam))
        elif r == 2:
            label = "10A"
    elif nm == 8:
        label = {8: "2B", 24: "10B"}.get(rank3(v, 0))
    elif nm == 14:
        r = rank3(v, 0)
        if r == 23 and _ker_single(v, 0, 4) is not None:
            label = "4A"
        elif r == 8:
            label = "6F"
    else:
        label = {13: "4B", 3: "4C", 5: "6C", 2: "8B", 10: "12C"}.get(nm)
    if label is None:
        raise ValueError(f"no orbit matched (norm {nm})")
    return label


def classify_feasible(v: AxisVector) -> str:
    label = classify(v) + ("0" if eval_M(v, l2.LAMBDA_BETA) == 0 else "1")
    if label not in FEASIBLE_LABELS:
        raise ValueError(f"{label} is not an orbit of feasible axes")
    return label


def u_sets(v: AxisVector, label: str | None = None) -> tuple[list[int], list[int]]:
    """U(v) and its type-4 members."""
    label = label or classify(v)
    S = lambda k: s_set(v, k)
    if label == "2A":
        U: list[int] = []
    elif label in ("2B", "6C"):
        U = span2(S(4 if label == "2B" else 3))
    elif label == "4A":
        U = sorted(ker3(v, 0))
    elif label in ("4B", "4C"):
        U = radical(S(1))
    elif label == "6A":
        U = sumset([_ker_single(v, 2, 2)], S(5))
    elif label in ("6F", "12C"):
        U = radical(S(7))
    elif label == "8B":
        U = sumset(S(1), S(1))
    elif label == "10A":
        U = sumset(S(3), S(1))
    elif label == "10B":
        U = radical(S(4))
    else:
        raise ValueError(f"unknown label {label!r}")
    U4 = type4(U)
    if label != "2A" and not U4:
        raise ValueError(f"U(v) has no type-4 vector; axis is not in orbit {label}")
    return U, U4


def u_feasible(v: AxisVector, label: str | None = None) -> list[int]:
    label = label or classify_feasible(v)
    if label in ("2A0", "2A1"):
        raise ValueError("U_f is not used for the '2A' orbits")
    _, U4 = u_sets(v, label[:-1])
    out = sorted(x ^ l2.LAMBDA_BETA for x in U4 if l2.leech_type(x ^ l2.LAMBDA_BETA) == 2)
    for x in out:
        assert fr.is_feasible(x)
    if not out:
        raise ValueError("U_f(v) is empty; axis is not feasible or misclassified")
    return out


# ---------------------------------------------------------------------------
# one reduction step

@dataclass
class NextStep:
    label: str
    lam: int
    word: list
    tau_exponents: tuple = (1, -1)
    targets: tuple = ()
    axis: AxisVector | None = None

    def to_text(self) -> str:
        return (f"orbit {self.label}\nlambda {l2.to_text(self.lam)}\n"
                f"word {gx.word_to_text(self.word)}\n"
                f"tau {' '.join(f'{k:+d}' for k in self.tau_exponents)}\n"
                f"targets {' '.join(self.targets)}")


def next_step(v: AxisVector, mode: str = "monster") -> NextStep:
    """Choose lambda_r, build h with lambda_r h = lambda_Omega (or the feasible target)."""
    if mode == "monster":
        label = classify(v)
        if label == "2A":
            raise ValueError("'2A' is terminal; use reduce_axis_2A")
        lam = min(u_sets(v, label)[1])
        word = fr.reduce_type4(lam).word
        targets = TARGETS[label]
    elif mode == "H":
        label = classify_feasible(v)
        if label == "2A1":
            raise ValueError("'2A1' is terminal")
        if label == "2A0":
            lam = _ker_single(v, 2, 2)
        else:
            lam = min(u_feasible(v, label))
        word = fr.reduce_feasible(lam).word
        targets = FEASIBLE_TARGETS[label]
    else:
        raise ValueError("mode must be 'monster' or 'H'")
    return NextStep(label, lam, word, (1, -1), targets, v.apply(word))


# ---------------------------------------------------------------------------
# the orbit '2A'

def _plus_matrix() -> np.ndarray:
    A = np.zeros((24, 24), dtype=np.int64)
    A[2, 2] = A[3, 3] = 1
    A[2, 3] = A[3, 2] = -1
    return A % 15


def v_plus() -> AxisVector:
    return AxisVector(_plus_matrix(), {l2.LAMBDA_BETA: -2})


def v_minus() -> AxisVector:
    return AxisVector(_plus_matrix(), {l2.LAMBDA_BETA: 2})


def axis_2A(lam, sign: int = -1) -> AxisVector:
    """ax(x_(+-r)) for type-2 lambda_r; sign -1 gives v+ at lambda_beta."""
    lam = int(getattr(lam, "value", lam))
    if l2.leech_type(lam) != 2:
        raise ValueError("axis_2A needs a type-2 vector")
    w = l2.short_preimage(lam).astype(np.int64)
    # w^T w / 16, and 16 = 1 (mod 15)
    A = np.outer(w, w) % 15
    return AxisVector(A, {lam: 2 if sign > 0 else -2})


def _beta_flip_word() -> gx.OrthoGen:
    for c in range(1, 4096):
        if gm.scalar(c, gm.BETA_COORD):
            return gx.OrthoGen("x", gm.golay_vector(c))
    raise AssertionError


def reduce_axis_2A(v: AxisVector, check: bool = True) -> list:
    """A word mapping an axis of orbit '2A' to v+."""
    if check and classify(v) != "2A":
        raise ValueError("axis is not in orbit '2A'")
    lam = _ker_single(v, 2, 2)
    if lam is None:
        raise ValueError("axis is not in orbit '2A'")
    word = list(fr.reduce_type2(lam).word)
    w = v.apply(word)
    if w.S.get(l2.LAMBDA_BETA) == 2:
        word.append(_beta_flip_word())
    return word


# ---------------------------------------------------------------------------
# estimator-style wrapper

class OrbitClassifier:
    """Batch front end with the usual fit/predict calls.

    Nothing is learned: the orbit predicates are fixed, so ``fit`` only
    checks its input and returns self.
    """

    def __init__(self, feasible: bool = False):
        self.feasible = feasible

    def get_params(self, deep: bool = True) -> dict:
        return {"feasible": self.feasible}

    def set_params(self, **params) -> "OrbitClassifier":
        for k, v in params.items():
            if k not in self.get_params():
                raise ValueError(f"unknown parameter {k!r}")
            setattr(self, k, v)
        return self

    def fit(self, X, y=None) -> "OrbitClassifier":
        for v in X:
            if not isinstance(v, AxisVector):
                raise TypeError("expected AxisVector items")
        self.labels_ = FEASIBLE_LABELS if self.feasible else LABELS
        return self

    def predict(self, X) -> list[str]:
        f = classify_feasible if self.feasible else classify
        return [f(v) for v in X]

    def fit_predict(self, X, y=None) -> list[str]:
        return self.fit(X).predict(X)
