"""Corank statistics of random symmetric matrices and the v71 search cost.

Adding a random row and column to a symmetric matrix of corank k gives
corank k-1, k, k+1 with probabilities 1 - q^-k, q^-k - q^-(k+1), q^-(k+1).
Iterating from the empty matrix gives the exact corank distribution.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

TYPE4_VECTORS = 398034000   # type-4 vectors in the Leech lattice
ORDER71_COST = 70           # group operations per candidate vector


@dataclass(frozen=True)
class CorankDistribution:
    q: int
    n: int
    p: tuple  # p[k] = Pr(corank = k), exact

    def __getitem__(self, k: int) -> Fraction:
        return self.p[k] if 0 <= k < len(self.p) else Fraction(0)

    def total(self) -> Fraction:
        return sum(self.p, Fraction(0))

    def rows(self, digits: int = 6) -> list[tuple[int, str]]:
        return [(k, f"{float(x):.{digits}f}") for k, x in enumerate(self.p)]


def corank_step(p: list[Fraction], q: int) -> list[Fraction]:
    out = [Fraction(0)] * (len(p) + 1)
    for k, x in enumerate(p):
        if not x:
            continue
        a = Fraction(1, q ** k)
        b = Fraction(1, q ** (k + 1))
        if k:
            out[k - 1] += x * (1 - a)
        out[k] += x * (a - b)
        out[k + 1] += x * b
    return out


def corank_chain(q: int, n: int) -> CorankDistribution:
    if q < 2 or n < 0:
        raise ValueError("need q >= 2 and n >= 0")
    p = [Fraction(1)]
    for _ in range(n):
        p = corank_step(p, q)
        assert sum(p) == 1
    return CorankDistribution(q, n, tuple(p))


def _rank_mod(M: np.ndarray, q: int) -> int:
    M = M.copy() % q
    r = 0
    rows, cols = M.shape
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i, c]), None)
        if piv is None:
            continue
        M[[r, piv]] = M[[piv, r]]
        M[r] = M[r] * pow(int(M[r, c]), -1, q) % q
        for i in range(rows):
            if i != r and M[i, c]:
                M[i] = (M[i] - M[i, c] * M[r]) % q
        r += 1
    return r


def corank_brute(q: int, n: int) -> CorankDistribution:
    """Tally coranks over all symmetric n x n matrices over F_q (q prime)."""
    idx = [(i, j) for i in range(n) for j in range(i, n)]
    counts = [0] * (n + 1)
    for vals in product(range(q), repeat=len(idx)):
        M = np.zeros((n, n), dtype=np.int64)
        for (i, j), x in zip(idx, vals):
            M[i, j] = M[j, i] = x
        counts[n - _rank_mod(M, q)] += 1
    total = q ** len(idx)
    return CorankDistribution(q, n, tuple(Fraction(c, total) for c in counts))


@dataclass(frozen=True)
class V71Report:
    corank1: Fraction        # p^(3)_(24,1)
    type4_ratio: Fraction    # type-4 classes among nonzero vectors of Lambda/3Lambda
    combined: Fraction
    expected_ops: Fraction

    @property
    def type4_reciprocal(self) -> float:
        return float(1 / self.type4_ratio)

    @property
    def combined_reciprocal(self) -> float:
        return float(1 / self.combined)

    def rows(self) -> list[tuple[str, str]]:
        return [
            ("p3_24_1", f"{float(self.corank1):.5f}"),
            ("1/type4_ratio", f"{self.type4_reciprocal:.2f}"),
            ("1/combined", f"{self.combined_reciprocal:.2f}"),
            ("expected_ops", f"{float(self.expected_ops):.0f}"),
        ]


def type4_probabilities(n_type4: int = TYPE4_VECTORS) -> V71Report:
    p1 = corank_chain(3, 24)[1]
    ratio = Fraction(n_type4, 3 ** 24 - 1)
    comb = p1 * ratio
    return V71Report(p1, ratio, comb, ORDER71_COST / comb)
