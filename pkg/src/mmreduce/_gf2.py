"""Small GF(2) linear algebra on Python ints used as bit vectors."""

from __future__ import annotations

from typing import Iterable


def parity(x: int) -> int:
    return x.bit_count() & 1


def echelon(rows: Iterable[int]) -> list[int]:
    """Return a fully reduced echelon basis of the span of ``rows``.

    Rows are ordered by decreasing leading bit.
    """
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            for i, b in enumerate(basis):
                basis[i] = min(b, b ^ r)
            basis.append(r)
    basis.sort(reverse=True)
    return basis


def rank(rows: Iterable[int]) -> int:
    return len(echelon(rows))


def span(rows: Iterable[int]) -> list[int]:
    """All elements of the span of ``rows`` (sorted)."""
    out = [0]
    for b in echelon(rows):
        out += [x ^ b for x in out]
    return sorted(out)


def reduce_vec(v: int, basis: list[int]) -> int:
    for b in basis:
        v = min(v, v ^ b)
    return v


def nullspace(rows: list[int], ncols: int) -> list[int]:
    """Basis of {x : parity(r & x) = 0 for all r in rows}."""
    pivots: dict[int, int] = {}
    for r in echelon(rows):
        pivots[r.bit_length() - 1] = r
    out = []
    for f in range(ncols):
        if f in pivots:
            continue
        x = 1 << f
        for p, r in pivots.items():
            if (r >> f) & 1:
                x |= 1 << p
        out.append(x)
    return out


def solve(rows: list[int], rhs: list[int], ncols: int) -> int | None:
    """One solution x of parity(rows[i] & x) = rhs[i], or None."""
    aug = [(r << 1) | (b & 1) for r, b in zip(rows, rhs)]
    red = echelon(aug)
    x = 0
    for r in red:
        if r == 1:
            return None
        lead = r.bit_length() - 2
        if r & 1:
            x |= 1 << lead
    # fully reduced echelon form: pivot columns are cleared in other rows,
    # so setting free variables to zero gives a solution
    return x
