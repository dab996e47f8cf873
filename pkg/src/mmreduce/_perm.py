"""Permutations as tuples of images, and a deterministic Schreier-Sims chain.

Composition is a right action: ``mul(p, q)`` applies ``p`` first, so
``mul(p, q)[i] == q[p[i]]``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Perm = tuple  # tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def mul(p: Perm, q: Perm) -> Perm:
    return tuple([q[x] for x in p])


def inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def mul_many(perms: Iterable[Perm], n: int) -> Perm:
    out = identity(n)
    for p in perms:
        out = mul(out, p)
    return out


def is_perm(p: Sequence[int], n: int) -> bool:
    return len(p) == n and sorted(p) == list(range(n))


class _Level:
    __slots__ = ("point", "gens", "trans", "tinv", "checked")

    def __init__(self, point: int, n: int):
        self.point = point
        self.gens: list[Perm] = []
        e = identity(n)
        # trans[x] maps ``point`` to x
        self.trans: dict[int, Perm] = {point: e}
        self.tinv: dict[int, Perm] = {point: e}
        self.checked: set[tuple[int, int]] = set()


class StabChain:
    """Stabilizer chain over a full base.

    The base is ``prefix`` followed by the remaining points in natural
    order, so every point gets a level (most of them trivial).  Strong
    generators are found by the plain Schreier-Sims closure; this is
    perfectly adequate for groups of degree 24.
    """

    def __init__(self, n: int, gens: Iterable[Perm], prefix: Sequence[int] = ()):
        self.n = n
        base = list(dict.fromkeys(prefix))
        base += [i for i in range(n) if i not in base]
        self.base = base
        self.levels = [_Level(b, n) for b in base]
        self.gens = [tuple(g) for g in gens]
        self._id = identity(n)
        for g in self.gens:
            if g != self._id:
                self._add(0, g)

    # -- construction -------------------------------------------------
    def _add(self, i: int, g: Perm) -> None:
        while i < self.n and g[self.base[i]] == self.base[i]:
            i += 1
        if i >= self.n:
            return
        lev = self.levels[i]
        lev.gens.append(g)
        self._close(i)

    def _close(self, i: int) -> None:
        lev = self.levels[i]
        changed = True
        while changed:
            changed = False
            # grow the orbit
            frontier = list(lev.trans)
            while frontier:
                new = []
                for x in frontier:
                    u = lev.trans[x]
                    for s in lev.gens:
                        y = s[x]
                        if y not in lev.trans:
                            w = mul(u, s)
                            lev.trans[y] = w
                            lev.tinv[y] = inv(w)
                            new.append(y)
                frontier = new
            # sift Schreier generators not yet checked
            for x in list(lev.trans):
                for k, s in enumerate(lev.gens):
                    if (x, k) in lev.checked:
                        continue
                    lev.checked.add((x, k))
                    h = mul(mul(lev.trans[x], s), lev.tinv[s[x]])
                    r, _ = self.sift(h, i + 1)
                    if r != self._id:
                        self._add(i + 1, r)
                        # lower levels changed; nothing here is invalidated
            if any((x, k) not in lev.checked
                   for x in lev.trans for k in range(len(lev.gens))):
                changed = True

    # -- queries ------------------------------------------------------
    def sift(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        for i in range(start, self.n):
            lev = self.levels[i]
            x = g[lev.point]
            t = lev.tinv.get(x)
            if t is None:
                return g, i
            if x != lev.point:
                g = mul(g, t)
        return g, self.n

    def contains(self, g: Perm) -> bool:
        return self.sift(tuple(g))[0] == self._id

    def order(self) -> int:
        out = 1
        for lev in self.levels:
            out *= len(lev.trans)
        return out

    def orbit(self, i: int) -> list[int]:
        return sorted(self.levels[i].trans)

    def strong_gens(self, i: int = 0) -> list[Perm]:
        """Strong generators of the pointwise stabilizer of base[:i]."""
        return [g for lev in self.levels[i:] for g in lev.gens]

    def base_image(self, targets: Sequence[int]) -> Perm | None:
        """Some element mapping base[j] to targets[j] for all j, or None."""
        g = self._id
        ws = []
        for j, t in enumerate(targets):
            # transform the target back through the elements already chosen
            for w in ws:
                t = inv_point(w, t)
            u = self.levels[j].trans.get(t)
            if u is None:
                return None
            ws.append(u)
        for w in reversed(ws):
            g = mul(g, w)
        return g

    def random_element(self, rng) -> Perm:
        g = self._id
        for lev in reversed(self.levels):
            if len(lev.trans) > 1:
                keys = list(lev.trans)
                g = mul(g, lev.trans[keys[rng.integers(len(keys))]])
        return g


def inv_point(p: Perm, y: int) -> int:
    return p.index(y)
