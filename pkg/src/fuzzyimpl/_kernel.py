"""Least-model fixpoint kernels over encoded fuzzy sets.

Two encodings share one interface:

* ``GenericKernel`` keeps sets as degree tuples and evaluates
  ``S(A, N)* ⊗ B`` with the chain's operation tables.  Works for every hedge.
* ``MaskKernel`` is used under globalization, where ``S(A, N)*`` is 1 iff
  ``A ⊆ N`` and 0 otherwise, so a rule either adds its whole consequent or
  nothing.  Sets become threshold bitmasks: bit ``y*n + k`` is set iff
  ``A(y) > k``, turning inclusion into ``a & ~b == 0`` and union into ``|``.

Pairs are encoded once per theory; ``close`` accepts a ``skip`` index (the
rule to leave out) and an optional ``target`` consequent for early exit once
the target is covered, which is all redundancy tests need.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .algebra import Chain


class GenericKernel:
    def __init__(self, chain: Chain, width: int):
        self.chain = chain
        self.width = width

    def enc(self, m: Sequence[int]):
        return tuple(m)

    def dec(self, m) -> tuple[int, ...]:
        return m

    def pair(self, a: Sequence[int], b: Sequence[int]):
        sa = tuple((y, x) for y, x in enumerate(a) if x)
        sb = tuple((y, x) for y, x in enumerate(b) if x)
        return sa, sb

    def antecedent(self, pair) -> tuple[int, ...]:
        out = [0] * self.width
        for y, x in pair[0]:
            out[y] = x
        return tuple(out)

    def covers(self, pair, m) -> bool:
        """Whether the consequent of ``pair`` is included in ``m``."""
        for y, x in pair[1]:
            if m[y] < x:
                return False
        return True

    def _degree(self, sparse, m) -> int:
        r = self.chain._r
        s = self.chain.n
        for y, x in sparse:
            v = m[y]
            if x > v:
                v = r[x][v]
                if v < s:
                    s = v
        return s

    def holds(self, pair, m) -> bool:
        """Whether the rule is true to degree 1 in ``m``."""
        s = self.chain._h[self._degree(pair[0], m)]
        if s == 0:
            return True
        row = self.chain._t[s]
        for y, x in pair[1]:
            if row[x] > m[y]:
                return False
        return True

    def close(self, m, pairs, skip: int = -1, target=None):
        h, t = self.chain._h, self.chain._t
        deg = self._degree
        cur = list(m)
        changed = True
        while changed:
            changed = False
            for k, (sa, sb) in enumerate(pairs):
                if k == skip:
                    continue
                s = h[deg(sa, cur)]
                if s == 0:
                    continue
                row = t[s]
                grew = False
                for y, x in sb:
                    v = row[x]
                    if v > cur[y]:
                        cur[y] = v
                        grew = True
                if grew:
                    changed = True
                    if target is not None and self.covers(target, cur):
                        return tuple(cur)
        return tuple(cur)


class MaskKernel:
    def __init__(self, chain: Chain, width: int):
        self.chain = chain
        self.width = width
        self.n = chain.n
        self.field = (1 << self.n) - 1

    def enc(self, m: Sequence[int]) -> int:
        n = self.n
        out = 0
        for y, d in enumerate(m):
            if d:
                out |= ((1 << d) - 1) << (y * n)
        return out

    def dec(self, m: int) -> tuple[int, ...]:
        n, f = self.n, self.field
        return tuple(((m >> (y * n)) & f).bit_count() for y in range(self.width))

    def pair(self, a: Sequence[int], b: Sequence[int]):
        return self.enc(a), self.enc(b)

    def antecedent(self, pair) -> int:
        return pair[0]

    def covers(self, pair, m: int) -> bool:
        return not pair[1] & ~m

    def holds(self, pair, m: int) -> bool:
        return bool(pair[0] & ~m) or not pair[1] & ~m

    def close(self, m: int, pairs, skip: int = -1, target=None) -> int:
        goal = None if target is None else target[1]
        changed = True
        while changed:
            changed = False
            for k, (a, b) in enumerate(pairs):
                if not a & ~m and b & ~m and k != skip:
                    m |= b
                    changed = True
                    if goal is not None and not goal & ~m:
                        return m
        return m


@lru_cache(maxsize=256)
def kernel_for(chain: Chain, width: int):
    if chain.is_globalization:
        return MaskKernel(chain, width)
    return GenericKernel(chain, width)
