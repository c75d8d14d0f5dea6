"""Formal L-contexts: arrow operators, intents, validity and completeness."""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterator, Sequence

from .algebra import Chain, Degree
from .errors import CapacityError
from .fuzzyset import FuzzySet, Universe, check_compatible, leq_idx, subsethood_idx
from .implications import Implication, Theory, truth_in_model

DEFAULT_CAP = 2_000_000


class FormalContext:
    """Objects × attributes table of degree indices over one chain."""

    def __init__(
        self,
        objects: Universe | Sequence[str],
        attributes: Universe | Sequence[str],
        chain: Chain,
        table: Sequence[Sequence[int]],
    ):
        self.objects = objects if isinstance(objects, Universe) else Universe(objects)
        self.attributes = attributes if isinstance(attributes, Universe) else Universe(attributes)
        self.chain = chain
        rows = tuple(tuple(int(v) for v in row) for row in table)
        if len(rows) != len(self.objects):
            raise ValueError("one table row per object is required")
        for row in rows:
            if len(row) != len(self.attributes):
                raise ValueError("one table entry per attribute is required")
            if any(not 0 <= v <= chain.n for v in row):
                raise ValueError("table entry outside the chain")
        self.table = rows
        # {1/x}↑ for every object; 0* = 0 for any legal hedge, so this is row x
        # of the table, but it is computed through up() to stay definitional.
        self.rows = tuple(
            self.up_idx(tuple(chain.n if j == i else 0 for j in range(len(rows))))
            for i in range(len(rows))
        )

    def __repr__(self) -> str:
        return f"FormalContext({len(self.objects)}x{len(self.attributes)}, {self.chain.describe()})"

    # -- operators ------------------------------------------------------------

    def up_idx(self, a: Sequence[int]) -> tuple[int, ...]:
        h, r, n = self.chain._h, self.chain._r, self.chain.n
        out = [n] * len(self.attributes)
        for ax, row in zip(a, self.table):
            s = h[ax]
            if s == 0:
                continue
            rs = r[s]
            for y, v in enumerate(row):
                w = rs[v]
                if w < out[y]:
                    out[y] = w
        return tuple(out)

    def down_idx(self, b: Sequence[int]) -> tuple[int, ...]:
        return tuple(subsethood_idx(self.chain, b, row) for row in self.table)

    def closure_idx(self, b: Sequence[int]) -> tuple[int, ...]:
        if self.chain.is_globalization:
            out = None
            for row in self.table:
                if leq_idx(b, row):
                    out = row if out is None else tuple(map(min, out, row))
            return out if out is not None else (self.chain.n,) * len(self.attributes)
        return self.up_idx(self.down_idx(b))

    def up(self, a: FuzzySet) -> FuzzySet:
        check_compatible(FuzzySet.empty(self.objects, self.chain), a)
        return FuzzySet(self.attributes, self.chain, self.up_idx(a.degrees))

    def down(self, b: FuzzySet) -> FuzzySet:
        self._check_attr_set(b)
        return FuzzySet(self.objects, self.chain, self.down_idx(b.degrees))

    def intent_closure(self, b: FuzzySet) -> FuzzySet:
        self._check_attr_set(b)
        return b.with_degrees(self.closure_idx(b.degrees))

    def _check_attr_set(self, b: FuzzySet) -> None:
        check_compatible(FuzzySet.empty(self.attributes, self.chain), b)

    def row_set(self, i: int) -> FuzzySet:
        return FuzzySet(self.attributes, self.chain, self.rows[i])

    # -- validity -------------------------------------------------------------

    def truth(self, imp: Implication) -> Degree:
        """Infimum of the truth degrees of ``imp`` in all object rows."""
        self._check_attr_set(imp.antecedent)
        best = self.chain.top
        for i in range(len(self.rows)):
            d = truth_in_model(imp, self.row_set(i))
            if d.index < best.index:
                best = d
        return best

    def intents(self, cap: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
        """All intents ``A↑`` as degree tuples, sorted.

        Under globalization ``A*`` is crisp, so intents are the meets of sets
        of rows; other hedges enumerate the hedge image over the objects.
        """
        n = self.chain.n
        top = (n,) * len(self.attributes)
        if self.chain.is_globalization:
            found = {top}
            for row in self.table:
                found |= {tuple(map(min, s, row)) for s in found}
            return sorted(found)
        image = sorted(set(self.chain._h))
        total = len(image) ** len(self.objects)
        if total > cap:
            raise CapacityError(total, cap, "object sets")
        return sorted({self.up_idx(a) for a in itertools.product(image, repeat=len(self.objects))})

    def density(self) -> Fraction:
        """Mean table value as a percentage."""
        total = sum(sum(row) for row in self.table)
        return Fraction(100 * total, self.chain.n * len(self.objects) * len(self.attributes))


def truth_in_context(imp: Implication, context: FormalContext) -> Degree:
    return context.truth(imp)


def density(context: FormalContext) -> Fraction:
    return context.density()


def intent_closure(b: FuzzySet, context: FormalContext) -> FuzzySet:
    return context.intent_closure(b)


def check_capacity(context: FormalContext, cap: int) -> int:
    total = context.chain.size ** len(context.attributes)
    if total > cap:
        raise CapacityError(total, cap)
    return total


def all_attribute_sets(context: FormalContext, cap: int = DEFAULT_CAP) -> Iterator[tuple[int, ...]]:
    check_capacity(context, cap)
    return itertools.product(range(context.chain.n + 1), repeat=len(context.attributes))


def non_closed_sets(context: FormalContext, cap: int = DEFAULT_CAP) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Pairs ``(P, P↓↑)`` for every ``P`` with ``P != P↓↑``, lexicographic in ``P``."""
    out = []
    for p in all_attribute_sets(context, cap):
        c = context.closure_idx(p)
        if c != p:
            out.append((p, c))
    return out


def is_complete(theory: Theory, context: FormalContext, cap: int = DEFAULT_CAP) -> bool:
    """Whether ``[M]_theory == M↓↑`` for every ``M`` in L^Y (exhaustive)."""
    check_compatible(
        FuzzySet.empty(context.attributes, context.chain), FuzzySet.empty(theory.universe, theory.chain)
    )
    for m in all_attribute_sets(context, cap):
        if theory.close_idx(m) != context.closure_idx(m):
            return False
    return True
