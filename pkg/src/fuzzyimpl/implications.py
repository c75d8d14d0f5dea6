"""Graded attribute implications: truth degrees, models, least models, entailment."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from ._kernel import kernel_for
from .algebra import Chain, Degree
from .errors import ParseError, PreconditionError
from .fuzzyset import (
    FuzzySet,
    Universe,
    check_compatible,
    format_idx,
    parse_set,
    subsethood_idx,
)


@dataclass(frozen=True)
class Implication:
    antecedent: FuzzySet
    consequent: FuzzySet

    def __post_init__(self):
        check_compatible(self.antecedent, self.consequent)

    @property
    def universe(self) -> Universe:
        return self.antecedent.universe

    @property
    def chain(self) -> Chain:
        return self.antecedent.chain

    def __str__(self) -> str:
        return f"{self.antecedent} => {self.consequent}"


class Theory:
    """An ordered, duplicate-free, immutable list of implications.

    Order never affects semantics; it only fixes the outcome of the
    deterministic order-dependent procedures (redundancy removal, ordering
    of antecedents).
    """

    def __init__(
        self,
        implications: Iterable[Implication] = (),
        universe: Universe | None = None,
        chain: Chain | None = None,
    ):
        items: list[Implication] = []
        seen = set()
        for imp in implications:
            if imp not in seen:
                seen.add(imp)
                items.append(imp)
        if items:
            universe = universe or items[0].universe
            chain = chain or items[0].chain
            probe = FuzzySet.empty(universe, chain)
            for imp in items:
                check_compatible(probe, imp.antecedent)
        elif universe is None or chain is None:
            raise ValueError("an empty theory needs an explicit universe and chain")
        self._items = tuple(items)
        self.universe = universe
        self.chain = chain

    @classmethod
    def from_pairs(
        cls, pairs: Iterable[tuple[Sequence[int], Sequence[int]]], universe: Universe, chain: Chain
    ) -> "Theory":
        return cls(
            (
                Implication(FuzzySet(universe, chain, tuple(a)), FuzzySet(universe, chain, tuple(b)))
                for a, b in pairs
            ),
            universe,
            chain,
        )

    @property
    def implications(self) -> tuple[Implication, ...]:
        return self._items

    def __iter__(self):
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __getitem__(self, i):
        return self._items[i]

    def __contains__(self, imp) -> bool:
        return imp in self._items

    def __eq__(self, other) -> bool:
        """Same members in the same order."""
        if not isinstance(other, Theory):
            return NotImplemented
        return self._items == other._items and self.universe == other.universe and self.chain == other.chain

    def __hash__(self) -> int:
        return hash(self._items)

    def same_members(self, other: "Theory") -> bool:
        return set(self._items) == set(other._items)

    def __repr__(self) -> str:
        return f"Theory([{', '.join(str(i) for i in self._items)}])"

    def __str__(self) -> str:
        return "\n".join(str(i) for i in self._items)

    def without(self, imp: Implication) -> "Theory":
        return Theory((i for i in self._items if i != imp), self.universe, self.chain)

    @cached_property
    def pairs(self) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
        return tuple((i.antecedent.degrees, i.consequent.degrees) for i in self._items)

    @cached_property
    def kernel(self):
        return kernel_for(self.chain, len(self.universe))

    @cached_property
    def encoded(self) -> list:
        k = self.kernel
        return [k.pair(a, b) for a, b in self.pairs]

    def set(self, degrees: Sequence[int]) -> FuzzySet:
        return FuzzySet(self.universe, self.chain, tuple(degrees))

    def _check_set(self, m: FuzzySet) -> None:
        check_compatible(FuzzySet.empty(self.universe, self.chain), m)

    # index-level entry points used by the base-building algorithms

    def close_idx(self, m: Sequence[int], skip: int = -1) -> tuple[int, ...]:
        k = self.kernel
        return k.dec(k.close(k.enc(m), self.encoded, skip))

    def is_model_idx(self, m: Sequence[int], skip: int = -1) -> bool:
        k = self.kernel
        em = k.enc(m)
        return all(k.holds(p, em) for j, p in enumerate(self.encoded) if j != skip)

    def index(self, imp: Implication) -> int:
        try:
            return self._items.index(imp)
        except ValueError:
            raise PreconditionError(f"{imp} is not a member of the theory") from None


def truth_in_model(imp: Implication, m: FuzzySet) -> Degree:
    """Degree ``S(A, M)* -> S(B, M)`` to which ``A => B`` is true in ``M``."""
    check_compatible(imp.antecedent, m)
    chain = m.chain
    s = chain._h[subsethood_idx(chain, imp.antecedent.degrees, m.degrees)]
    t = subsethood_idx(chain, imp.consequent.degrees, m.degrees)
    return Degree(chain._r[s][t], chain)


def is_model(m: FuzzySet, theory: Theory) -> bool:
    theory._check_set(m)
    return theory.is_model_idx(m.degrees)


def close(m: FuzzySet, theory: Theory) -> FuzzySet:
    """The least model of ``theory`` containing ``m``."""
    theory._check_set(m)
    return m.with_degrees(theory.close_idx(m.degrees))


def entail_degree(theory: Theory, imp: Implication) -> Degree:
    """Degree to which ``theory`` semantically entails ``imp``: ``S(B, [A])``."""
    theory._check_set(imp.antecedent)
    closed = theory.close_idx(imp.antecedent.degrees)
    return Degree(subsethood_idx(theory.chain, imp.consequent.degrees, closed), theory.chain)


def entails(theory: Theory, imp: Implication) -> bool:
    return entail_degree(theory, imp).index == theory.chain.n


def equivalent(sigma: Theory, gamma: Theory) -> bool:
    """Whether each theory fully entails every member of the other."""
    check_compatible(FuzzySet.empty(sigma.universe, sigma.chain), FuzzySet.empty(gamma.universe, gamma.chain))
    return _entails_all(gamma, sigma) and _entails_all(sigma, gamma)


def _entails_all(theory: Theory, others: Theory) -> bool:
    k = theory.kernel
    enc = theory.encoded
    for p, a in zip(others.encoded, others.pairs):
        if not k.covers(p, k.close(k.enc(a[0]), enc, target=p)):
            return False
    return True


def is_redundant(imp: Implication, theory: Theory) -> bool:
    """Whether ``imp`` is fully entailed by the other members of ``theory``."""
    i = theory.index(imp)
    k = theory.kernel
    p = theory.encoded[i]
    a = k.enc(theory.pairs[i][0])
    return k.covers(p, k.close(a, theory.encoded, skip=i, target=p))


def is_nonredundant(theory: Theory) -> bool:
    k = theory.kernel
    enc = theory.encoded
    for i, (p, (a, _)) in enumerate(zip(enc, theory.pairs)):
        if k.covers(p, k.close(k.enc(a), enc, skip=i, target=p)):
            return False
    return True


def remove_redundancy(theory: Theory) -> Theory:
    """Drop members, in list order, that the remaining members fully entail."""
    keep = nonredundant_indices(theory.kernel, theory.encoded)
    return Theory((theory[i] for i in keep), theory.universe, theory.chain)


def nonredundant_indices(kernel, encoded: list) -> list[int]:
    """Indices surviving an in-order redundancy scan over encoded rules."""
    pairs = list(encoded)
    alive = list(range(len(pairs)))
    i = 0
    while i < len(pairs):
        p = pairs[i]
        if kernel.covers(p, kernel.close(kernel.antecedent(p), pairs, skip=i, target=p)):
            del pairs[i]
            del alive[i]
        else:
            i += 1
    return alive


# -- text form ---------------------------------------------------------------


def parse_implication(text: str, universe: Universe, chain: Chain) -> Implication:
    lhs, sep, rhs = text.partition("=>")
    if not sep:
        raise ParseError(f"expected 'A => B', got {text!r}")
    return Implication(parse_set(lhs, universe, chain), parse_set(rhs, universe, chain))


def format_implication_idx(a, b, universe: Universe, chain: Chain) -> str:
    return f"{format_idx(a, universe, chain)} => {format_idx(b, universe, chain)}"
