"""L-sets over a finite universe of attribute (or object) names.

A :class:`FuzzySet` is a dense tuple of degree indices, one per universe
position.  The index-level helpers at the bottom (``*_idx``) work on bare
tuples and are what the closure and base algorithms use in their inner loops.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .algebra import Chain, Degree
from .errors import ChainMismatchError, ParseError, UniverseMismatchError

_RESERVED = set("{},/") | {"=", ">", ":", "#"}


@dataclass(frozen=True)
class Universe:
    """An ordered, duplicate-free, non-empty list of names."""

    names: tuple[str, ...]
    _pos: dict = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise ValueError("a universe must be non-empty")
        if len(set(names)) != len(names):
            raise ValueError("universe names must be distinct")
        for name in names:
            if not name or any(ch in _RESERVED or ch.isspace() for ch in name):
                raise ValueError(f"illegal name {name!r}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_pos", {name: i for i, name in enumerate(names)})

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def index(self, name: str) -> int:
        try:
            return self._pos[name]
        except KeyError:
            raise KeyError(f"unknown name {name!r}") from None


@dataclass(frozen=True)
class FuzzySet:
    universe: Universe
    chain: Chain
    degrees: tuple[int, ...]

    def __post_init__(self):
        if len(self.degrees) != len(self.universe):
            raise ValueError("one degree per universe element is required")
        n = self.chain.n
        if any(not 0 <= d <= n for d in self.degrees):
            raise ValueError("degree index outside the chain")

    @classmethod
    def empty(cls, universe: Universe, chain: Chain) -> "FuzzySet":
        return cls(universe, chain, (0,) * len(universe))

    @classmethod
    def full(cls, universe: Universe, chain: Chain) -> "FuzzySet":
        return cls(universe, chain, (chain.n,) * len(universe))

    @classmethod
    def from_mapping(cls, universe: Universe, chain: Chain, degrees: Mapping[str, int]) -> "FuzzySet":
        """Build a set from ``name -> degree index``; missing names get 0."""
        d = [0] * len(universe)
        for name, idx in degrees.items():
            d[universe.index(name)] = idx
        return cls(universe, chain, tuple(d))

    def __getitem__(self, name: str) -> Degree:
        return Degree(self.degrees[self.universe.index(name)], self.chain)

    def _check(self, other: "FuzzySet") -> None:
        check_compatible(self, other)

    def issubset(self, other: "FuzzySet") -> bool:
        """Full inclusion, i.e. pointwise ``<=``."""
        self._check(other)
        return all(a <= b for a, b in zip(self.degrees, other.degrees))

    def __le__(self, other: "FuzzySet") -> bool:
        return self.issubset(other)

    def __lt__(self, other: "FuzzySet") -> bool:
        return self.issubset(other) and self.degrees != other.degrees

    def __or__(self, other: "FuzzySet") -> "FuzzySet":
        return union(self, other)

    def __and__(self, other: "FuzzySet") -> "FuzzySet":
        return intersect(self, other)

    def with_degrees(self, degrees: Sequence[int]) -> "FuzzySet":
        return FuzzySet(self.universe, self.chain, tuple(degrees))

    def __str__(self) -> str:
        return format_set(self)


def check_compatible(*sets: FuzzySet) -> None:
    first = sets[0]
    for other in sets[1:]:
        if other.universe is not first.universe and other.universe != first.universe:
            raise UniverseMismatchError("fuzzy sets over different universes")
        if other.chain is not first.chain and other.chain != first.chain:
            raise ChainMismatchError("fuzzy sets over different chains")


def subsethood(a: FuzzySet, b: FuzzySet) -> Degree:
    """Degree to which ``a`` is included in ``b``: the meet of ``a(y) -> b(y)``."""
    check_compatible(a, b)
    return Degree(subsethood_idx(a.chain, a.degrees, b.degrees), a.chain)


def union(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    check_compatible(a, b)
    return a.with_degrees(map(max, a.degrees, b.degrees))


def intersect(a: FuzzySet, b: FuzzySet) -> FuzzySet:
    check_compatible(a, b)
    return a.with_degrees(map(min, a.degrees, b.degrees))


def scalar_tensor(a: Degree, b: FuzzySet) -> FuzzySet:
    """The set ``y -> a ⊗ b(y)``."""
    b.chain._same(a)
    row = b.chain._t[a.index]
    return b.with_degrees(row[d] for d in b.degrees)


def all_sets(universe: Universe, chain: Chain) -> Iterator[FuzzySet]:
    """Every member of L^Y in lexicographic order of degree indices."""
    for degrees in itertools.product(range(chain.n + 1), repeat=len(universe)):
        yield FuzzySet(universe, chain, degrees)


# -- text form ---------------------------------------------------------------


def parse_set(text: str, universe: Universe, chain: Chain) -> FuzzySet:
    """Parse ``{a1/y1, ..., ak/yk}``; bare names mean degree 1, omitted ones 0."""
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ParseError(f"a set must be enclosed in braces: {text!r}")
    body = body[1:-1].strip()
    degrees = [0] * len(universe)
    seen = set()
    if body:
        for item in body.split(","):
            item = item.strip()
            if not item:
                raise ParseError(f"empty entry in {text!r}")
            if "/" in item:
                deg_text, name = item.rsplit("/", 1)
                deg = chain.parse_degree(deg_text).index
            else:
                name, deg = item, chain.n
            name = name.strip()
            try:
                pos = universe.index(name)
            except KeyError:
                raise ParseError(f"unknown attribute {name!r}") from None
            if pos in seen:
                raise ParseError(f"attribute {name!r} listed twice")
            seen.add(pos)
            degrees[pos] = deg
    return FuzzySet(universe, chain, tuple(degrees))


def format_set(a: FuzzySet) -> str:
    return format_idx(a.degrees, a.universe, a.chain)


def format_idx(degrees: Sequence[int], universe: Universe, chain: Chain) -> str:
    parts = []
    for name, d in zip(universe.names, degrees):
        if d == chain.n:
            parts.append(name)
        elif d:
            parts.append(f"{chain.format(d)}/{name}")
    return "{" + ", ".join(parts) + "}"


# -- index-level helpers -------------------------------------------------------


def subsethood_idx(chain: Chain, a: Sequence[int], b: Sequence[int]) -> int:
    r = chain._r
    s = chain.n
    for x, y in zip(a, b):
        if x > y:
            v = r[x][y]
            if v < s:
                s = v
    return s


def leq_idx(a: Sequence[int], b: Sequence[int]) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True
