"""Finite residuated chains on {0, 1/n, ..., 1} with hedges.

Degrees are stored as integer indices ``i`` standing for ``i/n``; rational
values are only produced for display.  Three families of t-norms are
supported:

* Goedel (minimum),
* Lukasiewicz, ``max(0, a + b - 1)``,
* BL ordinal sums of Lukasiewicz components, determined by the set of
  idempotent degrees.

Goedel and Lukasiewicz are the two extreme ordinal sums (every degree
idempotent, resp. only 0 and 1), and are built through the same code path.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Sequence

from .errors import ChainMismatchError, InvalidHedgeError, ParseError

LOGICS = ("goedel", "lukasiewicz", "bl")
HEDGES = ("identity", "globalization", "table")


def format_value(index: int, n: int) -> str:
    """Render degree ``index/n`` as a short decimal, or as ``p/q`` if not finite."""
    v = Fraction(index, n)
    if v.denominator == 1:
        return str(v.numerator)
    den = v.denominator
    while den % 2 == 0:
        den //= 2
    while den % 5 == 0:
        den //= 5
    if den != 1:
        return f"{v.numerator}/{v.denominator}"
    # finite decimal expansion
    digits = 0
    while (v * 10**digits).denominator != 1:
        digits += 1
    s = f"{float(v):.{digits}f}"
    return s


def parse_value(text: str, n: int) -> int:
    """Parse a degree written as a decimal or rational and return its index."""
    text = text.strip()
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a truth degree: {text!r}") from None
    idx = v * n
    if idx.denominator != 1 or not 0 <= idx <= n:
        raise ParseError(f"degree {text} is not on the chain with scale {n}")
    return int(idx)


@total_ordering
@dataclass(frozen=True)
class Degree:
    """A truth degree ``index/chain.n`` of a particular chain."""

    index: int
    chain: "Chain" = field(repr=False)

    def __post_init__(self):
        if not 0 <= self.index <= self.chain.n:
            raise ValueError(f"degree index {self.index} outside 0..{self.chain.n}")

    @property
    def value(self) -> Fraction:
        return Fraction(self.index, self.chain.n)

    def __lt__(self, other: "Degree") -> bool:
        self.chain._same(other)
        return self.index < other.index

    def __str__(self) -> str:
        return format_value(self.index, self.chain.n)


@dataclass(frozen=True)
class Chain:
    """A finite residuated chain with a hedge.

    ``idempotents`` holds the indices of the tensor-idempotent degrees; it is
    derived for Goedel and Lukasiewicz and must be given (including ``0`` and
    ``n``) for ``logic="bl"``.  ``hedge_table`` is only used when
    ``hedge="table"`` (it is filled in for the built-in hedges).  Table hedges are checked against the hedge axioms on
    construction unless ``strict=False``.
    """

    n: int
    logic: str = "lukasiewicz"
    hedge: str = "identity"
    idempotents: tuple[int, ...] = ()
    hedge_table: tuple[int, ...] = ()
    strict: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("scale n must be at least 1")
        if self.logic not in LOGICS:
            raise ValueError(f"unknown logic {self.logic!r}")
        if self.hedge not in HEDGES:
            raise ValueError(f"unknown hedge {self.hedge!r}")
        n = self.n
        if self.logic == "goedel":
            idem = tuple(range(n + 1))
        elif self.logic == "lukasiewicz":
            idem = (0, n)
        else:
            idem = tuple(sorted(set(self.idempotents)))
            if not idem or idem[0] != 0 or idem[-1] != n or any(not 0 <= i <= n for i in idem):
                raise ValueError("BL idempotents must lie in 0..n and contain 0 and n")
        object.__setattr__(self, "idempotents", idem)

        if self.hedge == "table":
            table = tuple(self.hedge_table)
            if len(table) != n + 1 or any(not 0 <= v <= n for v in table):
                raise ValueError("hedge table must map every degree 0..n into 0..n")
        else:
            table = tuple(range(n + 1)) if self.hedge == "identity" else (0,) * n + (n,)
        object.__setattr__(self, "hedge_table", table)

        tensor = tuple(tuple(_bl_tensor(a, b, idem) for b in range(n + 1)) for a in range(n + 1))
        residuum = tuple(
            tuple(_bl_residuum(a, b, idem, n) for b in range(n + 1)) for a in range(n + 1)
        )
        object.__setattr__(self, "_t", tensor)
        object.__setattr__(self, "_r", residuum)
        object.__setattr__(self, "_h", table)

        if self.hedge == "table" and self.strict:
            bad = _hedge_violations(self)
            if bad:
                raise InvalidHedgeError(bad)

    # -- constructors -------------------------------------------------------

    @classmethod
    def goedel(cls, n: int, hedge: str = "identity") -> "Chain":
        return cls(n, "goedel", hedge)

    @classmethod
    def lukasiewicz(cls, n: int, hedge: str = "identity") -> "Chain":
        return cls(n, "lukasiewicz", hedge)

    @classmethod
    def bl(cls, n: int, idempotents: Iterable[int], hedge: str = "identity") -> "Chain":
        return cls(n, "bl", hedge, tuple(idempotents))

    @classmethod
    def with_table_hedge(
        cls, n: int, logic: str, table: Sequence[int], idempotents: Iterable[int] = (), strict=True
    ) -> "Chain":
        return cls(n, logic, "table", tuple(idempotents), tuple(table), strict=strict)

    # -- degrees ------------------------------------------------------------

    @property
    def size(self) -> int:
        return self.n + 1

    @property
    def bottom(self) -> Degree:
        return Degree(0, self)

    @property
    def top(self) -> Degree:
        return Degree(self.n, self)

    def degree(self, index: int) -> Degree:
        return Degree(index, self)

    def degrees(self) -> list[Degree]:
        return [Degree(i, self) for i in range(self.n + 1)]

    def parse_degree(self, text: str) -> Degree:
        return Degree(parse_value(text, self.n), self)

    def format(self, index: int) -> str:
        return format_value(index, self.n)

    @property
    def is_globalization(self) -> bool:
        return self._h == (0,) * self.n + (self.n,)

    # -- operations on Degree values -----------------------------------------

    def _same(self, *degrees: Degree) -> None:
        for d in degrees:
            if d.chain is not self and d.chain != self:
                raise ChainMismatchError("degrees from different chains cannot be combined")

    def tensor(self, a: Degree, b: Degree) -> Degree:
        self._same(a, b)
        return Degree(self._t[a.index][b.index], self)

    def residuum(self, a: Degree, b: Degree) -> Degree:
        self._same(a, b)
        return Degree(self._r[a.index][b.index], self)

    def apply_hedge(self, a: Degree) -> Degree:
        self._same(a)
        return Degree(self._h[a.index], self)

    def meet(self, a: Degree, b: Degree) -> Degree:
        self._same(a, b)
        return Degree(min(a.index, b.index), self)

    def join(self, a: Degree, b: Degree) -> Degree:
        self._same(a, b)
        return Degree(max(a.index, b.index), self)

    # -- text form ----------------------------------------------------------

    def header_lines(self) -> list[str]:
        if self.logic == "bl":
            logic = "bl " + ",".join(self.format(i) for i in self.idempotents)
        else:
            logic = self.logic
        if self.hedge == "table":
            hedge = "table " + ",".join(self.format(i) for i in self.hedge_table)
        else:
            hedge = self.hedge
        return [f"logic {logic}", f"scale {self.n}", f"hedge {hedge}"]

    def describe(self) -> str:
        return "; ".join(self.header_lines())


def _component(x: int, idem: tuple[int, ...]) -> tuple[int, int]:
    """Bounds (l, u) of the ordinal-sum component whose half-open part (l, u] holds x."""
    k = bisect.bisect_left(idem, x)
    if idem[k] == x:
        return x, x
    return idem[k - 1], idem[k]


def _bl_tensor(a: int, b: int, idem: tuple[int, ...]) -> int:
    la, ua = _component(a, idem)
    lb, ub = _component(b, idem)
    if la == ua or lb == ub or (la, ua) != (lb, ub):
        return min(a, b)
    return max(la, a + b - ua)


def _bl_residuum(a: int, b: int, idem: tuple[int, ...], n: int) -> int:
    if a <= b:
        return n
    lo, up = _component(a, idem)
    if lo <= b:
        return up - a + b
    return b


@dataclass
class ValidationReport:
    """Violated axiom instances found by :func:`validate` (empty when sound)."""

    chain: Chain
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def _hedge_violations(chain: Chain) -> list[str]:
    n, h, r = chain.n, chain._h, chain._r
    fmt = chain.format
    out = []
    if h[n] != n:
        out.append("1*=1")
    for a in range(n + 1):
        if h[a] > a:
            out.append(f"a*≤a at a={fmt(a)}")
        if h[a] > h[h[a]]:
            out.append(f"a*≤a** at a={fmt(a)}")
    for a, b in itertools.product(range(n + 1), repeat=2):
        if h[r[a][b]] > r[h[a]][h[b]]:
            out.append(f"(a→b)*≤a*→b* at a={fmt(a)}, b={fmt(b)}")
    return out


def validate(chain: Chain) -> ValidationReport:
    """Exhaustively check the residuated-lattice and hedge axioms on ``chain``."""
    n, t, r = chain.n, chain._t, chain._r
    fmt = chain.format
    report = ValidationReport(chain)
    out = report.violations
    rng = range(n + 1)
    for a in rng:
        if t[a][n] != a:
            out.append(f"unit a⊗1=a at a={fmt(a)}")
        for b in rng:
            if t[a][b] != t[b][a]:
                out.append(f"commutativity at a={fmt(a)}, b={fmt(b)}")
            if (r[a][b] == n) != (a <= b):
                out.append(f"a→b=1 iff a≤b at a={fmt(a)}, b={fmt(b)}")
            if b < n and t[a][b] > t[a][b + 1]:
                out.append(f"monotonicity at a={fmt(a)}, b={fmt(b)}")
            for c in rng:
                if t[t[a][b]][c] != t[a][t[b][c]]:
                    out.append(f"associativity at a={fmt(a)}, b={fmt(b)}, c={fmt(c)}")
                if (t[a][b] <= c) != (a <= r[b][c]):
                    out.append(f"adjointness at a={fmt(a)}, b={fmt(b)}, c={fmt(c)}")
    out.extend(_hedge_violations(chain))
    return report


def parse_algebra(lines: Iterable[str]) -> Chain:
    """Build a chain from ``logic``/``scale``/``hedge`` header lines.

    Missing lines default to ``logic lukasiewicz``, ``scale 1`` and
    ``hedge identity``.  Unrelated lines are ignored so callers can pass a
    whole file header.
    """
    logic, scale, hedge = "lukasiewicz", None, "identity"
    idem_text: str | None = None
    table_text: str | None = None
    for raw in lines:
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "logic":
            name, _, arg = rest.partition(" ")
            if name not in LOGICS:
                raise ParseError(f"unknown logic {name!r}")
            logic = name
            if name == "bl":
                if not arg.strip():
                    raise ParseError("logic bl needs a list of idempotent degrees")
                idem_text = arg
        elif key == "scale":
            try:
                scale = int(rest)
            except ValueError:
                raise ParseError(f"bad scale {rest!r}") from None
            if scale < 1:
                raise ParseError("scale must be positive")
        elif key == "hedge":
            name, _, arg = rest.partition(" ")
            if name not in HEDGES:
                raise ParseError(f"unknown hedge {name!r}")
            hedge = name
            if name == "table":
                table_text = arg
    n = scale if scale is not None else 1
    idem: tuple[int, ...] = ()
    if idem_text is not None:
        idem = tuple(parse_value(v, n) for v in idem_text.split(","))
        if list(idem) != sorted(set(idem)):
            raise ParseError("idempotent degrees must be listed in ascending order")
    table: tuple[int, ...] = ()
    if table_text is not None:
        table = tuple(parse_value(v, n) for v in table_text.split(","))
    try:
        return Chain(n, logic, hedge, idem, table)
    except InvalidHedgeError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None
