"""Saturation, witnessed non-redundancy and bases given by pseudo-intents.

The central construction replaces every rule ``A => [A]_Γ`` of a saturated,
non-redundant theory ``Γ`` by ``[A]_{Γ∖{A=>[A]_Γ}} => [A]_Γ``: the
antecedent is closed under all *other* rules.  Under globalization the result
is equivalent to ``Γ`` and every antecedent is a model of the remaining
rules.  Applied to a non-redundant base of a context, the antecedents form
its system of pseudo-intents.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .context import DEFAULT_CAP, FormalContext, check_capacity, non_closed_sets
from .errors import CapacityError, PreconditionError
from .fuzzyset import FuzzySet, leq_idx
from .implications import Implication, Theory, equivalent, is_nonredundant, nonredundant_indices


def saturate(gamma: Theory) -> Theory:
    """One rule ``A => [A]_Γ`` per distinct antecedent of ``gamma``."""
    seen = set()
    pairs = []
    for a, _ in gamma.pairs:
        if a in seen:
            continue
        seen.add(a)
        pairs.append((a, gamma.close_idx(a)))
    return Theory.from_pairs(pairs, gamma.universe, gamma.chain)


def is_saturated(sigma: Theory) -> bool:
    return all(leq_idx(sigma.close_idx(a), b) for a, b in sigma.pairs)


def punctured_closure(gamma: Theory, i: int) -> tuple[int, ...]:
    """Closure of the ``i``-th antecedent under every other rule of ``gamma``."""
    return gamma.close_idx(gamma.pairs[i][0], skip=i)


@dataclass
class WitnessReport:
    witnessed: bool
    failures: list[tuple[Implication, str]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.witnessed

    def __str__(self) -> str:
        if self.witnessed:
            return "witnessed: yes"
        lines = ["witnessed: no"]
        lines += [f"  {imp}: {reason}" for imp, reason in self.failures]
        return "\n".join(lines)


def witness_check(sigma: Theory) -> WitnessReport:
    """Check that each antecedent is a model of the theory without its own rule."""
    k = sigma.kernel
    enc = sigma.encoded
    failures = []
    for i, imp in enumerate(sigma):
        m = k.enc(imp.antecedent.degrees)
        broken = [sigma[j] for j, p in enumerate(enc) if j != i and not k.holds(p, m)]
        if broken:
            failures.append((imp, f"antecedent violates {broken[0]}"))
    return WitnessReport(not failures, failures)


def _require_normal(gamma: Theory) -> None:
    if not is_saturated(gamma):
        raise PreconditionError("theory does not have saturated consequents")
    if not is_nonredundant(gamma):
        raise PreconditionError("theory is redundant")


def find_order(gamma: Theory) -> list[FuzzySet] | None:
    """Order antecedents so each punctured closure is reached by its predecessors.

    Grows a prefix greedily, each time taking the first unplaced rule whose
    closure under all other rules equals its closure under the prefix.
    Returns ``None`` when the prefix cannot be extended.  Under globalization
    such an order always exists.
    """
    _require_normal(gamma)
    punctured = [punctured_closure(gamma, i) for i in range(len(gamma))]
    placed: list[int] = []
    rest = list(range(len(gamma)))
    while rest:
        prefix = Theory((gamma[i] for i in placed), gamma.universe, gamma.chain)
        for i in rest:
            if prefix.close_idx(gamma.pairs[i][0]) == punctured[i]:
                placed.append(i)
                rest.remove(i)
                break
        else:
            return None
    return [gamma[i].antecedent for i in placed]


def firing_sequence(gamma: Theory, order: list[FuzzySet], i: int) -> list[int]:
    """Indices of the earlier rules that fire, in firing order, when closing
    the ``i``-th antecedent under the rules placed before it in ``order``.

    With globalization each fired rule adds its whole consequent, so the
    punctured closure is the antecedent joined with those consequents.
    """
    rank = {a.degrees: r for r, a in enumerate(order)}
    a = gamma.pairs[i][0]
    earlier = [j for j, (b, _) in enumerate(gamma.pairs) if rank[b] < rank[a]]
    cur = a
    fired: list[int] = []
    progress = True
    while progress:
        progress = False
        for j in earlier:
            if j in fired:
                continue
            b, c = gamma.pairs[j]
            if leq_idx(b, cur) and not leq_idx(c, cur):
                fired.append(j)
                cur = tuple(map(max, cur, c))
                progress = True
    return fired


@dataclass
class TransformResult:
    theory: Theory
    equivalent: bool
    source: Theory


def witness_transform(gamma: Theory) -> TransformResult:
    """Close every antecedent under the other rules; report equivalence with ``gamma``."""
    _require_normal(gamma)
    pairs = [(punctured_closure(gamma, i), b) for i, (_, b) in enumerate(gamma.pairs)]
    sigma = Theory.from_pairs(pairs, gamma.universe, gamma.chain)
    return TransformResult(sigma, equivalent(sigma, gamma), gamma)


@dataclass
class PseudoIntentSystem:
    members: tuple[FuzzySet, ...]
    base: Theory

    @classmethod
    def from_members(cls, members, context: FormalContext) -> "PseudoIntentSystem":
        members = tuple(sorted(members, key=lambda s: s.degrees))
        base = Theory(
            (Implication(p, context.intent_closure(p)) for p in members),
            context.attributes,
            context.chain,
        )
        return cls(members, base)

    def key(self) -> frozenset:
        return frozenset(p.degrees for p in self.members)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PseudoIntentSystem):
            return NotImplemented
        return self.key() == other.key()

    def __len__(self) -> int:
        return len(self.members)


@dataclass
class BaseResult:
    """Outcome of :func:`base_from_context`.

    ``system`` is ``None`` when the final theory is not equivalent to the
    starting complete set (possible for hedges other than globalization).
    """

    theory: Theory
    equivalent: bool
    witnessed: bool
    system: PseudoIntentSystem | None
    strategy: str
    start_size: int

    @property
    def success(self) -> bool:
        return self.system is not None


def complete_set(context: FormalContext, strategy: str = "auto", cap: int = DEFAULT_CAP) -> tuple[Theory, str]:
    """A complete set of rules ``P => P↓↑`` to start from.

    ``"universe"`` uses every non-closed ``P`` in L^Y.  ``"intents"`` (only
    under globalization) uses the empty set and every one-step raise of an
    intent at one attribute: a model of these rules that is not an intent
    would contain a maximal intent below it, and raising that intent by one
    step inside the model contradicts maximality.  ``"auto"`` picks
    ``"universe"`` when L^Y fits under ``cap``.
    """
    chain = context.chain
    if strategy == "auto":
        try:
            check_capacity(context, cap)
            strategy = "universe"
        except CapacityError:
            if not chain.is_globalization:
                raise
            strategy = "intents"
    if strategy == "universe":
        pairs = non_closed_sets(context, cap)
    elif strategy == "intents":
        if not chain.is_globalization:
            raise PreconditionError("the intents strategy is only complete under globalization")
        pairs = _raised_intents(context, cap)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    # Ascending size keeps redundancy checks short: small antecedents that
    # derive larger ones are still present when the larger ones are tested.
    pairs.sort(key=lambda pq: (sum(pq[0]), pq[0]))
    return Theory.from_pairs(pairs, context.attributes, chain), strategy


def _raised_intents(context: FormalContext, cap: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Non-closed one-step raises of intents (and the empty set) with their closures.

    Extents are object bitmasks: a raise of ``c`` at ``y`` keeps the objects
    of ``c``'s extent whose ``y`` entry reaches the raised degree, and the
    closure is the meet of those rows, cached per extent.
    """
    n, table = context.chain.n, context.table
    width = len(context.attributes)
    top = (n,) * width
    # at_least[y][d]: objects whose entry at y is >= d
    at_least = [
        [sum(1 << i for i, row in enumerate(table) if row[y] >= d) for d in range(n + 1)] for y in range(width)
    ]
    meets: dict[int, tuple[int, ...]] = {}

    def meet(extent: int) -> tuple[int, ...]:
        found = meets.get(extent)
        if found is None:
            found = top
            for i, row in enumerate(table):
                if extent >> i & 1:
                    found = tuple(map(min, found, row))
            meets[extent] = found
        return found

    everyone = (1 << len(table)) - 1
    pairs = {}
    empty = (0,) * width
    if meet(everyone) != empty:
        pairs[empty] = meet(everyone)
    for c in context.intents(cap):
        extent = everyone
        for y, d in enumerate(c):
            extent &= at_least[y][d]
        for y, d in enumerate(c):
            if d < n:
                p = c[:y] + (d + 1,) + c[y + 1 :]
                if p not in pairs:
                    q = meet(extent & at_least[y][d + 1])
                    if q != p:
                        pairs[p] = q
    return list(pairs.items())


def normalize(gamma: Theory) -> Theory:
    """Alternate saturation and redundancy removal until both hold."""
    pairs = normalize_pairs(gamma.kernel, gamma.pairs)
    return Theory.from_pairs(pairs, gamma.universe, gamma.chain)


def normalize_pairs(kernel, pairs) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """:func:`normalize` on bare ``(antecedent, consequent)`` degree tuples."""
    pairs = list(dict.fromkeys(pairs))
    while True:
        encoded = [kernel.pair(a, b) for a, b in pairs]
        keep = nonredundant_indices(kernel, encoded)
        pairs = [pairs[i] for i in keep]
        encoded = [encoded[i] for i in keep]
        # Removal keeps the theory equivalent, so closures are unchanged and
        # this pass normally reaches the joint fixpoint at once.
        seen: set = set()
        saturated = []
        for a, _ in pairs:
            if a not in seen:
                seen.add(a)
                saturated.append((a, kernel.dec(kernel.close(kernel.enc(a), encoded))))
        if saturated == pairs:
            return pairs
        pairs = saturated


def base_from_context(
    context: FormalContext, strategy: str = "auto", cap: int = DEFAULT_CAP
) -> BaseResult:
    """Non-redundant base given by pseudo-intents, via the witnessing transform.

    Starts from a complete set, reduces it to a saturated non-redundant
    theory, transforms it and reads off the antecedents.  Completeness of
    the result is established by equivalence with the starting complete set.
    """
    start, used = complete_set(context, strategy, cap)
    gamma = normalize(start)
    result = witness_transform(gamma)
    witnessed = witness_check(result.theory).witnessed
    system = None
    if result.equivalent and witnessed:
        system = PseudoIntentSystem(
            tuple(sorted((imp.antecedent for imp in result.theory), key=lambda s: s.degrees)),
            result.theory,
        )
    return BaseResult(result.theory, result.equivalent, witnessed, system, used, len(start))


def verify_system(members, context: FormalContext, cap: int = DEFAULT_CAP) -> bool:
    """Check the defining condition of a system of pseudo-intents over all of 𝕌.

    ``P`` in 𝕌 belongs to the system iff every other member ``Q`` satisfies
    ``||Q => Q↓↑||_P = 1``.
    """
    member_keys = [p.degrees if isinstance(p, FuzzySet) else tuple(p) for p in members]
    if len(set(member_keys)) != len(member_keys):
        return False
    universe = {p: c for p, c in non_closed_sets(context, cap)}
    if any(p not in universe for p in member_keys):
        return False
    base = Theory.from_pairs(((p, universe[p]) for p in member_keys), context.attributes, context.chain)
    index = {p: i for i, p in enumerate(member_keys)}
    for p in universe:
        if base.is_model_idx(p, skip=index.get(p, -1)) != (p in index):
            return False
    return True
