"""Graph-based enumeration of systems of pseudo-intents.

Vertices are the non-closed sets ``P != P↓↑``.  There is an edge ``<P, Q>``
when ``P != Q`` and ``P`` is not a model of ``Q => Q↓↑``.  A subset ``𝒫`` of
vertices is a system of pseudo-intents iff the vertices outside ``𝒫`` are
exactly the in-neighbours of ``𝒫``; every such subset is a maximal
independent set of the symmetrized graph, so candidates are drawn from those
and filtered.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .basebuild import PseudoIntentSystem
from .context import DEFAULT_CAP, FormalContext, non_closed_sets
from .errors import PreconditionError
from .fuzzyset import FuzzySet, format_idx, subsethood_idx


@dataclass
class PseudoGraph:
    context: FormalContext
    vertices: list[tuple[int, ...]]
    closures: list[tuple[int, ...]]
    # out[i] has bit j set iff <vertex i, vertex j> is an edge
    out: list[int]
    _index: dict = field(init=False, repr=False)

    def __post_init__(self):
        self._index = {v: i for i, v in enumerate(self.vertices)}

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def edges(self) -> set[tuple[int, int]]:
        return {(i, j) for i, row in enumerate(self.out) for j in _bits(row)}

    def incoming(self) -> list[int]:
        """``incoming()[j]`` has bit ``i`` set iff ``<vertex i, vertex j>`` is an edge."""
        inc = [0] * len(self.out)
        for i, row in enumerate(self.out):
            for j in _bits(row):
                inc[j] |= 1 << i
        return inc

    def neighbours(self) -> list[int]:
        """Adjacency bitsets of the symmetrized graph."""
        return [o | i for o, i in zip(self.out, self.incoming())]

    def vertex_set(self, i: int) -> FuzzySet:
        return FuzzySet(self.context.attributes, self.context.chain, self.vertices[i])

    def index_of(self, p) -> int:
        key = p.degrees if isinstance(p, FuzzySet) else tuple(p)
        try:
            return self._index[key]
        except KeyError:
            raise PreconditionError(f"{p} is not a vertex of the graph") from None

    def dump(self) -> str:
        """Line-oriented listing of vertices and directed edges."""
        ctx = self.context
        lines = [f"vertex {i} {format_idx(v, ctx.attributes, ctx.chain)}" for i, v in enumerate(self.vertices)]
        for i, j in sorted(self.edges):
            lines.append(f"edge {i} {j}")
        return "\n".join(lines)


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def build_graph(context: FormalContext, cap: int = DEFAULT_CAP) -> PseudoGraph:
    chain = context.chain
    h, r, n = chain._h, chain._r, chain.n
    pairs = non_closed_sets(context, cap)
    vertices = [p for p, _ in pairs]
    closures = [c for _, c in pairs]
    out = []
    for p in vertices:
        row = 0
        for j, (q, qc) in enumerate(pairs):
            if q == p:
                continue
            s = h[subsethood_idx(chain, q, p)]
            if s and r[s][subsethood_idx(chain, qc, p)] != n:
                row |= 1 << j
        out.append(row)
    return PseudoGraph(context, vertices, closures, out)


def pred(members: Iterable, graph: PseudoGraph) -> set[int]:
    """Indices of vertices with an edge into some member."""
    mask = 0
    for p in members:
        mask |= 1 << (p if isinstance(p, int) else graph.index_of(p))
    return {i for i, row in enumerate(graph.out) if row & mask}


def maximal_independent_sets(neighbours: list[int]) -> list[int]:
    """Bron–Kerbosch with pivoting on the complement graph, over bitsets.

    ``neighbours[i]`` is the adjacency bitset of vertex ``i`` (no loops).
    Returns each maximal independent set once, as a bitset.
    """
    size = len(neighbours)
    if size == 0:
        return [0]
    everything = (1 << size) - 1
    # independent sets of G are cliques of the complement
    comp = [everything & ~nb & ~(1 << i) for i, nb in enumerate(neighbours)]
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p:
            if not x:
                found.append(r)
            return
        # pivot maximizing |P ∩ N(u)|
        best, pivot_nb = -1, 0
        px = p | x
        while px:
            low = px & -px
            px ^= low
            nu = comp[low.bit_length() - 1]
            c = (p & nu).bit_count()
            if c > best:
                best, pivot_nb = c, nu
        cand = p & ~pivot_nb
        while cand:
            low = cand & -cand
            cand ^= low
            nv = comp[low.bit_length() - 1]
            expand(r | low, p & nv, x & nv)
            p ^= low
            x |= low

    expand(0, everything, 0)
    return found


def enumerate_systems(graph: PseudoGraph) -> list[PseudoIntentSystem]:
    """Every maximal independent set ``𝒫`` with ``𝕌 ∖ 𝒫 = Pred(𝒫)``."""
    everything = (1 << graph.size) - 1
    incoming = graph.incoming()
    neighbours = [o | i for o, i in zip(graph.out, incoming)]
    found = []
    for mis in maximal_independent_sets(neighbours):
        predecessors = 0
        for v in _bits(mis):
            predecessors |= incoming[v]
        if predecessors == everything & ~mis:
            members = [graph.vertex_set(i) for i in _bits(mis)]
            found.append(PseudoIntentSystem.from_members(members, graph.context))
    return found


def graph_base(context: FormalContext, cap: int = DEFAULT_CAP) -> list[PseudoIntentSystem]:
    return enumerate_systems(build_graph(context, cap))
