"""Hypergraph model, cuts and connectivity.

Vertices are 1..k; edges are nonempty vertex subsets with an integer level
r >= 2 (the number of terms of the shared state living on that edge).  Edge
identity is positional: the same vertex set may occur several times and each
occurrence is a distinct edge, addressed by its 0-based index.

Edge-connectivity and minimum cuts are computed by exhaustive bipartition
enumeration (2^(k-1) - 1 sides), which is exact and entirely sufficient at
the scales this package targets (k <= 24).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from math import prod
from typing import Iterable, Sequence

from .errors import (
    BadLevelError,
    DisconnectedError,
    EmptyEdgeError,
    SameVertexError,
    TooFewVerticesError,
    TooLargeError,
    TooManyEdgesError,
    VertexOutOfRangeError,
)

MAX_CUT_ENUM_VERTICES = 24
MAX_REMOVAL_ORACLE_EDGES = 12
MAX_VERTEX_CONN_ORACLE = 10


@dataclass(frozen=True)
class Edge:
    vertices: frozenset[int]
    level: int = 2


@dataclass(frozen=True)
class Hypergraph:
    k: int
    edges: tuple[Edge, ...]

    @property
    def l(self) -> int:
        return len(self.edges)

    def incident(self, vertex: int) -> tuple[int, ...]:
        """Indices of the edges containing ``vertex``, ascending."""
        return tuple(i for i, e in enumerate(self.edges) if vertex in e.vertices)

    def crossing(self, side: frozenset[int]) -> tuple[int, ...]:
        """Indices of edges meeting both ``side`` and its complement."""
        return tuple(
            i
            for i, e in enumerate(self.edges)
            if (e.vertices & side) and (e.vertices - side)
        )

    def levels(self) -> tuple[int, ...]:
        return tuple(e.level for e in self.edges)

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "edges": [
                {"vertices": sorted(e.vertices), "level": e.level}
                for e in self.edges
            ],
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "Hypergraph":
        k = int(obj["k"])
        edges = tuple(
            Edge(frozenset(int(v) for v in e["vertices"]), int(e.get("level", 2)))
            for e in obj["edges"]
        )
        return cls(k, edges)


def hypergraph(
    k: int,
    edge_sets: Iterable[Iterable[int]],
    levels: Sequence[int] | None = None,
) -> Hypergraph:
    """Build a Hypergraph from plain vertex collections (levels default 2)."""
    sets = [frozenset(s) for s in edge_sets]
    if levels is None:
        levels = [2] * len(sets)
    return Hypergraph(k, tuple(Edge(s, lv) for s, lv in zip(sets, levels)))


@dataclass(frozen=True)
class Cut:
    """One side of a bipartition plus the edges it severs.

    ``rank`` is the exact product of the crossing edges' levels; its log2 is
    the bipartite log-rank of the associated state across this cut.
    """

    side: frozenset[int]
    crossing: tuple[int, ...]
    rank: int


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 (used for line graphs)."""

    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        for a, b in self.edges:
            if not (0 <= a < b < self.n):
                raise ValueError(f"bad edge ({a}, {b}) for n={self.n}")

    def adjacent(self, u: int, v: int) -> bool:
        if u == v:
            return False
        a, b = (u, v) if u < v else (v, u)
        return (a, b) in self.edges

    def neighbors(self, u: int) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if self.adjacent(u, v))

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2


def graph(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, frozenset(tuple(sorted(p)) for p in pairs))


def validate(h: Hypergraph) -> None:
    """Raise unless all Hypergraph invariants hold."""
    for i, e in enumerate(h.edges):
        if not e.vertices:
            raise EmptyEdgeError(i)
        for v in e.vertices:
            if not (1 <= v <= h.k):
                raise VertexOutOfRangeError(i, v, h.k)
        if e.level < 2:
            raise BadLevelError(f"edge {i} has level {e.level} < 2", i)


def is_connected(h: Hypergraph) -> bool:
    """True iff walks alternating vertices and incident edges reach everywhere."""
    if h.k <= 1:
        return True
    seen = {1}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for i in h.incident(v):
            for w in h.edges[i].vertices:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return len(seen) == h.k


def _iter_sides(k: int):
    # All bipartition sides containing vertex 1, excluding the full set:
    # 2^(k-1) - 1 of them, in mask order.
    for mask in range(2 ** (k - 1) - 1):
        side = {1}
        for bit in range(k - 1):
            if mask >> bit & 1:
                side.add(bit + 2)
        yield frozenset(side)


def _require_cut_preconditions(h: Hypergraph) -> None:
    validate(h)
    if h.k < 2:
        raise TooFewVerticesError(f"k={h.k}; cuts need at least 2 vertices")
    if h.k > MAX_CUT_ENUM_VERTICES:
        raise TooLargeError(
            f"k={h.k} exceeds the bipartition-enumeration bound "
            f"{MAX_CUT_ENUM_VERTICES}"
        )
    if not is_connected(h):
        raise DisconnectedError("hypergraph is disconnected")


def min_cut(h: Hypergraph, weighted: bool = False) -> Cut:
    """Minimum bipartition cut.

    Unweighted: minimizes the number of crossing edges (their count is the
    edge-connectivity).  Weighted: minimizes the product of crossing levels.
    Ties resolve to the first side in enumeration order, so results are
    deterministic.
    """
    _require_cut_preconditions(h)
    levels = h.levels()
    best: Cut | None = None
    best_key = None
    for side in _iter_sides(h.k):
        crossing = h.crossing(side)
        r = prod(levels[i] for i in crossing)
        key = r if weighted else len(crossing)
        if best is None or key < best_key:
            best = Cut(side, crossing, r)
            best_key = key
    assert best is not None
    return best


def edge_connectivity(h: Hypergraph) -> int:
    """Minimum number of crossing edges over all bipartitions (levels ignored)."""
    return len(min_cut(h, weighted=False).crossing)


def min_cut_rank(h: Hypergraph) -> int:
    """Minimum over bipartitions of the product of crossing-edge levels."""
    return min_cut(h, weighted=True).rank


def edge_connectivity_by_removal(h: Hypergraph) -> int:
    """Brute-force oracle: smallest number of edges whose removal disconnects.

    Tries every edge subset by increasing size; intended for tests only and
    guarded to |E| <= 12.
    """
    validate(h)
    if h.k < 2:
        raise TooFewVerticesError(f"k={h.k}; connectivity needs at least 2 vertices")
    if len(h.edges) > MAX_REMOVAL_ORACLE_EDGES:
        raise TooManyEdgesError(
            f"|E|={len(h.edges)} exceeds the removal-oracle bound "
            f"{MAX_REMOVAL_ORACLE_EDGES}"
        )
    if not is_connected(h):
        raise DisconnectedError("hypergraph is disconnected")
    m = len(h.edges)
    for size in range(1, m + 1):
        for removed in combinations(range(m), size):
            kept = [e for i, e in enumerate(h.edges) if i not in removed]
            if not is_connected(Hypergraph(h.k, tuple(kept))):
                return size
    # removing everything leaves k >= 2 isolated vertices, so we never get here
    raise AssertionError("unreachable")


def line_graph(h: Hypergraph) -> Graph:
    """Graph on edge indices; two edges are adjacent iff they share a vertex."""
    validate(h)
    m = len(h.edges)
    pairs = {
        (i, j)
        for i in range(m)
        for j in range(i + 1, m)
        if h.edges[i].vertices & h.edges[j].vertices
    }
    return Graph(m, frozenset(pairs))


def graph_is_connected(g: Graph, alive: frozenset[int] | None = None) -> bool:
    verts = sorted(alive) if alive is not None else list(range(g.n))
    if len(verts) <= 1:
        return True
    vset = set(verts)
    seen = {verts[0]}
    queue = deque([verts[0]])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if v in vset and v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == len(verts)


def vertex_connectivity(g: Graph) -> int:
    """Exhaustive vertex-connectivity oracle (complete graph: n - 1)."""
    if g.n > MAX_VERTEX_CONN_ORACLE:
        raise TooLargeError(
            f"n={g.n} exceeds the vertex-connectivity oracle bound "
            f"{MAX_VERTEX_CONN_ORACLE}"
        )
    if not graph_is_connected(g):
        raise DisconnectedError("graph is disconnected")
    if g.is_complete():
        return g.n - 1
    for size in range(0, g.n - 1):
        for removed in combinations(range(g.n), size):
            alive = frozenset(range(g.n)) - frozenset(removed)
            if not graph_is_connected(g, alive):
                return size
    raise AssertionError("non-complete graph must have a vertex cut")


def min_cut_separating(h: Hypergraph, a: int, b: int) -> int:
    """Minimum crossing-edge count over bipartitions with a inside, b outside."""
    _require_cut_preconditions(h)
    if a == b:
        raise SameVertexError(f"vertices must differ, got {a} twice")
    for v in (a, b):
        if not (1 <= v <= h.k):
            raise VertexOutOfRangeError(-1, v, h.k)
    rest = [v for v in range(1, h.k + 1) if v not in (a, b)]
    best = None
    for mask in range(2 ** len(rest)):
        side = {a}
        for bit, v in enumerate(rest):
            if mask >> bit & 1:
                side.add(v)
        count = len(h.crossing(frozenset(side)))
        if best is None or count < best:
            best = count
    assert best is not None
    return best


def _unit_max_flow(arcs: dict, source, sink) -> tuple[int, dict]:
    """Edmonds-Karp on unit capacities; returns (value, net positive flow)."""
    residual = {u: dict(nbrs) for u, nbrs in arcs.items()}
    value = 0
    while True:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            u = queue.popleft()
            for v, cap in residual.get(u, {}).items():
                if cap > 0 and v not in parent:
                    parent[v] = u
                    queue.append(v)
        if sink not in parent:
            break
        v = sink
        while parent[v] is not None:
            u = parent[v]
            residual[u][v] -= 1
            residual.setdefault(v, {})[u] = residual.get(v, {}).get(u, 0) + 1
            v = u
        value += 1
    flow = {}
    for u, nbrs in arcs.items():
        for v, cap in nbrs.items():
            used = cap - residual[u][v]
            if used > 0:
                flow.setdefault(u, {})[v] = used
    return value, flow


def edge_disjoint_paths(h: Hypergraph, a: int, b: int) -> list[list[int]]:
    """Maximum family of pairwise edge-disjoint a-b paths.

    A path is a list of edge indices in which consecutive edges share a
    vertex, the first contains a and the last contains b.  Computed by
    unit-capacity max-flow on the vertex-edge incidence network (each edge
    node capped at one use), then decomposed deterministically.
    """
    _require_cut_preconditions(h)
    if a == b:
        raise SameVertexError(f"vertices must differ, got {a} twice")
    arcs: dict = {}

    def add(u, v):
        arcs.setdefault(u, {})[v] = 1
        arcs.setdefault(v, {}).setdefault(u, 0)

    for i, e in enumerate(h.edges):
        add(("in", i), ("out", i))
        for v in sorted(e.vertices):
            add(("v", v), ("in", i))
            add(("out", i), ("v", v))
    source, sink = ("v", a), ("v", b)
    arcs.setdefault(source, {})
    arcs.setdefault(sink, {})
    value, flow = _unit_max_flow(arcs, source, sink)

    def take(u, v):
        flow[u][v] -= 1
        if flow[u][v] == 0:
            del flow[u][v]

    paths = []
    for _ in range(value):
        path: list[int] = []
        trail = [source]
        pos = {source: 0}
        node = source
        while node != sink:
            i = min(i for (_, i) in flow.get(node, {}) if flow[node][("in", i)] > 0)
            take(node, ("in", i))
            take(("in", i), ("out", i))
            w = min(v for (_, v) in flow.get(("out", i), {}))
            take(("out", i), ("v", w))
            path.append(i)
            node = ("v", w)
            if node in pos:
                # walked around a flow cycle: splice it out of the path
                j = pos[node]
                for dropped in trail[j + 1 :]:
                    del pos[dropped]
                trail = trail[: j + 1]
                path = path[:j]
            else:
                pos[node] = len(trail)
                trail.append(node)
        paths.append(path)
    return paths


# -- corpus builders ---------------------------------------------------------


def path_hypergraph(k: int) -> Hypergraph:
    """Path through vertices 1..k (k - 1 edges)."""
    return hypergraph(k, [{i, i + 1} for i in range(1, k)])


def cycle_hypergraph(k: int) -> Hypergraph:
    """Cycle on vertices 1..k."""
    return hypergraph(k, [{i, i % k + 1} for i in range(1, k + 1)])


def complete_uniform(k: int, l: int) -> Hypergraph:
    """All l-element subsets of 1..k, each once, in lexicographic order."""
    return hypergraph(k, [set(c) for c in combinations(range(1, k + 1), l)])


def single_full_edge(k: int, level: int = 2) -> Hypergraph:
    """One edge containing every vertex."""
    return hypergraph(k, [set(range(1, k + 1))], [level])
