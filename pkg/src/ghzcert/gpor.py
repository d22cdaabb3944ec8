"""General-position orthogonal representations of line graphs.

An orthogonal representation of a graph G on vertices 0..m-1 assigns each
vertex a vector in Q^d such that non-adjacent vertices get orthogonal
vectors.  It is in general position when every d of the vectors are linearly
independent.  For the line graph of a connected hypergraph with m edges and
edge-connectivity lam, such a representation exists in dimension d = m - lam
and that dimension is optimal.

The constructive route is the re-orthogonalization operator: given any
vector assignment f and a vertex ordering, replace each f(v) by its
component orthogonal to the span of the already-processed non-neighbors'
outputs.  A fixed point of this operator is an orthogonal representation,
and for a random starting f the result is in general position with
probability 1; over a finite random integer box it holds with high
probability, so we retry a few times and check exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import DimensionInfeasibleError, RetriesExhaustedError, TooLargeError
from .hypergraph import Graph
from .ratlinalg import (
    GENERAL_POSITION_SUBSET_LIMIT,
    RatVector,
    is_zero_vector,
    project_onto_span,
    rank,
    scale_to_integers,
    vec_sub,
    vector,
)

DEFAULT_SEED_BOUND = 1000
DEFAULT_MAX_RETRIES = 32


@dataclass(frozen=True)
class OrthRep:
    """Vectors (one per graph vertex, integer entries) labelling ``graph``."""

    graph: Graph
    d: int
    vectors: tuple[tuple[int, ...], ...]

    def vector(self, v: int) -> RatVector:
        return vector(self.vectors[v])

    def to_json_dict(self) -> dict:
        return {"d": self.d, "vectors": [list(v) for v in self.vectors]}


def orthogonalize_map(
    g: Graph,
    f: dict[int, RatVector],
    ordering: tuple[int, ...] | None = None,
) -> dict[int, RatVector]:
    """One sweep of the re-orthogonalization operator.

    Processes vertices in ``ordering`` (default 0..n-1).  The output at v is
    f(v) minus its projection onto the span of the outputs already produced
    at vertices non-adjacent to v; exact zero vectors contribute nothing to
    the span.  A fixed point of this sweep assigns orthogonal vectors to
    every non-adjacent pair.
    """
    if ordering is None:
        ordering = tuple(range(g.n))
    out: dict[int, RatVector] = {}
    for idx, v in enumerate(ordering):
        earlier = [ordering[j] for j in range(idx) if not g.adjacent(ordering[j], v)]
        span = [out[u] for u in earlier if not is_zero_vector(out[u])]
        out[v] = vec_sub(f[v], project_onto_span(span, f[v]))
    return out


def _band_vectors(n: int, d: int) -> list[tuple[int, ...]]:
    """Deterministic banded seed: vertex j gets e_{j-1} + e_j, indices clipped.

    On the line graph of a path this is already a fixed point of the sweep
    and lies in general position for every length, so it makes a good first
    attempt before random seeding.
    """
    vecs = []
    for j in range(n):
        coords = [0] * d
        for t in {min(max(j - 1, 0), d - 1), min(j, d - 1)}:
            coords[t] += 1
        vecs.append(tuple(coords))
    return vecs


def _settle(g: Graph, f: dict[int, RatVector], sweeps: int = 8) -> dict[int, RatVector] | None:
    """Iterate the sweep until it stabilizes; None if it fails to settle."""
    cur = f
    for _ in range(sweeps):
        nxt = orthogonalize_map(g, cur)
        if nxt == cur:
            return cur
        cur = nxt
    return None


def _rep_from_map(g: Graph, d: int, f: dict[int, RatVector]) -> OrthRep | None:
    settled = _settle(g, f)
    if settled is None:
        return None
    vecs = []
    for v in range(g.n):
        w = settled[v]
        if is_zero_vector(w):
            return None
        scaled = scale_to_integers(w)
        vecs.append(tuple(int(x) for x in scaled))
    rep = OrthRep(g, d, tuple(vecs))
    report = verify_orthrep(rep)
    return rep if report.ok else None


def find_gpor(
    g: Graph,
    d: int,
    seed: int = 0,
    bound: int = DEFAULT_SEED_BOUND,
    max_retries: int = DEFAULT_MAX_RETRIES,
) -> OrthRep:
    """Search for a general-position orthogonal representation in Q^d.

    Attempt 0 uses the deterministic banded seed; later attempts draw
    integer vectors uniformly from [-bound, bound]^d (resampling any zero
    vector) with a RNG seeded from ``seed``, so the whole search is
    reproducible.  Raises RetriesExhausted if no attempt verifies.
    """
    if d < 0:
        raise DimensionInfeasibleError(f"dimension {d} is negative")
    if d == 0:
        # Every pair of edges shares a vertex and lam = m: the only
        # representation is m empty vectors, vacuously orthogonal and in
        # general position.
        return OrthRep(g, 0, tuple(() for _ in range(g.n)))
    rep = _rep_from_map(g, d, {v: vector(w) for v, w in enumerate(_band_vectors(g.n, d))})
    if rep is not None:
        return rep
    rng = random.Random(seed)
    for _ in range(max_retries):
        f = {}
        for v in range(g.n):
            while True:
                w = tuple(rng.randint(-bound, bound) for _ in range(d))
                if any(w):
                    break
            f[v] = vector(w)
        rep = _rep_from_map(g, d, f)
        if rep is not None:
            return rep
    raise RetriesExhaustedError(max_retries, bound)


def gpor_candidates(
    g: Graph,
    d: int,
    seed: int = 0,
    count: int = 4,
    bound: int = DEFAULT_SEED_BOUND,
    max_retries: int = DEFAULT_MAX_RETRIES,
) -> list[OrthRep]:
    """Up to ``count`` distinct verified representations, banded seed first.

    Used by certificate synthesis to pick the candidate with the best
    solution count; always deterministic for a given seed.
    """
    if d <= 0:
        return [find_gpor(g, d, seed=seed, bound=bound, max_retries=max_retries)]
    found: list[OrthRep] = []
    rep = _rep_from_map(g, d, {v: vector(w) for v, w in enumerate(_band_vectors(g.n, d))})
    if rep is not None:
        found.append(rep)
    rng = random.Random(seed)
    attempts = 0
    while len(found) < count and attempts < max_retries:
        attempts += 1
        f = {}
        for v in range(g.n):
            while True:
                w = tuple(rng.randint(-bound, bound) for _ in range(d))
                if any(w):
                    break
            f[v] = vector(w)
        rep = _rep_from_map(g, d, f)
        if rep is not None and rep not in found:
            found.append(rep)
    if not found:
        raise RetriesExhaustedError(max_retries, bound)
    return found


@dataclass(frozen=True)
class OrthRepReport:
    orthogonality_violations: tuple[tuple[int, int, str], ...]
    dependent_subsets: tuple[tuple[int, ...], ...]
    zero_vectors: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not (
            self.orthogonality_violations
            or self.dependent_subsets
            or self.zero_vectors
        )


def verify_orthrep(rep: OrthRep) -> OrthRepReport:
    """Exhaustively check orthogonality, general position and nonzeroness."""
    g = rep.graph
    vecs = [rep.vector(v) for v in range(g.n)]
    violations = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.adjacent(u, v):
                ip = sum(a * b for a, b in zip(vecs[u], vecs[v]))
                if ip != 0:
                    violations.append((u, v, str(ip)))
    dependent = []
    if rep.d > 0:
        size = min(rep.d, g.n)
        if comb(g.n, size) > GENERAL_POSITION_SUBSET_LIMIT:
            raise TooLargeError(
                f"C({g.n}, {size}) subsets exceed the general-position "
                f"check limit {GENERAL_POSITION_SUBSET_LIMIT}"
            )
        for subset in combinations(range(g.n), size):
            if rank([vecs[i] for i in subset]) < size:
                dependent.append(subset)
    zeros = tuple(
        v for v in range(g.n) if rep.d > 0 and is_zero_vector(vecs[v])
    )
    return OrthRepReport(tuple(violations), tuple(dependent), zeros)
