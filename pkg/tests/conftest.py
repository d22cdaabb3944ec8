import random

from ghzcert.hypergraph import (
    Hypergraph,
    complete_uniform,
    cycle_hypergraph,
    hypergraph,
    is_connected,
    path_hypergraph,
    single_full_edge,
)


def corpus() -> list[tuple[str, Hypergraph]]:
    """The instances every end-to-end test cycles through."""
    return [
        ("K3", cycle_hypergraph(3)),
        ("C4", cycle_hypergraph(4)),
        ("C5", cycle_hypergraph(5)),
        ("K4^2", complete_uniform(4, 2)),
        ("K4^3", complete_uniform(4, 3)),
        ("path3", path_hypergraph(3)),
        ("path4", path_hypergraph(4)),
        ("path5", path_hypergraph(5)),
        ("full3", single_full_edge(3)),
    ]


def random_connected_hypergraph(
    rng: random.Random, kmax: int = 5, emax: int = 7, emin: int = 1
) -> Hypergraph:
    """Rejection-sample a connected hypergraph with edges of size >= 2."""
    while True:
        k = rng.randint(2, kmax)
        l = rng.randint(emin, emax)
        edges = [
            rng.sample(range(1, k + 1), rng.randint(2, k)) for _ in range(l)
        ]
        h = hypergraph(k, edges)
        if is_connected(h):
            return h


def assert_valid_path_family(h: Hypergraph, a: int, b: int, paths) -> None:
    """Each path connects a to b through shared vertices; no edge reused."""
    used: set[int] = set()
    for path in paths:
        assert path, "empty path"
        assert not (set(path) & used), "edge reused across paths"
        used.update(path)
        assert a in h.edges[path[0]].vertices
        assert b in h.edges[path[-1]].vertices
        for e, f in zip(path, path[1:]):
            assert h.edges[e].vertices & h.edges[f].vertices, (
                f"edges {e},{f} do not touch"
            )
