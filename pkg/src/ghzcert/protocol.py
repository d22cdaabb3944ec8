"""Distillation protocol synthesis, certificates and rates.

The pipeline: for a connected hypergraph H with l edges and
edge-connectivity lam, find a general-position orthogonal representation
c of the line graph in dimension d = l - lam, pick a target vector g
maximizing the number of grid points i in [0, n-1]^l with sum_e i_e c_e
= g, and distribute the exponent form ||sum_e c_e i_e - g||^2 among the
vertices so each vertex's share only reads its own incident indices.
Applying epsilon^(local share) diagonally at every site sends the n-level
edge-product state to a GHZ state with M terms as epsilon -> 0, where M
is the solution count.  Everything needed to replay that claim is packed
into a Certificate.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .errors import (
    BadLevelError,
    DimMismatchError,
    GridTooLargeError,
    LevelsUnsupportedError,
    NotOrthRepError,
    RetriesExhaustedError,
)
from .gpor import OrthRep, find_gpor, gpor_candidates, verify_orthrep
from .hypergraph import (
    Graph,
    Hypergraph,
    edge_connectivity,
    edge_disjoint_paths,
    line_graph,
    min_cut_rank,
    min_cut_separating,
    validate,
    _require_cut_preconditions,
)
from .ratlinalg import rank
from .tensor import (
    apply_local_diagonal,
    check_ghz_structure,
    ghz_state,
    leading_term,
)

DEFAULT_GRID_LIMIT = 10**8
DEEP_GRID_LIMIT = 10**6
SOLUTION_LIST_CAP = 10**4
CANDIDATE_COUNT = 4


def _grid_limit() -> int:
    raw = os.environ.get("GHZCERT_MAX_GRID")
    if raw is None:
        return DEFAULT_GRID_LIMIT
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_GRID_LIMIT


def _check_grid(l: int, n: int) -> None:
    size = n**l
    limit = _grid_limit()
    if size > limit:
        raise GridTooLargeError(size, limit)


def _iinner(u: tuple[int, ...], v: tuple[int, ...]) -> int:
    return sum(a * b for a, b in zip(u, v))


# -- exponent assignment -----------------------------------------------------


@dataclass(frozen=True)
class QuadraticAssignment:
    """Integer quadratic forms, one per vertex, in the edge indices.

    Vertex j (1-based; slot j - 1 here) contributes
        sum q[e,f] i_e i_f + sum lam[e] i_e + const
    and may only mention edges incident to j.  Summed over vertices the
    contributions reproduce ||sum_e c_e i_e - g||^2 exactly.
    """

    k: int
    l: int
    quad: tuple[dict[tuple[int, int], int], ...]
    lin: tuple[dict[int, int], ...]
    const: tuple[int, ...]

    def local_exponent(self, vertex: int, i: tuple[int, ...]) -> int:
        j = vertex - 1
        total = self.const[j]
        for (e, f), q in self.quad[j].items():
            total += q * i[e] * i[f]
        for e, lam_e in self.lin[j].items():
            total += lam_e * i[e]
        return total

    def total_exponent(self, i: tuple[int, ...]) -> int:
        return sum(self.local_exponent(j, i) for j in range(1, self.k + 1))

    def site_function(self, h: Hypergraph, vertex: int):
        """Callable on site labels of ghz_state(h, n), for diagonal action."""
        pos = {e: idx for idx, e in enumerate(h.incident(vertex))}
        j = vertex - 1
        quad = [(pos[e], pos[f], q) for (e, f), q in self.quad[j].items()]
        lin = [(pos[e], c) for e, c in self.lin[j].items()]
        const = self.const[j]

        def exp_fn(label: tuple[int, ...]) -> int:
            total = const
            for a, b, q in quad:
                total += q * label[a] * label[b]
            for a, c in lin:
                total += c * label[a]
            return total

        return exp_fn

    def mentioned_edges(self, vertex: int) -> set[int]:
        j = vertex - 1
        out = set()
        for e, f in self.quad[j]:
            out.add(e)
            out.add(f)
        out.update(self.lin[j])
        return out

    def aggregate(self) -> tuple[dict[tuple[int, int], int], dict[int, int], int]:
        """Coefficient tables of the summed form, zero entries dropped."""
        quad: dict[tuple[int, int], int] = {}
        lin: dict[int, int] = {}
        const = 0
        for j in range(self.k):
            for key, q in self.quad[j].items():
                quad[key] = quad.get(key, 0) + q
            for e, c in self.lin[j].items():
                lin[e] = lin.get(e, 0) + c
            const += self.const[j]
        quad = {key: q for key, q in quad.items() if q != 0}
        lin = {e: c for e, c in lin.items() if c != 0}
        return quad, lin, const

    def to_json_dict(self) -> dict:
        return {
            "vertices": [
                {
                    "quad": [
                        [e, f, q] for (e, f), q in sorted(self.quad[j].items())
                    ],
                    "lin": [[e, c] for e, c in sorted(self.lin[j].items())],
                    "const": self.const[j],
                }
                for j in range(self.k)
            ]
        }

    @classmethod
    def from_json_dict(cls, obj: dict, l: int) -> "QuadraticAssignment":
        rows = obj["vertices"]
        quad = tuple(
            {(int(e), int(f)): int(q) for e, f, q in row["quad"]} for row in rows
        )
        lin = tuple({int(e): int(c) for e, c in row["lin"]} for row in rows)
        const = tuple(int(row["const"]) for row in rows)
        return cls(len(rows), l, quad, lin, const)


def build_exponent_assignment(
    h: Hypergraph, rep: OrthRep, g: tuple[int, ...]
) -> QuadraticAssignment:
    """Distribute ||sum_e c_e i_e - g||^2 over the vertices.

    Diagonal and linear terms of edge e land at e's smallest incident
    vertex; a cross term for edges e < f (present only when <c_e, c_f> is
    nonzero) lands at their smallest common vertex, which exists precisely
    because c is an orthogonal representation of the line graph; the
    constant <g, g> lands at vertex 1.
    """
    validate(h)
    l = h.l
    if rep.graph.n != l:
        raise DimMismatchError(
            f"representation covers {rep.graph.n} edges, hypergraph has {l}"
        )
    if len(g) != rep.d:
        raise DimMismatchError(f"g has {len(g)} entries, expected {rep.d}")
    quad: list[dict[tuple[int, int], int]] = [{} for _ in range(h.k)]
    lin: list[dict[int, int]] = [{} for _ in range(h.k)]
    const = [0] * h.k
    vecs = rep.vectors
    for e in range(l):
        host = min(h.edges[e].vertices) - 1
        quad[host][(e, e)] = _iinner(vecs[e], vecs[e])
        coef = -2 * _iinner(vecs[e], g)
        if coef:
            lin[host][e] = coef
    for e in range(l):
        for f in range(e + 1, l):
            ip = _iinner(vecs[e], vecs[f])
            if ip == 0:
                continue
            common = h.edges[e].vertices & h.edges[f].vertices
            if not common:
                raise NotOrthRepError(e, f)
            quad[min(common) - 1][(e, f)] = 2 * ip
    const[0] = _iinner(g, g)
    return QuadraticAssignment(
        h.k, l, tuple(quad), tuple(lin), tuple(const)
    )


# -- solution counting -------------------------------------------------------


def value_histogram(rep: OrthRep, n: int) -> dict[tuple[int, ...], int]:
    """Counts of sum_e i_e c_e over the grid, by convolution edge by edge."""
    _check_grid(rep.graph.n, n)
    d = rep.d
    hist: dict[tuple[int, ...], int] = {(0,) * d: 1}
    for ce in rep.vectors:
        nxt: dict[tuple[int, ...], int] = {}
        for val, cnt in hist.items():
            for i in range(n):
                v2 = tuple(a + i * b for a, b in zip(val, ce))
                nxt[v2] = nxt.get(v2, 0) + cnt
        hist = nxt
    return hist


def choose_g(rep: OrthRep, n: int) -> tuple[tuple[int, ...], int]:
    """Most frequent grid value of sum_e i_e c_e (lex-smallest on ties)."""
    hist = value_histogram(rep, n)
    best_g = None
    best_m = -1
    for g in sorted(hist):
        if hist[g] > best_m:
            best_g, best_m = g, hist[g]
    return best_g, best_m


def _iter_solutions(vectors, n: int, g: tuple[int, ...]):
    """Grid tuples with sum_e i_e c_e = g, in lexicographic order.

    Depth-first with per-coordinate reachability pruning: at each depth we
    know the least and greatest the remaining edges can still add.
    """
    l = len(vectors)
    d = len(g)
    suffix_lo = [[0] * d for _ in range(l + 1)]
    suffix_hi = [[0] * d for _ in range(l + 1)]
    for e in range(l - 1, -1, -1):
        for t in range(d):
            c = vectors[e][t] * (n - 1)
            suffix_lo[e][t] = suffix_lo[e + 1][t] + min(0, c)
            suffix_hi[e][t] = suffix_hi[e + 1][t] + max(0, c)

    prefix: list[int] = []
    partial = [0] * d

    def feasible(depth: int) -> bool:
        for t in range(d):
            if not (
                partial[t] + suffix_lo[depth][t]
                <= g[t]
                <= partial[t] + suffix_hi[depth][t]
            ):
                return False
        return True

    def walk(depth: int):
        if depth == l:
            yield tuple(prefix)
            return
        ce = vectors[depth]
        for i in range(n):
            for t in range(d):
                partial[t] += i * ce[t]
            if feasible(depth + 1):
                prefix.append(i)
                yield from walk(depth + 1)
                prefix.pop()
            for t in range(d):
                partial[t] -= i * ce[t]

    if feasible(0):
        yield from walk(0)


def enumerate_solutions(
    rep: OrthRep, n: int, g: tuple[int, ...]
) -> list[tuple[int, ...]]:
    """All i in [0, n-1]^l with sum_e i_e c_e = g, lexicographically."""
    if n < 2:
        raise BadLevelError(f"level n={n} < 2")
    _check_grid(rep.graph.n, n)
    return list(_iter_solutions(rep.vectors, n, g))


def solution_hash(solutions) -> str:
    """sha256 of the compact JSON of the lex-sorted solution list."""
    hasher = hashlib.sha256()
    hasher.update(b"[")
    first = True
    for s in solutions:
        if not first:
            hasher.update(b",")
        first = False
        hasher.update(json.dumps(list(s), separators=(",", ":")).encode())
    hasher.update(b"]")
    return hasher.hexdigest()


def c_prime(rep: OrthRep) -> int:
    """Max over coordinates of the absolute column sum of the c-vectors.

    Every grid value of sum_e i_e c_e lies in the box
    [-C'(n-1), C'(n-1)]^d, which is what turns the mode count into an
    explicit floor.
    """
    if rep.d == 0:
        return 0
    return max(
        sum(abs(v[t]) for v in rep.vectors) for t in range(rep.d)
    )


def counting_floor(rep: OrthRep, n: int) -> int:
    """Guaranteed lower bound on the mode count: grid size over box size."""
    box = (2 * c_prime(rep) * (n - 1) + 1) ** rep.d
    return -(-(n ** rep.graph.n) // box)


# -- certificates ------------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    hypergraph: Hypergraph
    lam: int
    d: int
    rep: OrthRep
    cprime: int
    n: int
    g: tuple[int, ...]
    m_count: int
    solutions: tuple[tuple[int, ...], ...] | None
    sol_hash: str
    assignment: QuadraticAssignment
    seed: int
    version: str = "1"

    @property
    def achieved_rate(self) -> float:
        return math.log2(self.m_count) / math.log2(self.n)

    @property
    def bound_rate(self) -> int:
        return self.lam

    def to_json_dict(self) -> dict:
        if self.solutions is not None:
            sols = [list(s) for s in self.solutions]
        else:
            sols = {"count": self.m_count, "hash": self.sol_hash}
        return {
            "hypergraph": self.hypergraph.to_json_dict(),
            "lambda": self.lam,
            "d": self.d,
            "c": [list(v) for v in self.rep.vectors],
            "C_prime": self.cprime,
            "n": self.n,
            "g": list(self.g),
            "M": self.m_count,
            "solutions": sols,
            "assignment": self.assignment.to_json_dict(),
            "achieved_rate": {
                "log2_M": math.log2(self.m_count),
                "log2_n": math.log2(self.n),
            },
            "bound_rate": self.lam,
            "seed": self.seed,
            "version": self.version,
        }

    def to_json_bytes(self) -> bytes:
        return (
            json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"
        ).encode()

    @classmethod
    def from_json_dict(cls, obj: dict) -> "Certificate":
        h = Hypergraph.from_json_dict(obj["hypergraph"])
        d = int(obj["d"])
        vectors = tuple(tuple(int(x) for x in v) for v in obj["c"])
        rep = OrthRep(line_graph(h), d, vectors)
        raw_sols = obj["solutions"]
        if isinstance(raw_sols, dict):
            solutions = None
            sol_hash = str(raw_sols["hash"])
            m = int(raw_sols["count"])
        else:
            solutions = tuple(tuple(int(x) for x in s) for s in raw_sols)
            sol_hash = solution_hash(solutions)
            m = int(obj["M"])
        return cls(
            hypergraph=h,
            lam=int(obj["lambda"]),
            d=d,
            rep=rep,
            cprime=int(obj["C_prime"]),
            n=int(obj["n"]),
            g=tuple(int(x) for x in obj["g"]),
            m_count=m,
            solutions=solutions,
            sol_hash=sol_hash,
            assignment=QuadraticAssignment.from_json_dict(
                obj["assignment"], h.l
            ),
            seed=int(obj["seed"]),
            version=str(obj.get("version", "1")),
        )


def build_certificate(
    h: Hypergraph,
    n: int,
    rep: OrthRep,
    g: tuple[int, ...],
    m: int,
    seed: int,
) -> Certificate:
    assignment = build_exponent_assignment(h, rep, g)
    if m > SOLUTION_LIST_CAP:
        # certificate stays bounded: keep the count and a digest only
        digest = solution_hash(_iter_solutions(rep.vectors, n, g))
        stored = None
    else:
        listed = tuple(_iter_solutions(rep.vectors, n, g))
        digest = solution_hash(listed)
        stored = listed
    return Certificate(
        hypergraph=h,
        lam=h.l - rep.d,
        d=rep.d,
        rep=rep,
        cprime=c_prime(rep),
        n=n,
        g=g,
        m_count=m,
        solutions=stored,
        sol_hash=digest,
        assignment=assignment,
        seed=seed,
        version="1",
    )


def synthesize_certificate(
    h: Hypergraph, n: int, seed: int = 0, candidates: int = CANDIDATE_COUNT
) -> Certificate:
    """Full pipeline: connectivity, representation, target, assignment.

    When the grid is small enough to re-count cheaply, several verified
    representations are scored by their mode count M and the best kept
    (first wins ties), all deterministic in the seed.
    """
    validate(h)
    if n < 2:
        raise BadLevelError(f"level n={n} < 2")
    for idx, e in enumerate(h.edges):
        if e.level != 2:
            raise LevelsUnsupportedError(
                f"edge {idx} has level {e.level}; protocol synthesis "
                "supports uniform level 2 only"
            )
    lam = edge_connectivity(h)
    d = h.l - lam
    lg = line_graph(h)
    _check_grid(h.l, n)
    if n**h.l <= DEEP_GRID_LIMIT and candidates > 1:
        # Small coordinates concentrate the value histogram, so try a
        # low-bound search first and keep whichever candidate counts best.
        reps: list = []
        try:
            reps += gpor_candidates(
                lg, d, seed=seed, count=candidates, bound=3, max_retries=16
            )
        except RetriesExhaustedError:
            pass
        for rep in gpor_candidates(lg, d, seed=seed, count=candidates):
            if rep not in reps:
                reps.append(rep)
        scored = [(choose_g(rep, n), rep) for rep in reps]
        (g, m), rep = max(scored, key=lambda item: item[0][1])
    else:
        rep = find_gpor(lg, d, seed=seed)
        g, m = choose_g(rep, n)
    return build_certificate(h, n, rep, g, m, seed)


# -- verification ------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str = ""


@dataclass(frozen=True)
class CertificateReport:
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            line = f"{c.name:<26} {c.status}"
            if c.detail:
                line += f"  ({c.detail})"
            lines.append(line)
        return "\n".join(lines)


def verify_certificate(cert: Certificate, deep: bool = False) -> CertificateReport:
    """Replay every claim a certificate makes, exactly.

    The true solution set is re-derived from (c, n, g); the listed
    solutions are evidence to be checked against it, never trusted.  All
    findings land in the report; nothing raises.  The deep check actually
    runs the degeneration on the full tensor and is gated on a 10^6 grid.
    """
    h = cert.hypergraph
    l = h.l
    grid_small = cert.n**l <= DEEP_GRID_LIMIT
    checks: list[CheckResult] = []

    def run(name: str, fn) -> None:
        try:
            status, detail = fn()
        except Exception as exc:  # malformed fields must not kill the report
            status, detail = "fail", f"{type(exc).__name__}: {exc}"
        checks.append(CheckResult(name, status, detail))

    true_sols: tuple[tuple[int, ...], ...] | None = None
    if grid_small and len(cert.rep.vectors) == l and all(
        len(v) == len(cert.g) for v in cert.rep.vectors
    ):
        true_sols = tuple(_iter_solutions(cert.rep.vectors, cert.n, cert.g))

    # 1: the vectors form a general-position orthogonal representation
    def check_rep():
        r = verify_orthrep(cert.rep)
        if r.ok:
            return "pass", ""
        return "fail", (
            f"violations={r.orthogonality_violations} "
            f"dependent={r.dependent_subsets} zero={r.zero_vectors}"
        )

    run("orthogonal_representation", check_rep)

    # 2: away-from-vertex independence, the decoding condition
    def check_decodability():
        bad = []
        for j in range(1, h.k + 1):
            away = [
                tuple(Fraction(x) for x in cert.rep.vectors[e])
                for e in range(l)
                if j not in h.edges[e].vertices
            ]
            if away and rank(away) < len(away):
                bad.append(j)
        if bad:
            return "fail", f"dependent away-sets at vertices {bad}"
        return "pass", ""

    run("decodability", check_decodability)

    # 3: the local forms sum to ||c.i - g||^2, and mention only local edges
    def check_completeness():
        detail = []
        nonlocal_vertices = [
            j
            for j in range(1, h.k + 1)
            if not cert.assignment.mentioned_edges(j) <= set(h.incident(j))
        ]
        if nonlocal_vertices:
            detail.append(f"nonlocal terms at vertices {nonlocal_vertices}")
        quad, lin, const = cert.assignment.aggregate()
        want_quad = {}
        for e in range(l):
            v = _iinner(cert.rep.vectors[e], cert.rep.vectors[e])
            if v:
                want_quad[(e, e)] = v
        for e in range(l):
            for f in range(e + 1, l):
                v = 2 * _iinner(cert.rep.vectors[e], cert.rep.vectors[f])
                if v:
                    want_quad[(e, f)] = v
        want_lin = {}
        for e in range(l):
            v = -2 * _iinner(cert.rep.vectors[e], cert.g)
            if v:
                want_lin[e] = v
        if quad != want_quad or lin != want_lin or const != _iinner(cert.g, cert.g):
            detail.append("aggregate coefficients differ from the square expansion")
        if grid_small and not detail:
            for i in product(range(cert.n), repeat=l):
                total = cert.assignment.total_exponent(i)
                direct = sum(
                    (
                        sum(cert.rep.vectors[e][t] * i[e] for e in range(l))
                        - cert.g[t]
                    )
                    ** 2
                    for t in range(len(cert.g))
                )
                if total != direct:
                    detail.append(f"grid mismatch at {i}: {total} != {direct}")
                    break
        if detail:
            return "fail", "; ".join(detail)
        return "pass", "" if grid_small else "symbolic only; grid too large"

    run("completeness", check_completeness)

    # 4: totals are nonnegative, zero exactly on solutions
    def check_sign():
        detail = []
        if cert.solutions is not None:
            for i in cert.solutions:
                v = tuple(
                    sum(cert.rep.vectors[e][t] * i[e] for e in range(l))
                    for t in range(len(cert.g))
                )
                if v != cert.g:
                    detail.append(f"listed solution {i} has c.i = {v} != g")
                    break
        if true_sols is not None:
            sol_set = set(true_sols)
            for i in product(range(cert.n), repeat=l):
                total = cert.assignment.total_exponent(i)
                if total < 0:
                    detail.append(f"negative total exponent at {i}")
                    break
                if (total == 0) != (i in sol_set):
                    detail.append(f"zero-set mismatch at {i}")
                    break
        elif not detail:
            return (
                ("skipped", "grid too large to sweep")
                if cert.solutions is None
                else ("pass", "listed solutions only; grid too large")
            )
        return ("fail", "; ".join(detail)) if detail else ("pass", "")

    run("exponent_sign", check_sign)

    # 5: solutions are recoverable from any one vertex's labels
    def check_injectivity():
        sols = true_sols if true_sols is not None else cert.solutions
        if sols is None:
            return "skipped", "solution list unavailable"
        bad = []
        for j in range(1, h.k + 1):
            inc = h.incident(j)
            labels = {tuple(i[e] for e in inc) for i in sols}
            if len(labels) != len(sols):
                bad.append(j)
        if bad:
            return "fail", f"label collisions at vertices {bad}"
        return "pass", ""

    run("injectivity", check_injectivity)

    # 6: the counted quantities are what the certificate says
    def check_counting():
        detail = []
        lam_re = edge_connectivity(h)
        if lam_re != cert.lam:
            detail.append(f"lambda {cert.lam} != recomputed {lam_re}")
        if cert.d != l - cert.lam:
            detail.append(f"d {cert.d} != |E| - lambda = {l - cert.lam}")
        if len(cert.g) != cert.d:
            detail.append(f"g has {len(cert.g)} entries, d = {cert.d}")
        if cert.cprime != c_prime(cert.rep):
            detail.append(f"C' {cert.cprime} != recomputed {c_prime(cert.rep)}")
        if true_sols is not None:
            if len(true_sols) != cert.m_count:
                detail.append(
                    f"M {cert.m_count} != recounted {len(true_sols)}"
                )
            if solution_hash(true_sols) != cert.sol_hash:
                detail.append("solution hash mismatch")
            if cert.solutions is not None and cert.solutions != true_sols:
                detail.append("listed solutions differ from the true set")
        elif cert.solutions is not None:
            if len(cert.solutions) != cert.m_count:
                detail.append(
                    f"M {cert.m_count} != listed count {len(cert.solutions)}"
                )
            if solution_hash(cert.solutions) != cert.sol_hash:
                detail.append("solution hash mismatch")
        if cert.m_count < counting_floor(cert.rep, cert.n):
            detail.append(
                f"M {cert.m_count} below floor {counting_floor(cert.rep, cert.n)}"
            )
        return ("fail", "; ".join(detail)) if detail else ("pass", "")

    run("counting", check_counting)

    # 7: run the degeneration for real
    def check_degeneration():
        if not deep:
            return "skipped", "deep=False"
        if not grid_small or true_sols is None:
            return "skipped", "grid too large for deep check"
        detail = []
        t = ghz_state(h, cert.n)
        for j in range(1, h.k + 1):
            t = apply_local_diagonal(t, j, cert.assignment.site_function(h, j))
        lt = leading_term(t)
        r = check_ghz_structure(lt)
        if r != cert.m_count:
            detail.append(f"leading term has {r} entries, M = {cert.m_count}")
        incident = [h.incident(j) for j in range(1, h.k + 1)]
        expected = {
            tuple(tuple(i[e] for e in inc) for inc in incident)
            for i in true_sols
        }
        if set(lt.entries) != expected:
            detail.append("leading entries differ from the solution set")
        return ("fail", "; ".join(detail)) if detail else ("pass", "")

    run("degeneration", check_degeneration)

    return CertificateReport(tuple(checks))


# -- rates -------------------------------------------------------------------


@dataclass(frozen=True)
class RateBound:
    lam: int
    cut_rank: int
    uniform: bool

    @property
    def ghz2_per_copy(self) -> float:
        return float(self.lam) if self.uniform else math.log2(self.cut_rank)

    def to_json_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "min_cut_rank": self.cut_rank,
            "uniform_level_2": self.uniform,
            "ghz2_per_copy": self.ghz2_per_copy,
        }


def ghz_rate_bound(h: Hypergraph) -> RateBound:
    """Optimal asymptotic GHZ yield per copy of the edge-product state.

    Uniform level 2: exactly lam(H) two-level GHZ states per copy (the
    inverse of the transformation rate).  Mixed levels: log2 of the
    weighted minimum cut rank.
    """
    _require_cut_preconditions(h)
    lam = edge_connectivity(h)
    r = min_cut_rank(h)
    uniform = all(e.level == 2 for e in h.edges)
    return RateBound(lam, r, uniform)


@dataclass(frozen=True)
class EprRate:
    a: int
    b: int
    t: int
    paths: tuple[tuple[int, ...], ...]

    @property
    def rate(self) -> Fraction:
        return Fraction(1, self.t)

    def to_json_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "t": self.t,
            "rate": f"1/{self.t}",
            "paths": [list(p) for p in self.paths],
        }


def epr_rate(h: Hypergraph, a: int, b: int) -> EprRate:
    """EPR pairs distillable between a and b per copy: one per 1/t copies.

    t is the minimum a-b cut; Menger matches it with t edge-disjoint
    connecting paths, returned as witnesses.
    """
    validate(h)
    for idx, e in enumerate(h.edges):
        if e.level != 2:
            raise LevelsUnsupportedError(
                f"edge {idx} has level {e.level}; EPR rates assume level 2"
            )
    t = min_cut_separating(h, a, b)
    paths = edge_disjoint_paths(h, a, b)
    return EprRate(a, b, t, tuple(tuple(p) for p in paths))
