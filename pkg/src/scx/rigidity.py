"""Generic rigidity over exact arithmetic: rank, stresses and g_2.

Genericity is realized by sampling integer coordinates from a wide range
(Schwartz-Zippel style: a rank drop across independent trials is
astronomically unlikely), so every rank decision stays exact.  Ranks are
taken over GF(2^61 - 1) by default for speed, or over the rationals via
fraction-free elimination; stress bases are always exact rational vectors
re-checked against the equilibrium condition at every vertex.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import exact
from .complexes import SimplicialComplex
from .errors import PreconditionError
from .facevectors import g2
from .homology import is_normal_pseudomanifold

DEFAULT_COORD_BOUND = 2**31


@dataclass(frozen=True)
class Graph:
    vertices: tuple
    edges: tuple


def skeleton_graph(cx: SimplicialComplex) -> Graph:
    return Graph(tuple(sorted(cx.vertices)), cx.edges())


def _as_graph(obj) -> Graph:
    if isinstance(obj, Graph):
        return obj
    if isinstance(obj, SimplicialComplex):
        return skeleton_graph(obj)
    raise PreconditionError(f"expected a Graph or SimplicialComplex, got {type(obj)!r}")


@dataclass(frozen=True)
class Embedding:
    coords: dict  # vertex -> tuple of d ints
    d: int
    seed: int


@dataclass(frozen=True)
class RigidityMatrix:
    edges: tuple
    vertices: tuple
    d: int
    entries: tuple  # one row per edge, d columns per vertex


@dataclass(frozen=True)
class StressBasis:
    edges: tuple
    vectors: tuple  # edge-indexed exact vectors spanning the left kernel
    participation: dict  # vertex -> bool
    embedding: Embedding


def _trial_seed(seed: int, trial: int) -> int:
    return seed * 1_000_003 + trial


def random_embedding(graph, d: int, seed: int = 0, bound: int = DEFAULT_COORD_BOUND) -> Embedding:
    """Integer coordinates drawn uniformly from [-bound, bound], per seed."""
    if d < 1:
        raise PreconditionError("embedding dimension must be >= 1")
    g = _as_graph(graph)
    rng = random.Random(seed)
    coords = {
        v: tuple(rng.randint(-bound, bound) for _ in range(d)) for v in g.vertices
    }
    return Embedding(coords, d, seed)


def rigidity_matrix(graph, embedding: Embedding) -> RigidityMatrix:
    """f_1 x (d * f_0) matrix: the row of edge {u, v} carries phi(u)-phi(v)
    in u's column block and the negation in v's block."""
    g = _as_graph(graph)
    missing = [v for v in g.vertices if v not in embedding.coords]
    if missing:
        raise PreconditionError(f"embedding lacks coordinates for {missing}")
    d = embedding.d
    col = {v: i * d for i, v in enumerate(g.vertices)}
    rows = []
    for u, v in g.edges:
        row = [0] * (d * len(g.vertices))
        pu, pv = embedding.coords[u], embedding.coords[v]
        for t in range(d):
            row[col[u] + t] = pu[t] - pv[t]
            row[col[v] + t] = pv[t] - pu[t]
        rows.append(tuple(row))
    return RigidityMatrix(g.edges, g.vertices, d, tuple(rows))


def generic_rank_trials(graph, d: int, trials: int = 3, seed: int = 0, field=exact.DEFAULT_PRIME):
    """Exact rank of the rigidity matrix for each of `trials` embeddings."""
    if trials < 1:
        raise PreconditionError("need at least one trial")
    g = _as_graph(graph)
    out = []
    for t in range(trials):
        emb = random_embedding(g, d, _trial_seed(seed, t))
        mat = rigidity_matrix(g, emb)
        out.append(exact.matrix_rank(mat.entries, field))
    return out


def generic_rank(graph, d: int, trials: int = 3, seed: int = 0, field=exact.DEFAULT_PRIME) -> int:
    """Maximum exact rank over independent random embeddings."""
    return max(generic_rank_trials(graph, d, trials, seed, field))


def g2_via_rigidity(
    cx: SimplicialComplex,
    trials: int = 3,
    seed: int = 0,
    field=exact.DEFAULT_PRIME,
    require_pseudomanifold: bool = True,
) -> int:
    """g_2 as the left-kernel dimension f_1 - rank of the rigidity matrix.

    The identification with g_2 needs generic rigidity of the 1-skeleton,
    which holds for normal pseudomanifolds; pass
    ``require_pseudomanifold=False`` to get the bare kernel dimension for
    other inputs.
    """
    if require_pseudomanifold:
        res = is_normal_pseudomanifold(cx)
        if not res:
            raise PreconditionError(
                "not a normal pseudomanifold "
                f"({res.reason}; witness {res.witness}); pass "
                "require_pseudomanifold=False for the raw kernel dimension"
            )
    d = cx.dim + 1
    g = skeleton_graph(cx)
    return len(g.edges) - generic_rank(g, d, trials, seed, field)


def stress_basis(
    cx: SimplicialComplex, d: int | None = None, seed: int = 0, trials: int = 3
) -> StressBasis:
    """Exact rational basis of the left kernel of one sampled rigidity matrix.

    The matrix kept is the first among `trials` samples attaining the
    maximal rational rank; every basis vector is re-checked against the
    equilibrium condition at every vertex before being returned.
    """
    if d is None:
        d = cx.dim + 1
    g = skeleton_graph(cx)
    best = None
    for t in range(trials):
        emb = random_embedding(g, d, _trial_seed(seed, t))
        mat = rigidity_matrix(g, emb)
        # fast modular rank is enough to pick the sample; the kernel below
        # is computed over the rationals on the chosen matrix
        rank = exact.rank_mod(mat.entries, exact.DEFAULT_PRIME)
        if best is None or rank > best[0]:
            best = (rank, mat, emb)
    _, mat, emb = best
    vectors = tuple(exact.left_nullspace(mat.entries))
    _verify_stresses(g, emb, vectors)
    participation = {v: False for v in g.vertices}
    for vec in vectors:
        for e_idx, weight in enumerate(vec):
            if weight:
                u, v = g.edges[e_idx]
                participation[u] = True
                participation[v] = True
    return StressBasis(g.edges, vectors, participation, emb)


def _verify_stresses(g: Graph, emb: Embedding, vectors):
    incident = {v: [] for v in g.vertices}
    for idx, (u, v) in enumerate(g.edges):
        incident[u].append((idx, u, v))
        incident[v].append((idx, v, u))
    for vec in vectors:
        for v in g.vertices:
            total = [Fraction(0)] * emb.d
            for idx, here, other in incident[v]:
                w = vec[idx]
                if w:
                    for t in range(emb.d):
                        total[t] += w * (emb.coords[here][t] - emb.coords[other][t])
            if any(total):
                raise AssertionError("stress vector violates vertex equilibrium")


def vertex_participation(cx: SimplicialComplex, seed: int = 0, trials: int = 3) -> dict:
    """Which vertices lie on an edge with a nonzero weight in some basis stress."""
    return stress_basis(cx, seed=seed, trials=trials).participation


def expected_pseudomanifold_rank(cx: SimplicialComplex) -> int:
    """d*f_0 - C(d+1, 2): the generic rank of the skeleton of a normal
    pseudomanifold embedded in dimension d = dim + 1."""
    d = cx.dim + 1
    return d * len(cx.vertices) - comb(d + 1, 2)


@dataclass(frozen=True)
class LinkMonotonicityResult:
    ok: bool
    g2_total: int
    per_vertex: tuple  # (vertex, g2 of link) pairs
    violations: tuple

    def __bool__(self) -> bool:
        return self.ok


def link_monotonicity_check(cx: SimplicialComplex) -> LinkMonotonicityResult:
    """Check g_2(link of v) <= g_2(complex) at every vertex (combinatorially)."""
    total = g2(cx)
    per_vertex = []
    violations = []
    for v in sorted(cx.vertices):
        lg = g2(cx.link([v]))
        per_vertex.append((v, lg))
        if lg > total:
            violations.append((v, lg))
    return LinkMonotonicityResult(
        ok=not violations,
        g2_total=total,
        per_vertex=tuple(per_vertex),
        violations=tuple(violations),
    )
