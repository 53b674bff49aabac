"""Finite abstract simplicial complexes and their combinatorial operations.

A complex is stored by its inclusion-maximal faces (facets); the full face
list is materialized lazily, grouped by dimension.  Complexes are immutable
values: every operation returns a new complex, so concurrent reads are safe
(the closure cache is built under a lock).

Vertices are non-negative integer labels; faces are frozensets of labels.
Every complex contains the empty face; ``from_facets([])`` yields the
complex whose only face is the empty one (dimension -1).
"""

from __future__ import annotations

import itertools
import threading

from .errors import (
    FaceNotPresentError,
    MalformedInputError,
    PreconditionError,
    TooLargeError,
)


def as_face(vertices) -> frozenset:
    """Normalize an iterable of vertex labels into a face; rejects repeats."""
    vs = tuple(vertices)
    for v in vs:
        if not isinstance(v, int) or v < 0:
            raise MalformedInputError(
                f"vertex labels must be non-negative integers, got {v!r}"
            )
    if len(set(vs)) != len(vs):
        raise MalformedInputError(f"repeated vertex in face {sorted(vs)}")
    return frozenset(vs)


def _maximal(faces) -> frozenset:
    """Inclusion-maximal members of a family of frozensets."""
    uniq = sorted(set(faces), key=len, reverse=True)
    kept = []
    for f in uniq:
        if not any(f < g for g in kept):
            kept.append(f)
    if not kept:
        kept = [frozenset()]
    return frozenset(kept)


class SimplicialComplex:
    """Immutable simplicial complex identified by its facet set."""

    __slots__ = ("_facets", "_vertices", "_dim", "_faces", "_by_dim", "_lock")

    def __init__(self, faces):
        self._facets = _maximal(faces)
        self._vertices = frozenset(itertools.chain.from_iterable(self._facets))
        self._dim = max(len(f) for f in self._facets) - 1
        self._faces = None
        self._by_dim = None
        self._lock = threading.Lock()

    @property
    def facets(self) -> frozenset:
        return self._facets

    @property
    def vertices(self) -> frozenset:
        return self._vertices

    @property
    def dim(self) -> int:
        return self._dim

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._facets == other._facets

    def __hash__(self):
        return hash(self._facets)

    def __repr__(self):
        return (
            f"SimplicialComplex(dim={self._dim}, vertices={len(self._vertices)}, "
            f"facets={len(self._facets)})"
        )

    # -- face enumeration ------------------------------------------------

    def faces(self) -> frozenset:
        """The full face set (closure of the facets), including the empty face."""
        if self._faces is None:
            with self._lock:
                if self._faces is None:
                    closure = set()
                    for facet in self._facets:
                        fs = sorted(facet)
                        for k in range(len(fs) + 1):
                            closure.update(
                                frozenset(c) for c in itertools.combinations(fs, k)
                            )
                    by_dim = {}
                    for face in closure:
                        by_dim.setdefault(len(face) - 1, []).append(face)
                    self._by_dim = {
                        k: tuple(sorted(v, key=sorted)) for k, v in by_dim.items()
                    }
                    self._faces = frozenset(closure)
        return self._faces

    def faces_of_dim(self, k: int) -> tuple:
        """All k-dimensional faces, sorted by vertex tuple."""
        self.faces()
        return self._by_dim.get(k, ())

    def n_faces(self, k: int) -> int:
        return len(self.faces_of_dim(k))

    def __contains__(self, face) -> bool:
        return frozenset(face) in self.faces()

    # -- simple predicates ------------------------------------------------

    def is_pure(self) -> bool:
        return len({len(f) for f in self._facets}) == 1

    def is_prime(self) -> bool:
        """Pure and without missing facets (missing faces of top dimension)."""
        return self.is_pure() and not self.missing_faces(self._dim)

    def adjacency(self) -> dict:
        """Vertex -> set of neighbours in the 1-skeleton."""
        adj = {v: set() for v in self._vertices}
        for edge in self.faces_of_dim(1):
            u, v = edge
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def edges(self) -> tuple:
        return tuple(tuple(sorted(e)) for e in self.faces_of_dim(1))

    def is_connected(self) -> bool:
        if len(self._vertices) <= 1:
            return True
        adj = self.adjacency()
        start = min(self._vertices)
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self._vertices)

    # -- subcomplex operations ---------------------------------------------

    def _require_face(self, face) -> frozenset:
        f = frozenset(face)
        if f not in self.faces():
            raise FaceNotPresentError(f"face {tuple(sorted(f))} is not in the complex")
        return f

    def link(self, face) -> "SimplicialComplex":
        """Faces disjoint from ``face`` whose union with it is again a face."""
        f = self._require_face(face)
        return SimplicialComplex(facet - f for facet in self._facets if f <= facet)

    def star(self, face) -> "SimplicialComplex":
        """Closed star: all faces whose union with ``face`` is a face."""
        f = self._require_face(face)
        return SimplicialComplex(facet for facet in self._facets if f <= facet)

    def restriction(self, verts) -> "SimplicialComplex":
        w = frozenset(verts)
        return SimplicialComplex(facet & w for facet in self._facets)

    def antistar(self, v: int) -> "SimplicialComplex":
        if v not in self._vertices:
            raise FaceNotPresentError(f"vertex {v} is not in the complex")
        return self.restriction(self._vertices - {v})

    def skeleton(self, i: int) -> "SimplicialComplex":
        """Subcomplex of faces of dimension at most ``i``."""
        if i < -1:
            raise PreconditionError("skeleton dimension must be >= -1")
        if i >= self._dim:
            return self
        low = [f for f in self._facets if len(f) - 1 <= i]
        return SimplicialComplex(itertools.chain(low, self.faces_of_dim(i)))

    # -- missing faces ------------------------------------------------------

    def missing_faces(self, k: int) -> list:
        """Minimal non-faces of dimension k, as sorted vertex tuples."""
        if k < 0:
            raise PreconditionError("missing-face dimension must be >= 0")
        if k > self._dim + 1:
            return []
        if k == 0:
            return []
        faces = self.faces()
        out = set()
        for base in self.faces_of_dim(k - 1):
            base_set = frozenset(base)
            for v in self._vertices - base_set:
                cand = base_set | {v}
                if cand in faces or cand in out:
                    continue
                if all(
                    cand - {u} in faces for u in cand
                ):
                    out.add(cand)
        return sorted((tuple(sorted(f)) for f in out))


def from_facets(facets) -> SimplicialComplex:
    """Build the closure of a list of faces; dominated input faces are absorbed."""
    return SimplicialComplex(as_face(f) for f in facets)


def from_faces(faces) -> SimplicialComplex:
    """Build a complex from an already-normalized family of frozenset faces."""
    return SimplicialComplex(faces)


def join(cx1: SimplicialComplex, cx2: SimplicialComplex) -> SimplicialComplex:
    """Join of two complexes; the second factor is relabelled above the first.

    Every vertex v of ``cx2`` becomes v + max(V(cx1)) + 1, so output labels
    are deterministic and the factors stay disjoint.
    """
    shift = max(cx1.vertices, default=-1) + 1
    return SimplicialComplex(
        f1 | frozenset(v + shift for v in f2)
        for f1 in cx1.facets
        for f2 in cx2.facets
    )


def connected_sum(
    cx1: SimplicialComplex,
    facet1,
    cx2: SimplicialComplex,
    facet2,
    matching: dict | None = None,
) -> SimplicialComplex:
    """Glue two complexes along a facet of each and delete the glued facet.

    ``matching`` maps each vertex of ``facet1`` to the vertex of ``facet2``
    it is identified with; by default both facets are matched in sorted
    order.  The unmatched vertices of ``cx2`` are relabelled to fresh labels
    above max(V(cx1)), in sorted order.
    """
    f1 = frozenset(facet1)
    f2 = frozenset(facet2)
    if f1 not in cx1.facets:
        raise PreconditionError(f"{tuple(sorted(f1))} is not a facet of the first complex")
    if f2 not in cx2.facets:
        raise PreconditionError(f"{tuple(sorted(f2))} is not a facet of the second complex")
    if len(f1) != len(f2):
        raise PreconditionError("glued facets must have equal dimension")
    if matching is None:
        matching = dict(zip(sorted(f1), sorted(f2)))
    if set(matching) != set(f1) or set(matching.values()) != set(f2):
        raise PreconditionError("matching must be a bijection between the two facets")
    relabel = {v2: v1 for v1, v2 in matching.items()}
    fresh = max(cx1.vertices) + 1
    for v in sorted(cx2.vertices - f2):
        relabel[v] = fresh
        fresh += 1
    glued = frozenset(relabel[v] for v in f2)  # equals f1
    new_facets = set(cx1.facets) - {f1}
    for facet in cx2.facets:
        mapped = frozenset(relabel[v] for v in facet)
        if mapped != glued:
            new_facets.add(mapped)
    return SimplicialComplex(new_facets)


def stack_over_facet(cx: SimplicialComplex, facet) -> SimplicialComplex:
    """Replace a facet by the cone over its boundary from one fresh vertex."""
    f = frozenset(facet)
    if f not in cx.facets:
        raise PreconditionError(f"{tuple(sorted(f))} is not a facet")
    w = max(cx.vertices) + 1
    new_facets = set(cx.facets) - {f}
    for v in f:
        new_facets.add((f - {v}) | {w})
    return SimplicialComplex(new_facets)


def is_simplex_boundary(cx: SimplicialComplex) -> bool:
    """Whether the complex is the full boundary of a simplex on its vertices."""
    verts = sorted(cx.vertices)
    if len(verts) != cx.dim + 2:
        return False
    expected = {frozenset(c) for c in itertools.combinations(verts, len(verts) - 1)}
    return cx.facets == expected


def detect_join(cx: SimplicialComplex, max_components: int = 16):
    """Find a bipartition (A, B) of the vertices with cx = cx[A] * cx[B].

    Candidate sides are unions of connected components of the non-edge graph
    (two vertices are joinable only if every cross pair is an edge).  Each
    candidate is verified by the full facet-product check before being
    returned; ``None`` means no join decomposition exists.
    """
    verts = sorted(cx.vertices)
    if len(verts) < 2:
        return None
    adj = cx.adjacency()
    # union-find over the non-edge graph
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in itertools.combinations(verts, 2):
        if v not in adj[u]:
            parent[find(u)] = find(v)
    comps = {}
    for v in verts:
        comps.setdefault(find(v), []).append(v)
    groups = sorted(comps.values(), key=min)
    c = len(groups)
    if c < 2:
        return None
    if c > max_components:
        raise TooLargeError(
            f"{c} non-edge components exceed the join-search guard ({max_components})"
        )
    facets = cx.facets
    for mask in range(1, 2 ** (c - 1)):
        side_a, side_b = set(groups[0]), set()
        for bit in range(c - 1):
            (side_b if mask >> bit & 1 else side_a).update(groups[bit + 1])
        fa = _maximal(f & frozenset(side_a) for f in facets)
        fb = _maximal(f & frozenset(side_b) for f in facets)
        product = {a | b for a in fa for b in fb}
        if product == facets:
            return tuple(sorted(side_a)), tuple(sorted(side_b))
    return None
