"""Simplicial homology over exact fields and the classification predicates.

Reduced homology is computed from integer boundary matrices (alternating
sign convention, augmentation map included) via exact rank computations:
fraction-free elimination over the rationals by default, or Gaussian
elimination over GF(p).  Predicates return a :class:`PredicateResult`
carrying one violating face as a witness when they fail.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from . import exact
from .complexes import SimplicialComplex, from_faces
from .errors import PreconditionError, TooLargeError


@dataclass(frozen=True)
class PredicateResult:
    ok: bool
    witness: tuple | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class BoundaryMatrix:
    """The differential from k-chains to (k-1)-chains."""

    k: int
    row_faces: tuple  # (k-1)-faces
    col_faces: tuple  # k-faces
    entries: tuple  # row-major, entries in {-1, 0, 1}


@dataclass(frozen=True)
class BettiProfile:
    """Reduced Betti numbers b_{-1}..b_{dim} over the chosen field."""

    entries: tuple
    field: object = "rational"

    def b(self, i: int) -> int:
        j = i + 1
        if 0 <= j < len(self.entries):
            return self.entries[j]
        return 0

    def is_trivial(self) -> bool:
        return not any(self.entries)

    def is_sphere(self, m: int) -> bool:
        """Profile of the m-sphere: a single 1 in degree m (m = -1 allowed)."""
        if m > len(self.entries) - 2:
            return False
        return all(x == (1 if i - 1 == m else 0) for i, x in enumerate(self.entries))


def boundary_matrix(cx: SimplicialComplex, k: int) -> BoundaryMatrix:
    """Signed incidence matrix of k-faces over (k-1)-faces.

    Dropping the vertex in sorted position j contributes (-1)^j; k = 0 gives
    the augmentation map onto the empty face.
    """
    rows = cx.faces_of_dim(k - 1)
    cols = cx.faces_of_dim(k)
    index = {f: i for i, f in enumerate(rows)}
    entries = [[0] * len(cols) for _ in rows]
    for c, face in enumerate(cols):
        fs = sorted(face)
        for j in range(len(fs)):
            entries[index[frozenset(fs[:j] + fs[j + 1 :])]][c] = (-1) ** j
    return BoundaryMatrix(k, rows, cols, tuple(tuple(r) for r in entries))


def chain_complex(cx: SimplicialComplex) -> list:
    """All boundary matrices d_0..d_dim, with the d.d = 0 identity asserted."""
    mats = [boundary_matrix(cx, k) for k in range(cx.dim + 1)]
    for low, high in zip(mats, mats[1:]):
        _assert_composes_to_zero(low, high)
    return mats


def _assert_composes_to_zero(low: BoundaryMatrix, high: BoundaryMatrix):
    # sparse column maps of the lower matrix, keyed by its column faces
    low_cols = {
        face: {
            r: low.entries[r][c]
            for r in range(len(low.row_faces))
            if low.entries[r][c]
        }
        for c, face in enumerate(low.col_faces)
    }
    for c in range(len(high.col_faces)):
        acc = {}
        for r, rface in enumerate(high.row_faces):
            e = high.entries[r][c]
            if e:
                for rr, e2 in low_cols[rface].items():
                    acc[rr] = acc.get(rr, 0) + e2 * e
        if any(acc.values()):
            raise AssertionError("boundary matrices do not compose to zero")


def betti(cx: SimplicialComplex, field="rational") -> BettiProfile:
    """Reduced Betti numbers from exact ranks of the boundary matrices."""
    field = exact.validate_field(field)
    dim = cx.dim
    ranks = [0] * (dim + 2)  # ranks[k] = rank d_k, with rank d_{dim+1} = 0
    for k in range(dim + 1):
        mat = boundary_matrix(cx, k)
        ranks[k] = exact.matrix_rank(mat.entries, field)
    entries = []
    for i in range(-1, dim + 1):
        rk = ranks[i] if i >= 0 else 0
        entries.append(cx.n_faces(i) - rk - ranks[i + 1])
    return BettiProfile(tuple(entries), field)


def _faces_sorted(cx: SimplicialComplex):
    for k in range(-1, cx.dim + 1):
        yield from cx.faces_of_dim(k)


def is_homology_sphere(cx: SimplicialComplex, field="rational") -> PredicateResult:
    """Every face link (the empty face included) has the homology of the
    sphere of complementary dimension."""
    n = cx.dim
    for face in _faces_sorted(cx):
        profile = betti(cx.link(face), field)
        if not profile.is_sphere(n - len(face)):
            return PredicateResult(
                False, tuple(sorted(face)), "link does not have sphere homology"
            )
    return PredicateResult(True)


def _ball_analysis(cx: SimplicialComplex, field):
    """One pass over all faces: (verdict, boundary faces, interior faces).

    Boundary faces are the ones with homologically trivial links; a face
    whose link is neither trivial nor sphere-like of complementary dimension
    makes the verdict negative.
    """
    d = cx.dim
    boundary, interior = [], []
    verdict = PredicateResult(True)
    for face in _faces_sorted(cx):
        profile = betti(cx.link(face), field)
        if profile.is_trivial():
            boundary.append(face)
        else:
            interior.append(face)
            if verdict.ok and not profile.is_sphere(d - len(face)):
                verdict = PredicateResult(
                    False, tuple(sorted(face)), "link is neither ball- nor sphere-like"
                )
    return verdict, boundary, interior


def is_homology_ball(cx: SimplicialComplex, field="rational") -> PredicateResult:
    """Trivial homology, every face link a ball or sphere of complementary
    dimension, and a boundary subcomplex that is a homology sphere."""
    d = cx.dim
    verdict, boundary, interior = _ball_analysis(cx, field)
    if not verdict:
        return verdict
    if frozenset() in set(interior):
        return PredicateResult(False, (), "complex does not have ball homology")
    bd = from_faces(boundary)
    if bd.faces() != set(boundary):
        return PredicateResult(False, None, "boundary faces are not closed downward")
    if d > 0 and bd.dim != d - 1:
        return PredicateResult(False, None, "boundary has wrong dimension")
    sphere = is_homology_sphere(bd, field)
    if not sphere:
        return PredicateResult(False, sphere.witness, "boundary is not a homology sphere")
    return PredicateResult(True)


def ball_boundary(cx: SimplicialComplex, field="rational", check=True) -> SimplicialComplex:
    """Subcomplex of faces with homologically trivial links."""
    verdict, boundary, interior = _ball_checked(cx, field, check)
    return from_faces(boundary)


def interior_faces(cx: SimplicialComplex, field="rational", check=True) -> frozenset:
    verdict, boundary, interior = _ball_checked(cx, field, check)
    return frozenset(interior)


def _ball_checked(cx, field, check):
    if check:
        res = is_homology_ball(cx, field)
        if not res:
            raise PreconditionError(
                f"not a homology ball: {res.reason} (witness {res.witness})"
            )
    return _ball_analysis(cx, field)


def is_homology_manifold(cx: SimplicialComplex, field="rational") -> PredicateResult:
    """All vertex links are homology spheres of dimension dim - 1."""
    n = cx.dim
    for v in sorted(cx.vertices):
        link = cx.link([v])
        if link.dim != n - 1 or not is_homology_sphere(link, field):
            return PredicateResult(False, (v,), "vertex link is not a homology sphere")
    return PredicateResult(True)


def is_normal_pseudomanifold(cx: SimplicialComplex) -> PredicateResult:
    """Pure + connected, every ridge in exactly two facets, and connected
    links in low dimensions.  Purely combinatorial; no homology involved."""
    n = cx.dim
    if n < 1:
        return PredicateResult(False, (), "dimension must be at least 1")
    if not cx.is_pure():
        smallest = min(cx.facets, key=len)
        return PredicateResult(False, tuple(sorted(smallest)), "complex is not pure")
    if not cx.is_connected():
        return PredicateResult(False, (), "complex is not connected")
    ridge_count = {}
    for facet in cx.facets:
        for v in facet:
            ridge = facet - {v}
            ridge_count[ridge] = ridge_count.get(ridge, 0) + 1
    for ridge, count in sorted(ridge_count.items(), key=lambda kv: sorted(kv[0])):
        if count != 2:
            return PredicateResult(
                False, tuple(sorted(ridge)), f"ridge lies in {count} facets"
            )
    for k in range(0, n - 1):
        for face in cx.faces_of_dim(k):
            if not cx.link(face).is_connected():
                return PredicateResult(
                    False, tuple(sorted(face)), "face link is not connected"
                )
    return PredicateResult(True)


def skeleton_completion(
    cx: SimplicialComplex, i: int, max_vertices: int = 40
) -> SimplicialComplex:
    """Add every vertex set whose i-skeleton already lies in the complex.

    Vertex sets of size <= i+1 qualify exactly when they are faces, so the
    result contains the input; larger candidates are grown level by level
    through common neighbourhoods in the 1-skeleton.
    """
    if i < 1:
        raise PreconditionError("skeleton-completion index must be >= 1")
    if len(cx.vertices) > max_vertices:
        raise TooLargeError(
            f"{len(cx.vertices)} vertices exceed the completion guard ({max_vertices})"
        )
    faces = cx.faces()
    adj = cx.adjacency()

    def qualifies(cand: frozenset) -> bool:
        return all(
            frozenset(sub) in faces
            for sub in itertools.combinations(sorted(cand), i + 1)
        )

    level = set(cx.faces_of_dim(i))
    accepted = []
    while level:
        nxt = set()
        for face in level:
            common = set.intersection(*(adj[v] for v in face)) - face
            for v in common:
                cand = face | {v}
                if cand not in nxt and qualifies(cand):
                    nxt.add(cand)
        accepted.extend(nxt)
        level = nxt
    return from_faces(itertools.chain(cx.facets, accepted))


@dataclass(frozen=True)
class StackedBallCertificate:
    r: int
    ok: bool
    min_stackedness: int
    interior_by_dim: dict = dc_field(default_factory=dict)
    boundary: SimplicialComplex | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_r_stacked_ball(
    cx: SimplicialComplex, r: int, field="rational", check=True
) -> StackedBallCertificate:
    """Certify that a homology d-ball is r-stacked: no interior faces of
    dimension <= d - r - 1 (equivalently, min interior dimension >= d - r)."""
    d = cx.dim
    verdict, boundary, interior = _ball_checked(cx, field, check)
    by_dim = {}
    for face in interior:
        by_dim[len(face) - 1] = by_dim.get(len(face) - 1, 0) + 1
    min_dim = min(by_dim) if by_dim else d
    min_stackedness = d - min_dim
    return StackedBallCertificate(
        r=r,
        ok=min_stackedness <= r,
        min_stackedness=min_stackedness,
        interior_by_dim=by_dim,
        boundary=from_faces(boundary),
    )
