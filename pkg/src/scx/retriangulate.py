"""The three retriangulation operations with exact g-vector bookkeeping.

Each operation returns the new complex together with a
:class:`RetriangulationRecord` holding the g-vectors before and after and
the predicted entries implied by the operation's arithmetic; the harness
compares prediction against recomputation on every run.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import SimplicialComplex, from_faces, is_simplex_boundary
from .errors import PreconditionError
from .facevectors import extended_g, g_vector
from .homology import (
    PredicateResult,
    ball_boundary,
    interior_faces,
    is_homology_ball,
    is_homology_sphere,
    is_normal_pseudomanifold,
    skeleton_completion,
)


@dataclass(frozen=True)
class RetriangulationRecord:
    kind: str  # "central" | "inverse-stellar" | "swartz"
    g_before: tuple
    g_after: tuple
    predicted: tuple  # pairs (i, predicted g_i of the output)
    new_vertices: tuple
    removed_vertices: tuple
    ball_used: SimplicialComplex | None = None
    steps: int = 0
    notes: tuple = ()

    def prediction_holds(self) -> bool:
        after = dict(enumerate(self.g_after))
        return all(after.get(i, 0) == value for i, value in self.predicted)


def _check_subcomplex(cx: SimplicialComplex, ball: SimplicialComplex):
    faces = cx.faces()
    for facet in ball.facets:
        if facet not in faces:
            raise PreconditionError(
                f"ball facet {tuple(sorted(facet))} is not a face of the complex"
            )


def central_retriangulation(
    cx: SimplicialComplex, ball: SimplicialComplex, field="rational", check=True
):
    """Replace the interior of a ball subcomplex by the cone over its
    boundary from one fresh vertex.

    For a ball whose interior faces all have dimension >= m, the face
    counts satisfy f_i(out) = f_i + f_{i-1}(boundary) for i < m, so
    g_i(out) = g_i + g_{i-1}(boundary) is predicted for i <= m (capped at
    the g-vector length).
    """
    if ball.dim != cx.dim:
        raise PreconditionError(
            f"ball dimension {ball.dim} differs from complex dimension {cx.dim}"
        )
    _check_subcomplex(cx, ball)
    interior = interior_faces(ball, field, check=check)
    boundary = ball_boundary(ball, field, check=False)
    u = max(cx.vertices) + 1
    out_faces = (cx.faces() - interior) | {f | {u} for f in boundary.faces()}
    out = from_faces(out_faces)

    d = cx.dim
    m = min((len(f) - 1 for f in interior), default=d)
    g_in = g_vector(cx).entries
    g_out = g_vector(out).entries
    eg_bd = extended_g(boundary)
    upto = min((d + 1) // 2, m)
    predicted = tuple(
        (i, g_in[i] + (eg_bd[i - 1] if i - 1 < len(eg_bd) else 0))
        for i in range(1, upto + 1)
    )
    record = RetriangulationRecord(
        kind="central",
        g_before=g_in,
        g_after=g_out,
        predicted=predicted,
        new_vertices=(u,),
        removed_vertices=(),
        ball_used=ball,
    )
    return out, record


def missing_face_identity_sides(cx: SimplicialComplex, tau, k: int):
    """Both sides of the missing-face bookkeeping identity for a central
    retriangulation along the star of ``tau``, at dimension k.

    The right-hand side keeps the missing k-faces of the input that avoid
    tau, adds the cone-point joins of faces that are missing in the star
    (at k = 1 that means the vertices outside the star: they pair with the
    cone point into new missing edges), and adds tau itself at its own
    dimension (tau's boundary survives while tau is removed, so it becomes
    a minimal non-face).
    """
    t = frozenset(tau)
    star = cx.star(t)
    out, record = central_retriangulation(cx, star)
    u = record.new_vertices[0]
    lhs = {frozenset(f) for f in out.missing_faces(k)}
    rhs = {
        frozenset(f)
        for f in cx.missing_faces(k)
        if not t <= frozenset(f)
    }
    if k == 1:
        rhs |= {frozenset({w, u}) for w in cx.vertices - star.vertices}
    elif k >= 2:
        faces = cx.faces()
        rhs |= {
            frozenset(f) | {u}
            for f in star.missing_faces(k - 1)
            if frozenset(f) in faces
        }
    if k == len(t) - 1 and len(t) >= 2:
        rhs.add(t)
    return lhs, rhs


def crtr_missing_faces_check(cx: SimplicialComplex, tau) -> PredicateResult:
    """Compare both sides of the missing-face identity at every dimension."""
    t = frozenset(tau)
    top = cx.dim + 1
    for k in range(0, top + 1):
        lhs, rhs = missing_face_identity_sides(cx, t, k)
        if lhs != rhs:
            extra = sorted(tuple(sorted(f)) for f in lhs ^ rhs)
            return PredicateResult(
                False, extra[0], f"sides differ at dimension {k}"
            )
    return PredicateResult(True)


def _detect_stack_level(link: SimplicialComplex, d: int) -> int:
    eg = extended_g(link)
    for r in range(2, (d + 1) // 2 + 1):
        if eg[r] == 0:
            return r
    raise PreconditionError(
        "link has no admissible stackedness level (its g-vector never vanishes)"
    )


def inverse_stellar(
    cx: SimplicialComplex,
    v: int,
    r: int | None = None,
    field="rational",
    check=True,
):
    """Replace the star of a vertex by the stacked ball determined by its
    link: the faces whose (r-1)-skeleton lies in the link.

    Requires the link to be an (r-1)-stacked homology sphere and no interior
    face of the completion to be present already; r is auto-detected as the
    least level at which the link's g-vector vanishes when omitted.
    """
    if v not in cx.vertices:
        raise PreconditionError(f"vertex {v} is not in the complex")
    link = cx.link([v])
    d = cx.dim
    if check:
        sphere = is_homology_sphere(link, field)
        if not sphere:
            raise PreconditionError(
                f"link of {v} is not a homology sphere (witness {sphere.witness})"
            )
    if r is None:
        r = _detect_stack_level(link, d)
    if not 2 <= r <= (d + 1) // 2:
        raise PreconditionError(f"stackedness level r={r} outside 2..(d+1)/2")
    filled = skeleton_completion(link, r - 1)
    if check:
        ball = is_homology_ball(filled, field)
        if not ball:
            raise PreconditionError(
                f"link completion is not a homology ball (witness {ball.witness})"
            )
        if ball_boundary(filled, field, check=False) != link:
            raise PreconditionError("link completion does not have the link as boundary")
    interior = interior_faces(filled, field, check=False)
    faces = cx.faces()
    for f in sorted(interior, key=sorted):
        if f in faces:
            raise PreconditionError(
                f"interior face {tuple(sorted(f))} of the completion is already present"
            )
    out = from_faces(cx.antistar(v).faces() | filled.faces())

    m = min((len(f) - 1 for f in interior), default=d)
    g_in = g_vector(cx).entries
    g_out = g_vector(out).entries
    eg_link = extended_g(link)
    upto = min((d + 1) // 2, m)
    predicted = tuple(
        (i, g_in[i] - (eg_link[i - 1] if i - 1 < len(eg_link) else 0))
        for i in range(1, upto + 1)
    )
    record = RetriangulationRecord(
        kind="inverse-stellar",
        g_before=g_in,
        g_after=g_out,
        predicted=predicted,
        new_vertices=(),
        removed_vertices=(v,),
        ball_used=filled,
    )
    return out, record


def _split_link_along(link: SimplicialComplex, tau: frozenset):
    """Split a homology sphere along the boundary of a missing facet into
    the two summands, each completed with the facet itself.

    Components are taken in the facet-adjacency graph of the link with
    adjacencies through ridges inside tau removed, ordered by their
    lexicographically smallest facet.
    """
    facets = sorted(link.facets, key=sorted)
    ridge_map = {}
    for idx, facet in enumerate(facets):
        for v in facet:
            ridge = facet - {v}
            if ridge <= tau:
                continue
            ridge_map.setdefault(ridge, []).append(idx)
    parent = list(range(len(facets)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for members in ridge_map.values():
        for other in members[1:]:
            parent[find(members[0])] = find(other)
    comps = {}
    for idx in range(len(facets)):
        comps.setdefault(find(idx), []).append(idx)
    groups = sorted(comps.values(), key=min)
    if len(groups) != 2:
        raise PreconditionError(
            f"removing the facet boundary splits the link into {len(groups)} parts, not 2"
        )
    return [
        SimplicialComplex([facets[i] for i in group] + [tau]) for group in groups
    ]


def swartz_operation(
    cx: SimplicialComplex, v: int, tau, field="rational", check=True
):
    """Remove a vertex, insert a missing facet of its link, and close the two
    resulting spheres: each is coned from a fresh vertex unless it already
    bounds a missing facet, which is then simply filled in."""
    t = frozenset(tau)
    if v not in cx.vertices:
        raise PreconditionError(f"vertex {v} is not in the complex")
    if t in cx.faces():
        raise PreconditionError(
            f"{tuple(sorted(t))} must be a missing face of the complex"
        )
    link = cx.link([v])
    if check:
        pm = is_normal_pseudomanifold(cx)
        if not pm:
            raise PreconditionError(
                f"input is not a normal pseudomanifold ({pm.reason}; witness {pm.witness})"
            )
        sphere = is_homology_sphere(link, field)
        if not sphere:
            raise PreconditionError(
                f"link of {v} is not a homology sphere (witness {sphere.witness})"
            )
    # a missing facet of the link has the link's top dimension
    if len(t) != link.dim + 1 or t in link.faces():
        raise PreconditionError(
            f"{tuple(sorted(t))} is not a missing facet of the link of {v}"
        )
    for u in sorted(t):
        if t - {u} not in link.faces():
            raise PreconditionError(
                f"{tuple(sorted(t))} is not a missing facet of the link of {v}"
            )
    spheres = _split_link_along(link, t)
    base = cx.antistar(v)
    new_facets = set(base.facets)
    fresh = max(cx.vertices) + 1
    new_vertices = []
    notes = []
    for sphere_cx in spheres:
        if is_simplex_boundary(sphere_cx):
            new_facets.add(frozenset(sphere_cx.vertices))
            notes.append("filled missing facet")
        else:
            cone = fresh
            fresh += 1
            new_vertices.append(cone)
            for facet in sphere_cx.facets:
                new_facets.add(facet | {cone})
            notes.append(f"coned with vertex {cone}")
    out = SimplicialComplex(new_facets)

    g_in = g_vector(cx).entries
    g_out = g_vector(out).entries
    predicted = ((2, g_in[2] - 1),) if cx.dim >= 3 else ()
    record = RetriangulationRecord(
        kind="swartz",
        g_before=g_in,
        g_after=g_out,
        predicted=predicted,
        new_vertices=tuple(new_vertices),
        removed_vertices=(v,),
        steps=1,
        notes=tuple(notes),
    )
    return out, record


def swartz_all(cx: SimplicialComplex, v: int, field="rational", check=True):
    """Iterate the single-step operation until every missing facet of the
    original vertex link has been added.

    After one step the vertex is gone and the remaining missing facets live
    in the links of the fresh cone vertices, which are processed in FIFO
    order; missing facets of a link that are already faces of the complex
    are skipped (they cannot be inserted) and recorded.
    """
    if cx.dim < 3:
        raise PreconditionError("iterated operation needs dimension >= 3")
    if v not in cx.vertices:
        raise PreconditionError(f"vertex {v} is not in the complex")
    g_in = g_vector(cx).entries
    current = cx
    queue = [v]
    steps = 0
    skipped = []
    cone_vertices = []
    combined_notes = []
    while queue:
        w = queue.pop(0)
        if w not in current.vertices:
            continue
        link = current.link([w])
        missing = [frozenset(f) for f in link.missing_faces(link.dim)]
        chosen = None
        for t in missing:
            if t in current.faces():
                skipped.append(tuple(sorted(t)))
            else:
                chosen = t
                break
        if chosen is None:
            continue
        current, rec = swartz_operation(current, w, chosen, field, check=check)
        steps += 1
        combined_notes.extend(rec.notes)
        cone_vertices.extend(rec.new_vertices)
        queue.extend(rec.new_vertices)
    g_out = g_vector(current).entries
    predicted = ((2, g_in[2] - steps),) if cx.dim >= 3 else ()
    record = RetriangulationRecord(
        kind="swartz",
        g_before=g_in,
        g_after=g_out,
        predicted=predicted,
        new_vertices=tuple(v for v in cone_vertices if v in current.vertices),
        removed_vertices=(v,),
        steps=steps,
        notes=tuple(combined_notes + [f"skipped {s}" for s in sorted(set(skipped))]),
    )
    return current, record
