import pytest

from scx import (
    PreconditionError,
    TooLargeError,
    ball_boundary,
    betti,
    chain_complex,
    connected_sum,
    cycle,
    from_facets,
    g2,
    interior_faces,
    is_homology_ball,
    is_homology_manifold,
    is_homology_sphere,
    is_normal_pseudomanifold,
    is_r_stacked_ball,
    join,
    simplex_boundary,
    skeleton_completion,
    stacked_sphere,
)

import oracle


def test_betti_of_spheres(bd3, oct3):
    assert betti(bd3).entries == (0, 0, 0, 1)
    assert betti(oct3).entries == (0, 0, 0, 0, 1)


def test_betti_of_cone():
    solid = from_facets([[0, 1, 2, 3]])
    assert betti(solid).is_trivial()


def test_betti_of_circle_and_two_points():
    assert betti(cycle(5)).entries == (0, 0, 1)
    assert betti(simplex_boundary(1)).entries == (0, 1)
    assert betti(from_facets([])).entries == (1,)


def test_betti_matches_gf2_oracle(oct3, cycle_join):
    for cx in (oct3, cycle_join, stacked_sphere(4, 7)):
        assert betti(cx).entries == oracle.betti_gf2(cx.facets)


def test_betti_fields_agree(oct3, cycle_join):
    from scx import barnette_sphere

    for cx in (oct3, cycle_join, barnette_sphere().complex):
        rational = betti(cx).entries
        for p in (2, 3, 5):
            assert betti(cx, p).entries == rational


def test_chain_complex_composes_to_zero(bd4, oct3, cycle_join):
    for cx in (bd4, oct3, cycle_join):
        mats = chain_complex(cx)
        assert len(mats) == cx.dim + 1


def test_is_homology_sphere(cycle_join, bd5):
    assert is_homology_sphere(cycle_join)
    assert is_homology_sphere(bd5)
    res = is_homology_sphere(from_facets([[0, 1, 2, 3]]))
    assert not res
    assert res.witness is not None


def test_star_is_homology_ball(bd5):
    star = bd5.star([0, 1, 2, 3])
    assert is_homology_ball(star)
    # boundary = (boundary of the face) * (its two-point link)
    bd = ball_boundary(star)
    assert bd.dim == star.dim - 1
    expected = join(simplex_boundary(3), simplex_boundary(1))
    from scx import are_isomorphic

    assert are_isomorphic(bd, expected)


def test_ball_boundary_of_solid_simplex(bd3):
    solid = from_facets([[0, 1, 2, 3]])
    assert ball_boundary(solid) == bd3
    assert interior_faces(solid) == {frozenset({0, 1, 2, 3})}


def test_two_facet_ball_boundary(bd4):
    glued = min(bd4.facets, key=sorted)
    sphere = connected_sum(bd4, glued, simplex_boundary(4), glued)
    facets = sorted(sphere.facets, key=sorted)
    pair = next(
        (f, g) for f in facets for g in facets if f != g and len(f & g) == 3
    )
    ball = from_facets([sorted(pair[0]), sorted(pair[1])])
    res = is_homology_ball(ball)
    assert res
    bd = ball_boundary(ball, check=False)
    assert bd.n_faces(0) == 5
    assert g2(bd) == 0
    assert is_homology_sphere(bd)


def test_ball_boundary_rejects_spheres(bd3):
    with pytest.raises(PreconditionError):
        ball_boundary(bd3)


def test_homology_manifold_and_pseudomanifold(cycle_join):
    assert is_homology_manifold(cycle_join)
    assert is_normal_pseudomanifold(cycle_join)
    # a cycle with a pendant edge: purity fails, with a witness
    pendant = from_facets([[0, 1], [1, 2], [0, 2], [2, 3]])
    res = is_normal_pseudomanifold(pendant)
    assert not res and res.witness is not None
    assert is_normal_pseudomanifold(cycle(4))


def test_hierarchy_on_catalog_members(oct3, cycle_join, bd4):
    for cx in (oct3, cycle_join, bd4):
        assert is_homology_sphere(cx)
        assert is_homology_manifold(cx)
        assert is_normal_pseudomanifold(cx)


def test_ridge_count_witness():
    # two triangles sharing an edge: boundary edges lie in one facet only
    cx = from_facets([[0, 1, 2], [1, 2, 3]])
    res = is_normal_pseudomanifold(cx)
    assert not res
    assert "1 facets" in res.reason


def test_skeleton_completion_fixed_point(oct3):
    assert skeleton_completion(oct3, oct3.dim + 1) == oct3
    octa = join(join(simplex_boundary(1), simplex_boundary(1)), simplex_boundary(1))
    assert skeleton_completion(octa, 1) == octa  # diagonals stay missing


def test_skeleton_completion_fills_stacked_sphere(bd4):
    glued = min(bd4.facets, key=sorted)
    sphere = connected_sum(bd4, glued, simplex_boundary(4), glued)
    filled = skeleton_completion(sphere, 1)
    assert filled.dim == sphere.dim + 1
    assert sphere.faces() < filled.faces()
    assert is_homology_ball(filled)
    assert ball_boundary(filled, check=False) == sphere


def test_skeleton_completion_guard():
    path = from_facets([[i, i + 1] for i in range(45)])
    with pytest.raises(TooLargeError):
        skeleton_completion(path, 1)
    with pytest.raises(PreconditionError):
        skeleton_completion(path, 0)


def test_stackedness_certificates(bd4, bd5):
    solid = from_facets([[0, 1, 2, 3, 4]])
    cert = is_r_stacked_ball(solid, 0)
    assert cert and cert.min_stackedness == 0

    glued = min(bd4.facets, key=sorted)
    sphere = connected_sum(bd4, glued, simplex_boundary(4), glued)
    facets = sorted(sphere.facets, key=sorted)
    pair = next((f, g) for f in facets for g in facets if f != g and len(f & g) == 3)
    ball = from_facets([sorted(pair[0]), sorted(pair[1])])
    cert = is_r_stacked_ball(ball, 1)
    assert cert and cert.min_stackedness == 1
    assert cert.interior_by_dim == {2: 1, 3: 2}  # shared ridge and both facets

    star = bd5.star([0, 1, 2, 3])  # 3-face in a 4-sphere: (d - i) = 1
    cert = is_r_stacked_ball(star, 1)
    assert cert and cert.min_stackedness == 1
    assert not is_r_stacked_ball(bd5.star([0, 1, 2]), 1).ok


def test_projective_plane_depends_on_the_field():
    # 6-vertex projective plane (antipodal icosahedron quotient): a normal
    # pseudomanifold and homology manifold that is not a sphere, with
    # 2-torsion separating the rationals from GF(2)
    rp2 = from_facets(
        [
            [0, 1, 3], [0, 1, 4], [0, 2, 3], [0, 2, 5], [0, 4, 5],
            [1, 2, 4], [1, 2, 5], [1, 3, 5], [2, 3, 4], [3, 4, 5],
        ]
    )
    assert is_normal_pseudomanifold(rp2)
    assert is_homology_manifold(rp2)
    assert not is_homology_sphere(rp2)
    assert betti(rp2).entries == (0, 0, 0, 0)
    assert betti(rp2, 2).entries == (0, 0, 1, 1)
    assert betti(rp2, 3).entries == (0, 0, 0, 0)

    from scx import g2_via_rigidity

    assert g2(rp2) == 3
    assert g2_via_rigidity(rp2) == 3


def test_euler_relation_matches_betti(oct3, cycle_join):
    from scx import reduced_euler

    for cx in (oct3, cycle_join, from_facets([[0, 1, 2], [2, 3]])):
        profile = betti(cx)
        alt = -profile.b(-1) + sum(
            (-1) ** i * profile.b(i) for i in range(0, cx.dim + 1)
        )
        assert alt == reduced_euler(cx)
