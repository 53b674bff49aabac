from math import comb

import pytest

from scx import (
    Graph,
    PreconditionError,
    barnette_sphere,
    from_facets,
    g2,
    g2_via_rigidity,
    generic_rank,
    generic_rank_trials,
    join,
    link_monotonicity_check,
    random_embedding,
    rigidity_matrix,
    simplex_boundary,
    skeleton_graph,
    stacked_sphere,
    stress_basis,
    vertex_participation,
)

K4 = Graph((0, 1, 2, 3), ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))


def test_embedding_determinism():
    a = random_embedding(K4, 2, seed=11)
    b = random_embedding(K4, 2, seed=11)
    c = random_embedding(K4, 2, seed=12)
    assert a.coords == b.coords
    assert a.coords != c.coords


def test_k4_rank_in_the_plane():
    for seed in (0, 1):
        assert generic_rank(K4, 2, trials=2, seed=seed) == 5


def test_path_rank_on_a_line():
    path = Graph((0, 1, 2, 3), ((0, 1), (1, 2), (2, 3)))
    assert generic_rank(path, 1) == 3


def test_rigidity_matrix_shape_and_blocks():
    single = Graph((0, 1), ((0, 1),))
    emb = random_embedding(single, 2, seed=3)
    mat = rigidity_matrix(single, emb)
    assert len(mat.entries) == 1
    row = mat.entries[0]
    assert len(row) == 4
    assert row[0] == -row[2] and row[1] == -row[3]

    triangle = Graph((0, 1, 2), ((0, 1), (0, 2), (1, 2)))
    assert generic_rank(triangle, 2) == 3

    with pytest.raises(PreconditionError):
        rigidity_matrix(K4, random_embedding(triangle, 2, seed=0))


def test_tetrahedron_graph_in_3_space(bd3):
    g = skeleton_graph(bd3)
    mat = rigidity_matrix(g, random_embedding(g, 3, seed=0))
    assert len(mat.entries) == 6 and len(mat.entries[0]) == 12
    assert generic_rank(g, 3) == 6


def test_pseudomanifold_rank_formula(bd4, oct3):
    assert generic_rank(skeleton_graph(bd4), 4) == 4 * 5 - comb(5, 2)
    assert generic_rank(skeleton_graph(oct3), 4) == 4 * 8 - comb(5, 2)


def test_disconnected_graph_misses_the_bound():
    g = Graph((0, 1, 2, 3, 4, 5), ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)))
    assert generic_rank(g, 2) < 2 * 6 - comb(3, 2)


def test_g2_via_rigidity_values(cycle_join):
    assert g2_via_rigidity(stacked_sphere(4, 7)) == 0
    assert g2_via_rigidity(join(simplex_boundary(2), simplex_boundary(3))) == 1
    assert g2_via_rigidity(barnette_sphere().complex) == 5
    assert g2_via_rigidity(cycle_join) == g2(cycle_join) == 1


def test_g2_via_rigidity_requires_pseudomanifold():
    pendant = from_facets([[0, 1], [1, 2], [0, 2], [2, 3]])
    with pytest.raises(PreconditionError):
        g2_via_rigidity(pendant)
    assert g2_via_rigidity(pendant, require_pseudomanifold=False) >= 0


def test_stress_basis_participation(cycle_join):
    basis = stress_basis(cycle_join)
    assert len(basis.vectors) == 1
    assert all(basis.participation.values())
    assert vertex_participation(cycle_join) == basis.participation


def test_stress_basis_empty_for_stacked():
    for cx in (stacked_sphere(4, 7), stacked_sphere(4, 8)):
        basis = stress_basis(cx)
        assert basis.vectors == ()
        assert not any(basis.participation.values())


def test_participation_stable_across_seeds(oct3):
    assert vertex_participation(oct3, seed=5) == vertex_participation(oct3, seed=9)


def test_rank_trials_agree(oct3, cycle_join):
    for cx in (oct3, cycle_join):
        g = skeleton_graph(cx)
        trials = generic_rank_trials(g, cx.dim + 1, trials=3, seed=2)
        assert len(set(trials)) == 1


def test_cone_lemma_spot_check(cycle_join, oct3):
    # star of v rigid in dimension d exactly when the link is in d-1
    for cx in (cycle_join, oct3):
        d = cx.dim + 1
        v = min(cx.vertices)
        link = cx.link([v])
        star = cx.star([v])
        link_rank = generic_rank(skeleton_graph(link), d - 1)
        star_rank = generic_rank(skeleton_graph(star), d)
        link_rigid = link_rank == (d - 1) * len(link.vertices) - comb(d, 2)
        star_rigid = star_rank == d * len(star.vertices) - comb(d + 1, 2)
        assert link_rigid == star_rigid


def test_link_monotonicity(bd5, oct3):
    res = link_monotonicity_check(oct3)
    assert res.ok and res.g2_total == 2
    assert all(lg == 0 for _, lg in res.per_vertex)  # octahedron links

    res = link_monotonicity_check(join(simplex_boundary(2), simplex_boundary(3)))
    assert res.ok
    assert {lg for _, lg in res.per_vertex} <= {0, 1}

    res = link_monotonicity_check(bd5)
    assert res.ok and res.g2_total == 0
