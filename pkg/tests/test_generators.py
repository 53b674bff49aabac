from math import comb

import pytest

from scx import (
    PreconditionError,
    are_isomorphic,
    barnette_sphere,
    betti,
    central_retriangulation,
    cross_polytope_boundary,
    cycle,
    f_vector,
    g2,
    g2_one_family,
    g2_two_catalog,
    is_homology_sphere,
    join,
    simplex_boundary,
    stacked_sphere,
    stacked_sphere_with_ridge,
    standard_catalog,
    suspension,
)


def test_simplex_boundary_is_small_cycle():
    assert simplex_boundary(2) == cycle(3)


def test_simplex_boundary_counts():
    for d in (2, 3, 4, 5):
        f = f_vector(simplex_boundary(d))
        assert f.entries == tuple(comb(d + 1, k) for k in range(d + 1))


def test_parameter_validation():
    with pytest.raises(PreconditionError):
        simplex_boundary(0)
    with pytest.raises(PreconditionError):
        cycle(2)
    with pytest.raises(PreconditionError):
        stacked_sphere(4, 4)
    with pytest.raises(PreconditionError):
        cross_polytope_boundary(0)


def test_stacked_sphere_smallest_is_simplex_boundary():
    assert stacked_sphere(4, 5) == simplex_boundary(4)


def test_stacked_sphere_counts():
    cx = stacked_sphere(4, 8)
    assert g2(cx) == 0
    assert cx.n_faces(1) == 4 * 8 - 10
    # each stacking step removes one facet and adds four
    assert len(cx.facets) == 5 + 3 * 3


def test_stacked_sphere_links_are_stacked():
    cx = stacked_sphere(4, 7)
    for v in sorted(cx.vertices):
        link = cx.link([v])
        assert g2(link) == 0
        assert is_homology_sphere(link)


def test_cross_polytope_counts(oct3):
    octa = cross_polytope_boundary(3)
    assert f_vector(octa).entries == (1, 6, 12, 8)
    assert g2(oct3) == 2
    assert len(oct3.facets) == 16
    assert oct3.is_prime()
    assert octa.is_prime()


def test_octahedral_sphere_links_are_octahedra(oct3):
    octa = cross_polytope_boundary(3)
    for v in sorted(oct3.vertices):
        assert are_isomorphic(oct3.link([v]), octa)


def test_g2_one_family_join():
    entry = g2_one_family(5, "join", 2)
    assert entry.complex.n_faces(0) == 7
    assert g2(entry.complex) == 1
    assert entry.complex.is_prime()
    with pytest.raises(PreconditionError):
        g2_one_family(5, "join", 4)


def test_g2_one_family_cycle():
    entry = g2_one_family(4, "cycle", 5)
    assert g2(entry.complex) == 1
    assert is_homology_sphere(entry.complex)
    with pytest.raises(PreconditionError):
        g2_one_family(4, "cycle", 3)


def test_cycle_join_g2_is_one_for_all_small_parameters():
    for d in (4, 5, 6):
        for n in (4, 5, 6):
            assert g2(join(cycle(n), simplex_boundary(d - 2))) == 1


def test_g2_two_catalog_triple_join():
    entry = g2_two_catalog(6, "triple_join")
    assert g2(entry.complex) == 2


def test_g2_two_catalog_suspension():
    entry = g2_two_catalog(5, "suspension", 2)
    assert g2(entry.complex) == 2
    assert entry.complex == suspension(join(simplex_boundary(2), simplex_boundary(2)))


def test_g2_two_crtr_matches_triple_join():
    # retriangulating a join of simplex boundaries along a factor facet's star
    # produces the two-point suspension family
    d = 5
    base = join(simplex_boundary(2), simplex_boundary(d - 2))
    tau = frozenset(range(3, d + 1))
    out, _ = central_retriangulation(base, base.star(tau))
    assert are_isomorphic(out, g2_two_catalog(d, "triple_join").complex)


def test_g2_two_catalog_validation():
    with pytest.raises(PreconditionError):
        g2_two_catalog(5, "octahedral")
    with pytest.raises(PreconditionError):
        g2_two_catalog(4, "nonsense")


def test_stacked_sphere_with_ridge():
    cx, ridge = stacked_sphere_with_ridge(5, 8)
    assert g2(cx) == 0
    assert cx.n_faces(0) == 8
    assert frozenset(ridge) in cx.faces()
    missing = cx.missing_faces(cx.dim)
    assert missing and all(set(ridge) <= set(f) for f in missing)


def test_barnette_fixture():
    entry = barnette_sphere()
    cx = entry.complex
    f = f_vector(cx)
    assert f[0] == 8 and f[3] == 19
    assert g2(cx) == 5
    assert cx.is_prime()
    assert betti(cx).entries == (0, 0, 0, 0, 1)
    assert cx.missing_faces(1) == [(6, 7)]


def test_catalog_entries_verify(tmp_path):
    catalog = standard_catalog(dmax=5, f0max=10, cycle_max=5)
    assert all(e.verify_expected() for e in catalog)
    names = [e.name for e in catalog]
    assert len(names) == len(set(names))


def test_catalog_has_enough_pseudomanifolds():
    catalog = standard_catalog()
    pms = [e for e in catalog if "normal-pm" in e.tags]
    assert len(pms) >= 30
    dims = {e.complex.dim for e in pms}
    assert {3, 4, 5} <= dims
