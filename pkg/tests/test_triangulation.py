import pytest

from colorplex import (
    FormatError,
    Triangulation,
    dual_graph,
    euler_characteristic,
    face_census,
    is_even_cyclic,
    orientability,
    parse_triangulation,
    rp2_6,
    simplex_boundary,
    torus7,
    triangulation_to_text,
    validate,
)
from colorplex.builders import circle, cross_polytope_boundary

TETRA_TEXT = """\
# boundary of the 3-simplex
dim 2
1 2 3
1 2 4
1 3 4
2 3 4
"""


def test_parse_tetrahedron_boundary():
    t = parse_triangulation(TETRA_TEXT)
    assert t.dimension == 2
    assert len(t.vertices) == 4
    assert len(t.simplices) == 4


def test_parse_circle_file():
    t = parse_triangulation("dim 1\n1 2\n2 3\n3 1\n")
    assert t.dimension == 1
    assert t.simplices == ((1, 2), (1, 3), (2, 3))


def test_parse_repeated_vertex_reports_line():
    with pytest.raises(FormatError) as err:
        parse_triangulation("dim 2\n1 2 2\n")
    assert err.value.line == 2


def test_parse_arity_mismatch():
    with pytest.raises(FormatError, match="expected 3"):
        parse_triangulation("dim 2\n1 2\n")


def test_parse_duplicate_simplex():
    with pytest.raises(FormatError, match="duplicate"):
        parse_triangulation("dim 1\n1 2\n2 1\n")


def test_parse_missing_header():
    with pytest.raises(FormatError, match="dim"):
        parse_triangulation("1 2 3\n")


def test_parse_non_integer():
    with pytest.raises(FormatError) as err:
        parse_triangulation("dim 1\n1 x\n")
    assert err.value.line == 2


def test_serialise_round_trip():
    t = parse_triangulation(TETRA_TEXT)
    assert parse_triangulation(triangulation_to_text(t)) == t


def test_validate_sphere_passes():
    report = validate(parse_triangulation(TETRA_TEXT))
    assert report.passed
    assert report.bad_faces == ()
    assert report.components == 1


def test_validate_open_disk_fails():
    # delete one triangle from the tetrahedron boundary: three edges of
    # degree 1 remain
    t = Triangulation.from_simplices(2, [(1, 2, 3), (1, 2, 4), (1, 3, 4)])
    report = validate(t)
    assert not report.passed
    assert not report.closed
    degree_one = [f for f, d in report.bad_faces if d == 1]
    assert len(degree_one) == 3


def test_validate_disjoint_union_fails():
    spheres = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4),
               (5, 6, 7), (5, 6, 8), (5, 7, 8), (6, 7, 8)]
    report = validate(Triangulation.from_simplices(2, spheres))
    assert report.closed
    assert not report.connected
    assert report.components == 2


def test_census_tetrahedron_vertex_degrees():
    census = face_census(simplex_boundary(2))
    assert census.counts == (4, 6, 4)
    assert all(d == 3 for _f, d in census.codim2_degrees)
    assert len(census.odd_faces) == 4


def test_census_octahedron_vertex_degrees():
    census = face_census(cross_polytope_boundary(2))
    assert census.counts == (6, 12, 8)
    assert all(d == 4 for _f, d in census.codim2_degrees)
    assert census.odd_faces == ()


def test_census_4simplex_edge_degrees():
    # each edge of the 4-simplex boundary lies in C(3,1)... in the 3 tetrahedra
    # choosing 2 of the remaining 3 vertices
    census = face_census(simplex_boundary(3))
    assert census.counts == (5, 10, 10, 5)
    assert all(d == 3 for _f, d in census.codim2_degrees)
    assert len(census.codim2_degrees) == 10


def test_census_circle_has_no_codim2_faces():
    census = face_census(circle(5))
    assert census.counts == (5, 5)
    assert census.codim2_degrees == ()


def test_incidence_count_is_twice_facet_count():
    for t in (simplex_boundary(2), simplex_boundary(3), torus7(), rp2_6()):
        census = face_census(t)
        incidences = len(t.simplices) * (t.dimension + 1)
        assert incidences == 2 * census.counts[t.dimension - 1]


def test_dual_graph_of_tetrahedron_is_k4():
    dg = dual_graph(simplex_boundary(2))
    assert dg.node_count == 4
    assert len(dg.edges) == 6
    assert dg.degrees() == (3, 3, 3, 3)


def test_dual_graph_of_4simplex_is_k5():
    dg = dual_graph(simplex_boundary(3))
    assert dg.node_count == 5
    assert len(dg.edges) == 10
    assert set(dg.degrees()) == {4}


def test_dual_graph_of_triangle_circle():
    dg = dual_graph(circle(3))
    assert dg.node_count == 3
    assert len(dg.edges) == 3
    assert dg.degrees() == (2, 2, 2)


def test_dual_graph_regularity_and_distinct_labels():
    for t in (cross_polytope_boundary(3), torus7(), rp2_6()):
        dg = dual_graph(t)
        assert set(dg.degrees()) == {t.dimension + 1}
        labels = [facet for _a, _b, facet in dg.edges]
        assert len(labels) == len(set(labels))


def test_orientability_textbook_values():
    assert orientability(torus7())
    assert not orientability(rp2_6())
    for n in (1, 2, 3, 4):
        assert orientability(simplex_boundary(n))
    assert orientability(cross_polytope_boundary(3))


def _has_odd_closed_walk(dg):
    """Independent bipartiteness oracle: trace of odd adjacency powers."""
    n = dg.node_count
    adj = [[0] * n for _ in range(n)]
    for a, b, _f in dg.edges:
        adj[a][b] = adj[b][a] = 1
    power = [row[:] for row in adj]
    for length in range(1, n + 1):
        if length % 2 == 1 and any(power[i][i] for i in range(n)):
            return True
        power = [
            [sum(power[i][k] * adj[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
    return False


def test_even_cyclic_matches_odd_walk_oracle():
    for t in (simplex_boundary(2), cross_polytope_boundary(2), torus7(), circle(4), circle(5)):
        assert is_even_cyclic(t) == (not _has_odd_closed_walk(dual_graph(t)))


def test_even_cyclic_values():
    assert not is_even_cyclic(simplex_boundary(2))  # dual K4 has triangles
    assert is_even_cyclic(cross_polytope_boundary(2))  # dual is the cube
    assert is_even_cyclic(torus7())


def test_euler_characteristic_values():
    assert euler_characteristic(simplex_boundary(2)) == 2
    assert euler_characteristic(torus7()) == 0  # 7 - 21 + 14
    assert euler_characteristic(rp2_6()) == 1  # 6 - 15 + 10
