from fractions import Fraction

import pytest

from src.core.errors import DomainError
from src.padic.number_field import UnramifiedRational
from src.tree import (
    BerkovichPoint,
    Pgl2Elem,
    QuadraticPoint,
    TreeVertex,
    ball,
    classify_point,
    embed,
    geodesic,
    in_drinfeld_space,
    lattice_distance,
    neighbors,
    parse_point,
    pgl2_classify,
    random_element,
    random_vertex,
    retract,
    schottky_generators,
    schottky_triple_check,
    to_dot,
    vertex_distance,
    vertex_from_lattice,
    z_element,
)


@pytest.mark.parametrize("p,f", [(2, 1), (3, 1), (5, 1), (3, 2)])
def test_degree_is_q_plus_one(p, f):
    v = TreeVertex.base(p, f)
    around = neighbors(v)
    assert len(around) == p ** f + 1
    assert len(set(around)) == len(around)
    for w in around:
        assert vertex_distance(v, w) == 1
        assert v in neighbors(w)


def test_labels():
    assert TreeVertex.base(3).label() == "3:0:-"
    assert TreeVertex.make(3, 1, 2, 5).label() == "3:2:2,1"
    assert TreeVertex.make(3, 1, 0, Fraction(1, 3)).label() == "3:0:-1|1"
    assert TreeVertex.make(3, 1, 2, 14) == TreeVertex.make(3, 1, 2, 5)


def test_geodesic_and_distance():
    v = TreeVertex.base(3)
    w = TreeVertex.make(3, 1, 2, 5)
    path = geodesic(v, w)
    assert [x.label() for x in path] == ["3:0:-", "3:1:2", "3:2:2,1"]
    assert vertex_distance(v, w) == 2
    assert vertex_distance(TreeVertex.make(3, 1, 2, 1), TreeVertex.make(3, 1, 2, 4)) == 2
    assert geodesic(w, w) == [w]


def test_vertices_of_different_trees():
    with pytest.raises(DomainError):
        vertex_distance(TreeVertex.base(3), TreeVertex.base(5))


def test_lattice_round_trip(rng):
    for _ in range(10):
        v = random_vertex(3, 1, rng)
        rows = [[e for e in row] for row in v.lattice()]
        assert vertex_from_lattice(3, 1, rows) == v
        scaled = [[e * 6 for e in row] for row in rows]
        assert vertex_from_lattice(3, 1, scaled) == v


def test_lattice_distance_matches_tree():
    assert lattice_distance(3, 1, [[1, 0], [0, 1]], [[9, 0], [0, 1]]) == 2
    assert vertex_from_lattice(3, 1, [[9, 0], [0, 1]]) == TreeVertex.make(3, 1, 2, 0)
    assert lattice_distance(3, 1, [[1, 0], [0, 1]], [[2, 1], [1, 1]]) == 0
    with pytest.raises(DomainError):
        vertex_from_lattice(3, 1, [[1, 2], [2, 4]])


def test_ball_sizes():
    v = TreeVertex.base(3)
    assert len(ball(v, 0)) == 1
    assert len(ball(v, 1)) == 5
    two = ball(v, 2)
    assert len(two) == 17
    assert len({w for w, _ in two}) == 17
    assert ball(v, 2, threads=3) == two
    with pytest.raises(DomainError):
        ball(v, -1)


def test_dot_output():
    text = to_dot(ball(TreeVertex.base(2), 1))
    lines = text.splitlines()
    assert lines[0] == "graph tree {"
    assert lines[-1] == "}"
    assert sum("--" in line for line in lines) == 3


def test_pgl2_classification():
    ident = pgl2_classify(Pgl2Elem.identity(3))
    assert ident["kind"] == "elliptic"
    assert ident["translation_length"] == 0

    g = Pgl2Elem.of(3, 1, [[1, 0], [0, 3]])
    info = pgl2_classify(g)
    assert info["kind"] == "hyperbolic"
    assert info["translation_length"] == 1
    assert g.displacement(TreeVertex.base(3)) == 1

    w = Pgl2Elem.of(3, 1, [[0, -1], [1, 0]])
    assert pgl2_classify(w)["v_trace"] is None
    assert w.act(TreeVertex.base(3)) == TreeVertex.base(3)


def test_scalars_are_trivial():
    assert Pgl2Elem.of(3, 1, [[3, 0], [0, 3]]).same_class(Pgl2Elem.identity(3))
    assert not Pgl2Elem.of(3, 1, [[1, 1], [0, 1]]).same_class(Pgl2Elem.identity(3))
    with pytest.raises(DomainError):
        Pgl2Elem.of(3, 1, [[1, 2], [2, 4]])


@pytest.mark.parametrize("p,f", [(3, 1), (2, 1), (3, 2)])
def test_action_is_an_isometry(rng, p, f):
    for _ in range(4):
        g = random_element(p, f, rng)
        v, w = random_vertex(p, f, rng), random_vertex(p, f, rng)
        assert vertex_distance(g.act(v), g.act(w)) == vertex_distance(v, w)
        assert g.inverse().act(g.act(v)) == v


def test_point_types():
    assert classify_point(parse_point(3, 1, "classical 1/2")) == 1
    assert classify_point(parse_point(3, 1, "disk 0 -2")) == 2
    assert classify_point(parse_point(3, 1, "disk 0 1/2")) == 3
    assert classify_point(parse_point(3, 2, "disk 1,1 3")) == 2


@pytest.mark.parametrize("text", ["", "nested 0 1", "bogus 1", "disk 0", "disk x 1", "classical 1 2"])
def test_unparseable_points(text):
    with pytest.raises(DomainError):
        parse_point(3, 1, text)


def test_vertices_are_type_two_points():
    v = TreeVertex.make(3, 1, 2, 5)
    assert BerkovichPoint.from_vertex(v).to_vertex() == v
    assert BerkovichPoint.disk(3, 1, 5, -2).to_vertex() == v
    with pytest.raises(DomainError):
        BerkovichPoint.disk(3, 1, 0, Fraction(1, 2)).to_vertex()


def test_drinfeld_membership():
    alpha = UnramifiedRational.generator(3, 2)
    assert in_drinfeld_space(alpha)
    assert not in_drinfeld_space(UnramifiedRational.from_rational(3, 2, Fraction(1, 2)))
    assert in_drinfeld_space(BerkovichPoint.disk(3, 1, 0, -1))
    assert in_drinfeld_space(QuadraticPoint(3, Fraction(1), Fraction(0), Fraction(1)))
    with pytest.raises(DomainError):
        in_drinfeld_space(QuadraticPoint(5, Fraction(1), Fraction(0), Fraction(1)))
    with pytest.raises(DomainError):
        in_drinfeld_space(QuadraticPoint(3, Fraction(0), Fraction(1), Fraction(1)))


def test_retraction():
    alpha = UnramifiedRational.generator(3, 2)
    assert retract(alpha).vertex == TreeVertex.base(3)
    assert retract(alpha).is_vertex()
    assert retract(alpha * 3).vertex == TreeVertex.make(3, 1, 1, 0)
    shifted = retract(alpha * Fraction(1, 3) + 1)
    assert shifted.vertex.level == -1

    edge = retract(BerkovichPoint.disk(3, 2, alpha, Fraction(1, 2)))
    assert edge.vertex == TreeVertex.base(3)
    assert edge.height == Fraction(1, 2)
    assert str(edge) == "3:0:-+1/2"

    with pytest.raises(DomainError):
        retract(UnramifiedRational.from_rational(3, 2, 4))


def test_schottky_elements():
    assert z_element(1, 1).nrd() == 3
    assert z_element(1, -1).trd() == 0
    gammas = schottky_generators()
    assert set(gammas) == {"gamma_1", "gamma_2", "gamma_3"}
    info = pgl2_classify(embed(gammas["gamma_1"]))
    assert info["kind"] == "hyperbolic"
    assert info["translation_length"] == 2


def test_schottky_triple():
    report = schottky_triple_check()
    failed = [name for name, ok in report["checks"].items() if not ok]
    assert failed == []
    assert report["ok"]
    assert len(report["classification"]) == 9
