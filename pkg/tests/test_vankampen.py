import random

import pytest

from raag_genus.errors import (
    AmbientMismatch,
    GeneratorMismatchAtGluing,
    IncompleteMatching,
    NonCommutingLabels,
    OppositeSideMismatch,
    OrientationIncompatibleGluing,
    UnknownGenerator,
)
from raag_genus.graph import orient, validate_graph
from raag_genus.homology import cap_bound, new_class
from raag_genus.vankampen import (
    disjoint_union,
    genus_of,
    induced_class,
    represents,
    rotate_squares,
    surface_summary,
    validate_diagram,
)

from .helpers import fixture_class, fixture_diagram, random_diagram, random_graph
from .oracles import walk_vertex_count

VW = validate_graph(["v", "w"], [["v", "w"]])
TORUS_SQUARE = [("v", 1), ("w", 1), ("v", -1), ("w", -1)]


def test_one_square_torus():
    d = validate_diagram([TORUS_SQUARE], [[[0, 0], [0, 2]], [[0, 1], [0, 3]]], VW)
    s = surface_summary(d)
    assert s.connected and s.total_genus == 1
    c = s.components[0]
    assert (c.vertices, c.edges, c.faces, c.euler) == (1, 2, 1, 0)
    assert induced_class(d).labels == {("v", "w"): 1}


def test_one_square_torus_fixture():
    d = fixture_diagram("torus_one_square")
    assert genus_of(d) == 1
    assert induced_class(d).labels == {("v", "w"): 1}


def test_single_square_matchings():
    # adjacent-side gluings of a one-generator square give spheres
    d = validate_diagram([[("v", 1), ("v", -1), ("v", -1), ("v", 1)]], [[[0, 0], [0, 1]], [[0, 2], [0, 3]]], VW)
    assert genus_of(d) == 0 and surface_summary(d).components[0].vertices == 3
    d = validate_diagram([[("v", 1), ("v", 1), ("v", -1), ("v", -1)]], [[[0, 0], [0, 3]], [[0, 1], [0, 2]]], VW)
    assert genus_of(d) == 0
    d = validate_diagram([[("v", 1), ("v", 1), ("v", -1), ("v", -1)]], [[[0, 0], [0, 2]], [[0, 1], [0, 3]]], VW)
    assert genus_of(d) == 1
    assert induced_class(d).is_zero()


def test_reversed_square_gives_negative_class():
    sq = [("v", -1), ("w", 1), ("v", 1), ("w", -1)]
    d = validate_diagram([sq], [[[0, 0], [0, 2]], [[0, 1], [0, 3]]], VW)
    assert induced_class(d).labels == {("v", "w"): -1}
    og = orient(VW, [["w", "v"]])
    assert induced_class(d, og).labels == {("w", "v"): 1}


def test_validation_errors():
    glue = [[[0, 0], [0, 2]], [[0, 1], [0, 3]]]
    with pytest.raises(UnknownGenerator):
        validate_diagram([[("x", 1), ("w", 1), ("x", -1), ("w", -1)]], glue, VW)
    with pytest.raises(OppositeSideMismatch):
        validate_diagram([[("v", 1), ("w", 1), ("v", 1), ("w", -1)]], glue, VW)
    with pytest.raises(OppositeSideMismatch):
        validate_diagram([[("v", 1), ("w", 1), ("w", -1), ("v", -1)]], glue, VW)
    g3 = validate_graph(["u", "v", "w"], [["v", "w"]])
    with pytest.raises(NonCommutingLabels):
        validate_diagram([[("u", 1), ("w", 1), ("u", -1), ("w", -1)]], glue, g3)
    with pytest.raises(IncompleteMatching):
        validate_diagram([TORUS_SQUARE], glue[:1], VW)
    with pytest.raises(IncompleteMatching):
        validate_diagram([TORUS_SQUARE], glue + [[[0, 0], [0, 2]]], VW)
    with pytest.raises(GeneratorMismatchAtGluing):
        validate_diagram([TORUS_SQUARE], [[[0, 0], [0, 3]], [[0, 1], [0, 2]]], VW)
    with pytest.raises(OrientationIncompatibleGluing):
        validate_diagram([TORUS_SQUARE, TORUS_SQUARE], [[[0, 0], [1, 0]], [[0, 2], [1, 2]], [[0, 1], [0, 3]], [[1, 1], [1, 3]]], VW)


def test_pentagon_genus_two():
    d = fixture_diagram("pentagon_genus2")
    s = surface_summary(d)
    assert s.connected and s.total_genus == 2
    alpha = fixture_class("pentagon_all_ones")
    assert represents(d, alpha)
    assert induced_class(d, alpha.ambient).support_graph == alpha.ambient.graph
    assert cap_bound(alpha) == 2


def test_two_tori_fixture():
    d = fixture_diagram("two_tori")
    s = surface_summary(d)
    assert len(s.components) == 2 and s.total_genus == 2


def test_represents_requires_same_graph(square):
    d = fixture_diagram("torus_one_square")
    with pytest.raises(AmbientMismatch):
        represents(d, new_class(square, []))


def _random_diagrams(seed, count, lo=1, hi=6):
    rng = random.Random(seed)
    for _ in range(count):
        g = random_graph(rng, rng.randint(2, 6), 0.6)
        yield rng, random_diagram(rng, g, rng.randint(lo, hi))


def test_walk_count_agrees_with_union_find():
    for _, d in _random_diagrams(41, 200, hi=10):
        sides = [[(s.gen, s.sign) for s in q.sides] for q in d.squares]
        got = sum(c.vertices for c in surface_summary(d).components)
        assert got == walk_vertex_count(sides, d.gluing)


def test_rotation_invariance():
    for rng, d in _random_diagrams(42, 150):
        shifts = [rng.randrange(4) for _ in d.squares]
        r = rotate_squares(d, shifts)
        # rotated diagram must still satisfy every rule
        r = validate_diagram([[(s.gen, s.sign) for s in q.sides] for q in r.squares], r.gluing, r.ambient)
        assert surface_summary(r) == surface_summary(d)
        assert induced_class(r) == induced_class(d)


def test_disjoint_union_is_additive():
    rng = random.Random(43)
    for _ in range(150):
        g = random_graph(rng, rng.randint(2, 6), 0.6)
        d1 = random_diagram(rng, g, rng.randint(2, 6))
        d2 = random_diagram(rng, g, rng.randint(2, 6))
        u = disjoint_union(d1, d2)
        assert genus_of(u) == genus_of(d1) + genus_of(d2)
        assert induced_class(u) == induced_class(d1) + induced_class(d2)


def test_genus_bounds_cap():
    for _, d in _random_diagrams(44, 300, hi=10):
        assert genus_of(d) >= cap_bound(induced_class(d))
        for c in surface_summary(d).components:
            assert c.euler <= 2 and c.euler % 2 == 0
