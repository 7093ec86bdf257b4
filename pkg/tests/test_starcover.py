import random

import pytest

from raag_genus.errors import ZeroClass
from raag_genus.graph import forest_vertex_cover_size, min_vertex_cover
from raag_genus.homology import add, cap_bound, component_classes, zero_class
from raag_genus.starcover import (
    Star,
    StarCover,
    min_star_cover,
    sc_cardinality,
    star_class,
    star_cover_problems,
    star_from_signed,
    verify_star_cover,
)

from .helpers import fixture_class, random_class, random_forest, random_graph
from .oracles import brute_star_cover


def test_examples(beta, pentagon_ones):
    assert sc_cardinality(beta) == 2
    assert sc_cardinality(pentagon_ones) == 3
    assert sc_cardinality(fixture_class("path_tree")) == 2
    assert sc_cardinality(fixture_class("star_tree")) == 1
    assert sc_cardinality(zero_class(beta.ambient)) == 0


def test_star_json_uses_center_labels():
    cover = min_star_cover(fixture_class("star_tree"))
    assert cover.to_json() == [
        {"center": "c", "spokes": [{"leaf": "l1", "label": 5}, {"leaf": "l2", "label": -2}, {"leaf": "l3", "label": 7}]}
    ]


def test_zero_class_has_no_cover(square):
    with pytest.raises(ZeroClass):
        min_star_cover(zero_class(square))


def test_cover_sums_to_class(beta):
    cover = min_star_cover(beta)
    assert verify_star_cover(cover)
    total = zero_class(beta.ambient)
    for s in cover.stars:
        total = add(total, star_class(s, beta.ambient))
    assert total == beta


def test_matches_brute_force_on_small_classes():
    rng = random.Random(21)
    checked = 0
    while checked < 40:
        g = random_graph(rng, rng.randint(3, 7), 0.45)
        a = random_class(rng, g, -2, 2)
        if a.is_zero() or len(a.labels) > 7:
            continue
        target = {e: x for e, x in a.labels.items()}
        assert sc_cardinality(a) == brute_star_cover(target, max_label=2)
        checked += 1


def test_equals_vertex_cover_number():
    rng = random.Random(22)
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 12), 0.35)
        a = random_class(rng, g, density=0.7)
        if a.is_zero():
            continue
        cover = min_star_cover(a)
        assert verify_star_cover(cover)
        assert len(cover) == len(min_vertex_cover(a.support_graph))
        assert len(cover) >= cap_bound(a)


def test_trees_reach_cap_bound():
    rng = random.Random(23)
    for _ in range(100):
        g = random_forest(rng, rng.randint(2, 12))
        a = random_class(rng, g, density=0.8, nonzero=True)
        if a.is_zero():
            continue
        assert sc_cardinality(a) == cap_bound(a) == forest_vertex_cover_size(a.support_graph)


def test_additive_over_components():
    rng = random.Random(24)
    for _ in range(60):
        g = random_graph(rng, rng.randint(2, 12), 0.25)
        a = random_class(rng, g, density=0.8)
        assert sc_cardinality(a) == sum(sc_cardinality(c) for c in component_classes(a))


def test_verify_reports_problems(beta):
    amb = beta.ambient
    good = min_star_cover(beta)
    assert star_cover_problems(good) == []

    wrong = StarCover((star_from_signed("v1", {"w1": 2, "w2": 4}, amb),), beta)
    assert any("sum to 0" in p for p in star_cover_problems(wrong))

    zero_spoke = StarCover(good.stars + (star_from_signed("v1", {"w1": 0}, amb),), beta)
    probs = star_cover_problems(zero_spoke)
    assert any("zero label" in p for p in probs) and any("share" in p for p in probs)

    empty = StarCover(good.stars + (Star("v1", {}),), beta)
    assert any("no spokes" in p for p in star_cover_problems(empty))

    bogus = StarCover((Star("v1", {"w1": (("w1", "v1"), 2)}),), beta)
    assert not verify_star_cover(bogus)
