"""Star coverings of labelled supports.

A minimum star covering with pairwise edge-disjoint stars is the same thing
as a minimum vertex cover of the support with every edge assigned to one
covering endpoint: each star is centred at a cover vertex and carries the
target labels of the edges assigned to it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import ZeroClass
from .graph import DEFAULT_COVER_BUDGET, Edge, edge_key, min_vertex_cover
from .homology import HomologyClass


@dataclass(frozen=True)
class Star:
    center: str
    # leaf -> (ambient oriented edge, label on that oriented edge)
    spokes: Mapping[str, tuple[Edge, int]] = field(hash=False)

    @property
    def edges(self) -> list[Edge]:
        return [edge_key(self.center, leaf) for leaf in sorted(self.spokes)]

    def signed_label(self, leaf: str) -> int:
        """l(center, leaf)."""
        e, x = self.spokes[leaf]
        return x if e == (self.center, leaf) else -x

    def to_json(self) -> dict:
        return {
            "center": self.center,
            "spokes": [{"leaf": leaf, "label": self.signed_label(leaf)} for leaf in sorted(self.spokes)],
        }


@dataclass(frozen=True)
class StarCover:
    stars: tuple[Star, ...]
    target: HomologyClass

    def __len__(self) -> int:
        return len(self.stars)

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.stars]


def star_from_signed(center: str, spokes: Mapping[str, int], ambient) -> Star:
    """Build a star from labels ``l(center, leaf)``, re-keyed to the ambient
    orientation. Unknown edges surface as ``UnknownEdge``."""
    out = {}
    for leaf, x in spokes.items():
        s = ambient.sign(center, leaf)
        e = (center, leaf) if s == 1 else (leaf, center)
        out[leaf] = (e, s * x)
    return Star(center, out)


def star_class(star: Star, ambient) -> HomologyClass:
    return HomologyClass(ambient, {e: x for e, x in star.spokes.values()})


def min_star_cover(alpha: HomologyClass, budget: int = DEFAULT_COVER_BUDGET) -> StarCover:
    if alpha.is_zero():
        raise ZeroClass("the zero class has the empty star covering")
    cover = min_vertex_cover(alpha.support_graph, budget=budget)
    by_center: dict[str, dict[str, tuple[Edge, int]]] = {c: {} for c in cover.centers}
    for key, center in cover.assignment.items():
        leaf = key[1] if key[0] == center else key[0]
        e = alpha.ambient.orientation[key]
        by_center[center][leaf] = (e, alpha.labels[e])
    stars = tuple(Star(c, spokes) for c, spokes in sorted(by_center.items()) if spokes)
    return StarCover(stars, alpha)


def sc_cardinality(alpha: HomologyClass, budget: int = DEFAULT_COVER_BUDGET) -> int:
    if alpha.is_zero():
        return 0
    return len(min_star_cover(alpha, budget=budget))


def star_cover_problems(c: StarCover) -> list[str]:
    """Everything wrong with a claimed star covering (empty when valid)."""
    problems = []
    ambient = c.target.ambient
    seen: dict[Edge, int] = {}
    totals: dict[Edge, int] = {}
    for i, s in enumerate(c.stars):
        if not s.spokes:
            problems.append(f"star {i} has no spokes")
        for leaf, (e, x) in s.spokes.items():
            key = edge_key(s.center, leaf)
            if leaf == s.center or edge_key(*e) != key:
                problems.append(f"star {i}: spoke to {leaf} does not join it to the center {s.center}")
                continue
            if ambient.orientation.get(key) != e:
                problems.append(f"star {i}: {e} is not an ambient oriented edge")
                continue
            if x == 0:
                problems.append(f"star {i}: zero label on {e}")
            if key in seen:
                problems.append(f"stars {seen[key]} and {i} share the edge {e}")
            seen[key] = i
            totals[e] = totals.get(e, 0) + x
    for e in set(totals) | set(c.target.labels):
        if totals.get(e, 0) != c.target.labels.get(e, 0):
            problems.append(f"labels on {e} sum to {totals.get(e, 0)}, target is {c.target.labels.get(e, 0)}")
    return sorted(problems)


def verify_star_cover(c: StarCover) -> bool:
    return not star_cover_problems(c)
