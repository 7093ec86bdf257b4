"""Second homology classes of a RAAG as integer labels on oriented edges.

H_2 of the Salvetti complex is free abelian on the edges of the graph, so a
class is a labelling ``l`` of the oriented edges with ``l(v, w) = -l(w, v)``.
Labels are stored against the ambient orientation only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import AmbientMismatch, DuplicateLabel, NotAComponent, UnknownEdge
from .graph import (
    Edge,
    Graph,
    OrientedGraph,
    connected_components,
    edge_key,
    edge_subgraph,
)
from .linalg import SkewIntMatrix, rank


@dataclass(frozen=True)
class HomologyClass:
    ambient: OrientedGraph
    # ambient oriented edge -> nonzero label
    labels: Mapping[Edge, int] = field(hash=False)

    def __post_init__(self):
        clean = {}
        for e, x in self.labels.items():
            if self.ambient.orientation.get(edge_key(*e)) != e:
                raise UnknownEdge(f"{e} is not an ambient oriented edge")
            if x:
                clean[e] = int(x)
        object.__setattr__(self, "labels", clean)

    def __eq__(self, other):
        if not isinstance(other, HomologyClass):
            return NotImplemented
        return self.ambient == other.ambient and self.labels == other.labels

    def __hash__(self):
        return hash((self.ambient, tuple(sorted(self.labels.items()))))

    def label(self, v: str, w: str) -> int:
        """l(v, w), negated when (w, v) is the ambient orientation."""
        s = self.ambient.sign(v, w)
        e = (v, w) if s == 1 else (w, v)
        return s * self.labels.get(e, 0)

    def is_zero(self) -> bool:
        return not self.labels

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        return add(self, other)

    def __neg__(self) -> "HomologyClass":
        return scale(self, -1)

    def __sub__(self, other: "HomologyClass") -> "HomologyClass":
        return add(self, scale(other, -1))

    def __rmul__(self, c: int) -> "HomologyClass":
        return scale(self, c)

    @cached_property
    def support_graph(self) -> Graph:
        return edge_subgraph(self.labels)


def new_class(g: OrientedGraph, raw: Iterable[tuple[str, str, int]]) -> HomologyClass:
    """Class from ``(from, to, label)`` triples, re-keyed to the ambient
    orientation. Edges not mentioned get label 0."""
    labels: dict[Edge, int] = {}
    for i, (v, w, x) in enumerate(raw):
        k = edge_key(v, w)
        if k not in g.orientation:
            raise UnknownEdge(f"({v}, {w}) is not an edge", location=f"labels[{i}]")
        e = g.orientation[k]
        if e in labels:
            raise DuplicateLabel(f"edge {{{v}, {w}}} labelled twice", location=f"labels[{i}]")
        labels[e] = int(x) if e == (v, w) else -int(x)
    return HomologyClass(g, labels)


def zero_class(g: OrientedGraph) -> HomologyClass:
    return HomologyClass(g, {})


def reorient(alpha: HomologyClass, g: OrientedGraph) -> HomologyClass:
    """The same class written against another orientation of the same graph."""
    if g.graph != alpha.ambient.graph:
        raise AmbientMismatch("reorientation must keep the underlying graph")
    return new_class(g, ((v, w, x) for (v, w), x in alpha.labels.items()))


@dataclass(frozen=True)
class Support:
    subgraph: OrientedGraph
    labels: Mapping[Edge, int] = field(hash=False)

    @property
    def graph(self) -> Graph:
        return self.subgraph.graph


def support(alpha: HomologyClass) -> Support:
    g = alpha.support_graph
    return Support(OrientedGraph(g, {edge_key(*e): e for e in alpha.labels}), dict(alpha.labels))


@dataclass(frozen=True)
class ConnectionMatrix:
    index: tuple[str, ...]
    matrix: SkewIntMatrix

    def entry(self, v: str, w: str) -> int:
        pos = {x: i for i, x in enumerate(self.index)}
        return self.matrix[pos[v], pos[w]]


def connection_matrix(alpha: HomologyClass, index: Iterable[str] | None = None) -> ConnectionMatrix:
    """Skew matrix with (v, w) entry l(v, w), rows over all ambient vertices
    unless a sub-index is requested."""
    idx = tuple(alpha.ambient.vertices if index is None else index)
    pos = {v: i for i, v in enumerate(idx)}
    n = len(idx)
    a = [[0] * n for _ in range(n)]
    for (v, w), x in alpha.labels.items():
        if v in pos and w in pos:
            a[pos[v]][pos[w]] = x
            a[pos[w]][pos[v]] = -x
    return ConnectionMatrix(idx, SkewIntMatrix(n, n, tuple(tuple(r) for r in a)))


def matrix_rank(alpha: HomologyClass) -> int:
    # zero rows/columns of vertices off the support do not affect the rank
    return rank(connection_matrix(alpha, alpha.support_graph.vertices).matrix)


def cap_bound(alpha: HomologyClass) -> int:
    """Half the rank of the connection matrix; a lower bound for the genus."""
    return matrix_rank(alpha) // 2


def _check_same_ambient(a: HomologyClass, b: HomologyClass) -> None:
    if a.ambient != b.ambient:
        raise AmbientMismatch("classes live on different oriented graphs")


def add(a: HomologyClass, b: HomologyClass) -> HomologyClass:
    _check_same_ambient(a, b)
    labels = dict(a.labels)
    for e, x in b.labels.items():
        labels[e] = labels.get(e, 0) + x
    return HomologyClass(a.ambient, labels)


def scale(a: HomologyClass, c: int) -> HomologyClass:
    return HomologyClass(a.ambient, {e: c * x for e, x in a.labels.items()})


def restrict_to_edges(alpha: HomologyClass, edges: Iterable[Edge]) -> HomologyClass:
    keys = {edge_key(*e) for e in edges}
    return HomologyClass(alpha.ambient, {e: x for e, x in alpha.labels.items() if edge_key(*e) in keys})


def restrict_to_component(alpha: HomologyClass, component: Graph) -> HomologyClass:
    if component not in connected_components(alpha.support_graph):
        raise NotAComponent("argument is not a connected component of the support")
    return restrict_to_edges(alpha, component.edges)


def component_classes(alpha: HomologyClass) -> list[HomologyClass]:
    """One class per connected component of the support, ordered by the
    component's smallest vertex; they sum to ``alpha``."""
    return [restrict_to_edges(alpha, c.edges) for c in connected_components(alpha.support_graph)]
