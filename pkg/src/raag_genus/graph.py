"""Finite simple graphs, orientations and the classification predicates the
genus pipeline dispatches on.

Vertices are strings; everything canonical (vertex order, part order,
tie-breaks) uses plain lexicographic string order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from . import kernels
from .errors import (
    DuplicateEdge,
    DuplicateVertex,
    InvalidOrientation,
    LoopEdge,
    MalformedInput,
    SizeLimitExceeded,
    UnknownEdge,
    UnknownEndpoint,
    UnknownVertex,
)

Edge = tuple[str, str]

DEFAULT_COVER_BUDGET = 64


def edge_key(v: str, w: str) -> Edge:
    return (v, w) if v < w else (w, v)


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: frozenset[Edge]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))

    @cached_property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> Mapping[str, frozenset[str]]:
        nbrs: dict[str, set[str]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            nbrs[a].add(b)
            nbrs[b].add(a)
        return {v: frozenset(s) for v, s in nbrs.items()}

    def has_edge(self, v: str, w: str) -> bool:
        return edge_key(v, w) in self.edges

    def degree(self, v: str) -> int:
        return len(self.adjacency[v])

    def __len__(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.sorted_edges]}


def validate_graph(vertices: Iterable[str], edges: Iterable[Sequence[str]]) -> Graph:
    """Build a :class:`Graph`, rejecting loops, repeats and dangling edges."""
    seen: set[str] = set()
    for v in vertices:
        if not isinstance(v, str) or not v or any(c.isspace() for c in v) or not v.isprintable():
            raise MalformedInput(f"invalid vertex name {v!r}", location="vertices")
        if v in seen:
            raise DuplicateVertex(f"vertex {v!r} listed twice", location="vertices")
        seen.add(v)
    keys: set[Edge] = set()
    for i, e in enumerate(edges):
        if len(e) != 2:
            raise MalformedInput(f"edge {list(e)!r} must have two endpoints", location=f"edges[{i}]")
        a, b = e
        if a == b:
            raise LoopEdge(f"loop at {a!r}", location=f"edges[{i}]")
        for x in (a, b):
            if x not in seen:
                raise UnknownEndpoint(f"edge endpoint {x!r} is not a vertex", location=f"edges[{i}]")
        k = edge_key(a, b)
        if k in keys:
            raise DuplicateEdge(f"edge {{{a}, {b}}} listed twice", location=f"edges[{i}]")
        keys.add(k)
    return Graph(tuple(seen), frozenset(keys))


@dataclass(frozen=True)
class OrientedGraph:
    graph: Graph
    # unordered edge key -> chosen ordered pair
    orientation: Mapping[Edge, Edge] = field(hash=False)

    def __hash__(self):
        return hash((self.graph, tuple(sorted(self.orientation.items()))))

    def __eq__(self, other):
        if not isinstance(other, OrientedGraph):
            return NotImplemented
        return self.graph == other.graph and dict(self.orientation) == dict(other.orientation)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.graph.vertices

    @cached_property
    def oriented_edges(self) -> tuple[Edge, ...]:
        """Oriented edges, in order of their unordered keys."""
        return tuple(self.orientation[k] for k in self.graph.sorted_edges)

    def sign(self, v: str, w: str) -> int:
        """+1 if (v, w) is the chosen orientation, -1 if (w, v) is."""
        k = edge_key(v, w)
        if k not in self.orientation:
            raise UnknownEdge(f"{{{v}, {w}}} is not an edge")
        return 1 if self.orientation[k] == (v, w) else -1

    def to_json(self) -> dict:
        return {"oriented_edges": [list(e) for e in self.oriented_edges]}


def orient(g: Graph, oriented_edges: Iterable[Sequence[str]] | None = None) -> OrientedGraph:
    """Attach an orientation; the default points every edge from the smaller
    vertex to the larger one."""
    if oriented_edges is None:
        return OrientedGraph(g, {k: k for k in g.edges})
    orientation: dict[Edge, Edge] = {}
    for i, e in enumerate(oriented_edges):
        if len(e) != 2:
            raise MalformedInput("oriented edge must have two endpoints", location=f"oriented_edges[{i}]")
        v, w = e
        k = edge_key(v, w)
        if k not in g.edges:
            raise UnknownEdge(f"({v}, {w}) is not an edge", location=f"oriented_edges[{i}]")
        if k in orientation:
            raise InvalidOrientation(f"edge {{{v}, {w}}} oriented twice", location=f"oriented_edges[{i}]")
        orientation[k] = (v, w)
    if len(orientation) != len(g.edges):
        missing = sorted(g.edges - orientation.keys())
        raise InvalidOrientation(f"edges without orientation: {missing}", location="oriented_edges")
    return OrientedGraph(g, orientation)


def full_subgraph(g: Graph, vertices: Iterable[str]) -> Graph:
    s = frozenset(vertices)
    unknown = s - g.vertex_set
    if unknown:
        raise UnknownVertex(f"not vertices of the graph: {sorted(unknown)}")
    return Graph(tuple(s), frozenset(e for e in g.edges if e[0] in s and e[1] in s))


def edge_subgraph(edges: Iterable[Edge]) -> Graph:
    """Graph spanned by a set of edges (vertices are exactly the endpoints)."""
    keys = frozenset(edge_key(a, b) for a, b in edges)
    return Graph(tuple({v for e in keys for v in e}), keys)


def connected_components(g: Graph) -> list[Graph]:
    """Components ordered by their smallest vertex."""
    adj = g.adjacency
    seen: set[str] = set()
    comps = []
    for root in g.vertices:
        if root in seen:
            continue
        stack = [root]
        seen.add(root)
        members = []
        while stack:
            v = stack.pop()
            members.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(full_subgraph(g, members))
    return comps


def is_complete(g: Graph) -> bool:
    n = len(g.vertices)
    return len(g.edges) == n * (n - 1) // 2


def is_forest(g: Graph) -> bool:
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in g.edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def two_coloring(g: Graph) -> dict[str, int] | None:
    """Proper 2-colouring, each component's smallest vertex coloured 0."""
    color: dict[str, int] = {}
    adj = g.adjacency
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in color:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def complete_bipartite_parts(g: Graph) -> tuple[tuple[str, ...], tuple[str, ...]] | None:
    """Bipartition (A, B) with all A-B pairs adjacent and no edges inside A or B.

    A is the part holding the smallest vertex. A graph with at most one
    vertex is returned with an empty second part.
    """
    if len(g.vertices) <= 1:
        return (g.vertices, ())
    color = two_coloring(g)
    if color is None:
        return None
    a = tuple(v for v in g.vertices if color[v] == 0)
    b = tuple(v for v in g.vertices if color[v] == 1)
    if len(g.edges) != len(a) * len(b):
        return None
    return a, b


def complete_multipartite_parts(g: Graph) -> tuple[tuple[str, ...], ...] | None:
    """Partition into non-adjacency classes, or None if non-adjacency is not
    transitive. Parts are sorted internally and ordered by smallest vertex."""
    adj = g.adjacency
    part_of: dict[str, frozenset[str]] = {}
    parts = []
    for v in g.vertices:
        if v in part_of:
            continue
        part = frozenset(g.vertex_set - adj[v])
        for w in part:
            if w in part_of or g.vertex_set - adj[w] != part:
                return None
            part_of[w] = part
        parts.append(tuple(sorted(part)))
    return tuple(parts)


def is_star(g: Graph) -> str | None:
    """Center of a K_{1,n} (n >= 1); the smaller endpoint for a single edge."""
    n = len(g.vertices)
    if n < 2 or len(g.edges) != n - 1:
        return None
    for v in g.vertices:
        if g.degree(v) == n - 1:
            return v
    return None


@dataclass(frozen=True)
class VertexCover:
    centers: tuple[str, ...]
    assignment: Mapping[Edge, str] = field(hash=False, compare=True)

    def __len__(self) -> int:
        return len(self.centers)


def _component_cover(comp: Graph) -> list[str]:
    index = {v: i for i, v in enumerate(comp.vertices)}
    adj = [0] * len(comp.vertices)
    for a, b in comp.edges:
        adj[index[a]] |= 1 << index[b]
        adj[index[b]] |= 1 << index[a]
    mask = kernels.vertex_cover_mask(len(adj), adj)
    return [v for v, i in index.items() if (mask >> i) & 1]


def min_vertex_cover(g: Graph, budget: int = DEFAULT_COVER_BUDGET) -> VertexCover:
    """Exact minimum vertex cover.

    Each connected component is solved separately by branch and bound.
    Edges are assigned to their lexicographically smallest covering endpoint.

    Raises:
        SizeLimitExceeded: if the graph has more than ``budget`` vertices.
    """
    if len(g.vertices) > budget:
        raise SizeLimitExceeded(
            f"exact vertex cover limited to {budget} vertices, graph has {len(g.vertices)}"
        )
    centers: set[str] = set()
    for comp in connected_components(g):
        if comp.edges:
            centers.update(_component_cover(comp))
    assignment = {}
    for a, b in g.sorted_edges:
        assignment[(a, b)] = a if a in centers else b
    return VertexCover(tuple(sorted(centers)), assignment)


def forest_vertex_cover_size(g: Graph) -> int:
    """Minimum vertex cover size of a forest by dynamic programming."""
    if not is_forest(g):
        raise ValueError("graph is not a forest")
    adj = g.adjacency
    total = 0
    seen: set[str] = set()
    for root in g.vertices:
        if root in seen:
            continue
        order = []
        parent = {root: None}
        stack = [root]
        seen.add(root)
        while stack:
            v = stack.pop()
            order.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    parent[w] = v
                    stack.append(w)
        take: dict[str, int] = {}
        skip: dict[str, int] = {}
        for v in reversed(order):
            kids = [w for w in adj[v] if parent.get(w) == v]
            take[v] = 1 + sum(min(take[c], skip[c]) for c in kids)
            skip[v] = sum(take[c] for c in kids)
        total += min(take[root], skip[root])
    return total
