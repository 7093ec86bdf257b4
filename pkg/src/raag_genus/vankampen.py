"""Square-tiled surfaces mapping to the Salvetti complex.

A diagram is a list of squares whose sides carry a generator and an arrow,
plus a pairing of all sides. Sides are indexed 0..3 counterclockwise; side
``i`` runs from corner ``i`` to corner ``i+1``. ``sign = +1`` means the arrow
agrees with that counterclockwise direction. Glued sides must have opposite
signs, so every gluing reverses the boundary orientation and the quotient is
an oriented closed surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .errors import (
    AmbientMismatch,
    GeneratorMismatchAtGluing,
    IncompleteMatching,
    MalformedInput,
    NonCommutingLabels,
    OddEulerCharacteristic,
    OppositeSideMismatch,
    OrientationIncompatibleGluing,
    UnknownGenerator,
)
from .graph import Graph, OrientedGraph, orient
from .homology import HomologyClass
from .jsonio import graph_from_json, labels_to_json

Slot = tuple[int, int]


@dataclass(frozen=True)
class SquareSide:
    gen: str
    sign: int


@dataclass(frozen=True)
class Square:
    sides: tuple[SquareSide, SquareSide, SquareSide, SquareSide]

    @property
    def generators(self) -> tuple[str, str]:
        return self.sides[0].gen, self.sides[1].gen

    def boundary_word(self, start: int = 0) -> list[tuple[str, int]]:
        """Counterclockwise boundary reading from corner ``start``."""
        return [(self.sides[(start + k) % 4].gen, self.sides[(start + k) % 4].sign) for k in range(4)]


@dataclass(frozen=True)
class VanKampenDiagram:
    ambient: Graph
    squares: tuple[Square, ...]
    gluing: tuple[tuple[Slot, Slot], ...]

    def to_json(self) -> dict:
        return {
            "graph": self.ambient.to_json(),
            "squares": [{"sides": [{"gen": s.gen, "sign": s.sign} for s in q.sides]} for q in self.squares],
            "gluing": [[list(a), list(b)] for a, b in self.gluing],
        }


@dataclass(frozen=True)
class ComponentSummary:
    squares: tuple[int, ...]
    vertices: int
    edges: int
    faces: int
    euler: int
    genus: int


@dataclass(frozen=True)
class SurfaceSummary:
    components: tuple[ComponentSummary, ...]

    @property
    def total_genus(self) -> int:
        return sum(c.genus for c in self.components)

    @property
    def connected(self) -> bool:
        return len(self.components) == 1

    def to_json(self) -> dict:
        return {
            "components": len(self.components),
            "connected": self.connected,
            "per_component": [
                {
                    "squares": list(c.squares),
                    "vertices": c.vertices,
                    "edges": c.edges,
                    "faces": c.faces,
                    "euler": c.euler,
                    "genus": c.genus,
                }
                for c in self.components
            ],
            "total_genus": self.total_genus,
        }


def validate_diagram(
    squares: Sequence[Sequence[tuple[str, int]]],
    gluing: Iterable[Sequence[Sequence[int]]],
    ambient: Graph,
) -> VanKampenDiagram:
    """Check the square and gluing rules against ``ambient``.

    ``squares`` lists four ``(generator, sign)`` pairs per square and
    ``gluing`` lists pairs of ``(square, side)`` slots.
    """
    built = []
    for k, raw in enumerate(squares):
        if len(raw) != 4:
            raise MalformedInput("a square has exactly four sides", location=f"squares[{k}]")
        sides = []
        for i, (gen, sign) in enumerate(raw):
            if gen not in ambient.vertex_set:
                raise UnknownGenerator(f"{gen!r} is not a vertex of the graph", location=f"squares[{k}].sides[{i}]")
            if sign not in (1, -1) or isinstance(sign, bool):
                raise MalformedInput("side sign must be 1 or -1", location=f"squares[{k}].sides[{i}]")
            sides.append(SquareSide(gen, sign))
        for i in (0, 1):
            a, b = sides[i], sides[i + 2]
            if a.gen != b.gen or a.sign != -b.sign:
                raise OppositeSideMismatch(
                    f"sides {i} and {i + 2} must carry the same generator with parallel arrows",
                    location=f"squares[{k}]",
                )
        g0, g1 = sides[0].gen, sides[1].gen
        if g0 != g1 and not ambient.has_edge(g0, g1):
            raise NonCommutingLabels(f"{g0} and {g1} do not commute", location=f"squares[{k}]")
        built.append(Square(tuple(sides)))

    n = len(built)
    partner: dict[Slot, Slot] = {}
    pairs = []
    for k, pair in enumerate(gluing):
        try:
            (s, i), (t, j) = pair
            a, b = (int(s), int(i)), (int(t), int(j))
        except (TypeError, ValueError):
            raise MalformedInput("gluing entries are [[square, side], [square, side]]", location=f"gluing[{k}]") from None
        for x in (a, b):
            if not (0 <= x[0] < n and 0 <= x[1] < 4):
                raise MalformedInput(f"no side slot {list(x)}", location=f"gluing[{k}]")
        if a == b:
            raise IncompleteMatching(f"slot {list(a)} glued to itself", location=f"gluing[{k}]")
        for x in (a, b):
            if x in partner:
                raise IncompleteMatching(f"slot {list(x)} glued twice", location=f"gluing[{k}]")
        sa, sb = built[a[0]].sides[a[1]], built[b[0]].sides[b[1]]
        if sa.gen != sb.gen:
            raise GeneratorMismatchAtGluing(f"glued sides carry {sa.gen} and {sb.gen}", location=f"gluing[{k}]")
        if sa.sign != -sb.sign:
            raise OrientationIncompatibleGluing("glued sides must have opposite signs", location=f"gluing[{k}]")
        partner[a], partner[b] = b, a
        pairs.append((a, b))
    if len(partner) != 4 * n:
        missing = [[s, i] for s in range(n) for i in range(4) if (s, i) not in partner]
        raise IncompleteMatching(f"unglued sides: {missing}", location="gluing")
    return VanKampenDiagram(ambient, tuple(built), tuple(pairs))


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def surface_summary(d: VanKampenDiagram) -> SurfaceSummary:
    n = len(d.squares)
    corners = _DSU(4 * n)
    faces = _DSU(n)
    for (s, i), (t, j) in d.gluing:
        # orientation-reversing: start of one side meets the end of the other
        corners.union(4 * s + i, 4 * t + (j + 1) % 4)
        corners.union(4 * s + (i + 1) % 4, 4 * t + j)
        faces.union(s, t)
    by_comp: dict[int, list[int]] = {}
    for s in range(n):
        by_comp.setdefault(faces.find(s), []).append(s)
    comps = []
    for members in sorted(by_comp.values()):
        f = len(members)
        v = len({corners.find(4 * s + c) for s in members for c in range(4)})
        e = 2 * f
        chi = v - e + f
        if chi % 2:
            raise OddEulerCharacteristic(f"component {members} has Euler characteristic {chi}")
        comps.append(ComponentSummary(tuple(members), v, e, f, chi, (2 - chi) // 2))
    return SurfaceSummary(tuple(comps))


def genus_of(d: VanKampenDiagram) -> int:
    return surface_summary(d).total_genus


def induced_class(d: VanKampenDiagram, orientation: OrientedGraph | None = None) -> HomologyClass:
    """Image of the fundamental class.

    A square reading v^s w^t v^-s w^-t counterclockwise from corner 0 adds
    ``s * t`` to l(v, w); squares with one generator add nothing.
    """
    og = orient(d.ambient) if orientation is None else orientation
    if og.graph != d.ambient:
        raise AmbientMismatch("orientation is for a different graph")
    labels: dict[tuple[str, str], int] = {}
    for q in d.squares:
        (v, s), (w, t) = q.boundary_word()[:2]
        if v == w:
            continue
        sign = og.sign(v, w)
        e = (v, w) if sign == 1 else (w, v)
        labels[e] = labels.get(e, 0) + sign * s * t
    return HomologyClass(og, labels)


def represents(d: VanKampenDiagram, alpha: HomologyClass) -> bool:
    if alpha.ambient.graph != d.ambient:
        raise AmbientMismatch("diagram and class live on different graphs")
    return induced_class(d, alpha.ambient) == alpha


def disjoint_union(d1: VanKampenDiagram, d2: VanKampenDiagram) -> VanKampenDiagram:
    if d1.ambient != d2.ambient:
        raise AmbientMismatch("diagrams live on different graphs")
    off = len(d1.squares)
    shifted = tuple(((s + off, i), (t + off, j)) for (s, i), (t, j) in d2.gluing)
    return VanKampenDiagram(d1.ambient, d1.squares + d2.squares, d1.gluing + shifted)


def rotate_squares(d: VanKampenDiagram, shifts: Sequence[int]) -> VanKampenDiagram:
    """Same surface with square ``k``'s sides re-indexed to start at old side
    ``shifts[k]``."""
    squares = tuple(
        Square(tuple(q.sides[(i + r) % 4] for i in range(4))) for q, r in zip(d.squares, shifts)
    )

    def slot(s, i):
        return (s, (i - shifts[s]) % 4)

    gluing = tuple((slot(*a), slot(*b)) for a, b in d.gluing)
    return VanKampenDiagram(d.ambient, squares, gluing)


def diagram_from_json(data: Any) -> VanKampenDiagram:
    if not isinstance(data, dict) or not {"graph", "squares", "gluing"} <= data.keys():
        raise MalformedInput('diagram must be {"graph": ..., "squares": [...], "gluing": [...]}')
    g = graph_from_json(data["graph"])
    squares = []
    for k, q in enumerate(data["squares"]):
        try:
            squares.append([(s["gen"], s["sign"]) for s in q["sides"]])
        except (KeyError, TypeError):
            raise MalformedInput('square must be {"sides": [{"gen": v, "sign": 1}, ...]}', location=f"squares[{k}]") from None
    if not isinstance(data["gluing"], list):
        raise MalformedInput("gluing must be a list of slot pairs", location="gluing")
    return validate_diagram(squares, data["gluing"], g)


def diagram_report(d: VanKampenDiagram, alpha: HomologyClass | None = None) -> dict:
    summary = surface_summary(d)
    cls = induced_class(d, None if alpha is None else alpha.ambient)
    out = summary.to_json()
    out["induced_class"] = labels_to_json(cls)
    if alpha is not None:
        out["represents"] = represents(d, alpha)
    return out
