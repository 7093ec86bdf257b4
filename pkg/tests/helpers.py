"""Random instance generators shared by the test modules."""

from __future__ import annotations

import json
import random
from importlib import resources

from raag_genus.graph import Graph, orient, validate_graph
from raag_genus.homology import HomologyClass, new_class
from raag_genus.jsonio import class_from_json
from raag_genus.vankampen import diagram_from_json, validate_diagram


def names(n: int, prefix: str = "v") -> list[str]:
    return [f"{prefix}{i:02d}" for i in range(n)]


def load_fixture(name: str):
    ref = resources.files("raag_genus") / "fixtures" / f"{name}.json"
    return json.loads(ref.read_text())


def fixture_class(name: str) -> HomologyClass:
    return class_from_json(load_fixture(name))


def fixture_diagram(name: str):
    return diagram_from_json(load_fixture(name))


def complete_graph(n: int) -> Graph:
    vs = names(n)
    return validate_graph(vs, [[a, b] for i, a in enumerate(vs) for b in vs[i + 1:]])


def complete_bipartite(n: int, m: int) -> Graph:
    a, b = names(n, "a"), names(m, "b")
    return validate_graph(a + b, [[x, y] for x in a for y in b])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    vs = names(n)
    return validate_graph(vs, [[a, b] for i, a in enumerate(vs) for b in vs[i + 1:] if rng.random() < p])


def random_forest(rng: random.Random, n: int) -> Graph:
    vs = names(n)
    edges = []
    for i in range(1, n):
        if rng.random() < 0.85:
            edges.append([vs[rng.randrange(i)], vs[i]])
    # shuffle names so the tree shape is not tied to lexicographic order
    perm = vs[:]
    rng.shuffle(perm)
    ren = dict(zip(vs, perm))
    return validate_graph(vs, [[ren[a], ren[b]] for a, b in edges])


def random_orientation(rng: random.Random, g: Graph):
    return orient(g, [list(e) if rng.random() < 0.5 else [e[1], e[0]] for e in g.sorted_edges])


def random_class(rng: random.Random, g: Graph, lo: int = -9, hi: int = 9, density: float = 1.0, nonzero=False):
    og = random_orientation(rng, g)
    raw = []
    for v, w in og.oriented_edges:
        if rng.random() < density:
            x = rng.randint(lo, hi)
            while nonzero and x == 0:
                x = rng.randint(lo, hi)
            raw.append((v, w, x))
    return new_class(og, raw)


def random_diagram(rng: random.Random, g: Graph, nsquares: int):
    """Random valid diagram on ``g``: random commuting squares, then a random
    sign-compatible pairing of equal-generator sides."""
    verts = list(g.vertices)
    edges = list(g.sorted_edges)
    squares = []
    for _ in range(nsquares):
        if edges and rng.random() < 0.8:
            v, w = rng.choice(edges)
            if rng.random() < 0.5:
                v, w = w, v
        else:
            v = w = rng.choice(verts)
        s, t = rng.choice((1, -1)), rng.choice((1, -1))
        squares.append([(v, s), (w, t), (v, -s), (w, -t)])
    plus, minus = {}, {}
    for k, q in enumerate(squares):
        for i, (gen, sign) in enumerate(q):
            (plus if sign == 1 else minus).setdefault(gen, []).append((k, i))
    gluing = []
    for gen, ps in plus.items():
        ms = minus[gen][:]
        rng.shuffle(ms)
        gluing += [[list(a), list(b)] for a, b in zip(ps, ms)]
    return validate_diagram(squares, gluing, g)


def class_from_pairs(og, pairs: dict) -> HomologyClass:
    """Class with l(v, w) = x for each ``(v, w): x`` in ``pairs``."""
    return new_class(og, [(v, w, x) for (v, w), x in pairs.items() if x])


def random_primitive(rng: random.Random, n: int, bound: int = 4) -> tuple[int, ...]:
    from math import gcd

    while True:
        v = [rng.randint(-bound, bound) for _ in range(n)]
        g = 0
        for x in v:
            g = gcd(g, x)
        if g:
            return tuple(x // g for x in v)


def random_torus_instance(rng: random.Random, max_parts: int = 4, max_part: int = 3, extra: int = 2):
    """Ambient graph containing a complete multipartite subgraph, plus a
    random torus certificate on it. Returns (oriented graph, certificate)."""
    from raag_genus.certificates import TorusCertificate

    k = rng.randint(2, max_parts)
    sizes = [rng.randint(1, max_part) for _ in range(k)]
    parts, idx = [], 0
    for s in sizes:
        parts.append(tuple(f"v{idx + i:02d}" for i in range(s)))
        idx += s
    spare = [f"v{idx + i:02d}" for i in range(rng.randint(0, extra))]
    verts = [v for p in parts for v in p] + spare
    edges = {(x, y) for i, p in enumerate(parts) for q in parts[i + 1:] for x in p for y in q}
    for i, a in enumerate(verts):
        for b in verts[i + 1:]:
            if (a, b) not in edges and rng.random() < 0.2:
                same = any(a in p and b in p for p in parts)
                if not same:
                    edges.add((a, b))
    g = validate_graph(verts, [list(e) for e in edges])
    og = random_orientation(rng, g)
    nus = [random_primitive(rng, len(p)) for p in parts]
    c = tuple(rng.randint(-3, 3) for _ in parts)
    d = tuple(rng.randint(-3, 3) for _ in parts)
    return og, TorusCertificate(tuple(zip(parts, nus)), c, d)
