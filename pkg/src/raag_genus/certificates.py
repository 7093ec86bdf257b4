"""Genus certificates and their verification.

A certificate is a recipe for a disjoint union of tori mapping onto a class.
Each kind knows the skew form (the connection matrix) its tori add up to and
the adjacency conditions that make the tori exist in the RAAG; verification
recomputes both with exact integers and never trusts the producer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import MalformedInput
from .graph import Graph, OrientedGraph
from .homology import HomologyClass, add, zero_class
from .starcover import StarCover, star_class, star_cover_problems, star_from_signed
from .jsonio import jint, read_int

Pairs = dict[tuple[str, str], int]


def _put(acc: Pairs, v: str, w: str, x: int) -> None:
    if v == w or x == 0:
        return
    if v > w:
        v, w, x = w, v, -x
    acc[(v, w)] = acc.get((v, w), 0) + x


def class_pairs(alpha: HomologyClass) -> Pairs:
    """Upper triangle of the connection matrix as a sparse dict."""
    acc: Pairs = {}
    for (v, w), x in alpha.labels.items():
        _put(acc, v, w, x)
    return acc


def _clean(acc: Pairs) -> Pairs:
    return {k: x for k, x in acc.items() if x}


def _vec(data, n: int, where: str) -> tuple[int, ...]:
    if not isinstance(data, list) or len(data) != n:
        raise MalformedInput(f"expected a vector of length {n}", location=where)
    return tuple(read_int(x, where) for x in data)


@dataclass(frozen=True)
class WedgeDecomposition:
    """``sum lam * (a b^T - b a^T)`` over vectors indexed by ``index``."""

    index: tuple[str, ...]
    terms: tuple[tuple[int, tuple[int, ...], tuple[int, ...]], ...]

    kind = "wedge"

    @property
    def genus(self) -> int:
        return len(self.terms)

    def pairs(self) -> Pairs:
        acc: Pairs = {}
        idx = self.index
        for lam, a, b in self.terms:
            for i, ai in enumerate(a):
                for j, bj in enumerate(b):
                    if ai and bj:
                        _put(acc, idx[i], idx[j], lam * ai * bj)
        return _clean(acc)

    def problems(self, g: Graph) -> list[str]:
        out = []
        n = len(self.index)
        if len(set(self.index)) != n or not set(self.index) <= g.vertex_set:
            return ["wedge index must list distinct ambient vertices"]
        used = set()
        for k, (lam, a, b) in enumerate(self.terms):
            if lam <= 0:
                out.append(f"term {k}: coefficient must be positive")
            if len(a) != n or len(b) != n:
                out.append(f"term {k}: vector length differs from index")
                continue
            used |= {self.index[i] for i in range(n) if a[i] or b[i]}
        used = sorted(used)
        for i, v in enumerate(used):
            for w in used[i + 1:]:
                if not g.has_edge(v, w):
                    out.append(f"vertices {v} and {w} carry wedge vectors but do not commute")
        return out

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "index": list(self.index),
            "terms": [
                {"lambda": jint(lam), "a": [jint(x) for x in a], "b": [jint(x) for x in b]}
                for lam, a, b in self.terms
            ],
        }

    @classmethod
    def from_json(cls, data: dict, ambient: OrientedGraph) -> "WedgeDecomposition":
        index = tuple(data["index"])
        terms = tuple(
            (
                read_int(t["lambda"], f"terms[{k}].lambda"),
                _vec(t["a"], len(index), f"terms[{k}].a"),
                _vec(t["b"], len(index), f"terms[{k}].b"),
            )
            for k, t in enumerate(data["terms"])
        )
        return cls(index, terms)


@dataclass(frozen=True)
class TensorDecomposition:
    """``sum d * x y^T`` reproducing the label block with rows ``part_a``
    and columns ``part_b``."""

    part_a: tuple[str, ...]
    part_b: tuple[str, ...]
    terms: tuple[tuple[int, tuple[int, ...], tuple[int, ...]], ...]

    kind = "tensor"

    @property
    def genus(self) -> int:
        return len(self.terms)

    def pairs(self) -> Pairs:
        acc: Pairs = {}
        for d, x, y in self.terms:
            for i, xi in enumerate(x):
                for j, yj in enumerate(y):
                    if xi and yj:
                        _put(acc, self.part_a[i], self.part_b[j], d * xi * yj)
        return _clean(acc)

    def problems(self, g: Graph) -> list[str]:
        out = []
        a, b = set(self.part_a), set(self.part_b)
        if len(a) != len(self.part_a) or len(b) != len(self.part_b) or a & b:
            return ["bipartition parts must be disjoint lists of distinct vertices"]
        if not (a | b) <= g.vertex_set:
            return ["bipartition uses unknown vertices"]
        for v in self.part_a:
            for w in self.part_b:
                if not g.has_edge(v, w):
                    out.append(f"{v} and {w} lie in opposite parts but are not adjacent")
        for k, (d, x, y) in enumerate(self.terms):
            if d == 0:
                out.append(f"term {k}: zero coefficient")
            if len(x) != len(self.part_a) or len(y) != len(self.part_b):
                out.append(f"term {k}: vector length differs from its part")
        return out

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "part_a": list(self.part_a),
            "part_b": list(self.part_b),
            "terms": [
                {"d": jint(d), "x": [jint(v) for v in x], "y": [jint(v) for v in y]} for d, x, y in self.terms
            ],
        }

    @classmethod
    def from_json(cls, data: dict, ambient: OrientedGraph) -> "TensorDecomposition":
        pa, pb = tuple(data["part_a"]), tuple(data["part_b"])
        terms = tuple(
            (
                read_int(t["d"], f"terms[{k}].d"),
                _vec(t["x"], len(pa), f"terms[{k}].x"),
                _vec(t["y"], len(pb), f"terms[{k}].y"),
            )
            for k, t in enumerate(data["terms"])
        )
        return cls(pa, pb, terms)


@dataclass(frozen=True)
class TorusCertificate:
    """A torus whose two generators map to ``prod_i nu_i^{c_i}`` and
    ``prod_i nu_i^{d_i}``, where ``nu_i`` is a word in the part ``X_i`` with
    abelianisation given by the direction vector. Elements of different
    parts commute, so the induced label on x in X_i, y in X_j is
    ``(c_i d_j - d_i c_j) * nu_i[x] * nu_j[y]``."""

    parts: tuple[tuple[tuple[str, ...], tuple[int, ...]], ...]
    c: tuple[int, ...]
    d: tuple[int, ...]

    kind = "torus"

    @property
    def genus(self) -> int:
        return 1

    def pairs(self) -> Pairs:
        acc: Pairs = {}
        for i, (xs, nu_i) in enumerate(self.parts):
            for j in range(i + 1, len(self.parts)):
                coef = self.c[i] * self.d[j] - self.d[i] * self.c[j]
                if not coef:
                    continue
                ys, nu_j = self.parts[j]
                for x, nx in zip(xs, nu_i):
                    for y, ny in zip(ys, nu_j):
                        _put(acc, x, y, coef * nx * ny)
        return _clean(acc)

    def problems(self, g: Graph) -> list[str]:
        out = []
        if len(self.c) != len(self.parts) or len(self.d) != len(self.parts):
            return ["c and d must have one entry per part"]
        seen: set[str] = set()
        for k, (xs, nu) in enumerate(self.parts):
            if len(xs) != len(nu):
                return [f"part {k}: direction length differs from part size"]
            if seen & set(xs) or len(set(xs)) != len(xs):
                return ["parts must be disjoint"]
            if not set(xs) <= g.vertex_set:
                return [f"part {k} uses unknown vertices"]
            seen |= set(xs)
        for i, (xs, nu_i) in enumerate(self.parts):
            for j in range(i + 1, len(self.parts)):
                ys, nu_j = self.parts[j]
                for x, nx in zip(xs, nu_i):
                    for y, ny in zip(ys, nu_j):
                        if nx and ny and not g.has_edge(x, y):
                            out.append(f"{x} and {y} carry directions in different parts but do not commute")
        return out

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "parts": [{"vertices": list(xs), "nu": [jint(v) for v in nu]} for xs, nu in self.parts],
            "c": [jint(v) for v in self.c],
            "d": [jint(v) for v in self.d],
        }

    @classmethod
    def from_json(cls, data: dict, ambient: OrientedGraph) -> "TorusCertificate":
        parts = []
        for k, p in enumerate(data["parts"]):
            xs = tuple(p["vertices"])
            parts.append((xs, _vec(p["nu"], len(xs), f"parts[{k}].nu")))
        n = len(parts)
        return cls(tuple(parts), _vec(data["c"], n, "c"), _vec(data["d"], n, "d"))


@dataclass(frozen=True)
class StarTori:
    """A star covering together with one torus per star."""

    cover: StarCover
    tori: tuple[TorusCertificate, ...]

    kind = "star_tori"

    @property
    def genus(self) -> int:
        return len(self.tori)

    def pairs(self) -> Pairs:
        acc: Pairs = {}
        for t in self.tori:
            for (v, w), x in t.pairs().items():
                _put(acc, v, w, x)
        return _clean(acc)

    def problems(self, g: Graph) -> list[str]:
        out = star_cover_problems(self.cover)
        if len(self.tori) != len(self.cover.stars):
            return out + ["need exactly one torus per star"]
        ambient = self.cover.target.ambient
        for k, (s, t) in enumerate(zip(self.cover.stars, self.tori)):
            out += [f"torus {k}: {p}" for p in t.problems(g)]
            if t.pairs() != class_pairs(star_class(s, ambient)):
                out.append(f"torus {k} does not reproduce star {k}")
        return out

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "stars": self.cover.to_json(),
            "tori": [t.to_json() for t in self.tori],
        }

    @classmethod
    def from_json(cls, data: dict, ambient: OrientedGraph) -> "StarTori":
        stars = []
        for k, s in enumerate(data["stars"]):
            spokes = {}
            for p in s["spokes"]:
                spokes[p["leaf"]] = read_int(p["label"], f"stars[{k}].spokes")
            stars.append(star_from_signed(s["center"], spokes, ambient))
        target = zero_class(ambient)
        for s in stars:
            for e, x in s.spokes.values():
                target = add(target, HomologyClass(ambient, {e: x}))
        tori = tuple(TorusCertificate.from_json(t, ambient) for t in data["tori"])
        return cls(StarCover(tuple(stars), target), tori)


@dataclass(frozen=True)
class Composite:
    """Certificates for the connected components of a support, in order."""

    components: tuple["Certificate", ...]

    kind = "composite"

    @property
    def genus(self) -> int:
        return sum(c.genus for c in self.components)

    def pairs(self) -> Pairs:
        acc: Pairs = {}
        for c in self.components:
            for (v, w), x in c.pairs().items():
                _put(acc, v, w, x)
        return _clean(acc)

    def problems(self, g: Graph) -> list[str]:
        out = []
        for k, c in enumerate(self.components):
            out += [f"component {k}: {p}" for p in c.problems(g)]
        return out

    def to_json(self) -> dict:
        return {"kind": self.kind, "components": [c.to_json() for c in self.components]}

    @classmethod
    def from_json(cls, data: dict, ambient: OrientedGraph) -> "Composite":
        return cls(tuple(certificate_from_json(c, ambient) for c in data["components"]))


Certificate = Union[WedgeDecomposition, TensorDecomposition, TorusCertificate, StarTori, Composite]

_KINDS = {k.kind: k for k in (WedgeDecomposition, TensorDecomposition, TorusCertificate, StarTori, Composite)}


def certificate_from_json(data: dict, ambient: OrientedGraph) -> Certificate:
    if not isinstance(data, dict) or data.get("kind") not in _KINDS:
        raise MalformedInput(f"certificate kind must be one of {sorted(_KINDS)}", location="kind")
    try:
        return _KINDS[data["kind"]].from_json(data, ambient)
    except (KeyError, TypeError) as exc:
        raise MalformedInput(f"malformed {data['kind']} certificate: missing or bad field {exc}") from None


def certificate_problems(cert: Certificate, alpha: HomologyClass) -> list[str]:
    """Reasons ``cert`` fails to describe tori summing to ``alpha``."""
    g = alpha.ambient.graph
    out = cert.problems(g)
    if out:
        return out
    got, want = cert.pairs(), class_pairs(alpha)
    for key in sorted(set(got) | set(want)):
        if got.get(key, 0) != want.get(key, 0):
            v, w = key
            out.append(f"l({v},{w}) reconstructs to {got.get(key, 0)}, class has {want.get(key, 0)}")
    return out


def verify_certificate(cert: Certificate, alpha: HomologyClass) -> bool:
    return not certificate_problems(cert, alpha)


__all__ = [
    "Certificate",
    "Composite",
    "StarTori",
    "TensorDecomposition",
    "TorusCertificate",
    "WedgeDecomposition",
    "certificate_from_json",
    "certificate_problems",
    "class_pairs",
    "verify_certificate",
]
