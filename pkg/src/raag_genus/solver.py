"""Genus bounds and torus certificates.

``genus`` works one support component at a time. A component is solved
exactly when its class has rank 2 (a single torus), when its vertices span a
clique (elementary wedges), when it sits inside a complete bipartite
subgraph of the ambient graph (pure tensors), or when it is a tree (star
covering). Every exact answer comes with a certificate whose genus equals the
cap bound, which is a lower bound, so exactness never rests on a heuristic.
Other components only get ``cap bound <= genus <= star covering number``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from .certificates import (
    Certificate,
    Composite,
    StarTori,
    TensorDecomposition,
    TorusCertificate,
    WedgeDecomposition,
    verify_certificate,
)
from .errors import (
    DependenceFailure,
    InternalInvariantError,
    NotBipartiteCoverable,
    NotComplete,
    RankNotTwo,
    SupportNotMultipartite,
    ZeroClass,
)
from .graph import (
    DEFAULT_COVER_BUDGET,
    complete_multipartite_parts,
    connected_components,
    full_subgraph,
    is_complete,
    is_forest,
    two_coloring,
)
from .homology import HomologyClass, component_classes, connection_matrix, matrix_rank
from .jsonio import labels_to_json
from .linalg import primitive, skew_normal_form, smith_normal_form
from .starcover import Star, min_star_cover

MAX_BIPARTITION_TRIALS = 1024


def _skew_on_support(alpha: HomologyClass):
    idx = alpha.support_graph.vertices
    return idx, skew_normal_form(connection_matrix(alpha, idx).matrix)


def wedge_decompose(alpha: HomologyClass) -> WedgeDecomposition:
    """Write ``alpha`` as ``sum lam_i a_i ^ b_i`` with as few terms as the
    cap bound allows.

    The pairs (a_i, b_i) are the paired columns of the inverse of the
    normal-form witness. Requires the support vertices to span a clique of
    the ambient graph.
    """
    g = alpha.ambient.graph
    idx, snf = _skew_on_support(alpha)
    if not is_complete(full_subgraph(g, idx)):
        raise NotComplete("support vertices do not span a complete subgraph")
    pos = {v: i for i, v in enumerate(idx)}
    Ui = snf.U_inv
    terms = []
    for k, lam in enumerate(snf.lambdas):
        a = tuple(Ui[pos[v], 2 * k] if v in pos else 0 for v in g.vertices)
        b = tuple(Ui[pos[v], 2 * k + 1] if v in pos else 0 for v in g.vertices)
        terms.append((lam, a, b))
    return WedgeDecomposition(g.vertices, tuple(terms))


def find_bipartition(alpha: HomologyClass) -> tuple[tuple[str, ...], tuple[str, ...]] | None:
    """Bipartition (A, B) of the support vertices such that the support has
    no edge inside A or B and every A-B pair is adjacent in the ambient graph.

    Each support component can be 2-coloured in two ways; combinations are
    tried in a fixed order (the first component's colouring is kept), at most
    ``MAX_BIPARTITION_TRIALS`` of them.
    """
    s = alpha.support_graph
    color = two_coloring(s)
    if color is None:
        return None
    comps = connected_components(s)
    g = alpha.ambient.graph
    flips_iter = product((0, 1), repeat=max(len(comps) - 1, 0))
    for trial, flips in enumerate(flips_iter):
        if trial >= MAX_BIPARTITION_TRIALS:
            break
        a, b = [], []
        for comp, flip in zip(comps, (0,) + flips):
            for v in comp.vertices:
                (a if color[v] ^ flip == 0 else b).append(v)
        if all(g.has_edge(x, y) for x in a for y in b):
            return tuple(sorted(a)), tuple(sorted(b))
    return None


def tensor_decompose(alpha: HomologyClass) -> TensorDecomposition:
    """Write the label block of ``alpha`` as a sum of rank(L) pure tensors,
    read off a Smith form ``L = U^-1 D V^-1``. Each term is normalised to
    ``d * x y^T`` with x, y primitive and leading entries positive."""
    parts = find_bipartition(alpha)
    if parts is None:
        raise NotBipartiteCoverable("support does not sit inside a complete bipartite subgraph")
    pa, pb = parts
    L = [[alpha.label(v, w) for w in pb] for v in pa]
    terms = []
    if pa and pb:
        sf = smith_normal_form(L)
        for i, d in enumerate(sf.invariant_factors):
            if not d:
                continue
            gx, x = primitive([sf.U_inv[r, i] for r in range(len(pa))])
            gy, y = primitive([sf.V_inv[i, c] for c in range(len(pb))])
            terms.append((d * gx * gy, x, y))
    return TensorDecomposition(pa, pb, tuple(terms))


def _sl2_normalize(c: list[int], d: list[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Row-reduce the 2 x n matrix [c; d] by determinant-one operations, which
    leave c ^ d (and hence the induced class) unchanged."""
    c, d = list(c), list(d)
    n = len(c)
    j = 0
    while j < n and c[j] == 0 and d[j] == 0:
        j += 1
    if j == n:
        return tuple(c), tuple(d)
    while d[j] != 0:
        q = c[j] // d[j]
        c = [x - q * y for x, y in zip(c, d)]
        c, d = d, [-x for x in c]
    if c[j] < 0:
        c, d = [-x for x in c], [-x for x in d]
    k = j + 1
    while k < n and d[k] == 0:
        k += 1
    if k < n:
        q = c[k] // d[k]
        c = [x - q * y for x, y in zip(c, d)]
    return tuple(c), tuple(d)


def torus_certificate(alpha: HomologyClass) -> TorusCertificate:
    """Torus certificate for a class whose connection matrix has rank 2.

    The class abelianises to an elementary wedge a ^ b. On each part of the
    (complete multipartite) support the restrictions of a and b are
    parallel to a primitive direction nu_i, with coordinates (c_i, d_i).
    """
    if matrix_rank(alpha) != 2:
        raise RankNotTwo("connection matrix does not have rank 2")
    s = alpha.support_graph
    parts = complete_multipartite_parts(s)
    if parts is None:
        raise SupportNotMultipartite("rank 2 class with a support that is not complete multipartite")
    idx, snf = _skew_on_support(alpha)
    pos = {v: i for i, v in enumerate(idx)}
    lam = snf.lambdas[0]
    a = [lam * snf.U_inv[i, 0] for i in range(len(idx))]
    b = [snf.U_inv[i, 1] for i in range(len(idx))]
    cert_parts, cs, ds = [], [], []
    for part in parts:
        ap = [a[pos[v]] for v in part]
        bp = [b[pos[v]] for v in part]
        if not any(ap) and not any(bp):
            continue
        _, nu = primitive(ap if any(ap) else bp)
        k = next(i for i, x in enumerate(nu) if x)
        r, t = ap[k] // nu[k], bp[k] // nu[k]
        if [r * x for x in nu] != ap or [t * x for x in nu] != bp:
            raise DependenceFailure(f"restrictions to part {part} are not parallel")
        cert_parts.append((part, nu))
        cs.append(r)
        ds.append(t)
    c, d = _sl2_normalize(cs, ds)
    cert = TorusCertificate(tuple(cert_parts), c, d)
    if not verify_certificate(cert, alpha):
        raise DependenceFailure("torus certificate does not reproduce the class")
    return cert


def star_to_torus(star: Star) -> TorusCertificate:
    """Centre with direction (1), leaves with the spoke labels l(centre, leaf)."""
    leaves = tuple(sorted(star.spokes))
    return TorusCertificate(
        (((star.center,), (1,)), (leaves, tuple(star.signed_label(v) for v in leaves))),
        (1, 0),
        (0, 1),
    )


def star_tori(alpha: HomologyClass, budget: int = DEFAULT_COVER_BUDGET) -> StarTori:
    cover = min_star_cover(alpha, budget=budget)
    return StarTori(cover, tuple(star_to_torus(s) for s in cover.stars))


def torus_representable(alpha: HomologyClass) -> bool:
    if alpha.is_zero():
        raise ZeroClass("torus representability is asked of nonzero classes")
    return matrix_rank(alpha) == 2


@dataclass(frozen=True)
class GenusResult:
    lower: int
    upper: int
    exact: Optional[int]
    method: str
    certificate: Optional[Certificate] = None
    # True when the certificate lives on a proper subgraph of the ambient
    # graph (clique, complete bipartite or tree) and is pushed forward
    pushforward: bool = False
    components: tuple["GenusResult", ...] = field(default=())
    vertices: tuple[str, ...] = ()

    def to_json(self) -> dict:
        out = {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "method": self.method,
            "pushforward": self.pushforward,
            "certificate": None if self.certificate is None else self.certificate.to_json(),
            "certificate_genus": None if self.certificate is None else self.certificate.genus,
        }
        if self.components:
            out["components"] = [
                {
                    "vertices": list(c.vertices),
                    "lower": c.lower,
                    "upper": c.upper,
                    "exact": c.exact,
                    "method": c.method,
                    "pushforward": c.pushforward,
                }
                for c in self.components
            ]
        return out


def _exact(alpha, cap, cert, method, pushforward) -> GenusResult:
    if cert.genus != cap:
        raise InternalInvariantError(f"{method} certificate has genus {cert.genus}, cap bound is {cap}")
    return GenusResult(cap, cap, cap, method, cert, pushforward, vertices=alpha.support_graph.vertices)


def _component_genus(alpha: HomologyClass, budget: int) -> GenusResult:
    g = alpha.ambient.graph
    s = alpha.support_graph
    r = matrix_rank(alpha)
    cap = r // 2
    if cap == 0:
        return GenusResult(0, 0, 0, "zero", Composite(()), vertices=s.vertices)
    if r == 2:
        return _exact(alpha, cap, torus_certificate(alpha), "rank2-torus", False)
    host = full_subgraph(g, s.vertices)
    if is_complete(host):
        return _exact(alpha, cap, wedge_decompose(alpha), "complete", host != g)
    parts = find_bipartition(alpha)
    if parts is not None:
        pa, pb = parts
        covers_ambient = set(pa) | set(pb) == g.vertex_set and len(g.edges) == len(pa) * len(pb)
        return _exact(alpha, cap, tensor_decompose(alpha), "bipartite", not covers_ambient)
    if is_forest(s):
        return _exact(alpha, cap, star_tori(alpha, budget), "forest", not is_forest(g))
    witness = star_tori(alpha, budget)
    return GenusResult(cap, witness.genus, None, "bounds-only", witness, vertices=s.vertices)


def genus(alpha: HomologyClass, budget: int = DEFAULT_COVER_BUDGET) -> GenusResult:
    """Lower and upper genus bounds, exact when a family rule applies.

    Raises:
        SizeLimitExceeded: if a star covering needs an exact vertex cover on
            more than ``budget`` vertices.
    """
    comps = component_classes(alpha)
    if not comps:
        return GenusResult(0, 0, 0, "zero", Composite(()))
    results = [_component_genus(c, budget) for c in comps]
    if len(results) == 1:
        return results[0]
    exact = sum(r.exact for r in results) if all(r.exact is not None for r in results) else None
    return GenusResult(
        sum(r.lower for r in results),
        sum(r.upper for r in results),
        exact,
        "componentwise",
        Composite(tuple(r.certificate for r in results)),
        any(r.pushforward for r in results),
        tuple(results),
        alpha.support_graph.vertices,
    )


def result_summary(alpha: HomologyClass, result: GenusResult) -> dict:
    out = result.to_json()
    out["class"] = labels_to_json(alpha)
    return out
