"""Acceptance suite: one test per criterion, each with its runtime limit.

Every test records a ``criterion N: PASS/FAIL`` line, printed both inline and
in the terminal summary.
"""

import random
import time
from contextlib import contextmanager
from itertools import combinations

from raag_genus.certificates import verify_certificate
from raag_genus.graph import complete_multipartite_parts
from raag_genus.homology import cap_bound, connection_matrix, matrix_rank, new_class
from raag_genus.linalg import IntMatrix, determinant, rank, skew_normal_form, smith_normal_form
from raag_genus.solver import genus, star_to_torus, tensor_decompose, torus_representable, wedge_decompose
from raag_genus.starcover import min_star_cover, sc_cardinality, star_class, verify_star_cover
from raag_genus.vankampen import disjoint_union, genus_of, induced_class, surface_summary

from .conftest import M_ALPHA, M_BETA
from .helpers import (
    class_from_pairs,
    complete_bipartite,
    complete_graph,
    fixture_class,
    fixture_diagram,
    random_class,
    random_diagram,
    random_forest,
    random_graph,
    random_torus_instance,
)

RESULTS: list[str] = []


@contextmanager
def criterion(n: int, title: str, limit: float):
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
    except BaseException as exc:
        line = f"criterion {n}: FAIL  {title}  ({type(exc).__name__}: {exc})"
        RESULTS.append(line)
        print(line)
        raise
    line = f"criterion {n}: PASS  {title}  ({elapsed:.2f}s < {limit}s)"
    RESULTS.append(line)
    print(line)


def test_criterion_1_square_example(square):
    with criterion(1, "square example matrices, cap bounds and exact genera", 1.0):
        beta = new_class(square, [("v1", "w1", 2), ("v1", "w2", 4), ("v2", "w1", 3), ("v2", "w2", 6)])
        alpha = new_class(square, [("v1", "w1", 1), ("v2", "w2", -1)])
        assert connection_matrix(beta).matrix.to_lists() == M_BETA
        assert connection_matrix(alpha).matrix.to_lists() == M_ALPHA
        assert (cap_bound(beta), cap_bound(alpha)) == (1, 2)

        rb = genus(beta)
        assert rb.exact == 1 and rb.method == "rank2-torus"
        cert = rb.certificate
        assert verify_certificate(cert, beta)
        (_, x), (_, y) = cert.parts
        assert (x, y) == ((2, 3), (1, 2))
        coef = cert.c[0] * cert.d[1] - cert.d[0] * cert.c[1]
        assert [[coef * a * b for b in y] for a in x] == [[2, 4], [3, 6]]

        ra = genus(alpha)
        assert ra.exact == 2 and verify_certificate(ra.certificate, alpha)


def test_criterion_2_complete_graphs():
    rng = random.Random(1002)
    with criterion(2, "wedge decompositions on complete graphs (200 classes)", 10.0):
        done = 0
        while done < 200:
            g = complete_graph(rng.randint(2, 6))
            a = random_class(rng, g, -9, 9, density=rng.choice((0.5, 1.0)))
            if a.is_zero():
                continue
            done += 1
            dec = wedge_decompose(a)
            assert len(dec.terms) == matrix_rank(a) // 2
            n = len(dec.index)
            recon = [[0] * n for _ in range(n)]
            for lam, u, w in dec.terms:
                for i in range(n):
                    for j in range(n):
                        recon[i][j] += lam * (u[i] * w[j] - w[i] * u[j])
            assert recon == connection_matrix(a, dec.index).matrix.to_lists()
            assert verify_certificate(dec, a)
            r = genus(a)
            assert r.exact == cap_bound(a) == len(dec.terms)


def test_criterion_3_forests():
    rng = random.Random(1003)
    with criterion(3, "star coverings of labelled forests (300 classes)", 10.0):
        done = 0
        while done < 300:
            g = random_forest(rng, rng.randint(2, 12))
            a = random_class(rng, g, -9, 9, density=rng.choice((0.5, 0.8, 1.0)), nonzero=True)
            if a.is_zero():
                continue
            done += 1
            cover = min_star_cover(a)
            assert len(cover) == sc_cardinality(a) == cap_bound(a)
            assert verify_star_cover(cover)
            for s in cover.stars:
                assert verify_certificate(star_to_torus(s), star_class(s, a.ambient))
            assert genus(a).exact == cap_bound(a)


def test_criterion_4_complete_bipartite():
    rng = random.Random(1004)
    with criterion(4, "pure-tensor decompositions on K_{n,m} (200 classes)", 10.0):
        done = 0
        while done < 200:
            g = complete_bipartite(rng.randint(1, 5), rng.randint(1, 5))
            a = random_class(rng, g, -9, 9, density=rng.choice((0.5, 1.0)))
            if a.is_zero():
                continue
            done += 1
            dec = tensor_decompose(a)
            L = [[a.label(v, w) for w in dec.part_b] for v in dec.part_a]
            assert len(dec.terms) == rank(L)
            recon = [[sum(d * x[i] * y[j] for d, x, y in dec.terms) for j in range(len(dec.part_b))] for i in range(len(dec.part_a))]
            assert recon == L
            assert verify_certificate(dec, a)
            assert genus(a).exact == cap_bound(a)


def _unsquared_pair(a):
    """Two support edges on four distinct vertices that are not opposite
    sides of a square in the support, or None."""
    s = a.support_graph
    for (p, q), (r, t) in combinations(sorted(s.edges), 2):
        if len({p, q, r, t}) < 4:
            continue
        if not ((s.has_edge(p, r) and s.has_edge(q, t)) or (s.has_edge(p, t) and s.has_edge(q, r))):
            return (p, q), (r, t)
    return None


def test_criterion_5_rank_two_classes():
    rng = random.Random(1005)
    with criterion(5, "rank-2 pushforwards are tori; unsquared edge pairs force rank >= 4", 10.0):
        done = 0
        while done < 200:
            og, cert = random_torus_instance(rng)
            a = class_from_pairs(og, cert.pairs())
            if a.is_zero():
                continue
            done += 1
            assert torus_representable(a)
            assert complete_multipartite_parts(a.support_graph) is not None

        done = 0
        while done < 200:
            g = random_graph(rng, rng.randint(4, 8), rng.choice((0.3, 0.6, 0.9)))
            a = random_class(rng, g, -9, 9, density=rng.choice((0.5, 0.9)))
            if _unsquared_pair(a) is None:
                continue
            done += 1
            assert matrix_rank(a) >= 4
            assert not torus_representable(a)


def test_criterion_6_pentagon():
    with criterion(6, "pentagon: cap 2, sc 3, bounds 2..3, no single torus, genus-2 diagram", 10.0):
        a = fixture_class("pentagon_all_ones")
        assert cap_bound(a) == 2
        assert sc_cardinality(a) == 3
        r = genus(a)
        assert (r.lower, r.upper, r.exact) == (2, 3, None)
        assert not torus_representable(a)
        d = fixture_diagram("pentagon_genus2")
        s = surface_summary(d)
        assert s.connected and s.total_genus == 2
        induced = induced_class(d, a.ambient)
        assert induced.support_graph == a.ambient.graph
        assert induced == a


def test_criterion_7_van_kampen():
    rng = random.Random(1007)
    with criterion(7, "diagram verifier: torus, additivity, genus >= cap bound", 5.0):
        d = fixture_diagram("torus_one_square")
        assert genus_of(d) == 1
        e = induced_class(d)
        assert e.labels == {("v", "w"): 1}
        for _ in range(200):
            g = random_graph(rng, rng.randint(2, 6), 0.6)
            d1 = random_diagram(rng, g, rng.randint(2, 6))
            d2 = random_diagram(rng, g, rng.randint(2, 6))
            u = disjoint_union(d1, d2)
            assert genus_of(u) == genus_of(d1) + genus_of(d2)
            assert induced_class(u) == induced_class(d1) + induced_class(d2)
            for x in (d1, d2, u):
                assert genus_of(x) >= cap_bound(induced_class(x))


def test_criterion_8_skew_normal_form():
    rng = random.Random(1008)
    with criterion(8, "skew normal form property suite (500 matrices)", 30.0):
        for _ in range(500):
            n = rng.randint(1, 10)
            bound = rng.choice((1, 10, 10**6))
            a = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i + 1, n):
                    if rng.random() < 0.7:
                        a[i][j] = rng.randint(-bound, bound)
                        a[j][i] = -a[i][j]
            snf = skew_normal_form(a)
            A = IntMatrix.from_rows(a)
            assert snf.U @ A @ snf.U.T == snf.block_matrix
            assert determinant(snf.U) in (1, -1)
            assert snf.U @ snf.U_inv == IntMatrix.identity(n)
            r = rank(a)
            assert r % 2 == 0 and r == 2 * len(snf.lambdas)
            assert smith_normal_form(a).nonzero_factors == sorted(snf.lambdas + snf.lambdas)
