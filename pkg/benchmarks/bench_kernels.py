"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py --repeat 3
"""

from __future__ import annotations

import argparse
import random
import time

from raag_genus import _kernels_py

try:
    from raag_genus import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def random_adj(rng: random.Random, n: int, p: float) -> list[int]:
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def cover_cases(seed: int):
    rng = random.Random(seed)
    return [(n, random_adj(rng, n, p)) for n, p in [(30, 0.15)] * 10 + [(40, 0.1)] * 10 + [(50, 0.08)] * 5]


def rank_cases(seed: int):
    rng = random.Random(seed)
    out = []
    for _ in range(200):
        n = rng.randint(6, 12)
        out.append(([[rng.randint(-10**6, 10**6) for _ in range(n)] for _ in range(n)], n))
    return out


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main(argv: list[str] | None = None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    backends = {"python": _kernels_py}
    if _ckernels is not None:
        backends["cython"] = _ckernels
    else:
        print("compiled extension not built; timing the pure-Python backend only")

    covers, ranks = cover_cases(args.seed), rank_cases(args.seed)
    results = {}
    for name, mod in backends.items():
        cov = [mod.vertex_cover_mask(n, adj) for n, adj in covers]
        rk = [mod.bareiss_rank(rows, n) for rows, n in ranks]
        results[name] = (cov, rk)
        t_cov = best_of(lambda: [mod.vertex_cover_mask(n, adj) for n, adj in covers], args.repeat)
        t_rank = best_of(lambda: [mod.bareiss_rank(rows, n) for rows, n in ranks], args.repeat)
        print(f"{name:>7}  vertex cover {t_cov * 1e3:9.1f} ms   bareiss rank {t_rank * 1e3:8.1f} ms")
    if len(results) == 2:
        assert results["python"] == results["cython"], "backends disagree"
        print("backends agree on every instance")


if __name__ == "__main__":
    main()
