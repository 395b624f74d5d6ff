"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import os
import random
import subprocess
import sys
import time

from bettigraph import _kernels_py

try:
    from bettigraph import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def random_adj(rng, k, p):
    adj = [0] * k
    for u in range(k):
        for v in range(u + 1, k):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return adj


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases(rng):
    for k in (14, 16, 18):
        adj = random_adj(rng, k, 0.3)
        yield f"froberg_sums k={k}", lambda m, a=adj, k=k: m.froberg_sums(a, k)
    graphs = [random_adj(rng, 9, 0.5) for _ in range(200)]
    cells = [list(range(9))]
    yield "min_code k=9 x200", lambda m: [m.min_code(a, cells) for a in graphs]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rng = random.Random(0)
    print(f"{'kernel':<22} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, fn in cases(rng):
        tp, out_p = timed(lambda: fn(_kernels_py), args.repeat)
        if _kernels_c is None:
            print(f"{name:<22} {tp:>9.3f}s {'n/a':>10} {'':>8}")
            continue
        tc, out_c = timed(lambda: fn(_kernels_c), args.repeat)
        assert out_p == out_c, name
        print(f"{name:<22} {tp:>9.3f}s {tc:>9.4f}s {tp / tc:>7.0f}x")

    # end to end: census up to 7 vertices with each backend
    for label, env in (("python", {"BETTIGRAPH_PURE": "1"}), ("cython", {})):
        t0 = time.perf_counter()
        subprocess.run([sys.executable, "-m", "bettigraph", "census", "--max", "7"],
                       env=dict(os.environ, **env), check=True, capture_output=True)
        print(f"census --max 7 ({label}): {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
