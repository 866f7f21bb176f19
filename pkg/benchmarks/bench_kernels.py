"""Compiled vs pure-Python kernels on the workloads the harness actually runs.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

from __future__ import annotations

import argparse
import random
import timeit

from slchord import _kernels_py
from slchord.enumerate import enumerate_diagrams
from slchord.gf2 import adjacency_matrix
from slchord.graph import intersection_graph
from slchord.surgery import closure_state

try:
    from slchord import _ckernels
except ImportError:
    _ckernels = None


def workloads():
    diagrams = [d for n in range(1, 5) for d in enumerate_diagrams(3, n)]
    rows = [adjacency_matrix(intersection_graph(d)).rows for d in diagrams]
    succs = [closure_state(d).successor for d in diagrams]
    rng = random.Random(7)
    wide = [tuple(rng.getrandbits(60) for _ in range(60)) for _ in range(200)]
    perms = []
    for _ in range(200):
        p = list(range(500))
        rng.shuffle(p)
        perms.append(tuple(p))
    return {
        "rank, k<=3 n<=4 adjacency": ("gf2_rank", rows),
        "rank, random 60x60": ("gf2_rank", wide),
        "cycles, k<=3 n<=4 closures": ("count_cycles", succs),
        "cycles, random 500-permutations": ("count_cycles", perms),
    }


def bench(impl, fn_name, inputs, repeat):
    fn = getattr(impl, fn_name)
    return min(timeit.repeat(lambda: [fn(x) for x in inputs], number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; run `python setup.py build_ext --inplace`")
    print(f"{'workload':34s} {'items':>6s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for name, (fn_name, inputs) in workloads().items():
        for x in inputs[:50]:
            if _ckernels is not None:
                assert getattr(_ckernels, fn_name)(x) == getattr(_kernels_py, fn_name)(x)
        t_py = bench(_kernels_py, fn_name, inputs, args.repeat)
        if _ckernels is None:
            print(f"{name:34s} {len(inputs):6d} {t_py * 1e3:10.2f} {'-':>10s} {'-':>8s}")
            continue
        t_c = bench(_ckernels, fn_name, inputs, args.repeat)
        print(f"{name:34s} {len(inputs):6d} {t_py * 1e3:10.2f} {t_c * 1e3:10.2f} {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
