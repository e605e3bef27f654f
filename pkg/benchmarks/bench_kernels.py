#!/usr/bin/env python3
"""Benchmark the compiled search kernels against the pure-Python fallback.

Workloads are the real hot paths: maximal-clique enumeration over the
(n, 3) intersection graphs, exact maximum clique on dense hosts, and
canonical relabeling of every maximal intersecting (7, 3) family.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from setfam._kernels import available_backends, load_backend
from setfam.enumeration import intersection_adjacency
from setfam.famcore import all_ksets
from setfam.generators import gen_complete


def timed(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def workloads():
    out = []
    for n, k in ((7, 3), (8, 3)):
        vertices = all_ksets(n, k)
        adj = intersection_adjacency(vertices)
        nv = len(vertices)
        out.append(
            (
                f"maximal_cliques ({n},{k}) graph, {nv} vertices",
                lambda b, a=adj, m=nv: len(b.maximal_cliques(a, m)),
            )
        )
    for n, k in ((8, 3), (9, 3)):
        host = gen_complete(n, k)
        adj = intersection_adjacency(host.members)
        nv = len(host)
        out.append(
            (
                f"max_clique_size complete ({n},{k}), {nv} vertices",
                lambda b, a=adj, m=nv: b.max_clique_size(a, m, (1 << m) - 1, 0),
            )
        )

    # canonical relabeling across the full (7,3) landscape
    comp_or_pure = load_backend(available_backends()[0])
    vertices = all_ksets(7, 3)
    adj = intersection_adjacency(vertices)
    fams = []
    for clique in comp_or_pure.maximal_cliques(adj, len(vertices)):
        mem = []
        c = clique
        while c:
            bit = c & -c
            c ^= bit
            mem.append(vertices[bit.bit_length() - 1])
        fams.append(tuple(mem))

    def canon_all(b):
        total = 0
        for mem in fams:
            enc, _ = b.canonical_min(7, mem)
            total ^= hash(enc)
        return total

    out.append((f"canonical_min over {len(fams)} maximal (7,3) families", canon_all))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3, help="best of N runs")
    args = ap.parse_args()

    names = available_backends()
    backends = {name: load_backend(name) for name in names}
    print(f"backends: {', '.join(names)}\n")
    header = f"{'workload':55s}" + "".join(f"{n:>12s}" for n in names)
    if len(names) == 2:
        header += f"{'speedup':>10s}"
    print(header)
    print("-" * len(header))
    for label, fn in workloads():
        times = {}
        results = {}
        for name, backend in backends.items():
            times[name], results[name] = timed(lambda b=backend: fn(b), args.repeat)
        assert len(set(results.values())) == 1, f"backend disagreement on {label}"
        row = f"{label:55s}" + "".join(f"{times[n] * 1000:10.1f}ms" for n in names)
        if len(names) == 2:
            a, b = names
            row += f"{times[b] / times[a]:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
