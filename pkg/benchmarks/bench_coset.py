"""Compare the compiled and pure-Python coset enumeration kernels.

Run: python3 benchmarks/bench_coset.py
"""

import time

from coxbound.system import complete_graph_system
from coxbound.words import coxeter_relators

from coxbound import _coset_py

try:
    from coxbound import _coset
except ImportError:
    _coset = None

CASES = [
    ("(2,3,5) spherical", 3, {("s1", "s2"): 2, ("s1", "s3"): 3, ("s2", "s3"): 5}, 100_000),
    ("(2,3,7) hyperbolic, cap 50k", 3, {("s1", "s2"): 2, ("s1", "s3"): 3, ("s2", "s3"): 7}, 50_000),
    ("K3 all-3 (affine), cap 100k", 3, None, 100_000),
    ("K4 all-3, cap 100k", 4, None, 100_000),
]


def run(kernel, n, labels, cap, repeats=3):
    sysm = complete_graph_system(n, labels=labels)
    rels = coxeter_relators(sysm, sysm.generators)
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = kernel.enumerate_cosets(n, rels, cap)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    kernels = [("python", _coset_py)]
    if _coset is not None:
        kernels.append(("cython", _coset))
    print(f"{'case':36s}" + "".join(f"{name:>12s}" for name, _ in kernels) + f"{'speedup':>10s}")
    for label, n, labels, cap in CASES:
        times = []
        results = []
        for _, kernel in kernels:
            t, res = run(kernel, n, labels, cap)
            times.append(t)
            results.append(res)
        assert len({(r[0], r[1]) for r in results}) == 1, f"kernel disagreement on {label}"
        ratio = times[0] / times[-1] if len(times) > 1 else 1.0
        print(f"{label:36s}" + "".join(f"{t * 1000:10.1f}ms" for t in times) + f"{ratio:9.1f}x")


if __name__ == "__main__":
    main()
