"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Each row times one kernel call on a fixed solution and checks that both
backends return identical results.
"""

import argparse
import time

from ybveronese import make_permutation, make_trivial
from ybveronese.kernels import compiled, get_backend
from ybveronese.solution import Solution


def square_free_n3() -> Solution:
    m = {(3, 1): (2, 3), (2, 3): (3, 1), (3, 2): (1, 3), (1, 3): (3, 2), (2, 1): (1, 2), (1, 2): (2, 1)}
    return Solution.from_mapping(3, m)


CASES = [
    ("orbit_min_labels", "square-free n=3, m=8", square_free_n3(), ("labels", 8)),
    ("orbit_min_labels", "permutation n=4, m=6", make_permutation(4, (2, 3, 4, 1)), ("labels", 6)),
    ("orbit_min_labels", "trivial n=6, m=5", make_trivial(6), ("labels", 5)),
    ("orbit_members", "trivial n=4, word 1..4 repeated twice", make_trivial(4), ("members", (0, 1, 2, 3) * 2)),
    ("braided", "trivial n=40", make_trivial(40), ("braided", None)),
]


def call(backend, s: Solution, case):
    kind, arg = case
    if kind == "labels":
        return list(backend.orbit_min_labels(s.rflat, s.n, arg))
    if kind == "members":
        return sorted(backend.orbit_members(s.rflat, s.n, arg, 10**7))
    return backend.braided(s.rflat, s.n)


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if compiled is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    py, cy = get_backend("python"), get_backend("cython")
    print(f"{'kernel':<18} {'case':<38} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, label, s, case in CASES:
        if call(py, s, case) != call(cy, s, case):
            raise SystemExit(f"backends disagree on {name} / {label}")
        tp = best_of(lambda: call(py, s, case), args.repeat)
        tc = best_of(lambda: call(cy, s, case), args.repeat)
        print(f"{name:<18} {label:<38} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
