"""Compare the compiled kernels against the numpy fallback.

Usage::

    python benchmarks/bench_kernels.py [--repeat N] [--groups SPEC ...]

Each row times the same workload under both backends (best of N, fresh
group objects per run so no cached lattice is reused) and prints the ratio.
"""
import argparse
import time

import numpy as np

from sigmahall import _kernels
from sigmahall.lattice import all_subgroups
from sigmahall.toolkit import build, parse_spec_string

DEFAULT_GROUPS = ["symmetric:4*cyclic:2", "dihedral:4*symmetric:3", "symmetric:5",
                  "metacyclic:31:30", "metacyclic:7:6*cyclic:2"]


def lattice_workload(spec):
    def run():
        return len(all_subgroups(build(spec)))
    return run


def permutability_workload(spec):
    G = build(spec)
    subs = list(all_subgroups(G))
    flat = np.concatenate([H.idx for H in subs]).astype(np.int32)
    offsets = np.zeros(len(subs) + 1, dtype=np.int64)
    offsets[1:] = np.cumsum([H.order for H in subs])

    def run():
        return int(_kernels.permutability_matrix(G.table, flat, offsets).sum())
    return run


def best_of(fn, repeat):
    times, result = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--groups", nargs="+", default=DEFAULT_GROUPS)
    args = ap.parse_args(argv)

    backends = [b for b in ("compiled", "python") if b in _kernels.BACKENDS]
    if len(backends) < 2:
        print("compiled extension not built; only the python backend is available")
    previous = _kernels.backend()
    header = f"{'workload':<42}" + "".join(f"{b:>12}" for b in backends) + f"{'ratio':>9}"
    print(header)
    print("-" * len(header))
    try:
        for text in args.groups:
            spec = parse_spec_string(text)
            for name, make in (("lattice", lattice_workload), ("permutability", permutability_workload)):
                row, results = [], set()
                for b in backends:
                    _kernels.use_backend(b)
                    t, r = best_of(make(spec), args.repeat)
                    row.append(t)
                    results.add(r)
                if len(results) != 1:
                    raise SystemExit(f"backends disagree on {name} for {text}: {results}")
                ratio = f"{row[-1] / row[0]:8.1f}x" if len(row) == 2 and row[0] > 0 else ""
                print(f"{name + ' ' + text:<42}" + "".join(f"{t:11.4f}s" for t in row) + ratio)
    finally:
        _kernels.use_backend(previous)


if __name__ == "__main__":
    main()
