"""Timing comparison of the compiled kernel against the numpy fallback.

Each task rebuilds its code from scratch (results are cached per code
object) and runs the same search through both implementations; values
are cross-checked before the times are reported.  The compiled column
shows n/a when the extension is not built.

Usage: python benchmarks/bench_kernels.py [--rounds N]
"""

import argparse
import time

from convinv import (
    FieldSpec,
    gen_column_distance,
    gen_column_distance_limit,
    generalized_weight,
    make_code,
    unrestricted_gcd,
)
from convinv import kernels
from convinv.kernels import load_fast, pure


def _gf(q):
    return FieldSpec(q)


TASKS = [
    (
        "window  r=2 j=16  GF(2) n=4 k=2 mem=2",
        lambda: make_code(_gf(2), [[[1], [1, 0, 1], [0, 1], [1, 1, 1]],
                                   [[0], [1], [1, 0, 1], [0, 1, 1]]]),
        lambda c: gen_column_distance(c, 2, 16).value,
    ),
    (
        "window  r=2 j=12  GF(3) n=3 k=2 mem=1",
        lambda: make_code(_gf(3), [[[1], [2, 1], [0, 2]],
                                   [[0, 1], [1], [2]]]),
        lambda c: gen_column_distance(c, 2, 12).value,
    ),
    (
        "limit   r=2       GF(2) n=4 k=2 mem=2",
        lambda: make_code(_gf(2), [[[1], [1, 0, 1], [0, 1], [1, 1, 1]],
                                   [[0], [1], [1, 0, 1], [0, 1, 1]]]),
        lambda c: gen_column_distance_limit(c, 2).value,
    ),
    (
        "unrestr r=3 j=3   GF(2) n=5 k=2 mem=1",
        lambda: make_code(_gf(2), [[[1], [1], [0], [0], [0]],
                                   [[0], [0, 1], [1], [1], [1]]]),
        lambda c: unrestricted_gcd(c, 3, 3).value,
    ),
    (
        "weight  r=2       GF(3) n=4 k=2 mem=1",
        lambda: make_code(_gf(3), [[[1], [0, 1], [2], [1]],
                                   [[0], [1], [1, 2], [2, 1]]]),
        lambda c: generalized_weight(c, 2).value,
    ),
]


def _use(mod, name):
    kernels.pivot_search = mod.pivot_search
    kernels.relax_forward = mod.relax_forward
    kernels.relax_backward = mod.relax_backward
    kernels.IMPLEMENTATION = name


def _time(build, run, rounds):
    best = float("inf")
    value = None
    for _ in range(rounds):
        code = build()
        t0 = time.perf_counter()
        value = run(code)
        best = min(best, time.perf_counter() - t0)
    return best, value


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rounds", type=int, default=3,
                    help="repetitions per task; the best time is kept")
    args = ap.parse_args(argv)

    fast = load_fast()
    if fast is None:
        print("compiled extension not built; timing the fallback only\n")

    width = max(len(name) for name, _, _ in TASKS)
    header = f"{'task':<{width}}  {'compiled':>10}  {'fallback':>10}  {'ratio':>7}"
    print(header)
    print("-" * len(header))
    saved = (kernels.pivot_search, kernels.relax_forward,
             kernels.relax_backward, kernels.IMPLEMENTATION)
    try:
        for name, build, run in TASKS:
            if fast is not None:
                _use(fast, "fast")
                t_fast, v_fast = _time(build, run, args.rounds)
            _use(pure, "pure")
            t_pure, v_pure = _time(build, run, args.rounds)
            if fast is not None:
                if v_fast != v_pure:
                    raise SystemExit(
                        f"implementations disagree on {name}: {v_fast} != {v_pure}"
                    )
                print(f"{name:<{width}}  {t_fast * 1e3:>8.1f}ms  "
                      f"{t_pure * 1e3:>8.1f}ms  {t_pure / t_fast:>6.1f}x")
            else:
                print(f"{name:<{width}}  {'n/a':>10}  {t_pure * 1e3:>8.1f}ms  {'':>7}")
    finally:
        (kernels.pivot_search, kernels.relax_forward,
         kernels.relax_backward, kernels.IMPLEMENTATION) = saved


if __name__ == "__main__":
    main()
