#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled twin.

Run from the repository root after installing the package:

    python benchmarks/bench_kernels.py [--repeat N]

Times the scalar kernels on representative arguments and a grid workload
shaped like the certification suite (consensus sweep at several exponents).
The pure module is imported directly so the comparison works regardless of
which backend the package selected.
"""

import argparse
import time

from sincsum import _kernels_py as pure

try:
    from sincsum import _kernels_cy as compiled
except ImportError:
    compiled = None


def _time(fn, repeat):
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn()
    return (time.perf_counter() - t0) / repeat


def _bench_pair(name, make_fn, repeat):
    t_py = _time(make_fn(pure), repeat)
    if compiled is None:
        print(f"{name:28s} pure {1e6 * t_py:10.2f} us   compiled          - ")
        return
    t_cy = _time(make_fn(compiled), repeat)
    print(
        f"{name:28s} pure {1e6 * t_py:10.2f} us   compiled "
        f"{1e6 * t_cy:10.2f} us   speedup {t_py / t_cy:6.1f}x"
    )


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=200)
    args = parser.parse_args()

    if compiled is None:
        print("note: compiled backend unavailable, timing pure Python only")

    cases = [
        (
            "sinc x1000",
            lambda mod: lambda: [mod.sinc(0.001 * i) for i in range(1000)],
        ),
        (
            "zeta_em(2, 1.3)",
            lambda mod: lambda: mod.zeta_em(2.0, 1.3),
        ),
        (
            "zeta_em(17, 0.2)",
            lambda mod: lambda: mod.zeta_em(17.0, 0.2),
        ),
        (
            "power_sum_fixed(1, .3, 16)",
            lambda mod: lambda: mod.power_sum_fixed(1.0, 0.3, 16),
        ),
        (
            "power_sum_fixed(8, .3, 16)",
            lambda mod: lambda: mod.power_sum_fixed(8.0, 0.3, 16),
        ),
        (
            "power_sum_zeta(2, .3)",
            lambda mod: lambda: mod.power_sum_zeta(2.0, 0.3),
        ),
        (
            "power_sum_deriv(2, .3)",
            lambda mod: lambda: mod.power_sum_deriv(2.0, 0.3),
        ),
        (
            "grid sweep 512 x 3 routes",
            lambda mod: lambda: [
                (
                    mod.power_sum_fixed(r, i / 511.0, 16),
                    mod.power_sum_zeta(r, i / 511.0),
                )
                for r in (1.0, 2.0, 5.0)
                for i in range(512)
            ],
        ),
    ]
    for name, make_fn in cases:
        repeat = max(1, args.repeat // (50 if "grid" in name or "x1000" in name else 1))
        _bench_pair(name, make_fn, repeat)


if __name__ == "__main__":
    main()
