"""Time the pure-Python and compiled enumeration kernels side by side.

Both backends expose the same enumerate_subgroups(table, cap); this
script runs each on a ladder of groups and reports best-of-N wall
times.  Run from a checkout:

    python3 benchmarks/compare_backends.py [--repeats N] [--max-order B]
"""

import argparse
import time

from metazeta import GroupParams, OracleLimits, build_group
from metazeta import _purecore
from metazeta.oracle import DEFAULT_MAX_SUBGROUPS

try:
    from metazeta import _fastcore
except ImportError:
    _fastcore = None

# One group per order, mixing abelian and nonabelian presentations.
LADDER = [
    GroupParams(2, 2, 1, 3),
    GroupParams(2, 2, 2, 3),
    GroupParams(2, 3, 2, 5),
    GroupParams(3, 2, 2, 4),
    GroupParams(2, 4, 3, 3),
    GroupParams(2, 4, 4, 3),
    GroupParams(2, 5, 4, 3),
]


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=1,
                    help="take the best of N runs per backend")
    ap.add_argument("--max-order", type=int, default=256,
                    help="skip ladder entries above this order; the pure "
                         "backend needs about a minute at 512")
    args = ap.parse_args()

    limits = OracleLimits(max_order=max(args.max_order, 8),
                          max_subgroups=DEFAULT_MAX_SUBGROUPS)
    if _fastcore is None:
        print("compiled backend not built; timing pure backend only")

    header = f"{'group':<14}{'order':>6}{'subgroups':>10}{'pure':>10}{'compiled':>10}{'speedup':>9}"
    print(header)
    print("-" * len(header))
    for params in LADDER:
        if params.order > args.max_order:
            continue
        table = build_group(params, limits).table
        t_pure, subs = best_of(
            lambda: _purecore.enumerate_subgroups(table, DEFAULT_MAX_SUBGROUPS),
            args.repeats)
        row = f"G{(params.p, params.m, params.n, params.k)!s:<13}{params.order:>6}{len(subs):>10}{t_pure * 1e3:>8.1f}ms"
        if _fastcore is not None:
            t_fast, fast_subs = best_of(
                lambda: _fastcore.enumerate_subgroups(table, DEFAULT_MAX_SUBGROUPS),
                args.repeats)
            if sorted(fast_subs) != sorted(subs):
                raise SystemExit(f"backend disagreement on {params}")
            row += f"{t_fast * 1e3:>8.1f}ms{t_pure / t_fast:>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
