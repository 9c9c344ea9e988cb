#!/usr/bin/env python3
"""Compare the compiled numeric core against the pure-Python fallback.

Three workloads: raw scalar evaluation of registry functions, adaptive
Gauss-Kronrod integration of registry integrands (the compiled fast path),
and integration of a plain Python closure (the callback path, where the
compiled core only saves loop overhead). Values are cross-checked while
timing so the table doubles as a parity spot check.

Usage: python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import math
import time

from quadcert import _purepy

try:
    from quadcert import _core
except ImportError:
    _core = None

INTEGRANDS = [
    ("power:2 on [0,1]", "power", (2.0,), -math.inf, 0.0, 1.0),
    ("power:2.5 on [.1,2]", "power", (2.5,), 0.0, 0.1, 2.0),
    ("reciprocal on [1,2]", "reciprocal", (), 0.0, 1.0, 2.0),
    ("neglog on [.5,3]", "neglog", (), 0.0, 0.5, 3.0),
    ("exp on [0,1]", "exp", (), -math.inf, 0.0, 1.0),
    ("poly deg5 on [0,1]", "poly", (3.0, -2.0, 1.0, 0.0, 5.0, -1.0), -math.inf, 0.0, 1.0),
]


def timeit(fn, repeat):
    best = math.inf
    for _ in range(3):
        t0 = time.perf_counter()
        for _ in range(repeat):
            fn()
        best = min(best, (time.perf_counter() - t0) / repeat)
    return best


def bench_eval(repeat):
    print("\nscalar evaluation, 10k points per call")
    print(f"{'case':<22}{'python us':>12}{'compiled us':>14}{'speedup':>9}")
    xs = [0.1 + 1.9 * i / 9999 for i in range(10000)]
    for label, kind, params, lo, a, b in INTEGRANDS:
        fp = _purepy.make_func(kind, params, 0, lo, math.inf)
        fc = _core.make_func(kind, params, 0, lo, math.inf)
        tp = timeit(lambda: [fp(x) for x in xs], max(1, repeat // 10))
        tc = timeit(lambda: [fc(x) for x in xs], max(1, repeat // 10))
        print(f"{label:<22}{tp * 1e6:>12.1f}{tc * 1e6:>14.1f}{tp / tc:>9.1f}x")


def bench_quad(repeat):
    print("\nadaptive integration at tol=1e-12, registry fast path")
    print(f"{'case':<22}{'python us':>12}{'compiled us':>14}{'speedup':>9}{'value diff':>12}")
    for label, kind, params, lo, a, b in INTEGRANDS:
        fp = _purepy.make_func(kind, params, 0, lo, math.inf)
        fc = _core.make_func(kind, params, 0, lo, math.inf)
        vp = _purepy.adaptive_quad(fp, a, b, 1e-12, 4096)[0]
        vc = _core.adaptive_quad(fc, a, b, 1e-12, 4096)[0]
        tp = timeit(lambda: _purepy.adaptive_quad(fp, a, b, 1e-12, 4096), repeat)
        tc = timeit(lambda: _core.adaptive_quad(fc, a, b, 1e-12, 4096), repeat)
        print(f"{label:<22}{tp * 1e6:>12.1f}{tc * 1e6:>14.1f}{tp / tc:>9.1f}x"
              f"{abs(vp - vc):>12.1e}")


def bench_callback(repeat):
    print("\nadaptive integration of a Python closure (callback path)")
    g = lambda x: math.exp(x) * math.cos(3.0 * x)
    vp = _purepy.adaptive_quad(g, 0.0, 2.0, 1e-12, 4096)[0]
    vc = _core.adaptive_quad(g, 0.0, 2.0, 1e-12, 4096)[0]
    tp = timeit(lambda: _purepy.adaptive_quad(g, 0.0, 2.0, 1e-12, 4096), repeat)
    tc = timeit(lambda: _core.adaptive_quad(g, 0.0, 2.0, 1e-12, 4096), repeat)
    print(f"{'exp(x)cos(3x) [0,2]':<22}{tp * 1e6:>12.1f}{tc * 1e6:>14.1f}{tp / tc:>9.1f}x"
          f"{abs(vp - vc):>12.1e}")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=500)
    args = parser.parse_args()
    if _core is None:
        raise SystemExit("compiled extension not built; nothing to compare "
                         "(pip install -e . --no-build-isolation)")
    print(f"repeat = {args.repeat} (best of 3 runs)")
    bench_eval(args.repeat)
    bench_quad(args.repeat)
    bench_callback(args.repeat)


if __name__ == "__main__":
    main()
