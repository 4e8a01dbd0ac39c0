"""Throughput comparison: compiled extension vs pure-Python core.

Both backends are arithmetically identical; the only difference is speed.
Run:  python benchmarks/bench_core.py
"""

import math
import time

import casimir_gear.quadrature as quad
from casimir_gear import _purecore
from casimir_gear.quadrature import ProfileEngine, QuadratureSpec

try:
    from casimir_gear import _fastcore
except ImportError:
    _fastcore = None


def bench(fn, min_time=0.3):
    n = 1
    while True:
        t0 = time.perf_counter()
        for _ in range(n):
            fn()
        dt = time.perf_counter() - t0
        if dt >= min_time:
            return dt / n
        n = max(n * 2, int(n * min_time / max(dt, 1e-9)))


def run(backend):
    out = {}
    out["bracket eval (m<=7)"] = bench(
        lambda: backend.open_brackets(7, 0.5, 1.3, 5.0))
    out["kz panel (12 nodes)"] = bench(
        lambda: backend.gl12_open_panel(7, 0.5, 5.0, 0.0, 2.0))
    out["concentric panel"] = bench(
        lambda: backend.gl12_conc_panel(7, 0.5, 3.0, 0.0, 2.0))

    def engine_build():
        orig = quad.backend
        quad.backend = backend
        try:
            eng = ProfileEngine("open-gear", 5.0, 7, QuadratureSpec())
            eng.build()
            for k in range(64):
                eng.energy(2.0 * math.pi * k / 64, 6)
                eng.torque(2.0 * math.pi * k / 64, 6)
        finally:
            quad.backend = orig

    out["engine build + 64-row sweep (y=5)"] = bench(engine_build, min_time=1.0)
    return out


def fmt(seconds):
    if seconds < 1e-3:
        return f"{seconds * 1e6:8.1f} us"
    if seconds < 1.0:
        return f"{seconds * 1e3:8.2f} ms"
    return f"{seconds:8.2f} s "


def main():
    backends = [("pure", _purecore)]
    if _fastcore is not None:
        backends.append(("compiled", _fastcore))
    results = {name: run(mod) for name, mod in backends}
    keys = list(next(iter(results.values())))
    width = max(len(k) for k in keys)
    header = f"{'kernel':<{width}}  " + "".join(f"{n:>12}" for n in results)
    if len(results) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for k in keys:
        row = f"{k:<{width}}  " + "".join(fmt(results[n][k]) for n in results)
        if len(results) == 2:
            row += f"{results['pure'][k] / results['compiled'][k]:9.1f}x"
        print(row)
    if _fastcore is None:
        print("\n(compiled backend unavailable; showing pure only)")


if __name__ == "__main__":
    main()
