"""Benchmark the limit-set scan kernel: compiled vs pure-Python fallback.

The scan kernel is compiled with numba when available; setting
BANDSCHUR_JIT=0 makes the identical source run as plain Python.  This
script times the compiled path in-process, then re-runs the same grids in
a BANDSCHUR_JIT=0 subprocess so the fallback is measured with no compiled
code anywhere in the call chain, and checks both paths produce the same
arrays.

Run:  python3 benchmarks/bench_limitset.py
"""

import os
import subprocess
import sys
import tempfile
import time

import numpy as np

from bandschur import _kernels
from bandschur.spectra import DEFAULT_TOL, MAX_SWEEPS, GridSpec, _initial_circle
from bandschur.toeplitz import BandedSymbol

CASES = [
    ("tridiagonal", BandedSymbol((1, 0, 1)), 1, "-3,3,-1,1,241,81"),
    ("band-4", BandedSymbol((1, 0.4, 0.1, -0.3, 0.2)), 2, "-2,2,-2,2,101,101"),
]
REPEATS = 3


def run_scan(sym, c, grid):
    base = np.asarray(sym.coeffs, dtype=np.complex128)
    z0 = _initial_circle(base, 0)
    vre = np.tile(grid.re_values(), grid.ny)
    vim = np.repeat(grid.im_values(), grid.nx)
    moduli = np.empty((len(vre), sym.band), dtype=np.float64)
    ok = np.empty(len(vre), dtype=np.bool_)
    start = time.perf_counter()
    _kernels.scan_moduli(
        base, c, vre, vim, z0, DEFAULT_TOL, MAX_SWEEPS, moduli, ok
    )
    return moduli, ok, time.perf_counter() - start


def run_all():
    """Best-of-N scan time per case, after a warm-up compile run."""
    warm = GridSpec.parse("-1,1,-1,1,3,3")
    results = []
    for name, sym, c, grid_text in CASES:
        grid = GridSpec.parse(grid_text)
        run_scan(sym, c, warm)
        best, moduli, ok = None, None, None
        for _ in range(REPEATS):
            m, o, t = run_scan(sym, c, grid)
            if best is None or t < best:
                best, moduli, ok = t, m, o
        results.append((name, grid.nx * grid.ny, best, moduli, ok))
    return results


def main():
    if len(sys.argv) == 3 and sys.argv[1] == "--worker":
        arrays = {}
        for i, (_, _, seconds, moduli, ok) in enumerate(run_all()):
            arrays[f"t{i}"] = np.array(seconds)
            arrays[f"m{i}"] = moduli
            arrays[f"ok{i}"] = ok
        np.savez(sys.argv[2], **arrays)
        return

    compiled = hasattr(_kernels.scan_moduli, "py_func")
    results = run_all()
    if not compiled:
        print(
            "kernel is not compiled (numba missing or BANDSCHUR_JIT=0); "
            "single-path timings:"
        )
        for name, npts, seconds, _, _ in results:
            print(f"  {name}: {seconds:8.3f} s  ({npts / seconds:,.0f} pts/s)")
        return

    with tempfile.TemporaryDirectory() as tmp:
        out = os.path.join(tmp, "pure.npz")
        env = dict(os.environ, BANDSCHUR_JIT="0")
        subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--worker", out],
            check=True,
            env=env,
        )
        pure = np.load(out)
        for i, (name, npts, t_jit, m_jit, ok_jit) in enumerate(results):
            t_py = float(pure[f"t{i}"])
            diff = float(np.max(np.abs(m_jit - pure[f"m{i}"])))
            flags = bool(np.array_equal(ok_jit, pure[f"ok{i}"]))
            print(f"\n{name}: {npts} grid points")
            print(f"  compiled:     {t_jit:8.3f} s  ({npts / t_jit:,.0f} pts/s)")
            print(f"  pure python:  {t_py:8.3f} s  ({npts / t_py:,.0f} pts/s)")
            print(f"  speedup:      {t_py / t_jit:8.1f}x")
            print(f"  max |moduli difference|: {diff:.3e}")
            print(f"  convergence flags identical: {flags}")
            if diff > 1e-8 or not flags:
                print("  WARNING: paths disagree beyond tolerance")


if __name__ == "__main__":
    main()
