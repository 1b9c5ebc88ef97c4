"""Aberth-Ehrlich iteration kernels.

The grid scan in spectra evaluates every grid point with the same kernel,
so this is the one hot loop in the package.  When numba is importable and
the environment flag BANDSCHUR_JIT is not "0", the functions below are
compiled with @njit (nogil, cached); otherwise the identical Python source
runs as-is, so both paths perform the same floating operations in the
same order.
"""

import os

import numpy as np

JIT_ENABLED = os.environ.get("BANDSCHUR_JIT", "1") != "0"
if JIT_ENABLED:
    try:
        from numba import njit
    except ImportError:
        JIT_ENABLED = False


def aberth_sweeps(coeffs, z, tol_abs, max_iter):
    """Run Aberth updates on z in place until residuals drop below tol_abs.

    coeffs are ascending; z holds the current root iterates.  Returns True
    if every |p(z_i)| <= tol_abs within max_iter sweeps.  Updates are
    sequential within a sweep (later roots see earlier corrections).
    """
    d = z.shape[0]
    deg = coeffs.shape[0] - 1
    for _ in range(max_iter):
        done = True
        for i in range(d):
            pv = coeffs[deg]
            for m in range(deg - 1, -1, -1):
                pv = pv * z[i] + coeffs[m]
            if abs(pv) > tol_abs:
                done = False
                break
        if done:
            return True
        for i in range(d):
            zi = z[i]
            pv = coeffs[deg]
            dv = 0j
            for m in range(deg - 1, -1, -1):
                dv = dv * zi + pv
                pv = pv * zi + coeffs[m]
            if pv == 0j:
                continue
            s = 0j
            for j in range(d):
                if j != i:
                    diff = zi - z[j]
                    if diff != 0j:
                        s += 1.0 / diff
            if dv != 0j:
                w = pv / dv
                denom = 1.0 - w * s
                if denom != 0j:
                    z[i] = zi - w / denom
            elif s != 0j:
                # stationary point of p: fall back to the pairwise repulsion
                z[i] = zi + 1.0 / s
    done = True
    for i in range(d):
        pv = coeffs[deg]
        for m in range(deg - 1, -1, -1):
            pv = pv * z[i] + coeffs[m]
        if abs(pv) > tol_abs:
            done = False
            break
    return done


def scan_moduli(base, c_index, vre, vim, z0, tol, max_iter, moduli, ok):
    """Sorted root moduli of base(z) - v*z^c_index for a batch of v values.

    Writes into moduli[p, :] (ascending per point) and ok[p]; the caller
    owns allocation so thread workers can fill disjoint slices.
    """
    npts = vre.shape[0]
    deg = base.shape[0] - 1
    coeffs = np.empty(deg + 1, np.complex128)
    z = np.empty(deg, np.complex128)
    for p in range(npts):
        for m in range(deg + 1):
            coeffs[m] = base[m]
        coeffs[c_index] = base[c_index] - complex(vre[p], vim[p])
        scale = 0.0
        for m in range(deg + 1):
            a = abs(coeffs[m])
            if a > scale:
                scale = a
        for i in range(deg):
            z[i] = z0[i]
        ok[p] = aberth_sweeps(coeffs, z, tol * scale, max_iter)
        for i in range(deg):
            moduli[p, i] = abs(z[i])
        for i in range(1, deg):
            key = moduli[p, i]
            j = i - 1
            while j >= 0 and moduli[p, j] > key:
                moduli[p, j + 1] = moduli[p, j]
                j -= 1
            moduli[p, j + 1] = key
    return moduli, ok


if JIT_ENABLED:
    aberth_sweeps = njit(cache=True, nogil=True)(aberth_sweeps)
    scan_moduli = njit(cache=True, nogil=True)(scan_moduli)
