"""Closed-form evaluation of minor determinants from symbol roots.

Two equivalent forms of Widom's determinant formula for the contiguous
minor (first c columns deleted), plus the Hall-type evaluation of an
arbitrary Schur polynomial at pairwise distinct points.  All three are
rational expressions in the roots, so distinctness is a hard hypothesis:
near-coincident root sets are rejected, not regularized (the exact
Jacobi-Trudi path covers confluent inputs).
"""

from __future__ import annotations

from itertools import combinations, permutations

SEPARATION = 1e-9


def check_separated(roots, label: str = "roots") -> tuple[complex, ...]:
    """Reject root multisets with a pair closer than 1e-9 relative."""
    roots = tuple(complex(v) for v in roots)
    scale = max((abs(v) for v in roots), default=0.0) or 1.0
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if abs(roots[i] - roots[j]) < SEPARATION * scale:
                raise ValueError(
                    f"{label} {i} and {j} coincide within {SEPARATION} relative"
                )
    return roots


def widom_original(psi_roots, s_n: complex, c: int, k: int) -> complex:
    """Classical form: sum over (n-c)-subsets of the symbol's roots.

    psi_roots are the n roots of the symbol polynomial 1 + s_1 t + ... +
    s_n t^n; each subset contributes C_sigma * w_sigma^k with
    w_sigma = (-1)^(n-c) s_n prod(roots in sigma) and C_sigma a cross-ratio
    of root differences.
    """
    roots = check_separated(psi_roots, "symbol roots")
    n = len(roots)
    if not 0 <= c <= n:
        raise ValueError(f"c must be in 0..{n}, got {c}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    sign = (-1) ** (n - c)
    total = 0j
    for sigma in combinations(range(n), n - c):
        inside = set(sigma)
        w = sign * complex(s_n)
        coeff = 1 + 0j
        for j in sigma:
            w *= roots[j]
            coeff *= roots[j] ** c
            for i in range(n):
                if i not in inside:
                    coeff /= roots[j] - roots[i]
        total += coeff * w**k
    return total


def widom_modified(chi_roots, c: int, k: int) -> complex:
    """Root-product form: sum over c-subsets of the reciprocal-type roots.

    chi_roots are the roots x_i of the reversed symbol polynomial
    t^n + s_1 t^(n-1) + ... + s_n (so s_d = e_d(x)); each subset tau
    contributes prod_{i in tau} x_i^k * prod_{i in tau, j not in tau}
    x_i / (x_i - x_j).
    """
    roots = check_separated(chi_roots, "characteristic roots")
    n = len(roots)
    if not 0 <= c <= n:
        raise ValueError(f"c must be in 0..{n}, got {c}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    total = 0j
    for tau in combinations(range(n), c):
        inside = set(tau)
        term = 1 + 0j
        for i in tau:
            term *= roots[i] ** k
            for j in range(n):
                if j not in inside:
                    term *= roots[i] / (roots[i] - roots[j])
        total += term
    return total


def hall_schur_eval(parts, points) -> complex:
    """Schur polynomial value at distinct points, no tableaux involved.

    Sums over the distinct rearrangements a of the partition (padded with
    zeros to the number of points): each contributes
    prod x_i^(a_i) * prod_{a_i > a_j} x_i / (x_i - x_j).
    """
    x = check_separated(points, "evaluation points")
    n = len(x)
    parts = tuple(int(p) for p in parts)
    if any(a < b for a, b in zip(parts, parts[1:])) or (parts and parts[-1] < 0):
        raise ValueError(f"not a partition: {parts}")
    if len(parts) > n:
        if any(p != 0 for p in parts[n:]):
            raise ValueError(f"partition {parts} longer than point count {n}")
        parts = parts[:n]
    padded = parts + (0,) * (n - len(parts))
    total = 0j
    for arrangement in sorted(set(permutations(padded))):
        term = 1 + 0j
        for i in range(n):
            if arrangement[i]:
                term *= x[i] ** arrangement[i]
            for j in range(n):
                if arrangement[i] > arrangement[j]:
                    term *= x[i] / (x[i] - x[j])
        total += term
    return total
