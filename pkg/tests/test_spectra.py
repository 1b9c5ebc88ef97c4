"""Tests for root finding, limit-set scanning, and finite-section spectra."""

import json
import math
import os
import subprocess
import sys

import numpy as np
import pytest

from bandschur.shapes import MinorSpec
from bandschur.spectra import (
    ComparisonResult,
    GridSpec,
    RootConvergenceError,
    finite_section_spectrum,
    limit_set_scan,
    poly_roots,
    root_modulus_profile,
    spectrum_vs_limitset,
)
from bandschur.toeplitz import BandedSymbol


TRIDIAG = BandedSymbol((1, 0, 1))


class TestPolyRoots:
    def test_cubic_with_known_roots(self):
        roots = poly_roots([-6, 11, -6, 1])
        assert np.allclose(roots, [1, 2, 3], atol=1e-9)

    def test_degree_six_factorial_roots(self):
        coeffs = np.array([1.0 + 0j])
        for m in range(1, 7):
            coeffs = np.convolve(coeffs, np.array([-m, 1.0], dtype=complex))
        roots = poly_roots(coeffs)
        assert np.allclose(roots, np.arange(1, 7), rtol=1e-8)

    def test_zero_constant_term(self):
        roots = poly_roots([0, -1, 0, 1])
        assert np.allclose(sorted(np.abs(roots)), [0, 1, 1], atol=1e-9)

    def test_complex_coefficients(self):
        roots = poly_roots([1, 0, 1])
        assert np.allclose(np.sort_complex(roots), [-1j, 1j], atol=1e-9)

    def test_sorted_by_modulus_then_phase(self):
        roots = poly_roots([-6, 11, -6, 1])
        moduli = np.abs(roots)
        assert np.all(np.diff(moduli) >= -1e-12)

    def test_validation(self):
        with pytest.raises(ValueError, match="degree"):
            poly_roots([3])
        with pytest.raises(ValueError, match="leading"):
            poly_roots([1, 2, 0])

    def test_non_convergence_carries_best_iterate(self):
        coeffs = np.array([1.0 + 0j])
        for m in range(1, 7):
            coeffs = np.convolve(coeffs, np.array([-m, 1.0], dtype=complex))
        with pytest.raises(RootConvergenceError) as info:
            poly_roots(coeffs, max_iter=1)
        assert info.value.best.shape == (6,)

    def test_deterministic(self):
        a = poly_roots([-6, 11, -6, 1])
        b = poly_roots([-6, 11, -6, 1])
        assert np.array_equal(a, b)

    def test_seed_independent_of_answer(self):
        a = poly_roots([-6, 11, -6, 1], seed=0)
        b = poly_roots([-6, 11, -6, 1], seed=1)
        assert np.allclose(a, b, atol=1e-8)


class TestRootModulusProfile:
    def test_tridiagonal_at_origin(self):
        profile = root_modulus_profile(TRIDIAG, 1, 0.0)
        assert np.allclose(profile, [1.0, 1.0], atol=1e-9)

    def test_golden_real_shift(self):
        # 1 - 3z + z^2 has roots (3 -+ sqrt(5))/2.
        profile = root_modulus_profile(TRIDIAG, 1, 3.0)
        lo = (3 - math.sqrt(5)) / 2
        hi = (3 + math.sqrt(5)) / 2
        assert np.allclose(profile, [lo, hi], atol=1e-9)

    def test_ascending(self):
        rng = np.random.default_rng(3)
        sym = BandedSymbol((1, 0.4, 0.1, -0.3, 0.2))
        for _ in range(5):
            v = complex(rng.normal(), rng.normal())
            profile = root_modulus_profile(sym, 2, v)
            assert np.all(np.diff(profile) >= -1e-12)
            assert np.all(profile > 0)

    def test_c_bounds(self):
        with pytest.raises(ValueError):
            root_modulus_profile(TRIDIAG, 0, 0.0)
        with pytest.raises(ValueError):
            root_modulus_profile(TRIDIAG, 2, 0.0)

    def test_degree_drop_rejected(self):
        with pytest.raises(ValueError, match="degree"):
            root_modulus_profile(BandedSymbol((1, 1, 0)), 1, 0.0)

    def test_reversal_pairs_moduli_reciprocally(self):
        # Roots of the reversed coefficient list have reciprocal moduli.
        sym = BandedSymbol((1, 0.7, 0.2))
        v = 0.4 + 0.3j
        coeffs = [sym.coeffs[0], sym.coeffs[1] - v, sym.coeffs[2]]
        forward = np.abs(poly_roots(coeffs))
        backward = np.abs(poly_roots(coeffs[::-1]))
        assert np.allclose(
            np.sort(forward), np.sort(1.0 / backward), atol=1e-9
        )


class TestGridSpec:
    def test_parse_golden(self):
        grid = GridSpec.parse("-3,3,-1,1,241,81")
        assert (grid.re_min, grid.re_max) == (-3.0, 3.0)
        assert (grid.im_min, grid.im_max) == (-1.0, 1.0)
        assert (grid.nx, grid.ny) == (241, 81)
        assert grid.pitch() == pytest.approx(0.025)

    def test_values_hit_endpoints(self):
        grid = GridSpec.parse("-3,3,-1,1,241,81")
        assert grid.re_values()[0] == -3.0 and grid.re_values()[-1] == 3.0
        assert len(grid.im_values()) == 81

    def test_singleton_axis(self):
        grid = GridSpec(0, 0, -1, 1, 1, 3)
        assert grid.pitch() == pytest.approx(1.0)
        assert list(grid.re_values()) == [0.0]

    def test_parse_errors(self):
        with pytest.raises(ValueError):
            GridSpec.parse("1,2,3,4,5")
        with pytest.raises(ValueError):
            GridSpec.parse("a,2,3,4,5,6")
        with pytest.raises(ValueError):
            GridSpec.parse("3,-3,-1,1,5,5")
        with pytest.raises(ValueError):
            GridSpec.parse("-3,3,-1,1,0,5")

    def test_json(self):
        grid = GridSpec.parse("-1,1,-1,1,5,5")
        assert json.loads(json.dumps(grid.to_json_obj()))["nx"] == 5


class TestLimitSetScan:
    def test_tridiagonal_hits_lie_on_real_segment(self):
        grid = GridSpec.parse("-3,3,-1,1,61,21")
        report = limit_set_scan(TRIDIAG, 1, grid, tol=1e-2)
        assert report.hits
        assert not report.failures
        for re_v, im_v, gap in report.hits:
            assert abs(im_v) <= 0.2
            assert abs(re_v) <= 2.2
            assert 0 <= gap <= 1e-2

    def test_far_grid_sees_nothing(self):
        grid = GridSpec.parse("5,6,1,2,5,5")
        report = limit_set_scan(TRIDIAG, 1, grid, tol=1e-2)
        assert report.hits == ()
        assert report.failures == ()

    def test_thread_count_does_not_change_hits(self):
        grid = GridSpec.parse("-3,3,-1,1,31,11")
        one = limit_set_scan(TRIDIAG, 1, grid, tol=1e-2, threads=1)
        four = limit_set_scan(TRIDIAG, 1, grid, tol=1e-2, threads=4)
        assert one.hits == four.hits
        assert one.failures == four.failures

    def test_conjugation_symmetry_for_real_symbol(self):
        sym = BandedSymbol((1, 0.5, 0.25))
        grid = GridSpec.parse("-2,2,-1,1,21,11")
        report = limit_set_scan(sym, 1, grid, tol=5e-2)
        assert report.hits
        seen = {(round(re_v, 9), round(im_v, 9)) for re_v, im_v, _ in report.hits}
        for re_v, im_v in seen:
            assert (re_v, round(-im_v, 9)) in seen

    def test_gap_matches_direct_profile(self):
        grid = GridSpec.parse("-3,3,-1,1,31,11")
        report = limit_set_scan(TRIDIAG, 1, grid, tol=1e-2)
        for re_v, im_v, gap in report.hits[:5]:
            profile = root_modulus_profile(TRIDIAG, 1, complex(re_v, im_v))
            direct = (profile[1] - profile[0]) / profile[1]
            assert abs(direct - gap) <= 1e-9

    def test_csv_shape(self):
        grid = GridSpec.parse("-3,3,-1,1,31,11")
        report = limit_set_scan(TRIDIAG, 1, grid, tol=1e-2)
        lines = report.to_csv().splitlines()
        assert lines[0] == "re_v,im_v,gap"
        assert len(lines) == 1 + len(report.hits)
        assert report.note and "exceptional" in report.note

    def test_hits_in_row_major_grid_order(self):
        grid = GridSpec.parse("-3,3,-1,1,31,11")
        report = limit_set_scan(TRIDIAG, 1, grid, tol=1e-2)
        points = [(im_v, re_v) for re_v, im_v, _ in report.hits]
        assert points == sorted(points)


class TestFiniteSectionSpectrum:
    def test_tridiagonal_closed_form(self):
        spec = MinorSpec((), (1,), 2)
        k = 5
        result = finite_section_spectrum(TRIDIAG, spec, k)
        expected = sorted(2 * math.cos(m * math.pi / (k + 1)) for m in range(1, k + 1))
        got = result.eigenvalues
        assert np.allclose([z.imag for z in got], 0, atol=1e-9)
        assert np.allclose([z.real for z in got], expected, atol=1e-9)

    def test_general_band_two_closed_form(self):
        sym = BandedSymbol((1, 0.7, 0.3))
        k = 6
        result = finite_section_spectrum(sym, MinorSpec((), (1,), 2), k)
        expected = sorted(
            0.7 + 2 * math.sqrt(0.3) * math.cos(m * math.pi / (k + 1))
            for m in range(1, k + 1)
        )
        assert np.allclose([z.real for z in result.eigenvalues], expected, atol=1e-9)
        assert np.allclose([z.imag for z in result.eigenvalues], 0, atol=1e-9)

    def test_single_entry(self):
        sym = BandedSymbol((1, 0.7, 0.3))
        result = finite_section_spectrum(sym, MinorSpec((), (1,), 2), 1)
        assert result.eigenvalues == (0.7 + 0j,)

    def test_no_deleted_columns_gives_unit_triangular(self):
        result = finite_section_spectrum(TRIDIAG, MinorSpec((), (), 2), 3)
        assert np.allclose(result.eigenvalues, [1, 1, 1], atol=1e-12)

    def test_k_must_be_positive(self):
        with pytest.raises(ValueError):
            finite_section_spectrum(TRIDIAG, MinorSpec((), (1,), 2), 0)

    def test_sorted_and_csv(self):
        result = finite_section_spectrum(TRIDIAG, MinorSpec((), (1,), 2), 4)
        keys = [(z.real, z.imag) for z in result.eigenvalues]
        assert keys == sorted(keys)
        lines = result.to_csv().splitlines()
        assert lines[0] == "re,im" and len(lines) == 5


class TestSpectrumVsLimitSet:
    def test_eigenvalues_land_near_hits(self):
        grid = GridSpec.parse("-3,3,-1,1,121,41")
        result = spectrum_vs_limitset(TRIDIAG, 1, 8, grid, tol=1e-2)
        assert isinstance(result, ComparisonResult)
        assert result.hit_count > 0
        assert result.median_distance <= grid.pitch()
        assert result.max_distance <= grid.pitch()
        assert len(result.distances) == 8

    def test_empty_hit_set_is_an_error(self):
        grid = GridSpec.parse("5,6,1,2,3,3")
        with pytest.raises(ValueError, match="empty hit set"):
            spectrum_vs_limitset(TRIDIAG, 1, 4, grid, tol=1e-3)


class TestPurePythonPath:
    def test_env_flag_selects_pure_kernels_with_same_results(self):
        # Run a small scan in a subprocess with the JIT disabled and compare
        # hit coordinates and gaps against the in-process result.
        grid_text = "-3,3,-1,1,31,11"
        grid = GridSpec.parse(grid_text)
        report = limit_set_scan(TRIDIAG, 1, grid, tol=1e-2, threads=1)
        script = (
            "from bandschur import _kernels\n"
            "assert not _kernels.JIT_ENABLED\n"
            "from bandschur.spectra import GridSpec, limit_set_scan\n"
            "from bandschur.toeplitz import BandedSymbol\n"
            "report = limit_set_scan(BandedSymbol((1, 0, 1)), 1, "
            f"GridSpec.parse({grid_text!r}), tol=1e-2, threads=1)\n"
            "print(report.to_csv(), end='')\n"
        )
        env = dict(os.environ, BANDSCHUR_JIT="0")
        proc = subprocess.run(
            [sys.executable, "-c", script],
            capture_output=True,
            text=True,
            env=env,
            timeout=300,
        )
        assert proc.returncode == 0, proc.stderr
        lines = proc.stdout.splitlines()
        assert lines[0] == "re_v,im_v,gap"
        assert len(lines) == 1 + len(report.hits)
        for line, (re_v, im_v, gap) in zip(lines[1:], report.hits):
            pre, pim, pgap = map(float, line.split(","))
            assert pre == float(f"{re_v:.12g}")
            assert pim == float(f"{im_v:.12g}")
            assert abs(pgap - gap) <= 1e-6
