"""Command-line front end with stable text, JSON, and CSV output.

Exit codes: 0 on success, 2 on a validation error (malformed flag values,
inconsistent dimensions), 1 on a computation failure (an identity that
does not hold, root-finder non-convergence, an empty scan hit set).
Repeated invocations with the same arguments produce byte-identical
output: all orderings are canonical and all seeds are fixed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .polyring import MultiPoly
from .recurrence import char_coeffs, recurrence_residual, verify_recurrence
from .schur import schur_jacobi_trudi, symbolic_det
from .shapes import (
    MinorSpec,
    Partition,
    SkewShape,
    min_k,
    parse_partition,
    shape_from_minor,
)
from .spectra import (
    GridSpec,
    finite_section_spectrum,
    limit_set_scan,
    poly_roots,
    root_modulus_profile,
    spectrum_vs_limitset,
)
from .tableaux import (
    enumerate_ssyt,
    extension_sequences,
    insert_sequence,
    schur_by_tableaux,
)
from .toeplitz import (
    BandedSymbol,
    build_minor_numeric,
    build_minor_symbolic,
    det_numeric,
    format_complex,
    verify_minor_schur,
)
from .widom import check_separated, hall_schur_eval, widom_modified, widom_original

SYMBOL_HELP = (
    "comma-separated band coefficients s_0,...,s_n; each value is a complex "
    "number written as a, bi, or a+bi / a-bi (example: 1,0.5-2i,3); "
    "s_0 must be 1 and is prepended automatically when omitted"
)

DUAL_ROUTE_TOL = 1e-8
GAP_CROSSCHECK_TOL = 1e-4

# Which library operations each command drives; the test suite checks that
# every public operation appears here and that every name resolves.
COMMAND_OPERATIONS = {
    "schur": (
        "polyring.MultiPoly.__add__",
        "polyring.MultiPoly.__mul__",
        "polyring.elementary_symmetric",
        "shapes.Partition.conjugate",
        "tableaux.enumerate_ssyt",
        "tableaux.schur_by_tableaux",
        "schur.jacobi_trudi_matrix",
        "schur.symbolic_det",
        "schur.schur_jacobi_trudi",
    ),
    "minor-det": (
        "toeplitz.build_minor_symbolic",
        "schur.symbolic_det",
        "toeplitz.build_minor_numeric",
        "toeplitz.det_numeric",
        "spectra.poly_roots",
        "polyring.MultiPoly.evaluate",
    ),
    "check-identity": (
        "shapes.min_k",
        "shapes.shape_from_minor",
        "toeplitz.verify_minor_schur",
        "tableaux.enumerate_ssyt",
        "tableaux.insert_sequence",
        "tableaux.extension_sequences",
    ),
    "recurrence": (
        "recurrence.char_coeffs",
        "recurrence.recurrence_residual",
        "recurrence.verify_recurrence",
        "shapes.min_k",
    ),
    "widom": (
        "spectra.poly_roots",
        "widom.check_separated",
        "widom.widom_original",
        "widom.widom_modified",
        "widom.hall_schur_eval",
        "toeplitz.build_minor_numeric",
        "toeplitz.det_numeric",
    ),
    "limitset": (
        "spectra.limit_set_scan",
        "spectra.root_modulus_profile",
    ),
    "eigs": (
        "spectra.finite_section_spectrum",
        "toeplitz.build_minor_numeric",
    ),
    "compare": (
        "spectra.spectrum_vs_limitset",
        "spectra.limit_set_scan",
        "spectra.finite_section_spectrum",
    ),
}


class UsageError(ValueError):
    """Bad flag value or inconsistent request; maps to exit code 2."""


def _parse_partition_flag(text: str, flag: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from None


def _parse_indices(text: str, flag: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    out = []
    for tok in text.split(","):
        try:
            out.append(int(tok.strip()))
        except ValueError:
            raise UsageError(f"{flag}: bad index {tok.strip()!r}") from None
    return tuple(out)


def _parse_symbol_flag(text: str) -> BandedSymbol:
    try:
        return BandedSymbol.parse(text)
    except ValueError as exc:
        raise UsageError(f"--symbol: {exc}") from None


def _parse_grid_flag(text: str) -> GridSpec:
    try:
        return GridSpec.parse(text)
    except ValueError as exc:
        raise UsageError(f"--grid: {exc}") from None


def _make_spec(alpha: str, beta: str, band: int) -> MinorSpec:
    rows = _parse_indices(alpha, "--alpha")
    cols = _parse_indices(beta, "--beta")
    try:
        return MinorSpec(rows, cols, band)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _require_nvars(nvars: int) -> int:
    if nvars < 1:
        raise UsageError(f"--nvars must be >= 1, got {nvars}")
    return nvars


def _fmt_parts(parts) -> str:
    return "(" + ",".join(str(p) for p in parts) + ")"


def _fmt_shape(shape: SkewShape) -> str:
    return (
        _fmt_parts(shape.outer.normalized())
        + "/"
        + _fmt_parts(shape.inner.normalized())
    )


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2)


def _run_schur(args) -> tuple[str, int, str | None]:
    nvars = _require_nvars(args.nvars)
    outer = _parse_partition_flag(args.outer, "--outer")
    inner = _parse_partition_flag(args.inner, "--inner")
    try:
        shape = SkewShape(outer, inner)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    polys: dict[str, MultiPoly] = {}
    if args.method in ("tableaux", "both"):
        polys["tableaux"] = schur_by_tableaux(shape, nvars)
    if args.method in ("jacobi-trudi", "both"):
        polys["jacobi-trudi"] = schur_jacobi_trudi(shape, nvars)
    equal = None
    if args.method == "both":
        equal = polys["tableaux"] == polys["jacobi-trudi"]
    if args.format == "json":
        obj = {
            "outer": list(outer.normalized()),
            "inner": list(inner.normalized()),
            "nvars": nvars,
        }
        if "tableaux" in polys:
            obj["tableaux"] = polys["tableaux"].to_json_obj()
        if "jacobi-trudi" in polys:
            obj["jacobi_trudi"] = polys["jacobi-trudi"].to_json_obj()
        if equal is not None:
            obj["equal"] = equal
        out = _dump_json(obj)
    else:
        lines = [f"{name}: {poly}" for name, poly in polys.items()]
        if equal is not None:
            lines.append(f"equal: {'true' if equal else 'false'}")
        out = "\n".join(lines)
    if equal is False:
        return out, 1, "engines disagree"
    return out, 0, None


def _run_minor_det(args) -> tuple[str, int, str | None]:
    if args.nvars is None and args.symbol is None:
        raise UsageError("give --nvars (symbolic), --symbol (numeric), or both")
    if args.k < 0:
        raise UsageError(f"--k must be >= 0, got {args.k}")
    sym = _parse_symbol_flag(args.symbol) if args.symbol is not None else None
    if args.nvars is not None:
        band = _require_nvars(args.nvars)
        if sym is not None and sym.band != band:
            raise UsageError(
                f"--nvars {band} does not match --symbol band {sym.band}"
            )
    else:
        band = sym.band
    spec = _make_spec(args.alpha, args.beta, band)

    det_sym = None
    det_num = None
    if args.nvars is not None:
        det_sym = symbolic_det(build_minor_symbolic(spec, args.k))
    if sym is not None:
        det_num = det_numeric(build_minor_numeric(sym, spec, args.k))

    code, err = 0, None
    obj = {
        "alpha": list(spec.deleted_rows),
        "beta": list(spec.deleted_cols),
        "n": band,
        "k": args.k,
    }
    lines = []
    if det_sym is not None and det_num is not None:
        # dual route: evaluate the exact polynomial at the points x_i
        # recovered from the symbol (roots t_i of sum s_m t^m, x_i = -1/t_i)
        t_roots = poly_roots(list(sym.coeffs))
        chi_points = tuple(-1.0 / t for t in t_roots)
        value = det_sym.evaluate(chi_points)
        rel = abs(value - det_num) / max(1.0, abs(det_num))
        lines.append(f"det-symbolic: {det_sym}")
        lines.append(f"det-numeric: {format_complex(det_num)}")
        lines.append(f"det-evaluated: {format_complex(value)}")
        lines.append(f"rel-diff: {rel:.12g}")
        obj["det_symbolic"] = det_sym.to_json_obj()
        obj["det_numeric"] = format_complex(det_num)
        obj["det_evaluated"] = format_complex(value)
        obj["rel_diff"] = rel
        if rel > DUAL_ROUTE_TOL:
            code, err = 1, f"symbolic and numeric routes disagree: {rel:.3e}"
    elif det_sym is not None:
        lines.append(f"det: {det_sym}")
        obj["det"] = det_sym.to_json_obj()
    else:
        lines.append(f"det: {format_complex(det_num)}")
        obj["det"] = format_complex(det_num)
    out = _dump_json(obj) if args.format == "json" else "\n".join(lines)
    return out, code, err


def _run_check_identity(args) -> tuple[str, int, str | None]:
    nvars = _require_nvars(args.nvars)
    spec = _make_spec(args.alpha, args.beta, nvars)
    kmin = min_k(spec)
    if args.k < kmin:
        raise UsageError(f"--k must be >= min_k = {kmin} for this spec")

    ok_schur, residual = verify_minor_schur(spec, args.k)

    shape_k = shape_from_minor(spec, args.k)
    shape_next = shape_from_minor(spec, args.k + 1)
    tabs_k = enumerate_ssyt(shape_k, nvars)
    tabs_next = frozenset(enumerate_ssyt(shape_next, nvars))
    seqs = extension_sequences(spec.r, spec.c - spec.r, nvars)
    built: set = set()
    injective = True
    for seq in seqs:
        images = {insert_sequence(tab, seq) for tab in tabs_k}
        if len(images) != len(tabs_k):
            injective = False
        built |= images
    covered = built == tabs_next

    lines = [
        f"spec: alpha={_fmt_parts(spec.deleted_rows)} "
        f"beta={_fmt_parts(spec.deleted_cols)} n={nvars}",
        f"min_k: {kmin}",
        f"k: {args.k}",
        f"shape: {_fmt_shape(shape_k)} -> {_fmt_shape(shape_next)}",
    ]
    if ok_schur:
        lines.append("minor-vs-schur: ok")
    else:
        lines.append(f"minor-vs-schur: FAILED (residual: {residual})")
    if covered and injective:
        lines.append(
            f"insertion-step: ok ({len(tabs_k)} tableaux, {len(seqs)} "
            f"sequences, {len(tabs_next)} next-shape tableaux)"
        )
    elif not injective:
        lines.append("insertion-step: FAILED (a sequence merged two tableaux)")
    else:
        lines.append(
            f"insertion-step: FAILED (built {len(built)} tableaux, "
            f"next shape has {len(tabs_next)})"
        )
    good = ok_schur and covered and injective
    obj = {
        "alpha": list(spec.deleted_rows),
        "beta": list(spec.deleted_cols),
        "n": nvars,
        "k": args.k,
        "min_k": kmin,
        "minor_vs_schur": ok_schur,
        "insertion_step": covered and injective,
    }
    out = _dump_json(obj) if args.format == "json" else "\n".join(lines)
    if not good:
        return out, 1, "identity check failed"
    return out, 0, None


def _run_recurrence(args) -> tuple[str, int, str | None]:
    nvars = _require_nvars(args.nvars)
    spec = _make_spec(args.alpha, args.beta, nvars)
    kmin = min_k(spec)
    if args.jmax < kmin:
        raise UsageError(f"--jmax must be >= min_k = {kmin} for this spec")
    coeffs = char_coeffs(spec.band, spec.c - spec.r)
    residuals = [
        (j, recurrence_residual(spec, j)) for j in range(args.jmax + 1)
    ]
    report = verify_recurrence(spec, args.jmax)

    if args.format == "json":
        obj = {
            "report": report.to_json_obj(),
            "b": coeffs.order,
            "residuals": [
                {"j": j, "zero": poly.is_zero} for j, poly in residuals
            ],
        }
        out = _dump_json(obj)
    else:
        lines = [f"b: {coeffs.order}", f"min_k: {kmin}"]
        for j, poly in residuals:
            if poly.is_zero:
                lines.append(f"j={j}: zero")
            else:
                lines.append(f"j={j}: nonzero ({poly})")
        if report.all_zero:
            lines.append(
                f"holds: j >= {kmin} (verified through j = {args.jmax})"
            )
        else:
            lines.append(f"holds: FAILED at j = {report.first_failure}")
        out = "\n".join(lines)
    if not report.all_zero:
        return out, 1, f"nonzero residual at j = {report.first_failure}"
    return out, 0, None


def _run_widom(args) -> tuple[str, int, str | None]:
    sym = _parse_symbol_flag(args.symbol)
    n = sym.band
    if not 0 <= args.c <= n:
        raise UsageError(f"--c must be in 0..{n}, got {args.c}")
    if args.k < 0:
        raise UsageError(f"--k must be >= 0, got {args.k}")
    if sym.coeffs[-1] == 0:
        raise UsageError("--symbol: top coefficient s_n must be nonzero")

    t_roots = poly_roots(list(sym.coeffs))
    check_separated(t_roots, "symbol roots")
    chi_points = tuple(-1.0 / t for t in t_roots)
    check_separated(chi_points, "reciprocal points")

    w_orig = widom_original(t_roots, sym.coeffs[-1], args.c, args.k)
    w_mod = widom_modified(chi_points, args.c, args.k)
    hall = hall_schur_eval((args.k,) * args.c, chi_points)
    spec = MinorSpec((), tuple(range(1, args.c + 1)), n)
    det = det_numeric(build_minor_numeric(sym, spec, args.k))
    rel = [abs(v - det) / max(1.0, abs(det)) for v in (w_orig, w_mod, hall)]
    worst = max(rel)

    if args.format == "json":
        obj = {
            "symbol": [format_complex(v) for v in sym.coeffs],
            "c": args.c,
            "k": args.k,
            "psi_roots": [format_complex(t) for t in t_roots],
            "chi_points": [format_complex(x) for x in chi_points],
            "widom_original": format_complex(w_orig),
            "widom_modified": format_complex(w_mod),
            "hall_schur": format_complex(hall),
            "minor_det": format_complex(det),
            "max_rel_diff": worst,
        }
        out = _dump_json(obj)
    else:
        out = "\n".join(
            [
                "psi-roots: "
                + ", ".join(format_complex(t) for t in t_roots),
                "chi-points: "
                + ", ".join(format_complex(x) for x in chi_points),
                f"widom-original: {format_complex(w_orig)}",
                f"widom-modified: {format_complex(w_mod)}",
                f"hall-schur: {format_complex(hall)}",
                f"minor-det: {format_complex(det)}",
                f"max-rel-diff: {worst:.12g}",
            ]
        )
    if worst > args.tol:
        return out, 1, f"formula values disagree beyond {args.tol}: {worst:.3e}"
    return out, 0, None


def _crosscheck_hits(sym: BandedSymbol, c: int, report) -> None:
    """Recompute a few hit gaps through the one-point profile route."""
    hits = report.hits
    if not hits:
        return
    for idx in sorted({0, len(hits) // 2, len(hits) - 1}):
        re_v, im_v, gap = hits[idx]
        prof = root_modulus_profile(sym, c, complex(re_v, im_v))
        direct = (prof[c] - prof[c - 1]) / prof[c]
        if abs(direct - gap) > GAP_CROSSCHECK_TOL:
            raise RuntimeError(
                f"scan gap {gap:.6g} disagrees with direct profile "
                f"{direct:.6g} at v = {re_v:.6g}+{im_v:.6g}i"
            )


def _run_limitset(args) -> tuple[str, int, str | None]:
    sym = _parse_symbol_flag(args.symbol)
    if not 0 < args.c < sym.band:
        raise UsageError(f"--c must be in 1..{sym.band - 1}, got {args.c}")
    if sym.coeffs[-1] == 0:
        raise UsageError("--symbol: top coefficient s_n must be nonzero")
    grid = _parse_grid_flag(args.grid)
    if args.tol < 0:
        raise UsageError(f"--tol must be >= 0, got {args.tol}")
    report = limit_set_scan(sym, args.c, grid, args.tol, threads=args.threads)
    _crosscheck_hits(sym, args.c, report)
    if args.format == "json":
        out = _dump_json(report.to_json_obj())
    elif args.format == "csv":
        out = report.to_csv()
    else:
        out = "\n".join(
            [
                f"hits: {len(report.hits)}",
                f"failures: {len(report.failures)}",
                f"note: {report.note}",
            ]
        )
    err = None
    if report.failures:
        err = f"{len(report.failures)} grid points did not converge"
    return out, 0, err


def _run_eigs(args) -> tuple[str, int, str | None]:
    sym = _parse_symbol_flag(args.symbol)
    if args.k < 1:
        raise UsageError(f"--k must be >= 1, got {args.k}")
    if args.c is not None:
        if args.alpha or args.beta:
            raise UsageError("give either --c or --alpha/--beta, not both")
        if not 1 <= args.c <= sym.band:
            raise UsageError(f"--c must be in 1..{sym.band}, got {args.c}")
        spec = MinorSpec((), tuple(range(1, args.c + 1)), sym.band)
    else:
        spec = _make_spec(args.alpha, args.beta, sym.band)
    result = finite_section_spectrum(sym, spec, args.k)
    if args.format == "json":
        out = _dump_json(result.to_json_obj())
    elif args.format == "csv":
        out = result.to_csv()
    else:
        out = "\n".join(format_complex(z) for z in result.eigenvalues)
    return out, 0, None


def _run_compare(args) -> tuple[str, int, str | None]:
    sym = _parse_symbol_flag(args.symbol)
    if not 0 < args.c < sym.band:
        raise UsageError(f"--c must be in 1..{sym.band - 1}, got {args.c}")
    if sym.coeffs[-1] == 0:
        raise UsageError("--symbol: top coefficient s_n must be nonzero")
    if args.k < 1:
        raise UsageError(f"--k must be >= 1, got {args.k}")
    grid = _parse_grid_flag(args.grid)
    if args.tol < 0:
        raise UsageError(f"--tol must be >= 0, got {args.tol}")
    result = spectrum_vs_limitset(
        sym, args.c, args.k, grid, args.tol, threads=args.threads
    )
    if args.format == "json":
        out = _dump_json(result.to_json_obj())
    else:
        out = "\n".join(
            [
                f"k: {result.k}",
                f"hits: {result.hit_count}",
                f"median-distance: {result.median_distance:.12g}",
                f"max-distance: {result.max_distance:.12g}",
            ]
        )
    return out, 0, None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bandschur",
        description=(
            "Minors of banded Toeplitz matrices as skew Schur polynomials: "
            "exact identities, determinant recurrences, Widom-style "
            "evaluation, and eigenvalue limit-set scans."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def fmt_flag(p, choices, default):
        p.add_argument(
            "--format", choices=choices, default=default,
            help=f"output format (default: {default})",
        )

    p = sub.add_parser("schur", help="skew Schur polynomial by both engines")
    p.add_argument("--outer", required=True, help="outer partition, e.g. 4,2,1")
    p.add_argument("--inner", default="", help="inner partition (default empty)")
    p.add_argument("--nvars", type=int, required=True, help="number of variables")
    p.add_argument(
        "--method", choices=("tableaux", "jacobi-trudi", "both"),
        default="both", help="engine selection (default: both)",
    )
    fmt_flag(p, ("text", "json"), "text")
    p.set_defaults(func=_run_schur)

    p = sub.add_parser(
        "minor-det",
        help="determinant of a deleted-row/column leading minor "
        "(symbolic with --nvars, numeric with --symbol, both cross-checked)",
    )
    p.add_argument("--alpha", default="", help="deleted row indices, e.g. 2 or ''")
    p.add_argument("--beta", default="", help="deleted column indices")
    p.add_argument("--k", type=int, required=True, help="minor size")
    p.add_argument("--nvars", type=int, help="band width for the symbolic route")
    p.add_argument("--symbol", help=SYMBOL_HELP)
    fmt_flag(p, ("text", "json"), "text")
    p.set_defaults(func=_run_minor_det)

    p = sub.add_parser(
        "check-identity",
        help="verify minor determinant = skew Schur polynomial and the "
        "one-step insertion correspondence at size k",
    )
    p.add_argument("--alpha", default="", help="deleted row indices")
    p.add_argument("--beta", default="", help="deleted column indices")
    p.add_argument("--nvars", type=int, required=True, help="band width")
    p.add_argument("--k", type=int, required=True, help="minor size")
    fmt_flag(p, ("text", "json"), "text")
    p.set_defaults(func=_run_check_identity)

    p = sub.add_parser(
        "recurrence",
        help="residuals of the minor determinant linear recurrence",
    )
    p.add_argument("--alpha", default="", help="deleted row indices")
    p.add_argument("--beta", default="", help="deleted column indices")
    p.add_argument("--nvars", type=int, required=True, help="band width")
    p.add_argument("--jmax", type=int, required=True, help="largest offset")
    fmt_flag(p, ("text", "json"), "text")
    p.set_defaults(func=_run_recurrence)

    p = sub.add_parser(
        "widom",
        help="evaluate the minor determinant four ways from a numeric symbol",
    )
    p.add_argument("--symbol", required=True, help=SYMBOL_HELP)
    p.add_argument("--c", type=int, required=True, help="deleted column count")
    p.add_argument("--k", type=int, required=True, help="minor size")
    p.add_argument(
        "--tol", type=float, default=1e-8,
        help="relative agreement tolerance (default: 1e-8)",
    )
    fmt_flag(p, ("text", "json"), "text")
    p.set_defaults(func=_run_widom)

    p = sub.add_parser(
        "limitset",
        help="scan a grid for eigenvalue limit-set points of a banded symbol",
    )
    p.add_argument("--symbol", required=True, help=SYMBOL_HELP)
    p.add_argument("--c", type=int, required=True, help="shift index, 0 < c < n")
    p.add_argument(
        "--grid", required=True, help="re_min,re_max,im_min,im_max,nx,ny",
    )
    p.add_argument(
        "--tol", type=float, default=1e-2,
        help="relative modulus-gap threshold (default: 1e-2)",
    )
    p.add_argument(
        "--threads", type=int, default=None,
        help="worker threads for the scan (default: all cores)",
    )
    fmt_flag(p, ("csv", "json", "text"), "csv")
    p.set_defaults(func=_run_limitset)

    p = sub.add_parser(
        "eigs", help="eigenvalues of a finite minor of the banded matrix",
    )
    p.add_argument("--symbol", required=True, help=SYMBOL_HELP)
    p.add_argument("--k", type=int, required=True, help="minor size")
    p.add_argument(
        "--c", type=int, default=None,
        help="delete the first c columns (contiguous minor)",
    )
    p.add_argument("--alpha", default="", help="deleted row indices")
    p.add_argument("--beta", default="", help="deleted column indices")
    fmt_flag(p, ("csv", "json", "text"), "csv")
    p.set_defaults(func=_run_eigs)

    p = sub.add_parser(
        "compare",
        help="distance from finite-minor eigenvalues to scanned limit-set hits",
    )
    p.add_argument("--symbol", required=True, help=SYMBOL_HELP)
    p.add_argument("--c", type=int, required=True, help="shift index, 0 < c < n")
    p.add_argument("--k", type=int, required=True, help="minor size")
    p.add_argument(
        "--grid", required=True, help="re_min,re_max,im_min,im_max,nx,ny",
    )
    p.add_argument(
        "--tol", type=float, default=1e-2,
        help="relative modulus-gap threshold (default: 1e-2)",
    )
    p.add_argument(
        "--threads", type=int, default=None,
        help="worker threads for the scan (default: all cores)",
    )
    fmt_flag(p, ("text", "json"), "text")
    p.set_defaults(func=_run_compare)

    return parser


def _merge_dash_values(argv: list[str]) -> list[str]:
    """Join --grid/--symbol with their values so leading '-' survives argparse."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--grid", "--symbol") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_merge_dash_values(list(argv)))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out, code, err = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if out:
        print(out.rstrip("\n"))
    if err:
        print(f"error: {err}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
