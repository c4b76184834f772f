"""Command-line interface.

Commands certify frames, emit Kirkwood-Dirac and Gram matrices, compare
eigenvalue-location and entropy bounds against achieved values, run the
extremality Monte Carlo and reproduce the built-in qubit-SIC example.

Reports are JSON on stdout; a human-readable table is added on stderr when
stderr is a terminal, and ``--format`` forces a single output. Exit codes:
0 success, 1 failed check or invariant, 2 unusable input.
"""

from __future__ import annotations

import json
import sys

import click
import numpy as np

from . import io
from .bounds import (
    etf_eigen_interval,
    etf_spectral_bound,
    eigen_interval,
    gershgorin_disks,
    ic_upper_bound,
    max_eig_upper_bound,
    renyi_uncertainty_bound,
    tsallis_uncertainty_bound,
)
from .channels import (
    extremal_unraveling,
    kd_matrix,
    principal_kraus,
    transform_unraveling,
    unraveling_gram,
    unraveling_probabilities,
)
from .entropy import index_of_coincidence, renyi_entropy, tsallis_entropy
from .frames import (
    DensityMatrix,
    EtfParameters,
    Frame,
    coherence_constant,
    complement_etf,
    frame_operator,
    is_equiangular,
    is_tight,
    povm_from_frame,
    purity,
    sic_qubit,
)
from .linalg import (
    NUMERIC_TOL,
    SATURATION_TOL,
    STRUCTURAL_TOL,
    haar_unitary,
    hermitian_eig,
)


class InputError(click.ClickException):
    """Unusable input (parse or schema failure): exit code 2."""

    exit_code = 2


class CheckFailure(Exception):
    """A named verification failed: exit code 1."""


def report_options(f):
    f = click.option(
        "--format",
        "fmt",
        type=click.Choice(["json", "table"]),
        default=None,
        help="Force one output format instead of JSON plus terminal table.",
    )(f)
    f = click.option(
        "--tol-structural",
        type=float,
        default=STRUCTURAL_TOL,
        show_default=True,
        help="Absolute tolerance for structural identities.",
    )(f)
    f = click.option(
        "--tol-numeric",
        type=float,
        default=NUMERIC_TOL,
        show_default=True,
        help="Tolerance for numerical comparisons and pass flags.",
    )(f)
    f = click.option(
        "--tol-saturation",
        type=float,
        default=SATURATION_TOL,
        show_default=True,
        help="Tolerance below which a bound counts as saturated.",
    )(f)
    return f


def _tolerances(tol_structural, tol_numeric, tol_saturation) -> dict:
    return {
        "structural": tol_structural,
        "numeric": tol_numeric,
        "saturation": tol_saturation,
    }


def _floats(values) -> list[float]:
    return [float(v) for v in np.asarray(values).ravel()]


def _numeric_leaves(node) -> bool:
    if isinstance(node, (list, tuple)):
        return bool(node) and all(_numeric_leaves(x) for x in node)
    return isinstance(node, (int, float)) and not isinstance(node, bool)


def _render_table(report: dict) -> str:
    lines: list[tuple[str, str]] = []

    def scalar(value) -> str:
        if isinstance(value, bool):
            return "yes" if value else "no"
        if isinstance(value, float):
            return format(value, ".10g")
        return str(value)

    def walk(node, path) -> None:
        if isinstance(node, dict):
            for key, value in node.items():
                walk(value, path + [str(key)])
        elif isinstance(node, (list, tuple)):
            flat = all(not isinstance(x, (list, tuple, dict)) for x in node)
            if flat and _numeric_leaves(list(node)):
                body = ", ".join(format(float(x), ".8g") for x in node)
                lines.append((".".join(path), f"[{body}]"))
            elif _numeric_leaves(list(node)):
                lines.append((".".join(path), f"<{len(node)}-row numeric array>"))
            else:
                for index, value in enumerate(node):
                    walk(value, path + [str(index)])
        else:
            lines.append((".".join(path), scalar(node)))

    walk(report, [])
    width = max((len(key) for key, _ in lines), default=0)
    return "\n".join(f"{key:<{width}}  {value}" for key, value in lines)


def _json_default(obj):
    if isinstance(obj, np.generic):
        return obj.item()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _emit(report: dict, fmt: str | None) -> None:
    if fmt == "table":
        click.echo(_render_table(report))
        return
    click.echo(json.dumps(report, indent=2, default=_json_default))
    if fmt is None and sys.stderr.isatty():
        click.echo(_render_table(report), err=True)


def _load_frame(path) -> Frame:
    try:
        return io.load_frame(path)
    except io.FrameFileError as exc:
        raise InputError(str(exc)) from None
    except ValueError as exc:
        click.echo(f"invariant failure: {exc}", err=True)
        sys.exit(1)


def _resolve_state(spec: str, frame: Frame) -> DensityMatrix:
    try:
        return io.resolve_state(spec, frame)
    except io.FrameFileError as exc:
        raise InputError(str(exc)) from None


def _parse_alphas(text: str) -> list[float]:
    try:
        alphas = [float(a) for a in text.split(",") if a.strip()]
    except ValueError:
        raise InputError(f"malformed alpha list {text!r}") from None
    if not alphas or any(np.isnan(a) or a <= 0 for a in alphas):
        raise InputError(f"entropy orders must be positive, got {text!r}")
    return alphas


def _alpha_key(alpha: float) -> str:
    return format(alpha, "g")


# ----------------------------------------------------------------------
# report builders (pure functions, reused by tests and scripts)
# ----------------------------------------------------------------------


def build_frame_check_report(
    raw_vectors: np.ndarray,
    *,
    tol_structural: float = STRUCTURAL_TOL,
    tol_numeric: float = NUMERIC_TOL,
    tol_saturation: float = SATURATION_TOL,
) -> tuple[dict, bool, list[str]]:
    """Certify a raw vector array; returns (report, passed, failed invariant names)."""
    n, d = raw_vectors.shape
    norm_dev = float(np.abs(np.linalg.norm(raw_vectors, axis=1) - 1.0).max())
    invariants = {
        "unit_norms": {"pass": norm_dev <= tol_numeric, "max_deviation": norm_dev},
        "n_ge_d": {"pass": bool(n >= d)},
    }
    report: dict = {
        "command": "frame check",
        "n": n,
        "d": d,
        "redundancy": n / d,
        "invariants": invariants,
        "tolerances": _tolerances(tol_structural, tol_numeric, tol_saturation),
    }
    if n >= d:
        frame = Frame(raw_vectors, norm_tol=np.inf)
        measured_c = is_equiangular(frame, tol_numeric) if n >= 2 else None
        spectrum = hermitian_eig(frame_operator(frame), tol=tol_numeric).eigenvalues
        report.update(
            {
                "tight": is_tight(frame, tol_numeric),
                "equiangular": measured_c is not None,
                "measured_c": measured_c,
                "expected_c": coherence_constant(n, d),
                "frame_operator_spectrum": _floats(spectrum),
            }
        )
    failed = [name for name, entry in invariants.items() if not entry["pass"]]
    passed = not failed
    report["passed"] = passed
    return report, passed, failed


def build_kd_report(
    frame: Frame,
    rho: DensityMatrix,
    state_spec: str,
    *,
    tol_structural: float = STRUCTURAL_TOL,
    tol_numeric: float = NUMERIC_TOL,
    tol_saturation: float = SATURATION_TOL,
) -> tuple[dict, bool]:
    """Gram and Kirkwood-Dirac matrices plus their proportionality residual."""
    if not is_tight(frame, tol_numeric):
        raise CheckFailure("frame is not tight, it induces no POVM")
    unraveling = principal_kraus(frame, tol_numeric)
    gram = unraveling_gram(unraveling, rho)
    kd = kd_matrix(povm_from_frame(frame, tol_numeric), rho)
    residual = float(np.abs(kd - (frame.d / frame.n) * gram).max())
    passed = residual <= tol_structural
    report = {
        "command": "kd",
        "n": frame.n,
        "d": frame.d,
        "state": state_spec,
        "gram": io.complex_to_pairs(gram),
        "kd": io.complex_to_pairs(kd),
        "gram_spectrum": _floats(hermitian_eig(gram).eigenvalues),
        "kd_spectrum": _floats(hermitian_eig(kd).eigenvalues),
        "kd_vs_scaled_gram_residual": residual,
        "tolerances": _tolerances(tol_structural, tol_numeric, tol_saturation),
        "passed": passed,
    }
    return report, passed


def build_bounds_report(
    frame: Frame,
    rho: DensityMatrix,
    state_spec: str,
    alphas: list[float],
    *,
    tol_structural: float = STRUCTURAL_TOL,
    tol_numeric: float = NUMERIC_TOL,
    tol_saturation: float = SATURATION_TOL,
) -> tuple[dict, bool]:
    """Eigenvalue-location and entropy bounds against achieved values."""
    if not is_tight(frame, tol_numeric):
        raise CheckFailure("frame is not tight, it induces no POVM")
    if is_equiangular(frame, tol_numeric) is None:
        raise CheckFailure("closed-form bounds need an equiangular tight frame")
    params = EtfParameters.of_frame(frame)
    unraveling = principal_kraus(frame, tol_numeric)
    gram = unraveling_gram(unraveling, rho)
    spectrum = hermitian_eig(gram).eigenvalues
    true_max = float(spectrum[0])
    state_purity = purity(rho)
    probs = unraveling_probabilities(unraveling, rho)
    extremal = spectrum.copy()
    extremal[np.abs(extremal) <= tol_structural] = 0.0

    ic_achieved = index_of_coincidence(probs)
    ic_bound = ic_upper_bound(params, state_purity)
    ic_slack = ic_bound - ic_achieved

    interval = eigen_interval(gram, tol=tol_numeric)
    interval_slack = min(float(interval.slack(v)) for v in spectrum)
    max_bound = max_eig_upper_bound(gram)

    disks = gershgorin_disks(gram)
    g_upper = max(center.real + radius for center, radius in disks)
    g_lower = max(0.0, min(center.real - radius for center, radius in disks))
    g_slack = min(
        max(radius - abs(v - center) for center, radius in disks)
        for v in spectrum
    )

    closed_interval = etf_eigen_interval(params, state_purity)
    closed_slack = min(float(closed_interval.slack(v)) for v in spectrum)
    spectral_bound = etf_spectral_bound(params, state_purity)

    renyi_rows = []
    tsallis_rows = []
    for alpha in alphas:
        if alpha >= 2.0:
            bound = renyi_uncertainty_bound(params, state_purity, alpha)
            achieved = renyi_entropy(probs, alpha)
            achieved_extremal = renyi_entropy(extremal, alpha)
            slack = min(achieved, achieved_extremal) - bound
            renyi_rows.append(
                {
                    "alpha": _alpha_key(alpha),
                    "bound": bound,
                    "achieved": achieved,
                    "achieved_extremal": achieved_extremal,
                    "slack": slack,
                    "saturated": abs(slack) <= tol_saturation,
                    "pass": slack >= -tol_numeric,
                }
            )
        if np.isfinite(alpha) and alpha <= 2.0:
            bound = tsallis_uncertainty_bound(params, state_purity, alpha)
            achieved = tsallis_entropy(probs, alpha)
            achieved_extremal = tsallis_entropy(extremal, alpha)
            slack = min(achieved, achieved_extremal) - bound
            tsallis_rows.append(
                {
                    "alpha": _alpha_key(alpha),
                    "bound": bound,
                    "achieved": achieved,
                    "achieved_extremal": achieved_extremal,
                    "slack": slack,
                    "saturated": abs(slack) <= tol_saturation,
                    "pass": slack >= -tol_numeric,
                }
            )

    checks = {
        "ic_bound": ic_slack >= -tol_numeric,
        "eigen_interval": interval_slack >= -tol_numeric,
        "gershgorin": g_slack >= -tol_numeric,
        "closed_form_interval": closed_slack >= -tol_numeric,
        "spectral_bound": spectral_bound - true_max >= -tol_numeric,
        "max_eig_bound": max_bound - true_max >= -tol_numeric,
        "entropy_bounds": all(r["pass"] for r in renyi_rows + tsallis_rows),
    }
    passed = all(checks.values())
    report = {
        "command": "bounds",
        "n": frame.n,
        "d": frame.d,
        "state": state_spec,
        "purity": state_purity,
        "true_spectrum": _floats(spectrum),
        "index_of_coincidence": {
            "achieved": ic_achieved,
            "bound": ic_bound,
            "slack": ic_slack,
            "saturated": abs(ic_slack) <= tol_saturation,
        },
        "eigen_interval": {
            "lower": interval.lower,
            "upper": interval.upper,
            "containment_slack": interval_slack,
            "max_eig_bound": max_bound,
            "relative_error_vs_max": (interval.upper - true_max) / true_max
            if true_max > 0
            else None,
        },
        "gershgorin": {
            "disks": [
                {"center": [center.real, center.imag], "radius": radius}
                for center, radius in disks
            ],
            "union_lower": g_lower,
            "union_upper": g_upper,
            "containment_slack": g_slack,
            "relative_error_vs_max": (g_upper - true_max) / true_max
            if true_max > 0
            else None,
        },
        "closed_form_interval": {
            "lower": closed_interval.lower,
            "upper": closed_interval.upper,
            "containment_slack": closed_slack,
            "spectral_bound": spectral_bound,
        },
        "renyi": renyi_rows,
        "tsallis": tsallis_rows,
        "checks": checks,
        "tolerances": _tolerances(tol_structural, tol_numeric, tol_saturation),
        "passed": passed,
    }
    return report, passed


def build_extremality_report(
    frame: Frame,
    rho: DensityMatrix,
    state_spec: str,
    samples: int,
    seed: int,
    alphas: list[float],
    identity: bool = False,
    *,
    tol_structural: float = STRUCTURAL_TOL,
    tol_numeric: float = NUMERIC_TOL,
    tol_saturation: float = SATURATION_TOL,
) -> tuple[dict, bool]:
    """Monte Carlo over re-unravelings: minimum entropy slack vs. the extremal one.

    Sample i uses the deterministic generator seeded with (seed, i), so
    reports are reproducible and independent of evaluation order. Renyi
    slacks are only evaluated at orders where extremality is guaranteed
    (alpha <= 1, alpha = 2 and alpha = inf).
    """
    if samples < 1:
        raise CheckFailure(f"need at least one sample, got {samples}")
    unraveling = principal_kraus(frame, tol_numeric)
    _, extremal_probs = extremal_unraveling(unraveling, rho, clamp_tol=tol_structural)
    tsallis_alphas = [a for a in alphas if np.isfinite(a)]
    renyi_alphas = sorted({a for a in alphas if a <= 1.0 or a == 2.0} | {np.inf})
    base_tsallis = {a: tsallis_entropy(extremal_probs, a) for a in tsallis_alphas}
    base_renyi = {a: renyi_entropy(extremal_probs, a) for a in renyi_alphas}
    min_tsallis = {a: np.inf for a in tsallis_alphas}
    min_renyi = {a: np.inf for a in renyi_alphas}

    for i in range(samples):
        if identity:
            mix = np.eye(unraveling.m, dtype=complex)
        else:
            mix = haar_unitary(unraveling.m, np.random.default_rng([seed, i]))
        probs = unraveling_probabilities(transform_unraveling(unraveling, mix), rho)
        for a in tsallis_alphas:
            min_tsallis[a] = min(min_tsallis[a], tsallis_entropy(probs, a) - base_tsallis[a])
        for a in renyi_alphas:
            min_renyi[a] = min(min_renyi[a], renyi_entropy(probs, a) - base_renyi[a])

    passed = all(v >= -tol_numeric for v in min_tsallis.values()) and all(
        v >= -tol_numeric for v in min_renyi.values()
    )
    report = {
        "command": "verify-extremality",
        "n": frame.n,
        "d": frame.d,
        "state": state_spec,
        "samples": samples,
        "seed": seed,
        "identity_mixing": identity,
        "extremal_probabilities": _floats(extremal_probs),
        "tsallis": {
            _alpha_key(a): {"extremal": base_tsallis[a], "min_slack": float(min_tsallis[a])}
            for a in tsallis_alphas
        },
        "renyi": {
            _alpha_key(a): {"extremal": base_renyi[a], "min_slack": float(min_renyi[a])}
            for a in renyi_alphas
        },
        "tolerances": _tolerances(tol_structural, tol_numeric, tol_saturation),
        "passed": passed,
    }
    return report, passed


def build_qubit_sic_report(
    *,
    tol_structural: float = STRUCTURAL_TOL,
    tol_numeric: float = NUMERIC_TOL,
    tol_saturation: float = SATURATION_TOL,
) -> tuple[dict, bool]:
    """Run every check of the built-in qubit tetrahedron example."""
    frame = sic_qubit()
    n, d = frame.n, frame.d
    params = EtfParameters.of_frame(frame)
    c = params.coherence
    unraveling = principal_kraus(frame)
    checks: list[dict] = []

    def add(name: str, ok: bool, **info) -> None:
        entry = {"name": name, "pass": bool(ok)}
        entry.update(info)
        checks.append(entry)

    rho_star = DensityMatrix(np.eye(d) / d)
    gram_star = unraveling_gram(unraveling, rho_star)
    expected_star = ((1.0 - c) * np.eye(n) + c * np.ones((n, n))) / n
    deviation = float(np.abs(gram_star - expected_star).max())
    add("mixed-state gram matrix", deviation <= tol_structural, max_deviation=deviation)

    radius_expected = (n - 1) * c / n
    radii = [radius for _, radius in gershgorin_disks(gram_star)]
    deviation = max(abs(r - radius_expected) for r in radii)
    add(
        "mixed-state gershgorin radius 1/4",
        deviation <= tol_structural,
        expected=radius_expected,
        max_deviation=deviation,
    )

    closed_form_a = (d * d - 2 * d + n) / ((n - 1) * d * d)
    closed_form_b = (1.0 + (n - 1) * c * c) / n
    actual = float(np.vdot(gram_star, gram_star).real)
    add(
        "mixed-state squared Frobenius norm, two closed forms agree",
        abs(closed_form_a - closed_form_b) <= 1e-12 and abs(actual - closed_form_a) <= tol_numeric,
        closed_form_a=closed_form_a,
        closed_form_b=closed_form_b,
        actual=actual,
    )

    ket = frame.vectors[0]
    rho_pure = DensityMatrix(np.outer(ket, ket.conj()))
    gram_pure = unraveling_gram(unraveling, rho_pure)
    s3 = 1.0 / np.sqrt(3.0)
    expected_pure = (
        np.array(
            [
                [3.0, 1.0, 1.0, 1.0],
                [1.0, 1.0, 1j * s3, -1j * s3],
                [1.0, -1j * s3, 1.0, 1j * s3],
                [1.0, 1j * s3, -1j * s3, 1.0],
            ],
            dtype=complex,
        )
        / 6.0
    )
    deviation = float(np.abs(gram_pure - expected_pure).max())
    add("pure-frame-state gram matrix", deviation <= tol_structural, max_deviation=deviation)

    spectrum = hermitian_eig(gram_pure).eigenvalues
    target = np.array([2.0 / 3.0, 1.0 / 3.0, 0.0, 0.0])
    deviation = float(np.abs(spectrum - target).max())
    add(
        "pure-frame-state spectrum (2/3, 1/3, 0, 0)",
        deviation <= tol_numeric,
        eigenvalues=_floats(spectrum),
        max_deviation=deviation,
    )

    bound = max_eig_upper_bound(gram_pure)
    closed_bound = (1.0 + np.sqrt(11.0 / 3.0)) / 4.0
    add(
        "largest-eigenvalue bound (1 + sqrt(11/3))/4 below 0.729",
        abs(bound - closed_bound) <= 1e-12 and bound < 0.729,
        bound=bound,
        closed_form=closed_bound,
    )

    radius = etf_eigen_interval(params, 1.0).radius
    add(
        "purity-based interval radius sqrt(11/3)/4",
        abs(radius - np.sqrt(11.0 / 3.0) / 4.0) <= 1e-12,
        radius=radius,
    )

    disks = gershgorin_disks(gram_pure)
    union_upper = max(center.real + r for center, r in disks)
    union_lower = max(0.0, min(center.real - r for center, r in disks))
    add(
        "gershgorin union [0, 1]",
        abs(union_upper - 1.0) <= tol_numeric and union_lower <= tol_numeric,
        lower=union_lower,
        upper=union_upper,
    )

    true_max = float(spectrum[0])
    relative_new = (bound - true_max) / true_max
    relative_gershgorin = (union_upper - true_max) / true_max
    add(
        "relative errors about 9.3% and 50%",
        abs(relative_new - 0.093) <= 1e-3 and abs(relative_gershgorin - 0.5) <= 1e-3,
        interval_bound_error=relative_new,
        gershgorin_error=relative_gershgorin,
    )

    passed = all(entry["pass"] for entry in checks)
    report = {
        "command": "reproduce qubit-sic",
        "n": n,
        "d": d,
        "coherence": c,
        "checks": checks,
        "gram_mixed": io.complex_to_pairs(gram_star),
        "gram_pure": io.complex_to_pairs(gram_pure),
        "tolerances": _tolerances(tol_structural, tol_numeric, tol_saturation),
        "passed": passed,
    }
    return report, passed


# ----------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------


@click.group()
def main() -> None:
    """Tight-frame measurements, Kirkwood-Dirac matrices and their bounds."""


@main.group()
def frame() -> None:
    """Frame certification and generation."""


@frame.command("check")
@click.argument("frame_file", type=click.Path(dir_okay=False))
@report_options
def frame_check(frame_file, fmt, tol_structural, tol_numeric, tol_saturation) -> None:
    """Certify tightness and equiangularity of a frame file."""
    try:
        raw = io.raw_vectors_from_dict(io.load_json(frame_file))
    except io.FrameFileError as exc:
        raise InputError(str(exc)) from None
    report, passed, failed = build_frame_check_report(
        raw,
        tol_structural=tol_structural,
        tol_numeric=tol_numeric,
        tol_saturation=tol_saturation,
    )
    _emit(report, fmt)
    if not passed:
        click.echo(f"invariant failure: {', '.join(failed)}", err=True)
        sys.exit(1)


@frame.group("gen")
def frame_gen() -> None:
    """Generate built-in frames as frame files."""


@frame_gen.command("sic2")
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
def gen_sic2(output) -> None:
    """Write the qubit tetrahedron frame (n=4, d=2)."""
    document = json.dumps(io.frame_to_dict(sic_qubit()), indent=2)
    if output:
        with open(output, "w") as handle:
            handle.write(document + "\n")
    else:
        click.echo(document)


@frame_gen.command("complement")
@click.argument("frame_file", type=click.Path(dir_okay=False))
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
def gen_complement(frame_file, output) -> None:
    """Write the complement ETF of an equiangular tight frame file."""
    loaded = _load_frame(frame_file)
    try:
        result = complement_etf(loaded)
    except ValueError as exc:
        click.echo(f"check failed: {exc}", err=True)
        sys.exit(1)
    document = json.dumps(io.frame_to_dict(result), indent=2)
    if output:
        with open(output, "w") as handle:
            handle.write(document + "\n")
    else:
        click.echo(document)


@main.command("kd")
@click.argument("frame_file", type=click.Path(dir_okay=False))
@click.option(
    "--state",
    "state_spec",
    default="maximally-mixed",
    show_default=True,
    help="maximally-mixed | frame-state:<j> | mixture:<w,...> | matrix:<path>",
)
@report_options
def kd_command(frame_file, state_spec, fmt, tol_structural, tol_numeric, tol_saturation) -> None:
    """Emit the Gram and Kirkwood-Dirac matrices of a tight frame and a state."""
    loaded = _load_frame(frame_file)
    rho = _resolve_state(state_spec, loaded)
    try:
        report, passed = build_kd_report(
            loaded,
            rho,
            state_spec,
            tol_structural=tol_structural,
            tol_numeric=tol_numeric,
            tol_saturation=tol_saturation,
        )
    except CheckFailure as exc:
        click.echo(f"check failed: {exc}", err=True)
        sys.exit(1)
    _emit(report, fmt)
    if not passed:
        click.echo("check failed: kd residual above tolerance", err=True)
        sys.exit(1)


@main.command("bounds")
@click.argument("frame_file", type=click.Path(dir_okay=False))
@click.option("--state", "state_spec", default="maximally-mixed", show_default=True)
@click.option(
    "--alphas",
    default="0.5,1,2,5,inf",
    show_default=True,
    help="Comma-separated entropy orders.",
)
@report_options
def bounds_command(
    frame_file, state_spec, alphas, fmt, tol_structural, tol_numeric, tol_saturation
) -> None:
    """Compare eigenvalue-location and entropy bounds against achieved values."""
    loaded = _load_frame(frame_file)
    rho = _resolve_state(state_spec, loaded)
    orders = _parse_alphas(alphas)
    try:
        report, passed = build_bounds_report(
            loaded,
            rho,
            state_spec,
            orders,
            tol_structural=tol_structural,
            tol_numeric=tol_numeric,
            tol_saturation=tol_saturation,
        )
    except CheckFailure as exc:
        click.echo(f"check failed: {exc}", err=True)
        sys.exit(1)
    _emit(report, fmt)
    if not passed:
        failing = [name for name, ok in report["checks"].items() if not ok]
        click.echo(f"check failed: {', '.join(failing)}", err=True)
        sys.exit(1)


@main.command("verify-extremality")
@click.argument("frame_file", type=click.Path(dir_okay=False))
@click.option("--state", "state_spec", default="maximally-mixed", show_default=True)
@click.option("--samples", type=int, default=200, show_default=True)
@click.option(
    "--seed",
    type=int,
    default=0,
    show_default=True,
    envvar="KDF_SEED",
    help="RNG seed; falls back to the KDF_SEED environment variable.",
)
@click.option(
    "--identity",
    is_flag=True,
    help="Use the identity mixing matrix for every sample instead of Haar draws.",
)
@click.option("--alphas", default="0.5,1,2,5", show_default=True)
@report_options
def verify_extremality(
    frame_file,
    state_spec,
    samples,
    seed,
    identity,
    alphas,
    fmt,
    tol_structural,
    tol_numeric,
    tol_saturation,
) -> None:
    """Check that the extremal unraveling minimizes the sampled entropies."""
    if samples < 1:
        raise InputError(f"--samples must be at least 1, got {samples}")
    loaded = _load_frame(frame_file)
    rho = _resolve_state(state_spec, loaded)
    orders = _parse_alphas(alphas)
    try:
        report, passed = build_extremality_report(
            loaded,
            rho,
            state_spec,
            samples,
            seed,
            orders,
            identity,
            tol_structural=tol_structural,
            tol_numeric=tol_numeric,
            tol_saturation=tol_saturation,
        )
    except CheckFailure as exc:
        click.echo(f"check failed: {exc}", err=True)
        sys.exit(1)
    _emit(report, fmt)
    if not passed:
        click.echo("check failed: an entropy slack went below tolerance", err=True)
        sys.exit(1)


@main.group("reproduce")
def reproduce() -> None:
    """Reproduce built-in worked examples."""


@reproduce.command("qubit-sic")
@report_options
def reproduce_qubit_sic(fmt, tol_structural, tol_numeric, tol_saturation) -> None:
    """Run every qubit tetrahedron check: matrices, spectrum, bounds, errors."""
    report, passed = build_qubit_sic_report(
        tol_structural=tol_structural,
        tol_numeric=tol_numeric,
        tol_saturation=tol_saturation,
    )
    _emit(report, fmt)
    if not passed:
        failing = [entry["name"] for entry in report["checks"] if not entry["pass"]]
        click.echo(f"check failed: {failing[0]}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
