"""Command-line driver.

Every subcommand can emit a single machine-readable JSON object with
``--json``; the default is a plain key/value listing. Exit codes: 0 on
success (and all checks passing for ``verify``), 1 on numeric failures or
failed checks, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from .blaschke import BlaschkeProduct, model_matrix, single_zero_product
from .coeffbounds import RationalTorusFunction, factorize, taylor_coefficients
from .errors import TruncshiftError
from .kms import (
    KmsParams,
    bound_quantities,
    first_root_bounds,
    kms_eigenvalues,
    top_eigenvalue_bounds,
)
from .linalg import Polynomial, matrix_power
from .numrange import numerical_radius, range_boundary
from .verify import SUITE_NAMES, run_suites

FORMAT_VERSION = 1


@dataclass
class OutputRecord:
    """One result object: command, parameters, named results."""

    command: str
    params: dict
    results: dict
    format_version: int = FORMAT_VERSION

    def to_json(self) -> str:
        payload = {
            "format_version": self.format_version,
            "command": self.command,
            "params": _to_builtin(self.params),
            "results": _to_builtin(self.results),
        }
        return json.dumps(payload, indent=2)


def _to_builtin(value):
    """Convert numpy scalars/arrays to JSON-encodable builtins.

    Complex numbers become two-element [re, im] lists; floats keep their
    shortest round-trip decimal form (at most 17 significant digits).
    """
    if isinstance(value, dict):
        return {key: _to_builtin(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_to_builtin(item) for item in value]
    if isinstance(value, np.ndarray):
        return [_to_builtin(item) for item in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    return value


def _print_human(record: OutputRecord) -> None:
    print(f"command: {record.command}")
    for key, item in record.params.items():
        print(f"  param {key} = {item}")
    for key, item in _to_builtin(record.results).items():
        if isinstance(item, list):
            rendered = ", ".join(_render_scalar(entry) for entry in item)
            print(f"  {key}: [{rendered}]")
        else:
            print(f"  {key}: {_render_scalar(item)}")


def _render_scalar(item) -> str:
    if isinstance(item, list) and len(item) == 2 and all(
        isinstance(part, float) for part in item
    ):
        sign = "+" if item[1] >= 0 else "-"
        return f"{item[0]!r}{sign}{abs(item[1])!r}i"
    if isinstance(item, float):
        return repr(item)
    if isinstance(item, list):
        return "[" + ", ".join(_render_scalar(entry) for entry in item) + "]"
    return str(item)


def _emit(record: OutputRecord, as_json: bool) -> None:
    if as_json:
        print(record.to_json())
    else:
        _print_human(record)


def parse_complex(text: str) -> complex:
    """Parse shell-safe complex literals like ``0.5``, ``0.3+0.4i``, ``-0.2i``."""
    stripped = text.strip()
    if not stripped or " " in stripped:
        raise ValueError(f"bad complex literal {text!r}")
    try:
        return complex(stripped.replace("i", "j"))
    except ValueError as exc:
        raise ValueError(f"bad complex literal {text!r}") from exc


def parse_product(spec: str) -> BlaschkeProduct:
    """Parse ``single:ALPHA,N`` or ``zeros:z1,z2,...`` product descriptions."""
    if spec.startswith("single:"):
        parts = spec[len("single:") :].split(",")
        if len(parts) != 2:
            raise ValueError("single: expects exactly ALPHA,N")
        return single_zero_product(parse_complex(parts[0]), int(parts[1]))
    if spec.startswith("zeros:"):
        entries = [part for part in spec[len("zeros:") :].split(",") if part]
        if not entries:
            raise ValueError("zeros: expects at least one zero")
        return BlaschkeProduct(np.array([parse_complex(e) for e in entries]))
    raise ValueError("product spec must start with 'single:' or 'zeros:'")


def _parse_coeff_list(text: str) -> Polynomial:
    entries = [part for part in text.split(",") if part]
    if not entries:
        raise ValueError("empty coefficient list")
    return Polynomial(np.array([parse_complex(e) for e in entries]))


def _cmd_kms(args) -> int:
    params = KmsParams(args.n, args.alpha)
    spectrum = kms_eigenvalues(params)
    results = {
        "t": spectrum.angles,
        "lambda": spectrum.eigenvalues,
        "lambda_prime": spectrum.upper_part_eigenvalues,
    }
    if params.n >= 2:
        triple = bound_quantities(params)
        results["s"] = triple.s
        results["m"] = triple.m
        results["M"] = triple.M
        results["t1_interval"] = list(first_root_bounds(params))
        results["lambda1_interval"] = list(top_eigenvalue_bounds(params))
    record = OutputRecord(
        command="kms",
        params={"n": params.n, "alpha": params.alpha},
        results=results,
    )
    _emit(record, args.json)
    return 0


def _cmd_radius(args) -> int:
    product = parse_product(args.phi)
    matrix = model_matrix(product).matrix
    if args.power != 1:
        matrix = matrix_power(matrix, args.power)
    result = numerical_radius(matrix, angles=args.angles)
    record = OutputRecord(
        command="radius",
        params={"phi": args.phi, "power": args.power, "angles": args.angles},
        results={
            "omega2": result.radius,
            "theta_star": result.theta_star,
            "degree": product.degree,
        },
    )
    _emit(record, args.json)
    return 0


def _cmd_range(args) -> int:
    product = parse_product(args.phi)
    matrix = model_matrix(product).matrix
    result = range_boundary(matrix, angles=args.angles)
    thetas = np.arange(args.angles) * (2.0 * np.pi / args.angles)
    lines = ["theta,re,im"]
    for theta, point in zip(thetas, result.boundary):
        lines.append(f"{theta!r},{point.real!r},{point.imag!r}")
    with open(args.out, "w", newline="") as handle:
        handle.write("\n".join(lines) + "\n")
    record = OutputRecord(
        command="range",
        params={"phi": args.phi, "angles": args.angles, "out": args.out},
        results={
            "radius": result.radius,
            "theta_star": result.theta_star,
            "points": args.angles,
        },
    )
    _emit(record, args.json)
    return 0


def _cmd_coeff(args) -> int:
    ratio = RationalTorusFunction(
        _parse_coeff_list(args.num), _parse_coeff_list(args.den)
    )
    coefficients = taylor_coefficients(ratio, args.kmax)
    data = factorize(ratio)
    base = model_matrix(data.phi_var).matrix
    c0 = float(coefficients[0].real)
    bounds = []
    holds = []
    for k in range(1, args.kmax + 1):
        rhs = c0 * numerical_radius(matrix_power(base, k)).radius
        bounds.append(rhs)
        holds.append(bool(abs(coefficients[k]) <= rhs + 1e-9))
    record = OutputRecord(
        command="coeff",
        params={"num": args.num, "den": args.den, "kmax": args.kmax},
        results={
            "c": coefficients,
            "bound": bounds,
            "holds": holds,
            "m": data.m,
            "d": data.d,
            "r": data.r,
            "phi_var_degree": data.phi_var.degree,
        },
    )
    _emit(record, args.json)
    return 0


def _cmd_verify(args) -> int:
    workers = int(os.environ.get("TRUNCSHIFT_THREADS", "1"))
    names = list(SUITE_NAMES[:-1]) if args.suite == "all" else [args.suite]
    results = run_suites(names, seed=args.seed, trials=args.trials, workers=workers)
    all_passed = all(result.passed for result in results)
    if args.json:
        record = OutputRecord(
            command="verify",
            params={"suite": args.suite, "seed": args.seed, "trials": args.trials},
            results={
                result.name: {
                    "passed": result.passed,
                    "max_deviation": result.max_deviation,
                    "detail": result.detail,
                }
                for result in results
            },
        )
        print(record.to_json())
    else:
        for result in results:
            status = "PASS" if result.passed else "FAIL"
            print(
                f"[{status}] {result.name:<32} max_dev={result.max_deviation:.3e}"
                f"  {result.detail}"
            )
        summary = "all checks passed" if all_passed else "CHECK FAILURES PRESENT"
        print(f"{len(results)} checks: {summary}")
    return 0 if all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="truncshift",
        description=(
            "Numerical radii of truncated adjoint shifts, KMS Toeplitz "
            "spectra, and coefficient bounds on the torus"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    kms_parser = sub.add_parser("kms", help="spectrum and bounds of a KMS matrix")
    kms_parser.add_argument("--n", type=int, required=True)
    kms_parser.add_argument("--alpha", type=float, required=True)
    kms_parser.add_argument("--json", action="store_true")
    kms_parser.set_defaults(handler=_cmd_kms)

    radius_parser = sub.add_parser(
        "radius", help="numerical radius of a compressed-shift power"
    )
    radius_parser.add_argument(
        "--phi", required=True, help="single:ALPHA,N or zeros:z1,z2,..."
    )
    radius_parser.add_argument("--power", type=int, default=1)
    radius_parser.add_argument("--angles", type=int, default=256)
    radius_parser.add_argument("--json", action="store_true")
    radius_parser.set_defaults(handler=_cmd_radius)

    range_parser = sub.add_parser(
        "range", help="sampled numerical-range boundary as CSV"
    )
    range_parser.add_argument("--phi", required=True)
    range_parser.add_argument("--angles", type=int, default=256)
    range_parser.add_argument("--out", required=True, help="CSV output path")
    range_parser.add_argument("--json", action="store_true")
    range_parser.set_defaults(handler=_cmd_range)

    coeff_parser = sub.add_parser(
        "coeff", help="Taylor coefficients and their radius bounds"
    )
    coeff_parser.add_argument("--num", required=True, help="ascending coefficients")
    coeff_parser.add_argument("--den", required=True, help="ascending coefficients")
    coeff_parser.add_argument("--kmax", type=int, required=True)
    coeff_parser.add_argument("--json", action="store_true")
    coeff_parser.set_defaults(handler=_cmd_coeff)

    verify_parser = sub.add_parser("verify", help="run named invariant suites")
    verify_parser.add_argument("--suite", choices=SUITE_NAMES, default="all")
    verify_parser.add_argument("--seed", type=int, default=42)
    verify_parser.add_argument("--trials", type=int, default=100)
    verify_parser.add_argument("--json", action="store_true")
    verify_parser.set_defaults(handler=_cmd_verify)
    return parser


def run(argv) -> int:
    """Entry point on an argv list; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return int(args.handler(args))
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except TruncshiftError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
