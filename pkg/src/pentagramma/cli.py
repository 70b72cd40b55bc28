"""Command-line interface and the only I/O layer of the package.

Subcommands: pentagram, napier, bridge, poncelet, verify-all.  Human tables
go to stdout by default; --json switches to a schema-stable JSON document
(sorted keys, 17 significant digits, byte-identical for identical inputs).
Exit codes: 0 pass, 1 check failure, 2 domain error, 3 invariant error,
4 subcritical omega, 5 failed search.
"""
from __future__ import annotations

import argparse
import csv
import io
import math
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from . import verify
from .cone_spectrum import (OMEGA_CRITICAL, characteristic_matrix, cone_coefficients,
                            modulus_from_spectrum, solve_characteristic)
from .elliptic_kernel import complete_K, incomplete_F, jacobi_triple
from .errors import (ChordDegenerateError, DegenerateError, DomainError,
                     GeometryError, InvariantError, NearPoleError, NoSolutionError,
                     NoTangentError, OffEllipseError, SingularError,
                     SubcriticalError)
from .gauss_projection import pentagon_from_frame
from .napier_uniformization import (alpha_sequence, beta_sequence, frame_vectors,
                                    k_of_omega, omega_of_k)
from .pentagram_algebra import (build_sphere_vertices, complete_from_two,
                                orthogonality_residuals, pentagram_invariants)
from .dilogarithm import pentagon_five_term
from .poncelet import (TwoCircleConfig, closure_residual, modulus_of_config,
                       search_closing_config, trajectory, validate_config)
from .verify import Check

_NEAR_CRITICAL_WARN = 1e-4

_EXIT_CHECK_FAIL = 1
_EXIT_DOMAIN = 2
_EXIT_INVARIANT = 3
_EXIT_SUBCRITICAL = 4
_EXIT_SEARCH = 5


# ---------------------------------------------------------------- reports

@dataclass
class RunReport:
    command: str
    inputs: dict
    outputs: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _fmt(value) -> str:
    """17 significant digits; non-finite values become quoted strings."""
    value = float(value)
    if math.isnan(value) or math.isinf(value):
        return f'"{value}"'
    return format(value, ".17g")


def _to_json(obj) -> str:
    if isinstance(obj, dict):
        items = ", ".join(f'"{key}": {_to_json(obj[key])}' for key in sorted(obj))
        return "{" + items + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        seq = obj.tolist() if isinstance(obj, np.ndarray) else obj
        return "[" + ", ".join(_to_json(v) for v in seq) + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, str):
        import json as _json
        return _json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if obj is None:
        return "null"
    return _fmt(obj)


def report_json(report: RunReport) -> str:
    doc = {
        "command": report.command,
        "inputs": report.inputs,
        "outputs": report.outputs,
        "residuals": {c.name: {"value": float(c.residual), "tol": c.tol}
                      for c in report.checks},
        "status": "pass" if report.passed else "fail",
        "warnings": report.warnings,
    }
    return _to_json(doc)


def _render_value(value) -> str:
    if isinstance(value, dict):
        items = ", ".join(f"{key}={_render_value(value[key])}"
                          for key in sorted(value))
        return "{" + items + "}"
    if isinstance(value, (list, tuple, np.ndarray)):
        seq = value.tolist() if isinstance(value, np.ndarray) else value
        return "[" + ", ".join(_render_value(v) for v in seq) + "]"
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def report_text(report: RunReport) -> str:
    lines = [f"command: {report.command}"]
    for key in sorted(report.inputs):
        lines.append(f"  input  {key} = {_render_value(report.inputs[key])}")
    for key in sorted(report.outputs):
        lines.append(f"  output {key} = {_render_value(report.outputs[key])}")
    for c in report.checks:
        tag = "pass" if c.passed else "FAIL"
        extra = f"  ({c.detail})" if c.detail else ""
        lines.append(f"  [{tag}] {c.name}: residual={c.residual:.6e} "
                     f"tol={c.tol:.1e}{extra}")
    for w in report.warnings:
        lines.append(f"  warning: {w}")
    lines.append(f"status: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines)


def _emit(report: RunReport, as_json: bool, out) -> None:
    out.write(report_json(report) + "\n" if as_json else report_text(report) + "\n")


# ---------------------------------------------------------------- drawings

def _svg_document(body: list[str], half_extent: float, size: int = 480) -> str:
    scale = size / (2.0 * half_extent)
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{size}" height="{size}" '
            f'viewBox="0 0 {size} {size}">\n'
            f'<g transform="translate({size / 2},{size / 2}) '
            f'scale({scale:.6f},{-scale:.6f})" '
            f'stroke-width="{2.0 / scale:.6f}" fill="none">\n')
    return head + "\n".join(body) + "\n</g>\n</svg>\n"


def pentagon_svg(pentagon) -> str:
    gp, gpp = pentagon.axes
    pts = " ".join(f"{x:.8f},{y:.8f}" for x, y in pentagon.points)
    close = f"{pentagon.points[0][0]:.8f},{pentagon.points[0][1]:.8f}"
    body = [
        f'<ellipse cx="0" cy="0" rx="{gp:.8f}" ry="{gpp:.8f}" stroke="#888888"/>',
        f'<polyline points="{pts} {close}" stroke="#003366"/>',
    ]
    for x, y in pentagon.points:
        body.append(f'<circle cx="{x:.8f}" cy="{y:.8f}" r="{gp / 60:.8f}" '
                    'stroke="#990000"/>')
    return _svg_document(body, half_extent=1.15 * max(gp, gpp))


def poncelet_svg(config: TwoCircleConfig, walk) -> str:
    body = [
        f'<circle cx="0" cy="0" r="{config.R:.8f}" stroke="#888888"/>',
        f'<circle cx="{-config.a:.8f}" cy="0" r="{config.r:.8f}" stroke="#888888"/>',
    ]
    pts = " ".join(
        f"{config.R * math.cos(2 * p):.8f},{config.R * math.sin(2 * p):.8f}"
        for p in walk.phis)
    body.append(f'<polyline points="{pts}" stroke="#003366"/>')
    return _svg_document(body, half_extent=1.15 * config.R)


def _write_file(path: str, content: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(content)


# ---------------------------------------------------------------- commands

def _tol_override(args) -> float | None:
    if getattr(args, "tol", None) is not None:
        return args.tol
    env = os.environ.get("PENTAGRAMMA_TOL")
    return float(env) if env else None


def _apply_override(checks: list[Check], override: float | None) -> list[Check]:
    if override is None:
        return checks
    return [Check(name=c.name, residual=c.residual, tol=override, detail=c.detail)
            for c in checks]


def cmd_pentagram(args, out) -> int:
    cycle = complete_from_two(args.alpha, args.gamma)
    total, prod, augmented = pentagram_invariants(cycle)
    quadric = cone_coefficients(args.alpha, args.gamma)
    spectral = solve_characteristic(prod)
    k, cnw, dnw = modulus_from_spectrum(spectral)
    pentagon = build_sphere_vertices(cycle)

    report = RunReport(
        command="pentagram",
        inputs={"alpha": args.alpha, "gamma": args.gamma},
        outputs={
            "alphas": list(cycle.alphas),
            "omega": prod,
            "cone": {"p": quadric.p, "q": quadric.q, "r": quadric.r},
            "roots": {"G": spectral.G, "Gp": spectral.Gp, "Gpp": spectral.Gpp},
            "modulus": k,
            "sides": list(pentagon.sides),
        },
    )
    report.checks.append(Check("cycle_law", max(abs(r) for r in
                                                cycle.relation_residuals()), 1e-12))
    report.checks.append(Check("invariant_sum", abs(total - prod) / prod, 1e-10))
    report.checks.append(Check("invariant_sqrt", abs(augmented - prod) / prod, 1e-10))
    report.checks.append(Check("root_products", max(abs(r) for r in
                                                    spectral.product_residuals()), 1e-10))
    report.checks.append(Check("vertex_orthogonality", max(
        abs(r) for r in orthogonality_residuals(pentagon.vertices)), 1e-10))
    if prod - OMEGA_CRITICAL < _NEAR_CRITICAL_WARN:
        report.warnings.append(
            f"omega is within {_NEAR_CRITICAL_WARN} of the regular value; "
            f"modulus k = {k:.6g} is near 0")
    report.checks = _apply_override(report.checks, _tol_override(args))
    _emit(report, args.json, out)
    return 0 if report.passed else _EXIT_CHECK_FAIL


def _napier_row(k: float, u: float):
    frame = frame_vectors(k, u)
    cycle = alpha_sequence(frame)
    betas = beta_sequence(frame)
    a = cycle.alphas
    law = max(abs(1.0 + a[j] - a[(j - 2) % 5] * a[(j + 2) % 5]) for j in range(5))
    five = abs(pentagon_five_term(betas))
    consistency = max(abs(b - v / (1.0 + v)) for b, v in zip(betas, a))
    return frame, cycle, betas, law, five, consistency


def cmd_napier(args, out) -> int:
    if args.grid:
        rng = np.random.default_rng(args.seed)
        rows = []
        for k in [round(0.1 * i, 1) for i in range(10)]:
            quarter = complete_K(k)
            for u in sorted(rng.uniform(0.0, 0.8 * quarter, size=args.samples)):
                _, cycle, betas, law, five, _ = _napier_row(k, float(u))
                rows.append([k, float(u), *cycle.alphas, *betas, law, five])
        header = (["k", "u"] + [f"alpha_{j}" for j in range(5)]
                  + [f"beta_{j}" for j in range(5)]
                  + ["law_residual", "five_term_residual"])
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format(v, ".17g") for v in row])
        content = buffer.getvalue()
        if args.csv:
            _write_file(args.csv, content)
            out.write(f"wrote {len(rows)} rows to {args.csv}\n")
        else:
            out.write(content)
        return 0

    frame, cycle, betas, law, five, consistency = _napier_row(args.k, args.u)
    report = RunReport(
        command="napier",
        inputs={"k": args.k, "u": args.u},
        outputs={
            "K": frame.K,
            "vectors": frame.vectors,
            "alphas": list(cycle.alphas),
            "betas": list(betas),
            "omega": cycle.omega(),
        },
    )
    report.checks.append(Check("pentagon_law", law, 1e-10))
    report.checks.append(Check("five_term_sum", five, 1e-10))
    report.checks.append(Check("beta_consistency", consistency, 1e-12))
    if args.svg:
        _write_file(args.svg, pentagon_svg(pentagon_from_frame(frame)))
        report.outputs["svg"] = args.svg
    report.checks = _apply_override(report.checks, _tol_override(args))
    _emit(report, args.json, out)
    return 0 if report.passed else _EXIT_CHECK_FAIL


def cmd_bridge(args, out) -> int:
    if args.omega is not None:
        omega = args.omega
        spectral = solve_characteristic(omega)
        k, cnw, dnw = modulus_from_spectrum(spectral)
    else:
        k = args.k
        omega = omega_of_k(k)
        spectral = solve_characteristic(omega)
        _, cnw, dnw = modulus_from_spectrum(spectral)
    quarter = complete_K(k)
    lattice = jacobi_triple(0.4 * quarter, k)
    report = RunReport(
        command="bridge",
        inputs=({"omega": omega} if args.omega is not None else {"k": args.k}),
        outputs={
            "omega": omega,
            "k": k,
            "K": quarter,
            "roots": {"G": spectral.G, "Gp": spectral.Gp, "Gpp": spectral.Gpp},
            "cn_lattice": lattice.cn,
            "dn_lattice": lattice.dn,
        },
    )
    report.checks.append(Check("cn_bridge", abs(lattice.cn - cnw), 1e-9))
    report.checks.append(Check("dn_bridge", abs(lattice.dn - dnw), 1e-9))
    if args.omega is not None and k > 0.0:
        report.checks.append(Check("omega_roundtrip",
                                   abs(omega_of_k(k) - omega) / max(1.0, omega), 1e-9))
    if args.omega is None:
        report.checks.append(Check("k_roundtrip", abs(k_of_omega(omega) - k), 1e-9))
    report.checks = _apply_override(report.checks, _tol_override(args))
    _emit(report, args.json, out)
    return 0 if report.passed else _EXIT_CHECK_FAIL


def cmd_poncelet(args, out) -> int:
    if args.solve:
        n, m = args.solve
        config = search_closing_config(n, m, args.R, args.r)
        rng = np.random.default_rng(args.seed)
        porism = max(
            abs(trajectory(config, float(p0), n).phis[-1] - p0 - m * math.pi)
            for p0 in rng.uniform(0.0, 2.0 * math.pi, size=5))
        k, alpha = modulus_of_config(config)
        report = RunReport(
            command="poncelet",
            inputs={"R": args.R, "r": args.r, "solve_n": n, "solve_m": m},
            outputs={"a": config.a, "k": k, "alpha": alpha},
        )
        report.checks.append(Check("closure_residual",
                                   abs(closure_residual(config, n, m)), 1e-12))
        report.checks.append(Check("porism_closure", porism, 1e-8))
    else:
        config = TwoCircleConfig(R=args.R, r=args.r, a=args.a)
        validate_config(config)
        k, alpha = modulus_of_config(config)
        step = incomplete_F(alpha, k)
        full = incomplete_F(math.pi, k)
        candidates = {}
        for n in range(3, 13):
            for m in range(1, n // 2 + 1):
                if math.gcd(n, m) == 1:
                    candidates[f"{n}/{m}"] = step - (m / n) * full
        report = RunReport(
            command="poncelet",
            inputs={"R": args.R, "r": args.r, "a": args.a},
            outputs={"k": k, "alpha": alpha, "step": step,
                     "turn_fraction": step / full,
                     "closure_residuals": candidates},
        )
        report.checks.append(Check("modulus_consistency", abs(
            math.sqrt(1.0 - (k * math.sin(alpha)) ** 2)
            - (config.R - config.a) / (config.R + config.a)), 1e-12))

    if args.svg or args.csv:
        walk = trajectory(config, args.phi0, args.steps)
        if args.svg:
            _write_file(args.svg, poncelet_svg(config, walk))
            report.outputs["svg"] = args.svg
        if args.csv:
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(["i", "phi"])
            for i, phi in enumerate(walk.phis):
                writer.writerow([i, format(float(phi), ".17g")])
            _write_file(args.csv, buffer.getvalue())
            report.outputs["csv"] = args.csv

    report.checks = _apply_override(report.checks, _tol_override(args))
    _emit(report, args.json, out)
    return 0 if report.passed else _EXIT_CHECK_FAIL


def cmd_verify_all(args, out) -> int:
    results = verify.run_all(seed=args.seed, tol_override=_tol_override(args))
    report = RunReport(command="verify-all",
                       inputs={"seed": args.seed,
                               "tol": args.tol if args.tol is not None else "default"})
    for number in sorted(results):
        description, _ = verify.CRITERIA[number]
        for check in results[number]:
            report.checks.append(Check(name=f"{number:02d}.{check.name}",
                                       residual=check.residual, tol=check.tol,
                                       detail=check.detail))
        report.outputs[f"criterion_{number:02d}"] = (
            "pass" if all(c.passed for c in results[number]) else "fail")
    _emit(report, args.json, out)
    return 0 if report.passed else _EXIT_CHECK_FAIL


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pentagramma",
        description="Napier pentagons, their cone spectrum, Poncelet closure "
                    "and the dilogarithm five-term identity, verified numerically.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("pentagram",
                       help="complete a pentagon from two side quantities")
    p.add_argument("--alpha", type=float, required=True,
                   help="first squared side tangent")
    p.add_argument("--gamma", type=float, required=True,
                   help="third squared side tangent")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pentagram)

    p = sub.add_parser("napier", help="elliptic 5-division pentagon frame")
    p.add_argument("--k", type=float, default=0.0, help="elliptic modulus")
    p.add_argument("--u", type=float, default=0.0, help="frame parameter")
    p.add_argument("--grid", action="store_true",
                   help="sweep the (k, u) grid and emit CSV")
    p.add_argument("--samples", type=int, default=20,
                   help="u samples per k in grid mode")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", metavar="FILE", help="grid CSV destination")
    p.add_argument("--svg", metavar="FILE",
                   help="write the projected pentagon drawing")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_napier)

    p = sub.add_parser("bridge",
                       help="spectral roots vs elliptic lattice, either direction")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--omega", type=float, help="shape invariant")
    group.add_argument("--k", type=float, help="elliptic modulus")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bridge)

    p = sub.add_parser("poncelet", help="chord polygons between nested circles")
    p.add_argument("--R", type=float, required=True, help="outer radius")
    p.add_argument("--r", type=float, required=True, help="inner radius")
    p.add_argument("--a", type=float, default=0.0, help="centre distance")
    p.add_argument("--solve", nargs=2, type=int, metavar=("N", "M"),
                   help="search the centre distance closing after N chords, M turns")
    p.add_argument("--steps", type=int, default=30,
                   help="chords drawn for --svg/--csv")
    p.add_argument("--phi0", type=float, default=0.0, help="starting half-angle")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--svg", metavar="FILE")
    p.add_argument("--csv", metavar="FILE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_poncelet)

    p = sub.add_parser("verify-all", help="run the full acceptance battery")
    p.add_argument("--tol", type=float, default=None,
                   help="override every check tolerance")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (DomainError, GeometryError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return _EXIT_DOMAIN
    except SubcriticalError as exc:
        print(f"subcritical: {exc}", file=sys.stderr)
        return _EXIT_SUBCRITICAL
    except NoSolutionError as exc:
        print(f"search failed: {exc}", file=sys.stderr)
        return _EXIT_SEARCH
    except (InvariantError, NearPoleError, ChordDegenerateError, DegenerateError,
            NoTangentError, SingularError, OffEllipseError) as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return _EXIT_INVARIANT


def console_entry() -> None:
    raise SystemExit(main())
