"""Command-line front end: sweeps to CSV, plus the validation suite.

Exit codes: 0 success, 2 usage error, 3 quadrature/convergence failure,
4 I/O failure.
"""

import argparse
import math
import sys
import time
from dataclasses import dataclass

from . import __version__
from .errors import CasimirGearError, ModeConvergenceError, QuadratureError
from .quadrature import CONCENTRIC, OPEN_GEAR, ModeSumSpec, QuadratureSpec
from .scenarios import GearScenario, sweep

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_IO = 4


@dataclass(frozen=True)
class RunConfig:
    """One resolved CLI invocation."""

    kind: str
    y: float
    cog_angles: tuple
    beta_steps: int = 64
    m_max: int = 6
    rel_tol: float = 1e-7
    mode_tol: float = 1e-2
    convergence_check: bool = True
    alpha_product: float = None
    a: float = None
    output_path: str = "sweep.csv"
    threads: int = 0

    def __post_init__(self):
        if self.beta_steps < 2:
            raise ValueError("beta_steps must be >= 2")


def _add_sweep_args(p):
    p.add_argument("--y", type=float, required=True,
                   help="radial ratio (> 1): r/a for single-gear, b/a for concentric")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--cogs", type=int, default=1,
                   help="number of equally spaced surface cogs (default 1)")
    g.add_argument("--cog-angles", type=str, default=None,
                   help="explicit comma-separated cog angles in radians")
    p.add_argument("--beta-steps", type=int, default=64,
                   help="uniform beta grid points on [0, 2pi) (default 64)")
    p.add_argument("--m-max", type=int, default=6,
                   help="azimuthal mode truncation (default 6)")
    p.add_argument("--rel-tol", type=float, default=1e-7,
                   help="quadrature relative tolerance (default 1e-7)")
    p.add_argument("--mode-tol", type=float, default=1e-2,
                   help="mode-truncation certification tolerance (default 1e-2)")
    p.add_argument("--no-convergence-check", action="store_true",
                   help="skip the m_max+1 truncation certification")
    p.add_argument("--alpha-product", type=float, default=None,
                   help="polarizability product alpha1*alpha2 (enables physical columns)")
    p.add_argument("--a", type=float, default=None,
                   help="cylinder radius a (enables physical columns)")
    p.add_argument("-o", "--output", type=str, default="sweep.csv",
                   help="output CSV path (default sweep.csv)")
    p.add_argument("--threads", type=int, default=0,
                   help="worker threads, 0 = auto (default)")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="casimir-gear",
        description="Casimir energy and torque sweeps for cylindrical gears",
    )
    ap.add_argument("--version", action="version", version=f"casimir-gear {__version__}")
    sub = ap.add_subparsers(dest="subcommand", required=True)
    p1 = sub.add_parser("single-gear", help="open gear: cogs on a cylinder, external probe")
    _add_sweep_args(p1)
    p2 = sub.add_parser("concentric", help="concentric gear: inner-surface cogs, probe on the outer shell")
    _add_sweep_args(p2)
    p3 = sub.add_parser("validate", help="run the validation/acceptance suite")
    p3.add_argument("--skip-slow", action="store_true",
                    help="skip the multi-minute oracle-equivalence grid")
    return ap


def _parse_angles(args):
    if args.cog_angles is not None:
        try:
            angles = tuple(float(tok) for tok in args.cog_angles.split(",") if tok.strip())
        except ValueError:
            print("error: --cog-angles needs comma-separated numbers", file=sys.stderr)
            raise SystemExit(EXIT_USAGE)
        if not angles:
            print("error: --cog-angles needs at least one angle", file=sys.stderr)
            raise SystemExit(EXIT_USAGE)
        return angles
    n = args.cogs
    if n < 1:
        print("error: --cogs must be >= 1", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    return tuple(2.0 * math.pi * k / n for k in range(n))


def _format_float(x):
    return format(x, ".17g")


def write_csv(path, table, alpha_product, a):
    meta = table.metadata
    physical = alpha_product is not None and a is not None
    lines = [
        f"# casimir-gear v{meta['version']} kind={meta['kind']} y={meta['y']:g} "
        f"m_max={meta['m_max']} rel_tol={meta['rel_tol']:g}"
    ]
    lines.append("beta,F,T,energy,torque" if physical else "beta,F,T")
    pref = alpha_product / (4.0 * a ** 7) if physical else None
    for beta, f, t in table.rows:
        cells = [_format_float(beta), _format_float(f), _format_float(t)]
        if physical:
            cells += [_format_float(pref * f), _format_float(pref * t)]
        lines.append(",".join(cells))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def run(config):
    """Execute a sweep described by a RunConfig; returns the exit status."""
    try:
        scenario = GearScenario(
            kind=config.kind,
            y=config.y,
            cog_angles=config.cog_angles,
            alpha_product=config.alpha_product,
            a=config.a,
            mode_spec=ModeSumSpec(
                m_max=config.m_max,
                convergence_check=config.convergence_check,
                rel_tol=config.mode_tol,
            ),
            quad_spec=QuadratureSpec(rel_tol=config.rel_tol),
        )
    except (ValueError, CasimirGearError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    grid = [2.0 * math.pi * k / config.beta_steps for k in range(config.beta_steps)]
    t0 = time.perf_counter()
    try:
        table = sweep(scenario, grid, threads=config.threads)
    except (ModeConvergenceError, QuadratureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(exc, ModeConvergenceError) and exc.partial is not None:
            n = len(exc.partial.rows)
            print(f"partial result: {n} rows computed before abort (not written)",
                  file=sys.stderr)
        return EXIT_NUMERIC
    try:
        write_csv(config.output_path, table, config.alpha_product, config.a)
    except OSError as exc:
        print(f"error: cannot write {config.output_path}: {exc}", file=sys.stderr)
        return EXIT_IO
    wall = time.perf_counter() - t0
    print(
        f"# rows={len(table.rows)} wall={wall:.2f}s "
        f"max_err={table.metadata['max_quad_error']:.2e} -> {config.output_path}",
        file=sys.stderr,
    )
    return EXIT_OK


def _config_from_args(args, kind):
    if args.y <= 1.0:
        print("error: --y must be > 1", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    try:
        return RunConfig(
            kind=kind,
            y=args.y,
            cog_angles=_parse_angles(args),
            beta_steps=args.beta_steps,
            m_max=args.m_max,
            rel_tol=args.rel_tol,
            mode_tol=args.mode_tol,
            convergence_check=not args.no_convergence_check,
            alpha_product=args.alpha_product,
            a=args.a,
            output_path=args.output,
            threads=args.threads,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.subcommand == "single-gear":
        return run(_config_from_args(args, OPEN_GEAR))
    if args.subcommand == "concentric":
        return run(_config_from_args(args, CONCENTRIC))
    from .validation import run_all

    ok = run_all(skip_slow=args.skip_slow)
    return EXIT_OK if ok else 1


if __name__ == "__main__":
    sys.exit(main())
