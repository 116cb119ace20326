"""Command-line surface: construct, sweep, verify, dist, kernel.

All numeric content is produced by the library modules; this layer only
parses configuration, formats CSV/JSON, and maps failures to exit codes
(0 success, 2 usage, 3 verification failure, 4 I/O).
"""

from __future__ import annotations

import configparser
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import click
import numpy as np

from . import __version__
from .constructors import (
    METHODS,
    TRIG_METHODS,
    approximant_coefficients,
    build_approximant,
    error_report,
)
from .corpus import CORPUS, get_target, target_from_csv
from .counting_model import median3_amp_pmf, single_run_pmf
from .numerics import (
    Grid,
    PreconditionError,
    effective_algebraic_degree,
    effective_trig_degree,
)
from .phase_dist import fejer_kernel, jackson_kernel, pe_pmf
from .verify import run_verification

SCHEMA_VERSION = 1
DEFAULT_SEED = 1234
DEFAULT_GRID = 4097


def _fmt(v):
    return f"{v:.17g}"


def _write_text(path, text):
    try:
        if path is None:
            sys.stdout.write(text)
        else:
            with open(path, "w") as fh:
                fh.write(text)
    except OSError as exc:
        click.echo(f"I/O error: {exc}", err=True)
        sys.exit(4)


def _resolve_target(name_or_path, periodic_hint=False):
    if name_or_path in CORPUS:
        return get_target(name_or_path)
    if os.path.exists(name_or_path):
        return target_from_csv(name_or_path, periodic=periodic_hint)
    valid = ", ".join(sorted(CORPUS))
    raise click.UsageError(
        f"unknown target {name_or_path!r}: not a corpus name ({valid}) or CSV path"
    )


def _parse_range(spec):
    """Inclusive start:stop:step range, or a single integer."""
    parts = spec.split(":")
    try:
        if len(parts) == 1:
            return [int(parts[0])]
        if len(parts) == 2:
            start, stop = int(parts[0]), int(parts[1])
            return list(range(start, stop + 1))
        if len(parts) == 3:
            start, stop, step = (int(p) for p in parts)
            return list(range(start, stop + 1, step))
    except ValueError:
        pass
    raise click.UsageError(f"bad n range {spec!r}; expected N or start:stop:step")


def _thread_cap():
    env = os.environ.get("JACKSONLAB_THREADS")
    cap = os.cpu_count() or 1
    if env:
        try:
            cap = max(1, min(cap, int(env)))
        except ValueError:
            raise click.UsageError("JACKSONLAB_THREADS must be an integer")
    return cap


class ConfigDefaults(click.Group):
    """Lets a key=value config file (sections per subcommand) seed defaults."""

    def invoke(self, ctx):
        path = ctx.params.get("config")
        if path:
            parser = configparser.ConfigParser()
            try:
                with open(path) as fh:
                    parser.read_file(fh)
            except OSError as exc:
                click.echo(f"I/O error: {exc}", err=True)
                sys.exit(4)
            ctx.default_map = {
                section: dict(parser.items(section)) for section in parser.sections()
            }
        return super().invoke(ctx)


@click.group(cls=ConfigDefaults)
@click.version_option(__version__)
@click.option("--config", type=click.Path(), default=None,
              help="Config file with [subcommand] sections of key=value defaults.")
def main(config):
    """Uniform approximation lab: quantum-derived and classical constructions."""


def _degree_residual(g, approx, n, seed):
    probe = 4 * n + 1
    if approx.method in TRIG_METHODS:
        return effective_trig_degree(approx, n, probe, seed=seed).residual
    return effective_algebraic_degree(approx, n, probe, seed=seed).residual


@main.command()
@click.option("--method", required=True, type=click.Choice(METHODS))
@click.option("--n", "n", required=True, type=int)
@click.option("--target", required=True)
@click.option("--periodic", is_flag=True, help="Treat a CSV target as 1-periodic.")
@click.option("--grid-size", default=DEFAULT_GRID, type=click.IntRange(min=65))
@click.option("--seed", default=DEFAULT_SEED, type=int)
@click.option("--output", type=click.Path(), default=None)
def construct(method, n, target, periodic, grid_size, seed, output):
    """Build one approximant; emit coefficients and its error report as JSON."""
    if n < 1:
        raise click.UsageError("n must be >= 1")
    g = _resolve_target(target, periodic_hint=periodic or method in TRIG_METHODS)
    try:
        approx = build_approximant(g, method, n)
        report = error_report(g, method, n, Grid.uniform(grid_size))
        coeffs = approximant_coefficients(g, approx)
        residual = _degree_residual(g, approx, n, seed)
    except PreconditionError as exc:
        raise click.UsageError(str(exc))
    if method in TRIG_METHODS:
        basis = "fourier"
        coeff_list = [[float(c.real), float(c.imag)] for c in coeffs.coeffs]
    else:
        basis = "chebyshev"
        coeff_list = [float(c) for c in coeffs.coeffs]
    doc = {
        "schema_version": SCHEMA_VERSION,
        "method": method,
        "target": g.name,
        "n": n,
        "M": approx.M,
        "N": approx.N,
        "degenerate": approx.degenerate,
        "seed": seed,
        "basis": basis,
        "coefficients": coeff_list,
        "degree_residual": residual,
        "error_report": {
            "sup_err": report.sup_err,
            "omega_ref": report.omega_ref,
            "ratio": report.ratio,
            "grid_size": report.grid_size,
        },
    }
    _write_text(output, json.dumps(doc, indent=2) + "\n")


SWEEP_HEADER = "method,n,M,sup_err,omega_ref,ratio,degree_residual,grid_size,seed"


@main.command()
@click.option("--method", required=True, type=click.Choice(METHODS))
@click.option("--n", "n_range", required=True, help="Single n or start:stop:step.")
@click.option("--target", required=True)
@click.option("--periodic", is_flag=True)
@click.option("--grid-size", default=DEFAULT_GRID, type=click.IntRange(min=65))
@click.option("--seed", default=DEFAULT_SEED, type=int)
@click.option("--output", type=click.Path(), default=None)
def sweep(method, n_range, target, periodic, grid_size, seed, output):
    """Error and degree-residual sweep over a range of degree budgets (CSV)."""
    ns = _parse_range(n_range)
    g = _resolve_target(target, periodic_hint=periodic or method in TRIG_METHODS)
    grid = Grid.uniform(grid_size)

    def row(n):
        approx = build_approximant(g, method, n)
        report = error_report(g, method, n, grid)
        residual = _degree_residual(g, approx, n, seed)
        m_field = "" if approx.M is None else str(approx.M)
        return ",".join(
            [method, str(n), m_field, _fmt(report.sup_err), _fmt(report.omega_ref),
             _fmt(report.ratio), _fmt(residual), str(grid_size), str(seed)]
        )

    try:
        with ThreadPoolExecutor(max_workers=_thread_cap()) as pool:
            rows = list(pool.map(row, ns))  # output order fixed by n
    except PreconditionError as exc:
        raise click.UsageError(str(exc))
    _write_text(output, SWEEP_HEADER + "\n" + "\n".join(rows) + "\n")


@main.command()
@click.option("--output", type=click.Path(), default=None)
def verify(output):
    """Run the full oracle cross-check suite; exit 3 on any failure."""
    manifest = run_verification()
    _write_text(output, json.dumps(manifest, indent=2) + "\n")
    if not manifest["passed"]:
        sys.exit(3)


@main.command()
@click.option("--m", "M", required=True, type=click.IntRange(min=1),
              help="Phase-estimation precision.")
@click.option("--x", type=float, default=None, help="Eigenphase in [0,1).")
@click.option("--count-n", "count_n", type=int, default=None,
              help="Bitstring length for a quantum-counting pmf.")
@click.option("--weight", type=int, default=None, help="Hamming weight.")
@click.option("--median3", is_flag=True, help="Dump the median-of-three A' pmf.")
@click.option("--output", type=click.Path(), default=None)
def dist(M, x, count_n, weight, median3, output):
    """Dump an outcome distribution as CSV (columns: index/value, probability)."""
    if x is not None:
        probs = pe_pmf(M, x).probs
        rows = [f"{z},{_fmt(p)}" for z, p in enumerate(probs)]
        header = "index,value"
    elif count_n is not None and weight is not None:
        try:
            if median3:
                values, probs = median3_amp_pmf(weight, count_n, M)
                rows = [f"{_fmt(v)},{_fmt(p)}" for v, p in zip(values, probs)]
                header = "estimate,value"
            else:
                probs = single_run_pmf(weight, count_n, M)
                rows = [f"{z},{_fmt(p)}" for z, p in enumerate(probs)]
                header = "index,value"
        except PreconditionError as exc:
            raise click.UsageError(str(exc))
    else:
        raise click.UsageError("need either --x, or --count-n with --weight")
    _write_text(output, header + "\n" + "\n".join(rows) + "\n")


@main.command()
@click.option("--kind", type=click.Choice(["fejer", "jackson"]), required=True)
@click.option("--n", "n", required=True, type=click.IntRange(min=1))
@click.option("--points", default=512, type=click.IntRange(min=2))
@click.option("--output", type=click.Path(), default=None)
def kernel(kind, n, points, output):
    """Tabulate an approximation kernel on a uniform grid (CSV)."""
    spec = fejer_kernel(n) if kind == "fejer" else jackson_kernel(n)
    ts = np.arange(points) / points
    vals = spec(ts)
    rows = [f"{_fmt(t)},{_fmt(v)}" for t, v in zip(ts, vals)]
    _write_text(output, "abscissa,value\n" + "\n".join(rows) + "\n")


if __name__ == "__main__":
    main()
