"""Built-in target functions with exact moduli of continuity, plus CSV ingestion."""

from __future__ import annotations

import csv

import numpy as np

from .numerics import PreconditionError, TargetFunction


def _triangle(x):
    f = np.asarray(x, dtype=float) % 1.0
    return 2.0 * np.minimum(f, 1.0 - f)


def _holder_cusp(x):
    return np.sqrt(np.abs(np.asarray(x, dtype=float) - 1.0 / 3.0))


CORPUS = {
    "abs-half": TargetFunction(
        lambda x: np.abs(x - 0.5),
        periodic=False,
        analytic_modulus=lambda d: min(d, 0.5),
        name="abs-half",
    ),
    "sqrt": TargetFunction(
        np.sqrt,
        periodic=False,
        analytic_modulus=lambda d: np.sqrt(d),
        name="sqrt",
    ),
    "identity": TargetFunction(
        lambda x: np.asarray(x, dtype=float) + 0.0,
        periodic=False,
        analytic_modulus=lambda d: d,
        name="identity",
    ),
    "const": TargetFunction(
        lambda x: np.full_like(np.asarray(x, dtype=float), 0.75),
        periodic=False,
        analytic_modulus=lambda d: 0.0,
        name="const",
    ),
    # sup |f(x)-f(y)| over |x-y|<=d equals sqrt(d) up to d=2/3, then saturates
    "holder-cusp": TargetFunction(
        _holder_cusp,
        periodic=False,
        analytic_modulus=lambda d: np.sqrt(min(d, 2.0 / 3.0)),
        name="holder-cusp",
    ),
    "triangle": TargetFunction(
        _triangle,
        periodic=True,
        analytic_modulus=lambda d: min(2.0 * d, 1.0),
        name="triangle",
    ),
    "cos": TargetFunction(
        lambda x: np.cos(2.0 * np.pi * (np.asarray(x, dtype=float) % 1.0)),
        periodic=True,
        analytic_modulus=lambda d: 2.0 * np.sin(np.pi * min(d, 0.5)),
        name="cos",
    ),
    "const-periodic": TargetFunction(
        lambda x: np.full_like(np.asarray(x, dtype=float), 0.75),
        periodic=True,
        analytic_modulus=lambda d: 0.0,
        name="const-periodic",
    ),
}

PERIODIC_NAMES = tuple(k for k, v in CORPUS.items() if v.periodic)
NONPERIODIC_NAMES = tuple(k for k, v in CORPUS.items() if not v.periodic)


def get_target(name):
    try:
        return CORPUS[name]
    except KeyError:
        valid = ", ".join(sorted(CORPUS))
        raise PreconditionError(f"unknown target {name!r}; valid names: {valid}") from None


def target_from_csv(path, periodic=False, name=None):
    """Piecewise-linear target from a two-column x,y CSV file.

    x must be strictly increasing with first x = 0 and last x = 1.
    Periodic targets additionally require y(0) = y(1).  A non-numeric
    first row is treated as a header and skipped.
    """
    xs, ys = [], []
    with open(path, newline="") as fh:
        for row in csv.reader(fh):
            if not row:
                continue
            try:
                x, y = float(row[0]), float(row[1])
            except (ValueError, IndexError):
                if not xs:
                    continue  # header row
                raise PreconditionError(f"malformed CSV row: {row!r}") from None
            xs.append(x)
            ys.append(y)
    xs = np.asarray(xs)
    ys = np.asarray(ys)
    if len(xs) < 2:
        raise PreconditionError("need at least two data rows")
    if not np.all(np.diff(xs) > 0):
        raise PreconditionError("x column must be strictly increasing")
    if xs[0] != 0.0 or xs[-1] != 1.0:
        raise PreconditionError("x must start at 0 and end at 1")
    if periodic and ys[0] != ys[-1]:
        raise PreconditionError("periodic target requires y(0) = y(1)")

    if periodic:
        evaluator = lambda t: np.interp(np.asarray(t, dtype=float) % 1.0, xs, ys)
    else:
        evaluator = lambda t: np.interp(np.asarray(t, dtype=float), xs, ys)
    return TargetFunction(
        evaluator,
        periodic=periodic,
        analytic_modulus=None,
        name=name or str(path),
    )
