"""Command-line interface.

Exit codes: 0 success, 1 property absent (not harmful / not a RUM),
2 input error, 3 size guard exceeded.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from itertools import islice

import click

from . import data as _data
from .degree import degree_of_self_punishment
from .detection import iter_composing_orders
from .exceptions import DataError, HarmfulRUMError, SizeGuardExceeded
from .forward import HarmfulWeights, simulate
from .identification import all_justifications, classify
from .orders import LinearOrder
from .probes import DEFAULT_MAX_N
from .report import (
    AnalysisReport,
    degree_dict,
    detect_dict,
    dumps,
    identification_dict,
    justification_dict,
    mode,
    probes_dict,
)

OK, ABSENT, INPUT_ERROR, SIZE_GUARD = 0, 1, 2, 3


class RationalParam(click.ParamType):
    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            v = _data.parse_probability(value)
        except DataError as exc:
            self.fail(str(exc), param, ctx)
        if v < 0:
            self.fail("must be nonnegative", param, ctx)
        return v


RATIONAL = RationalParam()

tolerance_option = click.option(
    "--tolerance", type=RATIONAL, default="0", show_default=True,
    help="Slack on every equality (decimal or a/b); 0 is exact mode.")
decimals_option = click.option(
    "--decimals", type=click.IntRange(min=0), default=None,
    help="Render rationals as fixed-point decimals instead of a/b.")
format_option = click.option(
    "--format", "fmt", type=click.Choice(["json", "csv"]), default=None,
    help="Input format (default: inferred from the file suffix).")
max_n_option = click.option(
    "--max-n", type=click.IntRange(min=1), default=DEFAULT_MAX_N, show_default=True,
    help="Largest ground set for the exact RUM feasibility test.")


def _fail(message: str, code: int):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load(path: str, fmt: str | None, tolerance: Fraction):
    try:
        return _data.load(path, fmt, tolerance)
    except DataError as exc:
        _fail(f"{path}: {exc}", INPUT_ERROR)
    except OSError as exc:
        _fail(f"{path}: {exc.strerror}", INPUT_ERROR)


def _emit(obj) -> None:
    click.echo(dumps(obj), nl=False)


@click.group()
@click.version_option(package_name="artifact")
def main():
    """Detect and elicit harmful random utility models from choice data."""


@main.command("validate")
@click.argument("path", type=click.Path(dir_okay=False))
@format_option
@tolerance_option
def validate_cmd(path, fmt, tolerance):
    """Check that PATH holds a complete stochastic choice dataset."""
    rho = _load(path, fmt, tolerance)
    _emit({"valid": True, "items": list(rho.ground.items),
           "menus": len(rho.masks()), "digest": rho.digest(),
           "regular": _data.is_regular(rho, tolerance)})


@main.command("simulate")
@click.option("--order", "order_text", required=True, help="Preference, best first, e.g. p,f,s.")
@click.option("--weights", "weights_text", required=True,
              help="Weights on distortions 0..n-1, e.g. 0.3,0.1,0.6.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json",
              show_default=True, help="Output format.")
@decimals_option
def simulate_cmd(order_text, weights_text, fmt, decimals):
    """Print the dataset generated by a preference and distortion weights."""
    try:
        order = LinearOrder.from_labels(order_text)
        weights = HarmfulWeights.parse(weights_text)
        rho = simulate(order, weights)
    except DataError as exc:
        _fail(str(exc), INPUT_ERROR)
    if fmt == "csv":
        click.echo(rho.to_csv(decimals), nl=False)
    else:
        click.echo(rho.to_json(decimals), nl=False)


@main.command("detect")
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--all", "all_orders", is_flag=True, help="List every composing order.")
@format_option
@tolerance_option
@decimals_option
def detect_cmd(path, all_orders, fmt, tolerance, decimals):
    """Search for orders composing the dataset in PATH."""
    rho = _load(path, fmt, tolerance)
    found = iter_composing_orders(rho, tolerance)
    orders = list(found) if all_orders else list(islice(found, 1))
    _emit(detect_dict(rho, orders, tolerance, decimals))
    sys.exit(OK if orders else ABSENT)


@main.command("identify")
@click.argument("path", type=click.Path(dir_okay=False))
@format_option
@tolerance_option
@decimals_option
def identify_cmd(path, fmt, tolerance, decimals):
    """List every justification of PATH and its identification class."""
    rho = _load(path, fmt, tolerance)
    justs = _guard(lambda: all_justifications(rho, tolerance))
    cls = _guard(lambda: classify(rho, tolerance, justs))
    _emit({"mode": mode(tolerance),
           "justifications": [justification_dict(j, decimals) for j in justs],
           "identification": identification_dict(cls)})
    sys.exit(OK if justs else ABSENT)


@main.command("degree")
@click.argument("path", type=click.Path(dir_okay=False))
@format_option
@tolerance_option
def degree_cmd(path, fmt, tolerance):
    """Degree of self-punishment of PATH."""
    rho = _load(path, fmt, tolerance)
    if next(iter_composing_orders(rho, tolerance), None) is None:
        _emit({"mode": mode(tolerance), "harmful": False, "degree": None})
        sys.exit(ABSENT)
    report = _guard(lambda: degree_of_self_punishment(rho, tolerance))
    _emit({"mode": mode(tolerance), "harmful": True, **degree_dict(report)})


@main.command("classify")
@click.argument("path", type=click.Path(dir_okay=False))
@format_option
@max_n_option
@decimals_option
def classify_cmd(path, fmt, max_n, decimals):
    """Harmful / RUM / correlation bound / single-peakedness of PATH."""
    rho = _load(path, fmt, Fraction(0))
    if rho.n > max_n:
        _fail(str(SizeGuardExceeded(rho.n, max_n)), SIZE_GUARD)
    justs = _guard(lambda: all_justifications(rho))
    probes = _guard(lambda: probes_dict(rho, justs, max_n, decimals))
    _emit(probes)
    sys.exit(OK if probes["rum"] else ABSENT)


@main.command("report")
@click.argument("path", type=click.Path(dir_okay=False))
@format_option
@tolerance_option
@decimals_option
@max_n_option
def report_cmd(path, fmt, tolerance, decimals, max_n):
    """Full analysis of PATH as one JSON document."""
    rho = _load(path, fmt, tolerance)
    report = _guard(lambda: AnalysisReport(rho, tolerance, max_n))
    click.echo(report.render(decimals), nl=False)
    sys.exit(OK if report.harmful else ABSENT)


def _guard(fn):
    try:
        return fn()
    except SizeGuardExceeded as exc:
        _fail(str(exc), SIZE_GUARD)
    except DataError as exc:
        _fail(str(exc), INPUT_ERROR)
    except HarmfulRUMError as exc:
        _fail(str(exc), ABSENT)


if __name__ == "__main__":
    main()
