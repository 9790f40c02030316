import logging
from dataclasses import replace

import click
from flask import Blueprint, current_app

from .decorators.exit_codes import EXIT_VERIFICATION_FAILED, usage_errors_exit
from .services import closed_forms, oracle, recursion
from .services.identities import IDENTITIES, SuiteRanges, run_identity, run_suite
from .services.verification import run_bijection_checks, verify_methods
from .utils.permutations import StatConfig
from .utils.polynomials import BiPoly, IntPoly
from .utils.rendering import (
    SPAN,
    UnknownSelectorError,
    check_family,
    check_format,
    format_sequence,
    parse_residues,
    render_report,
    render_table,
    select_coefficient,
)

logger = logging.getLogger(__name__)

# cli_group=None puts every command at the top level of the app's CLI
descents_blueprint = Blueprint("descents", __name__, cli_group=None)

METHODS = ("oracle", "recursive", "closed")


def _setting(value, key):
    return current_app.config[key] if value is None else value


def _format(value):
    return check_format(_setting(value, "OUTPUT_FORMAT"))


def _check_modulus(k):
    if k < 1:
        raise UnknownSelectorError(f"Modulus k must be a positive integer, got {k}")


def _table_row(family, k, length, method, residues, jobs, guard):
    """One row of ``table``: coefficient list(s) of the distribution at ``length``."""
    if method == "oracle":
        cfg = StatConfig.left(k, residues) if family == "A" else StatConfig.right(k, residues)
        if family == "A":
            return {"n": length, "coefficients": oracle.distribution_general(length, cfg, jobs, guard).to_list()}
        split = oracle.split_distribution_general(length, cfg, jobs, guard)
        return {"n": length, "z0": split.z0.to_list(), "z1": split.z1.to_list()}

    if residues != [0]:
        raise UnknownSelectorError("Residue classes other than {0} need --method oracle")
    if method == "recursive":
        if family == "A":
            return {"n": length, "coefficients": recursion.poly_A_recursive(k, length).to_list()}
        split = recursion.poly_B_recursive(k, length)
        return {"n": length, "z0": split.z0.to_list(), "z1": split.z1.to_list()}
    if family == "A":
        return {"n": length, "coefficients": _trim(closed_forms.closed_A_coefficients(k, length))}
    z0, z1 = closed_forms.closed_B_split_coefficients(k, length)
    return {"n": length, "z0": _trim(z0), "z1": _trim(z1)}


def _trim(values):
    values = list(values)
    while values and values[-1] == 0:
        values.pop()
    return values


@descents_blueprint.cli.command("table")
@click.argument("family")
@click.option("--k", "k", type=int, required=True, help="Modulus k.")
@click.option("--n", "lengths", type=SPAN, required=True, help="Permutation lengths, a..b.")
@click.option("--method", default="recursive", show_default=True, help="oracle | recursive | closed")
@click.option("--format", "fmt", default=None, help="text | json | csv")
@click.option("--jobs", type=int, default=None, help="Oracle worker processes.")
@click.option("--guard", type=int, default=None, help="Largest n the oracle may enumerate.")
@click.option("--residues", default=None, help="Comma-separated residues mod k forming the class (oracle only).")
@usage_errors_exit
def table_command(family, k, lengths, method, fmt, jobs, guard, residues):
    """
    Print the A (first element) or B (second element, split by first letter)
    distribution for every length in the span.
    """
    if family not in ("A", "B"):
        raise UnknownSelectorError(f"Unknown family {family!r}; table accepts A or B")
    _check_modulus(k)
    if method not in METHODS:
        raise UnknownSelectorError(f"Unknown method {method!r}; expected one of {', '.join(METHODS)}")
    fmt = _format(fmt)
    jobs = _setting(jobs, "ORACLE_JOBS")
    guard = _setting(guard, "ORACLE_MAX_N")
    residue_list = parse_residues(residues)

    rows = [_table_row(family, k, length, method, residue_list, jobs, guard) for length in lengths]
    table = {"family": family, "k": k, "method": method, "residues": residue_list, "rows": rows}
    click.echo(render_table(table, fmt))


@descents_blueprint.cli.command("verify")
@click.option("--k", "k_values", type=SPAN, default=None, help="Moduli to sweep, a..b.")
@click.option("--n", "lengths", type=SPAN, default=None, help="Lengths to sweep, a..b.")
@click.option("--format", "fmt", default=None, help="text | json | csv")
@click.option("--jobs", type=int, default=None, help="Oracle worker processes.")
@click.option("--guard", type=int, default=None, help="Largest n the oracle may enumerate.")
@usage_errors_exit
def verify_command(k_values, lengths, fmt, jobs, guard):
    """Cross-check brute force, recursion and every closed form coefficient by coefficient."""
    fmt = _format(fmt)
    if k_values is None:
        k_values = range(2, current_app.config["VERIFY_MAX_K"] + 1)
    if lengths is None:
        lengths = range(0, current_app.config["VERIFY_MAX_N"] + 1)
    for k in k_values:
        _check_modulus(k)
    report = verify_methods(
        k_values, lengths, jobs=_setting(jobs, "ORACLE_JOBS"), oracle_max_n=_setting(guard, "ORACLE_MAX_N")
    )
    click.echo(render_report(report, fmt))
    if not report.passed:
        click.get_current_context().exit(EXIT_VERIFICATION_FAILED)


@descents_blueprint.cli.command("identity")
@click.argument("name")
@click.option("--max-n", type=int, default=None, help="Largest n for the binomial identities.")
@click.option("--max-k", type=int, default=None, help="Largest k for the cross identities.")
@click.option("--cross-max-n", type=int, default=None, help="Largest n for the cross identities.")
@click.option("--format", "fmt", default=None, help="text | json")
@usage_errors_exit
def identity_command(name, max_n, max_k, cross_max_n, fmt):
    """Run one identity by name, or every identity with ``all``."""
    fmt = _format(fmt)
    defaults = SuiteRanges.from_config(current_app.config)
    ranges = replace(
        defaults,
        max_n=_or(max_n, defaults.max_n),
        max_k=_or(max_k, defaults.max_k),
        cross_max_n=_or(cross_max_n, defaults.cross_max_n),
    )
    if name == "all":
        report = run_suite(ranges)
    elif name in IDENTITIES:
        report = run_identity(name, ranges)
    else:
        raise UnknownSelectorError(f"Unknown identity {name!r}; expected all or one of {', '.join(IDENTITIES)}")
    click.echo(render_report(report, fmt))
    if not report.passed:
        click.get_current_context().exit(EXIT_VERIFICATION_FAILED)


def _or(value, default):
    return default if value is None else value


@descents_blueprint.cli.command("sequence")
@click.argument("family")
@click.option("--k", "k", type=int, required=True, help="Modulus k.")
@click.option("--selector", default="const", show_default=True, help="const | top | x<d>")
@click.option("--n", "lengths", type=SPAN, required=True, help="Permutation lengths, a..b.")
@click.option("--method", default="recursive", show_default=True, help="oracle | recursive | closed")
@click.option("--jobs", type=int, default=None, help="Oracle worker processes.")
@click.option("--guard", type=int, default=None, help="Largest n the oracle may enumerate.")
@usage_errors_exit
def sequence_command(family, k, selector, lengths, method, jobs, guard):
    """Print one coefficient per length as a comma-separated sequence."""
    check_family(family)
    _check_modulus(k)
    if method not in METHODS:
        raise UnknownSelectorError(f"Unknown method {method!r}; expected one of {', '.join(METHODS)}")
    jobs = _setting(jobs, "ORACLE_JOBS")
    guard = _setting(guard, "ORACLE_MAX_N")
    values = []
    for length in lengths:
        if family == "A":
            if method == "oracle":
                poly = oracle.poly_A_bruteforce(k, length, jobs, guard)
            elif method == "closed":
                poly = IntPoly(closed_forms.closed_A_coefficients(k, length))
            else:
                poly = recursion.poly_A_recursive(k, length)
        elif method == "oracle":
            poly = oracle.poly_B_bruteforce(k, length, jobs, guard)
        elif method == "closed":
            poly = BiPoly(*closed_forms.closed_B_split_coefficients(k, length))
        else:
            poly = recursion.poly_B_recursive(k, length)
        values.append(select_coefficient(family, poly, selector, k, length))
    logger.debug(f"sequence {family} k={k} {selector}: {len(values)} terms")
    click.echo(format_sequence(values))


@descents_blueprint.cli.command("bijection-check")
@click.option("--k", "k_values", type=SPAN, default="2..5", show_default=True, help="Moduli to check, a..b.")
@click.option("--max-n", type=int, default=None, help="Longest permutations checked exhaustively.")
@click.option("--format", "fmt", default=None, help="text | json")
@usage_errors_exit
def bijection_check_command(k_values, max_n, fmt):
    """Exhaustive complement, star, bij01 and bij02 checks at every valid length."""
    fmt = _format(fmt)
    max_length = _setting(max_n, "BIJECTION_MAX_N")
    report = run_bijection_checks(k_values, max_length)
    click.echo(render_report(report, fmt))
    if not report.passed:
        click.get_current_context().exit(EXIT_VERIFICATION_FAILED)
