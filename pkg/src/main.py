"""
Main entry point for the Delannoy/Schröder divisibility lab.
"""

import logging
import sys
from contextlib import nullcontext
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import click
from jsonschema import ValidationError

from config import (
    DEFAULT_FORMAT,
    LEMMA_RANGES,
    MAX_WORKERS,
    SWEEP_CONFIG,
    THEOREM_RANGES,
    configure_logging,
)
from src import __version__
from src.CheckRegistry import FAMILIES, LEMMA, LEMMA_CHECKS, PROBE, THEOREM, THEOREM_CHECKS, entry_for
from src.CoeffTable import default_table
from src.ReportEmitter import ReportEmitter
from src.SweepRunner import build_tasks, run_sweep
from src.exact_math import DomainError, InvariantViolation
from src.sequences import FamilyId, family_power
from src.utils import create_progress, err_console, load_preset, parse_range

logger = logging.getLogger(__name__)

# (flag, parameter name); uppercase flags need explicit names since click
# lowercases derived ones.
RANGE_OPTIONS: List[Tuple[str, str]] = [
    ("--n", "n"), ("--h", "h"), ("--m", "m"), ("--a", "a"),
    ("--l", "l"), ("--u", "u"), ("--k-max", "k_max"), ("--b", "b"),
    ("--e", "e"), ("--x", "x"), ("--y", "y"), ("--top", "top"),
    ("--M", "M"), ("--I", "I"), ("--J", "J"),
]
THEOREM_OPTION_NAMES = ("n", "h", "m", "a")

EPS_CHOICES = {"both": (1, -1), "plus": (1,), "minus": (-1,)}


class LabError(click.ClickException):
    """Domain or invariant failure surfaced to the command line."""
    exit_code = 2


def range_options(names: Optional[Sequence[str]] = None) -> Callable:
    """Attach one ``lo..hi`` option per parameter name."""
    selected = [(flag, name) for flag, name in RANGE_OPTIONS if names is None or name in names]

    def decorator(func: Callable) -> Callable:
        for flag, name in reversed(selected):
            func = click.option(flag, name, default=None, metavar="LO..HI",
                                help=f"Inclusive range for {name}.")(func)
        return func
    return decorator


def sweep_options(func: Callable) -> Callable:
    options = [
        click.option("--family", "family", type=click.Choice(["D", "S", "both"], case_sensitive=False),
                     default=None, help="Polynomial family (default: every family the check accepts)."),
        click.option("--eps", "eps", type=click.Choice(list(EPS_CHOICES)), default="both",
                     show_default=True, help="Sign of the alternating factor."),
        click.option("--format", "fmt", type=click.Choice(list(ReportEmitter.FORMATS)),
                     default=DEFAULT_FORMAT, show_default=True, help="Output format."),
        click.option("--jobs", "jobs", type=click.IntRange(min=1), default=MAX_WORKERS,
                     show_default=True, help="Worker processes (DELANNOY_LAB_JOBS overrides the default)."),
        click.option("--fail-fast/--no-fail-fast", "fail_fast", default=None,
                     help="Stop at the first failing check."),
        click.option("--ci", "ci", is_flag=True,
                     help="Acceptance mode: default ranges and fail-fast."),
        click.option("--preset", "preset", type=click.Path(exists=True, dir_okay=False),
                     default=None, help="YAML file of parameter ranges."),
        click.option("--output", "output", type=click.Path(dir_okay=False, writable=True),
                     default=None, help="Write records to FILE instead of stdout."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _resolve_ranges(group: str, check_id: str, defaults: Dict[str, Tuple[int, int]],
                    preset: Optional[str], cli_values: Dict[str, Optional[str]]) -> Dict[str, Tuple[int, int]]:
    """Configured defaults, then preset sections, then explicit options."""
    ranges = dict(defaults)
    if preset:
        sections = load_preset(preset)
        ranges.update(sections.get(group, {}))
        ranges.update(sections.get(check_id, {}))
    for name, value in cli_values.items():
        if value is None:
            continue
        try:
            ranges[name] = parse_range(value)
        except DomainError as e:
            raise click.BadParameter(str(e), param_hint=f"'--{name}'")
    return ranges


def _choices(family: Optional[str], eps: str, kinds: Sequence[str] = ()) -> Dict[str, Sequence[Any]]:
    choices: Dict[str, Sequence[Any]] = {"eps": EPS_CHOICES[eps]}
    if family and family.lower() != "both":
        choices["family"] = (family.upper(),)
    else:
        choices["family"] = FAMILIES
    if kinds:
        choices["kind"] = tuple(kinds)
    return choices


def _run_check_sweep(ctx: click.Context, group: str, check_id: str,
                     defaults: Dict[str, Tuple[int, int]], cli_values: Dict[str, Optional[str]],
                     family: Optional[str], eps: str, fmt: str, jobs: int,
                     fail_fast: Optional[bool], ci: bool, preset: Optional[str],
                     output: Optional[str], kinds: Sequence[str] = ()) -> None:
    try:
        entry = entry_for(group, check_id)
    except KeyError:
        raise click.BadParameter(f"unknown check id {check_id!r}", param_hint="check id")

    if fail_fast is None:
        fail_fast = True if ci else SWEEP_CONFIG["fail_fast"]

    try:
        ranges = _resolve_ranges(group, check_id, defaults, preset, cli_values)
        tasks = build_tasks(group, entry, ranges, _choices(family, eps, kinds))
        show_progress = err_console.is_terminal and len(tasks) > 1
        with click.open_file(output or "-", "w") as stream, \
                ReportEmitter(fmt, stream) as emitter, \
                (create_progress() if show_progress else nullcontext()) as progress:
            summary = run_sweep(tasks, emitter.emit, jobs=jobs, fail_fast=fail_fast,
                                progress=progress, only_failures=(group == PROBE))
    except (DomainError, InvariantViolation) as e:
        logger.error(f"Error running {group} {check_id}: {str(e)}")
        raise LabError(str(e))
    except ValidationError as e:
        raise LabError(f"invalid report record: {e.message}")

    ctx.exit(summary.exit_code)


@click.group()
@click.version_option(__version__, prog_name="delannoy-lab")
@click.option("--verbose", "-v", is_flag=True, help="Debug logging.")
def cli(verbose: bool):
    """Exact verification of divisibility theorems for Delannoy and Schröder polynomials."""
    configure_logging("DEBUG" if verbose else None)


@cli.command()
@click.option("--family", "family", type=click.Choice(["D", "S"], case_sensitive=False),
              default="D", show_default=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--h", "h", type=int, default=1, show_default=True)
@click.option("--m", "m", type=int, default=1, show_default=True, help="Power of the polynomial.")
def poly(family: str, n: int, h: int, m: int):
    """Print P_n^(h)(x)^m."""
    try:
        click.echo(family_power(FamilyId.parse(family), n, h, m).render())
    except (DomainError, InvariantViolation) as e:
        logger.error(f"Error building polynomial: {str(e)}")
        raise LabError(str(e))


def _coeff_lines(kind: str, l: Optional[int], a: Optional[int], u: Optional[int],
                 i: Optional[int], j: Optional[int], t: Optional[int], h: int,
                 indices: Optional[str]) -> List[str]:
    table = default_table()
    for name, value in (("l", l), ("a", a), ("u", u), ("i", i), ("j", j), ("t", t)):
        if value is not None and value < 0:
            raise DomainError(f"--{name} must be nonnegative, got {value}")
    if h < 1:
        raise DomainError(f"--h must be at least 1, got {h}")

    def need(**values: Optional[int]) -> None:
        missing = [name for name, value in values.items() if value is None]
        if missing:
            raise click.UsageError(f"coeff {kind} needs --{' --'.join(missing)}")

    def index_tuple() -> Tuple[int, ...]:
        if not indices:
            raise click.UsageError(f"coeff {kind} needs --indices i1,i2,...")
        try:
            return tuple(int(part) for part in indices.split(","))
        except ValueError:
            raise click.BadParameter(f"malformed index list {indices!r}", param_hint="'--indices'")

    if kind == "C":
        need(l=l, a=a)
        return [f"C_{k}({l},{a}) = {v}" for k, v in enumerate(table.c_coeffs(l, a))]
    if kind == "K":
        need(l=l, a=a)
        us = [u] if u is not None else range(a + 1)
        return [f"K_{k}({l},{a}) = {table.k_coeff(k, l, a)}" for k in us]
    if kind in ("b", "a"):
        need(i=i)
        row = table.b_table(i, h) if kind == "b" else table.a_table(i, h)
        ts = [t] if t is not None else sorted(row)
        return [f"{kind}_{{{i},{s}}}^({h}) = {row.get(s, 0)}" for s in ts]
    if kind in ("Bpair", "Apair"):
        need(i=i, j=j)
        pair = table.b_pair if kind == "Bpair" else table.a_pair
        ls = [l] if l is not None else range(max(i, j), i + j + 1)
        return [f"{kind[0]}_{{{i},{j}}}^({s}) = {pair(i, j, s)}" for s in ls]
    key = index_tuple()
    family = kind[0]
    if kind.endswith("multi"):
        row = table.multi_row(family, key)
        label = f"{family}_{{{','.join(map(str, key))}}}"
        suffix = ""
    else:
        row = table.tilde_row(family, key, h)
        label = f"{family}~_{{{','.join(map(str, key))}}}"
        suffix = f",{h}"
    ls = [l] if l is not None else sorted(row)
    return [f"{label}^({s}{suffix}) = {row.get(s, 0)}" for s in ls]


@cli.command()
@click.argument("kind", type=click.Choice(["C", "K", "b", "a", "Bpair", "Apair",
                                           "Bmulti", "Amulti", "Btilde", "Atilde"]))
@click.option("--l", "l", type=int, default=None)
@click.option("--a", "a", type=int, default=None)
@click.option("--u", "u", type=int, default=None)
@click.option("--i", "i", type=int, default=None)
@click.option("--j", "j", type=int, default=None)
@click.option("--t", "t", type=int, default=None)
@click.option("--h", "h", type=int, default=1, show_default=True)
@click.option("--indices", "indices", default=None, help="Comma-separated index tuple.")
def coeff(kind: str, l, a, u, i, j, t, h, indices):
    """Print a slice of a reduction coefficient table."""
    try:
        for line in _coeff_lines(kind, l, a, u, i, j, t, h, indices):
            click.echo(line)
    except (DomainError, InvariantViolation) as e:
        logger.error(f"Error computing {kind} coefficients: {str(e)}")
        raise LabError(str(e))


@cli.command()
@click.option("--id", "check_id", required=True, type=click.Choice(sorted(LEMMA_CHECKS)),
              help="Lemma check id.")
@click.option("--kind", "kinds", multiple=True,
              help="Restrict categorical kind (quotients: F/Gplus/Gminus, reduction: B/A).")
@range_options()
@sweep_options
@click.pass_context
def lemma(ctx: click.Context, check_id: str, kinds: Tuple[str, ...], family, eps, fmt, jobs,
          fail_fast, ci, preset, output, **ranges):
    """Sweep a lemma-level identity over parameter ranges."""
    _run_check_sweep(ctx, LEMMA, check_id, LEMMA_RANGES.get(check_id, {}), ranges,
                     family, eps, fmt, jobs, fail_fast, ci, preset, output, kinds)


@cli.command()
@click.option("--theorem", "theorem_id", required=True, type=click.Choice(sorted(THEOREM_CHECKS)))
@range_options(THEOREM_OPTION_NAMES)
@sweep_options
@click.pass_context
def verify(ctx: click.Context, theorem_id: str, family, eps, fmt, jobs, fail_fast, ci,
           preset, output, **ranges):
    """Check a divisibility theorem over parameter ranges."""
    _run_check_sweep(ctx, THEOREM, theorem_id, THEOREM_RANGES, ranges,
                     family, eps, fmt, jobs, fail_fast, ci, preset, output)


@cli.command()
@click.option("--theorem", "theorem_id", required=True,
              type=click.Choice(sorted(set(THEOREM_CHECKS) - {"cg"})))
@range_options(THEOREM_OPTION_NAMES)
@sweep_options
@click.pass_context
def probe(ctx: click.Context, theorem_id: str, family, eps, fmt, jobs, fail_fast, ci,
          preset, output, **ranges):
    """Report specs that fail once the gcd factor is dropped from the modulus."""
    _run_check_sweep(ctx, PROBE, theorem_id, THEOREM_RANGES, ranges,
                     family, eps, fmt, jobs, fail_fast, ci, preset, output)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Execute one subcommand.

    Returns:
        0 when every check passed, 1 when a witness was reported, 2 on
        usage or domain errors.
    """
    try:
        result = cli.main(args=list(argv) if argv is not None else None,
                          prog_name="delannoy-lab", standalone_mode=False)
    except click.ClickException as e:
        e.show(file=sys.stderr)
        return 2
    except click.Abort:
        err_console.print("Aborted")
        return 2
    except (DomainError, InvariantViolation) as e:
        logger.error(f"Error: {str(e)}")
        err_console.print(f"[red]Error: {str(e)}[/red]")
        return 2
    return result if isinstance(result, int) else 0


def main_cli() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main_cli()
