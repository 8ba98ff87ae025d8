#!/usr/bin/env python3
"""
dahaverify command line.

    dahaverify verify r-constants --n 2
    dahaverify verify pbw-audit --presentation D1 --n 2 --degree 2 --json out.json
    dahaverify compute macdonald --n 2 --lambda 2,0
    dahaverify compute operator Y1 --n 2
    dahaverify compute golden --out golden_n2.json
    dahaverify list suites

Exit codes: 0 no failed checks, 1 failed checks, 2 configuration error.
"""

import json
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import click
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from ..config import SUITES, load_config_file, merge_config
from ..daha import DahaGenSymbol, rep_generator
from ..errors import ConfigError, DahaVerifyError
from ..laurent import check_dominant
from ..logs import configure_logging, get_logger
from ..macdonald import macdonald_table, render_expansion
from ..ncverify.audit import load_golden
from ..ncverify.presentations import PRESENTATION_NAMES, build_presentation
from ..ncverify.rewriting import rewrite_system
from ..report import SCHEMA_VERSION, CheckStatus, Report
from ..scalars import MODES, ParamContext
from ..suites import run_suite
from ..toroidal import GKLOContext, gklo_b, gklo_mode

console = Console()
err_console = Console(stderr=True)
log = get_logger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2

STATUS_STYLES = {
    CheckStatus.PASS: "green",
    CheckStatus.FAIL: "bold red",
    CheckStatus.INCONCLUSIVE: "yellow",
    CheckStatus.SKIPPED: "dim",
}

SUITE_HELP = {
    "daha-presentation": "DAHA relations in the polynomial representation",
    "symmetrizer": "Hecke symmetrizer idempotency and absorption",
    "dunkl-commutativity": "pairwise commutation of cyclotomic q-Dunkl operators",
    "power-sums": "spherical power sums preserve symmetric polynomials",
    "macdonald": "Macdonald eigenvectors, triangularity, spectrum, specialization",
    "gamma-conjugation": "gamma_Z conjugates x-multiplication to the Dunkl sum",
    "toroidal-relations": "GKLO images satisfy the shifted toroidal mode relations",
    "correspondence": "spherical DAHA versus GKLO operators",
    "r-constants": "QYBE and Hecke condition for the R-matrix",
    "pbw-audit": "graded dimension audit of a presentation",
    "straightening": "rewriting termination and agreement with linear algebra",
    "confluence": "overlap closure of the derived rewriting rules",
    "golden": "n = 2 relation counts against the recorded fixtures",
    "morphisms": "relation images under PhiEll and Psi1Z",
    "identity-suite": "moment-map, X-circle, determinant and Weyl identities",
}


def _fail_config(exc: Exception) -> None:
    err_console.print(f"[bold red]configuration error:[/bold red] {escape(str(exc))}")
    sys.exit(EXIT_CONFIG)


def _write_json(path: Optional[Path], payload: str) -> None:
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(payload + "\n")
    err_console.print(f"report written to {path}")


def _render_report(report: Report, show_passed: bool) -> None:
    table = Table(title=f"{report.suite}", show_lines=False)
    table.add_column("check")
    table.add_column("status")
    table.add_column("ms", justify="right")
    table.add_column("witness", overflow="fold")
    for check in report.checks:
        if check.status == CheckStatus.PASS and not show_passed:
            continue
        style = STATUS_STYLES[check.status]
        table.add_row(
            escape(check.name),
            f"[{style}]{check.status.value}[/{style}]",
            f"{check.millis:.1f}",
            escape((check.witness or "")[:200]),
        )
    if table.row_count:
        console.print(table)
    s = report.summary
    console.print(
        f"[green]{s.passed} pass[/green]  [red]{s.fail} fail[/red]  "
        f"[yellow]{s.inconclusive} inconclusive[/yellow]  [dim]{s.skipped} skipped[/dim]"
    )


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Debug-level logs on stderr")
@click.option("--json-logs", is_flag=True, help="Render logs as JSON lines")
@click.version_option(package_name="dahaverify")
def cli(verbose: bool, json_logs: bool) -> None:
    """Exact operator calculus and machine verification for cyclotomic DAHA."""
    configure_logging(verbose=verbose, json_logs=json_logs)


@cli.command()
@click.argument("suite", type=click.Choice(SUITES))
@click.option("--config", "config_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--n", type=int)
@click.option("--ell", type=int)
@click.option("--degree", type=int)
@click.option("--rmin", type=int)
@click.option("--rmax", type=int)
@click.option("--mode", type=click.Choice(MODES))
@click.option("--seed", "seeds", help="Comma-separated seeds, e.g. 1,2,3")
@click.option("--z", help="Comma-separated rationals or 'generic'")
@click.option("--presentation", help=f"One of {', '.join(PRESENTATION_NAMES)}; Dl/Ml take (ell)")
@click.option("--morphism", help="PhiEll(ell) or Psi1Z; default runs both")
@click.option("--slack", type=int)
@click.option("--jobs", type=int, help="Parallel seed runs")
@click.option("--json", "json_path", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--no-timing", is_flag=True, help="Drop millis from the JSON report")
@click.option("--show-passed", is_flag=True, help="List passing checks too")
def verify(
    suite: str,
    config_file: Optional[Path],
    json_path: Optional[Path],
    no_timing: bool,
    show_passed: bool,
    **flags: Any,
) -> None:
    """Run a verification suite and report its checks."""
    try:
        file_values: Dict[str, Any] = load_config_file(config_file) if config_file else {}
        flags["suite"] = suite
        if json_path is not None:
            flags["output"] = json_path
        config = merge_config(file_values, flags)
    except ConfigError as exc:
        _fail_config(exc)
        return
    try:
        report = run_suite(config)
    except ConfigError as exc:
        _fail_config(exc)
        return
    _render_report(report, show_passed)
    _write_json(config.output, report.to_json(include_timing=not no_timing))
    sys.exit(EXIT_OK if report.ok else EXIT_FAIL)


@cli.group()
def compute() -> None:
    """Compute and print single objects."""


def _context(mode: str, seed: int, ell: int, n: int) -> ParamContext:
    try:
        return ParamContext(ell=ell, mode=mode, seed=seed, n=n)
    except ConfigError as exc:
        _fail_config(exc)
        raise


@compute.command("macdonald")
@click.option("--n", type=int, required=True)
@click.option("--lambda", "lam", required=True, help="Comma-separated dominant weight")
@click.option("--mode", type=click.Choice(MODES), default="exact", show_default=True)
@click.option("--seed", type=int, default=1, show_default=True)
@click.option("--json", "json_path", type=click.Path(dir_okay=False, path_type=Path))
def compute_macdonald(n: int, lam: str, mode: str, seed: int, json_path: Optional[Path]) -> None:
    """P_lambda in the monomial-symmetric basis."""
    try:
        weight = tuple(int(part) for part in lam.split(",") if part.strip())
    except ValueError:
        _fail_config(ConfigError(f"bad weight {lam!r}"))
        return
    if len(weight) > n:
        _fail_config(ConfigError("weight has more than n parts", {"n": n, "lambda": weight}))
    weight = weight + (0,) * (n - len(weight))
    try:
        check_dominant(weight)
        field_ = _context(mode, seed, 0, n).make_field()
        expansion = macdonald_table(field_, n).expansion(weight)
    except DahaVerifyError as exc:
        err_console.print(f"[bold red]error:[/bold red] {type(exc).__name__}: {exc}")
        sys.exit(EXIT_CONFIG)
    console.print(escape(render_expansion(expansion, field_)), soft_wrap=True)
    payload = {
        "schema": SCHEMA_VERSION,
        "n": n,
        "lambda": list(weight),
        "mode": mode,
        "expansion": {",".join(str(x) for x in mu): field_.render(c) for mu, c in sorted(expansion.items(), reverse=True)},
    }
    _write_json(json_path, json.dumps(payload, indent=2, sort_keys=True))


def _parse_mode_name(name: str) -> Optional[Tuple[str, int]]:
    if name and name[0] in "efb":
        try:
            return name[0], int(name[1:])
        except ValueError:
            return None
    return None


@compute.command("operator")
@click.argument("name")
@click.option("--n", type=int, required=True)
@click.option("--ell", type=int, default=0, show_default=True)
@click.option("--mode", type=click.Choice(MODES), default="exact", show_default=True)
@click.option("--seed", type=int, default=1, show_default=True)
def compute_operator(name: str, n: int, ell: int, mode: str, seed: int) -> None:
    """Render a DAHA generator (T1, Yinv2, pi, ...) or a GKLO mode (e0, f-1, b2)."""
    field_ = _context(mode, seed, ell, n).make_field()
    try:
        mode_name = _parse_mode_name(name)
        if mode_name is not None:
            kind, r = mode_name
            gctx = GKLOContext.generic(field_, n, ell)
            op = gklo_b(r, gctx) if kind == "b" else gklo_mode(kind, r, gctx)
        else:
            sym = DahaGenSymbol.parse(name)
            sym.validate(n)
            op = rep_generator(sym, n, field_)
    except DahaVerifyError as exc:
        _fail_config(exc)
        return
    console.print(escape(op.render()), soft_wrap=True)


@compute.command("fingerprint")
@click.argument("presentation")
@click.option("--n", type=int, default=2, show_default=True)
@click.option("--seed", type=int, default=1, show_default=True)
def compute_fingerprint(presentation: str, n: int, seed: int) -> None:
    """Structural hash and counts of a presentation."""
    field_ = _context("modp-random", seed, 1, n).make_field()
    try:
        pres = build_presentation(presentation, n, field_)
    except DahaVerifyError as exc:
        _fail_config(exc)
        return
    payload = {
        "presentation": pres.title,
        "n": n,
        "generators": len(pres.generators),
        "entries": pres.entries,
        "relations": len(pres.relations),
        "fingerprint": pres.fingerprint(),
    }
    console.print_json(json.dumps(payload, sort_keys=True))


@compute.command("golden")
@click.option("--seed", type=int, default=1, show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False, path_type=Path))
def compute_golden(seed: int, out_path: Optional[Path]) -> None:
    """n = 2 counts and fingerprints in the fixture layout, for freezing."""
    field_ = _context("modp-random", seed, 1, 2).make_field()
    golden = load_golden()
    presentations = {}
    for title, expect in sorted(golden["presentations"].items()):
        pres = build_presentation(title, 2, field_)
        entry = {"generators": len(pres.generators), "entries": pres.entries, "fingerprint": pres.fingerprint()}
        if "rules" in expect:
            entry["rules"] = len(rewrite_system(pres))
        presentations[title] = entry
    payload = json.dumps(dict(golden, presentations=presentations), indent=2, sort_keys=True)
    console.print_json(payload)
    _write_json(out_path, payload)


@cli.group("list")
def list_() -> None:
    """List suites and presentations."""


@list_.command("suites")
def list_suites() -> None:
    table = Table(title="suites")
    table.add_column("suite")
    table.add_column("checks")
    for name in SUITES:
        table.add_row(name, SUITE_HELP.get(name, ""))
    console.print(table)


@list_.command("presentations")
def list_presentations() -> None:
    for name in PRESENTATION_NAMES:
        console.print(name)


def main() -> None:
    cli(prog_name="dahaverify")


if __name__ == "__main__":
    main()
