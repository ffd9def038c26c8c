"""
Dessin correlators - linha de comando.

Exact correlators of the generalized dessin partition function Z_(r):
compute, cross-verify, fit and enumerate. Every command prints one JSON
document (or a table with --table). Exit codes: 0 ok, 1 a check failed,
2 an error (reported as {"error": {...}} JSON).
"""
import logging
import os
import sys

import click
import pandas as pd
from dotenv import load_dotenv

from commands.c1_correlator import run_correlator
from commands.c2_partition_function import run_partition_function, terms_frame
from commands.c3_verify import run_verify
from commands.c4_fit import run_fit, samples_frame
from commands.c5_oracle import run_oracle
from commands.c6_cache import run_cache
from reports.json_report import (
    build_document,
    checks_frame,
    error_document,
    render_json,
    render_table,
    routes_frame,
    write_output,
)
from shared.defaults import ENV_LOG_LEVEL
from shared.errors import DessinError
from shared.kp import CYCLIC, LITERAL
from shared.polyfit import ROUTES as FIT_ROUTES
from shared.run_config import (
    BASES,
    CACHE_ACTIONS,
    CORRELATOR_ROUTES,
    FIT_KINDS,
    VERIFY_SUITES,
    build_config,
)

load_dotenv()

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_ERROR = 2


def _configure_logging(verbose):
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, os.getenv(ENV_LOG_LEVEL, "WARNING").upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _failed(payload):
    return payload.get("passed") is False or payload.get("agree") is False


def _run(ctx, command, runner, frame=None, action=None, **options):
    """Build the config, run, render; map errors and failed checks to exit codes."""
    common = ctx.obj
    try:
        cfg = build_config(
            command, action,
            jobs=common["jobs"],
            cache_dir=common["cache_dir"],
            output=common["output"],
            no_meta=common["no_meta"],
            **options,
        )
        payload = runner(cfg)
        text = render_json(build_document(command, payload, cfg))
        out = write_output(text, cfg.output)
    except DessinError as exc:
        logger.error(f"{command}: {exc}")
        click.echo(render_json(error_document(exc)))
        ctx.exit(EXIT_ERROR)

    if cfg.table and frame is not None:
        click.echo(render_table(frame(payload)))
    elif out is not None:
        click.echo(out)
    ctx.exit(EXIT_CHECK_FAILED if _failed(payload) else EXIT_OK)


# ─────────────────────────────────────────────────────────
# GROUP
# ─────────────────────────────────────────────────────────

@click.group()
@click.option("--jobs", type=int, default=None,
              help="Worker processes (default: DESSIN_JOBS, else all cores).")
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None,
              help="Character-table cache (default: DESSIN_CACHE_DIR, else store/char_tables).")
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None,
              help="Write the JSON document to this file instead of stdout.")
@click.option("--no-meta", is_flag=True, help="Omit the meta block (timestamp) for byte-identical output.")
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG logs on stderr.")
@click.pass_context
def cli(ctx, jobs, cache_dir, output, no_meta, verbose):
    """Exact correlators of the generalized dessin partition function."""
    _configure_logging(verbose)
    ctx.obj = {"jobs": jobs, "cache_dir": cache_dir, "output": output, "no_meta": no_meta}


# ─────────────────────────────────────────────────────────
# SUBCOMMANDS
# ─────────────────────────────────────────────────────────

@cli.command()
@click.option("--r", "r", type=int, default=None, help="Arity r (default 2).")
@click.option("--mu", required=True, help='Partition mu, e.g. "2,1".')
@click.option("--k", default=None, help='Cycle counts k_1..k_r, e.g. "1,2".')
@click.option("--connected", is_flag=True, help="Connected correlator N° instead of N•.")
@click.option("--generating", is_flag=True, help="Whole generating polynomial sum_k N_k(mu) v^k.")
@click.option("--route", type=click.Choice(CORRELATOR_ROUTES), default=None,
              help="burnside (N•), log or zhou (N°), oracle (both, small degree), all.")
@click.option("--closure", type=click.Choice([CYCLIC, LITERAL]), default=None,
              help="Cycle closure used by the zhou route.")
@click.option("--table", is_flag=True, help="Print a route/value table.")
@click.pass_context
def correlator(ctx, r, mu, k, connected, generating, route, closure, table):
    """One correlator N_k(mu), or the generating polynomial of mu."""
    _run(ctx, "correlator", run_correlator, lambda p: routes_frame(p["routes"]),
         r=r, mu=mu, k=k, connected=connected, generating=generating,
         route=route, closure=closure, table=table)


@cli.command("partition-function")
@click.option("--r", "r", type=int, default=None, help="Arity r (default 2).")
@click.option("--degree", "-D", type=int, default=None, help="Truncation degree (default 4).")
@click.option("--basis", type=click.Choice(BASES), default=None)
@click.option("--connected", is_flag=True, help="log Z (power-sum basis only).")
@click.option("--table", is_flag=True)
@click.pass_context
def partition_function(ctx, r, degree, basis, connected, table):
    """Z (or log Z) up to the truncation degree."""
    _run(ctx, "partition-function", run_partition_function, terms_frame,
         r=r, degree=degree, basis=basis, connected=connected, table=table)


@cli.command()
@click.argument("suite", type=click.Choice(VERIFY_SUITES))
@click.option("--r", "r", type=int, default=None)
@click.option("--degree", type=int, default=None, help="Truncation for cutjoin.")
@click.option("--max-weight", type=int, default=None, help="Largest |mu| for zhou.")
@click.option("--max-size", type=int, default=None, help="Largest |mu| for appendix.")
@click.option("--d", "d", type=int, default=None, help="Largest degree for burnside / characters.")
@click.option("--table", is_flag=True)
@click.pass_context
def verify(ctx, suite, r, degree, max_weight, max_size, d, table):
    """Exact cross-route checks; exit 1 if any check fails."""
    size = degree or max_weight or max_size
    _run(ctx, "verify", run_verify, lambda p: checks_frame(p["checks"]), action=suite,
         r=r, degree=size, d=d, table=table)


@cli.command()
@click.argument("kind", type=click.Choice(FIT_KINDS))
@click.option("--r", "r", type=int, default=None)
@click.option("--lambda", "lam", default=None, help="stanley: shifts lambda, e.g. \"1,1\".")
@click.option("--mu", default=None, help="stanley: fixed part mu (default empty).")
@click.option("--k", default=None, help="conjecture: k_1..k_r.")
@click.option("--length", type=int, default=None, help="conjecture: number of parts of mu (1 or 2).")
@click.option("--nmax", type=int, default=None, help="conjecture: largest |mu| sampled.")
@click.option("--holdout", type=int, default=None, help="Held-out samples (default 2).")
@click.option("--n-samples", type=int, default=None, help="stanley: training samples.")
@click.option("--route", type=click.Choice(FIT_ROUTES), default=None, help="conjecture: correlator route.")
@click.option("--compare", is_flag=True, help="conjecture: check against the known closed form.")
@click.option("--table", is_flag=True)
@click.pass_context
def fit(ctx, kind, r, lam, mu, k, length, nmax, holdout, n_samples, route, compare, table):
    """Exact polynomial fits with held-out verification."""
    _run(ctx, "fit", run_fit, samples_frame, action=kind,
         r=r, lam=lam, mu=mu, k=k, length=length, nmax=nmax, holdout=holdout,
         n_samples=n_samples, route=route, compare=compare, table=table)


@cli.command()
@click.option("--profiles", required=True, help='Profile list, e.g. "2|2" or "2,1|3|3".')
@click.option("--connected", is_flag=True, help="Count transitive tuples only.")
@click.pass_context
def oracle(ctx, profiles, connected):
    """Brute-force Hurwitz number of a profile list."""
    _run(ctx, "oracle", run_oracle, profiles=profiles, connected=connected)


def _chars_frame(payload):
    if "table" not in payload:
        return pd.DataFrame([{"d": payload["d"], "partitions": payload["partitions"]}])
    rows = [
        {"lambda": lam, **dict(zip(payload["columns"], chis))}
        for lam, chis in payload["table"].items()
    ]
    return pd.DataFrame(rows, columns=["lambda"] + payload["columns"])


@cli.command()
@click.argument("action", type=click.Choice(CACHE_ACTIONS))
@click.option("--d", "d", type=int, default=None, help="Degree to build or clear.")
@click.option("--show", is_flag=True, help="chars: include the table itself.")
@click.option("--table", is_flag=True)
@click.pass_context
def cache(ctx, action, d, show, table):
    """Build, list or clear cached character tables."""
    _run(ctx, "cache", run_cache, _chars_frame if action == "chars" else None, action=action,
         d=d, show=show, table=table)


if __name__ == "__main__":
    cli()
