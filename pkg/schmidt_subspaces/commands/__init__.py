import click

from schmidt_subspaces import __version__, hooks
from schmidt_subspaces.config import RunConfig, read_site_config, set_conf
from schmidt_subspaces.utils import AttrDict
from schmidt_subspaces.utils.exceptions import ERROR_CODED_EXCEPTIONS
from schmidt_subspaces.utils.file import dump_json, write_artifact
from schmidt_subspaces.utils.logger import get_logger, log_error, setup_logging

logger = get_logger("commands")

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_REFUTED = 3
EXIT_INCONCLUSIVE = 4

VERDICT_EXIT_CODES = {
    "consistent": EXIT_OK,
    "refuted": EXIT_REFUTED,
    "inconclusive": EXIT_INCONCLUSIVE,
}

DEFAULT_BASIS_FILE = "basis.json"
DEFAULT_REPORT_FILE = "report.json"


@click.group(help=f"{hooks.app_title}: {hooks.app_description}")
@click.version_option(__version__, prog_name=hooks.app_name)
@click.option("--config", "config_path", type=click.Path(dir_okay=False),
              help="JSON file with settings overriding the package defaults")
def schmidt(config_path=None):
    if config_path:
        set_conf(**read_site_config(config_path))
    setup_logging()


def run_command(config: RunConfig, handler):
    """
    Validates `config`, runs `handler(config)` and turns coded errors into an
    error payload on stderr with exit status 1 (I/O) or 2 (everything else).
    """
    @ERROR_CODED_EXCEPTIONS()
    def execute():
        config.validate()
        return AttrDict(exit_code=handler(config))

    try:
        response = execute()
    except Exception as e:
        log_error(f"{config.command} failed", e, **config.as_dict())
        raise

    if not response.errors:
        return response.exit_code

    for error in response.errors:
        click.echo(f"{error['error_code']}: {error['message']}", err=True)
    logger.info("%s rejected: %s", config.command, response.errors)
    if any(e["error_code"] == "IO_ERROR" for e in response.errors):
        return EXIT_IO
    return EXIT_USAGE


def emit(config: RunConfig, payload: dict, text: str = None):
    """
    Writes the artifact to --output, or prints it when no output path is set.
    """
    contents = dump_json(payload) if config.format == "json" or text is None else text
    if config.output:
        write_artifact(config.output, contents)
    else:
        click.echo(contents, nl=False)


@click.command("construct")
@click.option("--kind", default="geq", show_default=True,
              type=click.Choice(["geq", "flanders", "fixed", "antisymmetric", "random"]),
              help="Construction to run")
@click.option("--da", type=int, help="Dimension of the first party")
@click.option("--db", type=int, help="Dimension of the second party")
@click.option("--r", type=int, help="Schmidt rank bound")
@click.option("--dim", type=int, help="Dimension of a random subspace")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--output", "-o", default=DEFAULT_BASIS_FILE, show_default=True,
              help="Basis file to write")
@click.pass_context
def construct(ctx, kind, da, db, r, dim, seed, output):
    from schmidt_subspaces.utils.loader import resolve_hook

    config = RunConfig(
        command="construct", kind=kind, da=da, db=db, r=r, dim=dim, seed=seed, output=output)

    def handler(config):
        basis, bound = resolve_hook("basis_constructors", config.kind)(config)
        write_artifact(config.output, dump_json({
            "config": config.as_dict(),
            "bound": bound,
            "basis": basis.as_dict(),
        }))
        click.echo(f"dim={basis.dim} bound={bound}")
        return EXIT_OK

    ctx.exit(run_command(config, handler))


@click.command("verify")
@click.option("--input", "-i", "input_path", help="Basis file written by construct")
@click.option("--mode", default="sample", show_default=True,
              type=click.Choice(["sample", "gfp", "sigma", "structural"]))
@click.option("--r", type=int, help="Rank to test against; defaults to the basis r")
@click.option("--direction", type=click.Choice(["geq", "leq"]),
              help="Sample mode only; defaults to leq for flanders bases, geq otherwise")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--samples", type=int, default=1000, show_default=True)
@click.option("--restarts", type=int, help="Sigma mode restarts")
@click.option("--iters", type=int, help="Sigma mode iterations per restart")
@click.option("--p", type=int, help="Prime for gfp mode")
@click.option("--tolerance", type=float, help="Sigma mode witness tolerance")
@click.option("--output", "-o", default=DEFAULT_REPORT_FILE, show_default=True,
              help="Report file to write")
@click.pass_context
def verify(ctx, input_path, mode, r, direction, seed, samples, restarts, iters, p, tolerance, output):
    from schmidt_subspaces.utils.loader import load_basis, resolve_hook

    optional = {k: v for k, v in (("restarts", restarts), ("iters", iters)) if v is not None}
    config = RunConfig(
        command="verify", input=input_path, mode=mode, r=r, direction=direction, seed=seed,
        samples=samples, p=p, tolerance=tolerance, output=output, **optional)

    def handler(config):
        basis = load_basis(config.input)
        report = resolve_hook("verification_modes", config.mode)(basis, config)
        write_artifact(config.output, dump_json({
            "config": config.as_dict(),
            "report": report.as_dict(),
        }))
        click.echo(
            f"verdict={report.verdict} min_rank={report.min_rank_observed} "
            f"witnesses={len(report.witnesses)}")
        return VERDICT_EXIT_CODES[report.verdict]

    ctx.exit(run_command(config, handler))


@click.command("bounds")
@click.option("--da", type=int)
@click.option("--db", type=int)
@click.option("--r", type=int)
@click.option("--grid", is_flag=True, default=False, help="All r = 2 ... min(da, db)")
@click.option("--format", "fmt", default="text", show_default=True,
              type=click.Choice(["json", "text"]))
@click.option("--output", "-o", help="Write the table here instead of stdout")
@click.pass_context
def bounds(ctx, da, db, r, grid, fmt, output):
    from schmidt_subspaces.bounds import bounds_grid, bounds_table, render_table

    config = RunConfig(command="bounds", da=da, db=db, r=r, grid=grid, format=fmt, output=output)

    def handler(config):
        if config.grid:
            rows = bounds_grid(config.da, config.db)
        else:
            rows = [bounds_table(config.da, config.db, config.r)]

        emit(config, {
            "config": config.as_dict(),
            "rows": [row.as_dict() for row in rows],
        }, render_table(rows))
        return EXIT_OK

    ctx.exit(run_command(config, handler))


@click.command("report")
@click.option("--d", type=int, help="Local dimension for the mixed-state report")
@click.option("--p", "fraction", type=float, help="Fraction p in (0, 1) for the mixed-state report")
@click.option("--da", type=int, help="First dimension for the random-subspace comparison")
@click.option("--db", type=int, help="Second dimension for the random-subspace comparison")
@click.option("--k", type=float, help="Rank fraction k in (0, 1] for the random-subspace comparison")
@click.option("--format", "fmt", default="text", show_default=True,
              type=click.Choice(["json", "text"]))
@click.option("--output", "-o", help="Write the report here instead of stdout")
@click.pass_context
def report(ctx, d, fraction, da, db, k, fmt, output):
    from schmidt_subspaces.bounds import mixed_state_report, random_comparison, render_fields

    config = RunConfig(
        command="report", d=d, fraction=fraction, da=da, db=db, k=k, format=fmt, output=output)

    def handler(config):
        payload = {"config": config.as_dict()}
        text = ""
        if config.d is not None:
            payload["mixed_state"] = mixed_state_report(config.d, config.fraction).as_dict()
            text += render_fields(payload["mixed_state"])
        if config.da is not None:
            payload["random_comparison"] = random_comparison(config.da, config.db, config.k).as_dict()
            text += render_fields(payload["random_comparison"])

        emit(config, payload, text)
        return EXIT_OK

    ctx.exit(run_command(config, handler))


schmidt.add_command(construct)
schmidt.add_command(verify)
schmidt.add_command(bounds)
schmidt.add_command(report)
commands = [schmidt]
