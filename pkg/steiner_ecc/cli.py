"""
The ``steiner-ecc`` command line.

Every command resolves its options against the run settings (see
:mod:`steiner_ecc.config`) into a :class:`RunConfig`, and :func:`run`
turns that into an exit code and the text to print. Reports go to
standard output, diagnostics and errors to standard error.
"""
import csv
import io
import json
import logging
import sys

import click

from . import schemas
from .__about__ import __version__
from .bench import bench
from .checks import corpus, run_checks
from .config import load_config
from .errors import (
    EXIT_COUNTEREXAMPLE,
    EXIT_OK,
    SteinerError,
    UsageError,
)
from .generators import generate
from .inputs import format_edge_list, label_map, parse_edge_list, read_edge_list
from .kecc import avg_steiner_k_ecc, steiner_k_ecc
from .marshalling import marshal
from .models import (
    REPORT_MODELS,
    bench_model,
    check_model,
    tree_model,
    transform_model,
)
from .oracle import ecc_k_bruteforce
from .transforms import (
    PATH,
    STAR,
    collapse_to_star,
    format_trace,
    parse_trace,
    replay,
    stretch_to_path,
)
from .utils import fraction_display, merge

log = logging.getLogger(__name__)

__all__ = ("COMMANDS", "FORMATS", "RunConfig", "run", "cli", "main")

COMMANDS = ("ecc", "aecc", "oracle", "check", "transform", "gen", "bench")
FORMATS = ("text", "json", "csv")

#: Options that fall back to a run setting when not given
SETTINGS_KEYS = {
    "budget": "BUDGET",
    "format": "FORMAT",
    "seed": "SEED",
    "max_n": "MAX_N",
    "random_min_n": "RANDOM_MIN_N",
    "random_max_n": "RANDOM_MAX_N",
    "per_n": "RANDOM_PER_N",
    "sizes": "BENCH_SIZES",
    "repeat": "BENCH_REPEAT",
    "family": "BENCH_FAMILY",
    "cap_factor": "CHAIN_CAP_FACTOR",
    "validate": "VALIDATE_OUTPUT",
}

OPTIONS = (
    "input",
    "gen",
    "k",
    "vertex",
    "full_subsets",
    "goal",
    "trace",
    "replay",
    "k_all",
    "jobs",
    "witness",
    "transform_max_n",
) + tuple(SETTINGS_KEYS)


class RunConfig(object):
    """
    The resolved options of one command.

    Explicit options win over the run settings, which win over the defaults.

    :param str command: one of :data:`COMMANDS`
    :param settings: the run settings, :func:`~steiner_ecc.config.load_config` by default
    :raises UsageError: on an unknown command, option or format
    """

    def __init__(self, command, settings=None, **options):
        if command not in COMMANDS:
            raise UsageError(
                "Unknown command {0!r}, expected one of {1}".format(command, ", ".join(COMMANDS))
            )
        unknown = set(options) - set(OPTIONS)
        if unknown:
            raise UsageError("Unknown options: {0}".format(", ".join(sorted(unknown))))
        if settings is None:
            settings = load_config()
        fallback = dict((option, settings.get(key)) for option, key in SETTINGS_KEYS.items())
        resolved = merge(fallback, options)
        self.command = command
        for option in OPTIONS:
            setattr(self, option, resolved.get(option))
        self.full_subsets = bool(self.full_subsets)
        self.k_all = bool(self.k_all)
        self.witness = bool(self.witness)
        if self.jobs is None:
            self.jobs = 1
        if self.transform_max_n is None:
            self.transform_max_n = 12
        if self.cap_factor is None:
            self.cap_factor = 1
        if self.format not in FORMATS:
            raise UsageError(
                "Unknown format {0!r}, expected one of {1}".format(self.format, ", ".join(FORMATS))
            )

    def __repr__(self):
        return "<RunConfig {0}>".format(self.command)


class Output(object):
    """What a command hands to the renderer"""

    def __init__(self, data, model=None, text=None, rows=None, code=EXIT_OK):
        self.data = data
        self.model = model
        self.text = text
        self.rows = rows
        self.code = code


def parse_gen(spec):
    """
    Parse a ``KIND:N[:key=value,...]`` generator spec.

    Values are integers, or ``/``-separated integer lists (``legs=3/2/1``).

    :rtype: tuple
    :raises UsageError: on a malformed spec
    """
    parts = spec.split(":")
    if len(parts) not in (2, 3):
        raise UsageError("Malformed generator {0!r}, expected KIND:N[:key=value,...]".format(spec))
    kind, order = parts[0], parts[1]
    try:
        n = int(order)
    except ValueError:
        raise UsageError("Generator order {0!r} is not an integer".format(order))
    params = {}
    if len(parts) == 3 and parts[2]:
        for item in parts[2].split(","):
            key, sep, value = item.partition("=")
            if not sep or not key:
                raise UsageError("Malformed generator parameter {0!r}".format(item))
            try:
                if "/" in value:
                    params[key] = [int(x) for x in value.split("/")]
                else:
                    params[key] = int(value)
            except ValueError:
                raise UsageError("Generator parameter {0!r} is not an integer".format(item))
    return kind, n, params


def parse_sizes(sizes):
    if isinstance(sizes, str):
        try:
            return [int(x) for x in sizes.split(",") if x.strip()]
        except ValueError:
            raise UsageError("Sizes must be comma separated integers, got {0!r}".format(sizes))
    return [int(x) for x in sizes]


def load_tree(config, required=True):
    """
    The tree named by ``--input`` or ``--gen``.

    :raises UsageError: when both or (if ``required``) none are given
    """
    if config.input and config.gen:
        raise UsageError("--input and --gen are mutually exclusive")
    if config.input == "-":
        return parse_edge_list(click.get_binary_stream("stdin").read())
    if config.input:
        try:
            return read_edge_list(config.input)
        except (IOError, OSError) as e:
            raise UsageError("Cannot read {0}: {1}".format(config.input, e.strerror or e))
    if config.gen:
        kind, n, params = parse_gen(config.gen)
        return generate(kind, n, params, seed=config.seed)
    if required:
        raise UsageError("A tree is needed: pass --input or --gen")
    return None


def _require(config, *options):
    for option in options:
        if getattr(config, option) is None:
            raise UsageError("--{0} is required by {1}".format(option.replace("_", "-"), config.command))


def _query_vertex(tree, config):
    return tree.vertex_of(config.vertex)


def _ecc(config):
    _require(config, "k", "vertex")
    tree = load_tree(config)
    report = steiner_k_ecc(tree, _query_vertex(tree, config), config.k)
    data = dict(report.as_dict(), n=tree.n, vertex=config.vertex, label_map=label_map(tree))
    return Output(data, REPORT_MODELS["ecc"])


def _aecc(config):
    _require(config, "k")
    tree = load_tree(config)
    value = avg_steiner_k_ecc(tree, config.k)
    data = {"n": tree.n, "k": config.k, "aecc": value, "label_map": label_map(tree)}
    return Output(data, REPORT_MODELS["aecc"], text=fraction_display(value) + "\n")


def _oracle(config):
    _require(config, "k", "vertex")
    tree = load_tree(config)
    result = ecc_k_bruteforce(
        tree,
        _query_vertex(tree, config),
        config.k,
        restrict_to_leaves=not config.full_subsets,
        budget=config.budget,
    )
    data = {
        "n": tree.n,
        "k": config.k,
        "vertex": config.vertex,
        "value": result.value,
        "witness_set": [tree.label_of(u) for u in result.witness_set],
        "witness_edges": sorted(
            tuple(sorted((tree.label_of(a), tree.label_of(b)))) for a, b in result.witness_edges
        ),
        "label_map": label_map(tree),
    }
    return Output(data, REPORT_MODELS["oracle"])


def _check(config):
    if config.k is not None and config.k_all:
        raise UsageError("--k and --k-all are mutually exclusive")
    tree = load_tree(config, required=False)
    if tree is not None:
        trees = [tree]
    else:
        trees = corpus(
            max_n=config.max_n,
            random_min_n=config.random_min_n,
            random_max_n=config.random_max_n,
            per_n=config.per_n,
            seed=config.seed,
        )
    report = run_checks(
        trees,
        jobs=config.jobs,
        ks=None if config.k is None else [config.k],
        budget=config.budget,
        transform_max_n=config.transform_max_n,
        witness=config.witness,
        cap_factor=config.cap_factor,
    )
    lines = ["trees: {0}".format(report.trees)]
    for tally in report.properties.values():
        lines.append(
            "{0}: passed={1} failed={2} skipped={3}".format(
                tally.name, tally.passed, tally.failed, tally.skipped
            )
        )
    lines.append("{0} counterexamples".format(report.counterexamples))
    first = report.first_counterexample()
    if first is not None:
        lines.append("first counterexample: {0}".format(first))
    return Output(
        report.as_dict(),
        check_model,
        text="\n".join(lines) + "\n",
        rows=[tally.as_dict() for tally in report.properties.values()],
        code=EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE,
    )


def _transform(config):
    tree = load_tree(config)
    if config.replay:
        try:
            with io.open(config.replay, encoding="utf-8") as infile:
                steps = parse_trace(infile.read())
        except (IOError, OSError) as e:
            raise UsageError("Cannot read {0}: {1}".format(config.replay, e.strerror or e))
        result = replay(tree, steps)
        goal = None
    else:
        goal = config.goal or STAR
        if goal not in (STAR, PATH):
            raise UsageError("Unknown goal {0!r}, expected star or path".format(goal))
        chain = collapse_to_star if goal == STAR else stretch_to_path
        result, steps = chain(tree, cap=config.cap_factor * tree.n * tree.n)
    log.info("%s steps", len(steps))
    if config.trace:
        with io.open(config.trace, "w", encoding="utf-8") as outfile:
            outfile.write(format_trace(steps))
    data = {
        "n": result.n,
        "goal": goal,
        "edges": [(result.label_of(a), result.label_of(b)) for a, b in result.edges],
        "degree_sequence": result.degree_sequence(),
        "trace": [step.as_dict() for step in steps],
        "label_map": label_map(result),
    }
    return Output(
        data,
        transform_model,
        text=format_edge_list(result),
        rows=[{"u": a, "v": b} for a, b in data["edges"]],
    )


def _gen(config):
    _require(config, "gen")
    tree = load_tree(config)
    data = {
        "n": tree.n,
        "edges": list(tree.edges),
        "degree_sequence": tree.degree_sequence(),
        "label_map": label_map(tree),
    }
    return Output(
        data,
        tree_model,
        text=format_edge_list(tree),
        rows=[{"u": a, "v": b} for a, b in tree.edges],
    )


def _bench(config):
    sizes = parse_sizes(config.sizes)
    result = bench(
        family=config.family,
        sizes=sizes,
        k=5 if config.k is None else config.k,
        repeat=config.repeat,
        seed=config.seed,
    )
    lines = ["family: {0} k: {1} repeat: {2}".format(result["family"], result["k"], result["repeat"])]
    for row in result["sizes"]:
        lines.append("n={n} median_ns={median_ns} mean_ns={mean_ns}".format(**row))
    if result["slope"] is not None:
        lines.append("slope: {0:.3f}".format(result["slope"]))
    if result["k_doubling_ratio"] is not None:
        lines.append("k_doubling_ratio: {0:.3f}".format(result["k_doubling_ratio"]))
    return Output(result, bench_model, text="\n".join(lines) + "\n", rows=result["sizes"])


HANDLERS = {
    "ecc": _ecc,
    "aecc": _aecc,
    "oracle": _oracle,
    "check": _check,
    "transform": _transform,
    "gen": _gen,
    "bench": _bench,
}


def _scalar(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(
            "-".join(str(x) for x in item) if isinstance(item, (list, tuple)) else str(item)
            for item in value
        )
    return str(value)


def _render_text(marshalled):
    return "".join(
        "{0}: {1}\n".format(key, _scalar(value))
        for key, value in marshalled.items()
        if not isinstance(value, dict)
    )


def _render_csv(rows):
    buffer = io.StringIO()
    writer = None
    for row in rows:
        row = dict((key, _scalar(value)) for key, value in row.items() if not isinstance(value, dict))
        if writer is None:
            writer = csv.DictWriter(buffer, fieldnames=list(row), lineterminator="\n")
            writer.writeheader()
        writer.writerow(row)
    return buffer.getvalue()


def render(config, output):
    """Format a command output as text, JSON or CSV"""
    marshalled = marshal(output.data, output.model, skip_none=True, ordered=True)
    if config.format == "json":
        if config.validate and any(output.model is model for model in REPORT_MODELS.values()):
            schemas.validate(marshalled)
        return json.dumps(marshalled) + "\n"
    if config.format == "csv":
        rows = output.rows
        if rows is None:
            rows = [marshalled]
        return _render_csv(rows)
    if output.text is not None:
        return output.text
    return _render_text(marshalled)


def run(config):
    """
    Execute one command.

    :param RunConfig config: the resolved command
    :return: the exit code and the text to print (the error message on failure)
    :rtype: tuple
    """
    try:
        output = HANDLERS[config.command](config)
        return output.code, render(config, output)
    except SteinerError as e:
        log.debug("%s failed", config.command, exc_info=True)
        return e.exit_code, "Error: {0}\n".format(e)


def configure_logging(verbosity):
    """Send package logs to standard error, WARNING by default, INFO with -v, DEBUG with -vv"""
    logger = logging.getLogger("steiner_ecc")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    logger.addHandler(handler)
    logger.setLevel(
        logging.DEBUG if verbosity >= 2 else logging.INFO if verbosity == 1 else logging.WARNING
    )
    logger.propagate = False


class SteinerGroup(click.Group):
    """A command group reporting command line misuse with exit code 1"""

    def main(self, args=None, prog_name=None, **extra):
        extra.pop("standalone_mode", None)
        try:
            code = super(SteinerGroup, self).main(
                args=args, prog_name=prog_name, standalone_mode=False, **extra
            )
        except click.ClickException as e:
            e.show()
            code = UsageError.exit_code
        except click.Abort:
            click.echo("Aborted!", err=True)
            code = UsageError.exit_code
        sys.exit(code or EXIT_OK)


def _execute(ctx, command, **options):
    config_options = dict((key, value) for key, value in options.items() if value is not None)
    try:
        config = RunConfig(command, settings=ctx.obj, **config_options)
    except SteinerError as e:
        click.echo("Error: {0}".format(e), err=True)
        return e.exit_code
    code, text = run(config)
    click.echo(text, nl=False, err=code not in (EXIT_OK, EXIT_COUNTEREXAMPLE))
    return code


def tree_options(func):
    func = click.option("--format", "format", default=None, help="text, json or csv")(func)
    func = click.option("--seed", type=int, default=None, help="Seed of random generators")(func)
    func = click.option(
        "--gen", default=None, metavar="KIND:N[:k=v,...]", help="Generate the input tree"
    )(func)
    func = click.option(
        "--input", "input", default=None, metavar="PATH", help="Edge-list file, - for stdin"
    )(func)
    return func


@click.group(cls=SteinerGroup, context_settings={"help_option_names": ["-h", "--help"]})
@click.option("-v", "--verbose", count=True, help="-v for progress, -vv for debug output")
@click.version_option(__version__, prog_name="steiner-ecc")
@click.pass_context
def cli(ctx, verbose):
    """Steiner k-eccentricity of tree vertices"""
    configure_logging(verbose)
    ctx.obj = load_config()


@cli.command()
@tree_options
@click.option("--k", type=int, default=None, help="Set size")
@click.option("--vertex", type=int, default=None, help="Query vertex label")
@click.pass_context
def ecc(ctx, **options):
    """Steiner k-eccentricity of one vertex"""
    return _execute(ctx, "ecc", **options)


@cli.command()
@tree_options
@click.option("--k", type=int, default=None, help="Set size")
@click.pass_context
def aecc(ctx, **options):
    """Average Steiner k-eccentricity, as an exact rational"""
    return _execute(ctx, "aecc", **options)


@cli.command()
@tree_options
@click.option("--k", type=int, default=None, help="Set size")
@click.option("--vertex", type=int, default=None, help="Query vertex label")
@click.option("--budget", type=int, default=None, help="Refuse searches above this many steps")
@click.option("--full-subsets", is_flag=True, default=None, help="Do not restrict sets to leaves")
@click.pass_context
def oracle(ctx, **options):
    """Exhaustive Steiner k-eccentricity with a witness set"""
    return _execute(ctx, "oracle", **options)


@cli.command()
@tree_options
@click.option("--k", type=int, default=None, help="Only check this set size")
@click.option("--k-all", is_flag=True, default=None, help="Check every set size (default)")
@click.option("--budget", type=int, default=None, help="Oracle budget per call")
@click.option("--max-n", type=int, default=None, help="Largest exhaustive order")
@click.option("--random-min-n", type=int, default=None)
@click.option("--random-max-n", type=int, default=None)
@click.option("--per-n", type=int, default=None, help="Random trees per order")
@click.option("--jobs", type=int, default=None, help="Worker processes")
@click.option("--witness", is_flag=True, default=None, help="Also check Y-side witnesses")
@click.option("--transform-max-n", type=int, default=None)
@click.pass_context
def check(ctx, **options):
    """Check the algorithm and the transformations over a tree corpus"""
    return _execute(ctx, "check", **options)


@cli.command()
@tree_options
@click.option("--goal", type=click.Choice([STAR, PATH]), default=None)
@click.option("--trace", default=None, metavar="PATH", help="Write the step trace to PATH")
@click.option("--replay", default=None, metavar="PATH", help="Apply a recorded trace instead")
@click.pass_context
def transform(ctx, **options):
    """Transform a tree into the star or the path of its order"""
    return _execute(ctx, "transform", **options)


@cli.command()
@tree_options
@click.pass_context
def gen(ctx, **options):
    """Write a generated tree as an edge list"""
    return _execute(ctx, "gen", **options)


@cli.command("bench")
@click.option("--family", default=None)
@click.option("--sizes", default=None, help="Comma separated orders")
@click.option("--k", type=int, default=None, help="Set size (5)")
@click.option("--repeat", type=int, default=None)
@click.option("--seed", type=int, default=None)
@click.option("--format", "format", default=None)
@click.pass_context
def bench_command(ctx, **options):
    """Time the fast algorithm over a size sweep"""
    return _execute(ctx, "bench", **options)


def main():
    cli(prog_name="steiner-ecc")
