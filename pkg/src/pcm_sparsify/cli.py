"""Command-line interface for pcm-sparsify.

Exit codes: 0 success, 1 internal error, 2 malformed input, 3 invalid
configuration or rank-deficient input, 4 oracle budget exceeded.
"""

from pathlib import Path
from typing import Any, List, Optional
import logging
import sys

import click
import numpy as np
import pandas as pd

from .checker import bench_check, bench_to_csv, check_words, read_words, sparse_rows
from .core.config import ConfigManager, RunConfig
from .core.errors import (
    BudgetExceededError,
    ConfigurationError,
    DimensionMismatchError,
    LengthMismatchError,
    MalformedAlistError,
    RankDeficientInputError,
    SparsifyError,
    ValidationError,
)
from .core.matrix import BinaryMatrix, rank, read_alist, same_code, save_alist
from .oracle import min_weight_basis
from .report import report
from .search import Schedule, SearchReport, TemperatureSpec, best_report, run_replicas, trace_to_csv

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_MALFORMED_INPUT = 2
EXIT_CONFIG = 3
EXIT_BUDGET = 4

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def exit_code_for(error: BaseException) -> int:
    """Map an exception raised while running a command to its exit status."""
    if isinstance(error, BudgetExceededError):
        return EXIT_BUDGET
    if isinstance(error, (ConfigurationError, RankDeficientInputError, click.UsageError)):
        return EXIT_CONFIG
    if isinstance(error, (MalformedAlistError, LengthMismatchError, DimensionMismatchError,
                          ValidationError, FileNotFoundError, IsADirectoryError)):
        return EXIT_MALFORMED_INPUT
    return EXIT_INTERNAL


def _schedule(config: RunConfig) -> Schedule:
    return Schedule(
        start=TemperatureSpec(**config.start.model_dump()),
        finish=TemperatureSpec(**config.finish.model_dump()),
        steps=config.steps,
        iters_per_temp=config.iters_per_temp,
    )


def _replica_path(path: Path, replica: int) -> Path:
    return path.with_name(f"{path.stem}.{replica}{path.suffix}")


def _emit(data: bytes, path: Optional[Path]) -> None:
    if path is None:
        click.echo(data.decode("ascii"), nl=False)
    else:
        path.write_bytes(data)
        logger.info("Wrote %s", path)


# Modes


def _run_sparsify(config: RunConfig, H: BinaryMatrix) -> None:
    results: List[SearchReport] = run_replicas(
        H,
        config.mode,
        replicas=config.replicas,
        seed=config.seed,
        workers=config.workers,
        schedule=_schedule(config) if config.mode == "anneal" else None,
        max_stall=config.max_stall,
    )
    winner = best_report(results)
    if not same_code(H, winner.best_matrix):
        raise SparsifyError("Search returned a matrix of a different code")

    output = config.output or config.input.with_name(f"{config.input.stem}.sparse.alist")
    save_alist(winner.best_matrix, output)
    if config.trace is not None:
        for result in results:
            _replica_path(config.trace, result.replica).write_bytes(trace_to_csv(result))
    _emit(report(results, config.input, output), config.summary)


def _run_oracle(config: RunConfig, H: BinaryMatrix) -> None:
    result = min_weight_basis(H, config.budget)
    if config.output is not None:
        save_alist(result.witness, config.output)
    logger.info("Dual weight distribution: %s", result.weight_histogram)
    click.echo(result.summary_line())


def _run_check(config: RunConfig, H: BinaryMatrix) -> None:
    words = read_words(config.words, H.cols)
    verdicts = check_words(sparse_rows(H), words)
    codewords = sum(verdicts)
    if config.output is not None:
        frame = pd.DataFrame({"word": range(len(verdicts)), "codeword": [int(v) for v in verdicts]})
        frame.to_csv(config.output, index=False, lineterminator="\n")
    click.echo(f"words={len(verdicts)} codewords={codewords} failing={len(verdicts) - codewords}")


def _run_bench(config: RunConfig, H: BinaryMatrix) -> None:
    rng = np.random.default_rng(config.seed)
    matrices = [H] + [read_alist(path) for path in config.compare]
    results = [
        bench_check(sparse_rows(M), config.bench_words, rng, config.bench_repeats)
        for M in matrices
    ]
    _emit(bench_to_csv(results), config.output)


def _run_stats(config: RunConfig, H: BinaryMatrix) -> None:
    click.echo(f"m={H.rows} n={H.cols} ones={H.energy} rank={rank(H)}")


_MODES = {
    "greedy": _run_sparsify,
    "anneal": _run_sparsify,
    "oracle": _run_oracle,
    "check": _run_check,
    "bench": _run_bench,
    "stats": _run_stats,
}


def run(config: RunConfig) -> int:
    """Execute one configured mode and return its exit status."""
    try:
        H = read_alist(config.input)
        logger.info("Loaded %s: %dx%d, %d ones", config.input, H.rows, H.cols, H.energy)
        _MODES[config.mode](config, H)
    except Exception as e:
        code = exit_code_for(e)
        if code == EXIT_INTERNAL:
            logger.exception("Internal error in %s mode", config.mode)
        click.echo(f"Error: {e}", err=True)
        return code
    return EXIT_OK


def _execute(ctx: click.Context, mode: str, **values: Any) -> None:
    try:
        manager = ConfigManager(ctx.obj.get("config_path"))
        config = manager.build_run_config(ctx.obj.get("profile"), mode=mode, **values)
    except SparsifyError as e:
        click.echo(f"Error: {e}", err=True)
        ctx.exit(exit_code_for(e))
    ctx.exit(run(config))


# Commands

_input_option = click.option("--input", "-i", "input_path", required=True, type=click.Path(path_type=Path),
                             help="Parity-check matrix in alist format")


@click.group()
@click.option("--verbose", "-v", count=True, help="Log progress; repeat for debug output")
@click.option("--config", "config_path", type=click.Path(path_type=Path), default=None,
              help="YAML config file (default: $PCM_CONFIG or config/config.yaml)")
@click.option("--profile", default=None, help="Config profile to start from")
@click.pass_context
def cli(ctx: click.Context, verbose: int, config_path: Optional[Path], profile: Optional[str]):
    """Minimize the number of ones in parity-check matrices."""
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT)
    ctx.ensure_object(dict)
    ctx.obj.update(config_path=str(config_path) if config_path else None, profile=profile)


@cli.command()
@_input_option
@click.option("--output", "-o", type=click.Path(path_type=Path), help="Sparsified alist (default: <input>.sparse.alist)")
@click.option("--mode", type=click.Choice(["greedy", "anneal"]), default="anneal", show_default=True)
@click.option("--f0", type=float, help="Initial uphill fraction of the columns")
@click.option("--p0", type=float, help="Initial acceptance probability")
@click.option("--t0", type=float, help="Raw initial temperature")
@click.option("--f1", type=float, help="Final uphill fraction of the columns")
@click.option("--p1", type=float, help="Final acceptance probability")
@click.option("--t1", type=float, help="Raw final temperature")
@click.option("--steps", type=int, help="Cooling steps")
@click.option("--iters", "iters_per_temp", type=int, help="Iterations per temperature [default: 100]")
@click.option("--replicas", type=int, help="Independent runs")
@click.option("--seed", type=int, help="Root seed for replay")
@click.option("--workers", type=int, help="Worker processes (default: physical cores)")
@click.option("--max-stall", type=int, help="Greedy stall window (default: 10 * rows)")
@click.option("--preset", help="Reference schedule of a known code, e.g. lte-396")
@click.option("--trace", type=click.Path(path_type=Path), help="Trace CSV; suffixed by replica index")
@click.option("--summary", type=click.Path(path_type=Path), help="Summary JSON (default: stdout)")
@click.pass_context
def sparsify(ctx: click.Context, input_path: Path, mode: str, **options: Any):
    """Reduce the ones of a matrix by greedy search or annealing."""
    _execute(ctx, mode, input=input_path, **options)


@cli.command()
@_input_option
@click.option("--output", "-o", type=click.Path(path_type=Path), help="Write the sparsest matrix as alist")
@click.option("--budget", type=int, help="Largest rank to enumerate [default: 24]")
@click.pass_context
def oracle(ctx: click.Context, input_path: Path, **options: Any):
    """Compute the fewest ones of any parity-check matrix of the code."""
    _execute(ctx, "oracle", input=input_path, **options)


@cli.command()
@_input_option
@click.option("--words", "-w", required=True, type=click.Path(path_type=Path), help="File of '0'/'1' words")
@click.option("--output", "-o", type=click.Path(path_type=Path), help="Per-word verdict CSV")
@click.pass_context
def check(ctx: click.Context, input_path: Path, **options: Any):
    """Check received words against the matrix."""
    _execute(ctx, "check", input=input_path, **options)


@cli.command()
@_input_option
@click.option("--compare", "-c", multiple=True, type=click.Path(path_type=Path), help="Further matrices of the same code")
@click.option("--words", "bench_words", type=int, help="Random words per repetition, a multiple of 64")
@click.option("--repeats", "bench_repeats", type=int, help="Timed repetitions [default: 5]")
@click.option("--seed", type=int, help="Seed of the random words")
@click.option("--output", "-o", type=click.Path(path_type=Path), help="Benchmark CSV (default: stdout)")
@click.pass_context
def bench(ctx: click.Context, input_path: Path, compare: tuple, **options: Any):
    """Time syndrome checks of random words."""
    _execute(ctx, "bench", input=input_path, compare=list(compare), **options)


@cli.command()
@_input_option
@click.pass_context
def stats(ctx: click.Context, input_path: Path):
    """Print the shape, ones and rank of a matrix."""
    _execute(ctx, "stats", input=input_path)


def main(argv: Optional[List[str]] = None) -> None:
    """Console entry point; usage errors exit with the configuration status."""
    try:
        code = cli.main(args=argv, prog_name="pcm-sparsify", standalone_mode=False)
    except click.UsageError as e:
        e.show()
        code = EXIT_CONFIG
    except click.ClickException as e:
        e.show()
        code = EXIT_INTERNAL
    except click.Abort:
        click.echo("Aborted!", err=True)
        code = EXIT_INTERNAL
    sys.exit(code or EXIT_OK)


if __name__ == "__main__":
    main()
