"""Run the greedy and annealing batches over a directory of alist files."""

from pathlib import Path
from typing import Optional
import logging

import click
from dotenv import load_dotenv

from pcm_sparsify.core.config import ConfigManager, get_schedule_preset, resolve_code
from pcm_sparsify.core.errors import ConfigurationError, SparsifyError
from pcm_sparsify.core.matrix import read_alist, save_alist
from pcm_sparsify.report import summarize
from pcm_sparsify.search import Schedule, TemperatureSpec, best_report, run_replicas

logger = logging.getLogger(__name__)


def run_code(
    path: Path,
    out_dir: Path,
    manager: ConfigManager,
    greedy_replicas: int,
    anneal_replicas: int,
    seed: Optional[int],
    workers: Optional[int],
    profile: Optional[str] = None,
) -> None:
    """Run both searches on one code and write its summaries and best matrices.

    Args:
        path: Input alist file
        out_dir: Directory receiving <stem>.<kind>.json and <stem>.<kind>.alist
        manager: Source of the annealing schedule
        greedy_replicas: Replicas of the greedy search
        anneal_replicas: Replicas of the annealing search
        seed: Root seed shared by both batches
        workers: Process count, None for the default
        profile: Config profile to read the schedule from
    """
    H = read_alist(path)
    try:
        get_schedule_preset(path.stem)
        preset = resolve_code(path.stem)
    except ConfigurationError:
        preset = None
    config = manager.build_run_config(profile, input=path, mode="anneal", preset=preset)
    schedule = Schedule(
        start=TemperatureSpec(**config.start.model_dump()),
        finish=TemperatureSpec(**config.finish.model_dump()),
        steps=config.steps,
        iters_per_temp=config.iters_per_temp,
    )

    batches = (("greedy", greedy_replicas, None), ("anneal", anneal_replicas, schedule))
    for kind, replicas, kind_schedule in batches:
        if replicas < 1:
            continue
        logger.info("%s: %d %s replicas on %dx%d, %d ones", path.name, replicas, kind, H.rows, H.cols, H.energy)
        results = run_replicas(H, kind, replicas=replicas, seed=seed, workers=workers, schedule=kind_schedule)
        output = out_dir / f"{path.stem}.{kind}.alist"
        save_alist(best_report(results).best_matrix, output)
        summary = summarize(results, path, output)
        (out_dir / f"{path.stem}.{kind}.json").write_text(summary.model_dump_json(indent=2) + "\n")
        click.echo(f"{path.stem} {kind}: {summary.initial_ones} -> {summary.best_ones} ({summary.best_percent}%)"
                   + (f", published {summary.reference_anneal}" if kind == "anneal" and summary.reference_anneal else ""))


@click.command()
@click.argument("alist_dir", type=click.Path(exists=True, file_okay=False, path_type=Path))
@click.option("--out-dir", type=click.Path(file_okay=False, path_type=Path), default=Path("results"), show_default=True)
@click.option("--greedy-replicas", type=int, default=32, show_default=True)
@click.option("--anneal-replicas", type=int, default=128, show_default=True)
@click.option("--seed", type=int, default=None, help="Root seed for every code")
@click.option("--workers", type=int, default=None)
@click.option("--profile", default=None, help="Config profile for the annealing schedule")
@click.option("--config", "config_path", type=click.Path(path_type=Path), default=None)
def main(alist_dir, out_dir, greedy_replicas, anneal_replicas, seed, workers, profile, config_path):
    """Sparsify every .alist file in ALIST_DIR with both searches."""
    load_dotenv()
    logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')

    manager = ConfigManager(str(config_path) if config_path else None)
    out_dir.mkdir(parents=True, exist_ok=True)

    paths = sorted(alist_dir.glob("*.alist"))
    if not paths:
        raise click.ClickException(f"No .alist files in {alist_dir}")
    failed = []
    for path in paths:
        try:
            run_code(path, out_dir, manager, greedy_replicas, anneal_replicas, seed, workers, profile)
        except SparsifyError as e:
            logger.error("Skipping %s: %s", path.name, e)
            failed.append(path.name)
    if failed:
        raise click.ClickException(f"{len(failed)} codes failed: {', '.join(failed)}")


if __name__ == "__main__":
    main()
