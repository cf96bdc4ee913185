"""Random search over learning rate and batch size."""

from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor

import logfire
import numpy as np

from absa.domain.model import HyperConfig, SearchSpace, TrainHistory, TrialRecord

from .base import Service

# Trains one configuration and returns its history
TrialRunner = Callable[[HyperConfig], TrainHistory]


def sample_trials(space: SearchSpace, trials: int, seed: int) -> list[tuple[float, int]]:
    """Cells drawn uniformly without replacement; ``trials`` is clamped to the space size."""
    if trials > space.size:
        logfire.warn("Trial budget exceeds search space; clamping", trials=trials, space=space.size)
        trials = space.size
    cells = space.cells()
    order = np.random.default_rng(seed).permutation(len(cells))[:trials]
    return [cells[i] for i in order]


def random_search(
    space: SearchSpace,
    trials: int,
    base: HyperConfig,
    run_trial: TrialRunner,
    workers: int = 1,
) -> tuple[HyperConfig, list[TrialRecord]]:
    """Train every sampled configuration and return the best one by dev F1.

    Trial i (from 1) trains with seed ``base.seed + i - 1``. Ties go to the
    earliest trial. Trials run on ``workers`` threads; the log keeps trial
    order regardless.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    configs = [
        base.model_copy(update={"learning_rate": lr, "batch_size": bs, "seed": base.seed + i})
        for i, (lr, bs) in enumerate(sample_trials(space, trials, base.seed))
    ]

    def run(indexed: tuple[int, HyperConfig]) -> TrialRecord:
        trial, config = indexed
        with logfire.span(
            "search.trial",
            trial=trial,
            learning_rate=config.learning_rate,
            batch_size=config.batch_size,
        ):
            history = run_trial(config)
            score = history.best_dev_f1 if history.best_dev_f1 is not None else 0.0
            logfire.info("Trial finished", trial=trial, dev_f1=score, best_epoch=history.best_epoch)
            return TrialRecord(
                trial=trial,
                learning_rate=config.learning_rate,
                batch_size=config.batch_size,
                seed=config.seed,
                dev_f1=score,
                best_epoch=history.best_epoch,
            )

    indexed = list(enumerate(configs, start=1))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            log = list(pool.map(run, indexed))
    else:
        log = [run(item) for item in indexed]

    best = max(log, key=lambda r: (r.dev_f1, -r.trial))
    return configs[best.trial - 1], log


class SearchService(Service):
    """Hyperparameter search."""

    def search(
        self,
        space: SearchSpace,
        trials: int,
        base: HyperConfig,
        run_trial: TrialRunner,
        workers: int = 1,
    ) -> tuple[HyperConfig, list[TrialRecord]]:
        with logfire.span("search_service.search", trials=trials, space=space.size, workers=workers):
            best, log = random_search(space, trials, base, run_trial, workers)
            logfire.info(
                "Search finished",
                learning_rate=best.learning_rate,
                batch_size=best.batch_size,
                seed=best.seed,
            )
            return best, log
