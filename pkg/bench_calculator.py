# bench_calculator.py
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional

import numpy as np
import pandas as pd
from tqdm import tqdm

from functions import DEFAULT_SETTINGS
from generators import gen_instance, parse_position
from identify import identify
from kruskal_calculator import KruskalCalculator

logger = logging.getLogger(__name__)

BENCH_COLUMNS = ["n", "r", "trial", "method", "mults", "wall_ms", "verdict"]
METHODS = ("terracini", "kruskal")


def kruskal_cost_model(r) -> float:
    return 59 * float(r) ** 6 / 270


def terracini_cost_model(r) -> float:
    return 4 * float(r) ** 4 / 3


COST_MODELS = {"terracini": terracini_cost_model, "kruskal": kruskal_cost_model}


def trial_seed(seed: int, n: int, r: int, trial: int) -> int:
    """Seed of one trial, a function of the run seed and the trial coordinates only"""
    return int(np.random.SeedSequence([seed, n, r, trial]).generate_state(1)[0])


class BenchCalculator:
    """Counted cost of the Terracini pipeline against the Kruskal baseline on generated instances"""

    def __init__(self, settings: Optional[dict] = None):
        self.settings = settings or DEFAULT_SETTINGS
        self.kruskal = KruskalCalculator(batch_size=self.settings["kruskal"]["batch_size"])

    def run_trial(self, n: int, r: int, trial: int, seed: int, position: str = "general") -> List[list]:
        """Both methods on one generated instance, timed on the calling thread"""
        inst = gen_instance(n, r, position, trial_seed(seed, n, r, trial),
                            settings=self.settings["generator"])

        start = time.perf_counter()
        verdict = identify(inst)
        terracini_ms = (time.perf_counter() - start) * 1000

        start = time.perf_counter()
        certified, details = self.kruskal.prop31_check(inst)
        kruskal_ms = (time.perf_counter() - start) * 1000

        return [
            [n, r, trial, "terracini", verdict.counter.multiplications, round(terracini_ms, 3), verdict.kind.value],
            [n, r, trial, "kruskal", details.counter.multiplications, round(kruskal_ms, 3),
             "Identifiable" if certified else "Inconclusive"],
        ]

    def run(self, n_values: Iterable[int], r_values: Iterable[int], trials: int, seed: int,
            max_workers: int = 1, progress_callback: Optional[Callable[[int], None]] = None,
            position: str = "general") -> pd.DataFrame:
        parse_position(position)
        jobs = [(n, r, trial) for n in n_values for r in r_values for trial in range(trials)]
        logger.info(f"Benchmark: {len(jobs)} {position} trials, seed {seed}, {max_workers} worker(s)")
        rows = []
        done = 0

        def record(result):
            nonlocal done
            rows.extend(result)
            done += 1
            if progress_callback:
                progress_callback(int(done / len(jobs) * 100))

        with tqdm(total=len(jobs), desc="bench", unit="trial", disable=not jobs) as bar:
            if max_workers > 1:
                with ThreadPoolExecutor(max_workers=max_workers) as executor:
                    # map yields in submission order, so rows stay in (n, r, trial) order
                    for result in executor.map(lambda job: self.run_trial(*job, seed, position), jobs):
                        record(result)
                        bar.update(1)
            else:
                for job in jobs:
                    record(self.run_trial(*job, seed, position))
                    bar.update(1)

        return pd.DataFrame(rows, columns=BENCH_COLUMNS)

    def summarize(self, records: pd.DataFrame) -> pd.DataFrame:
        """Mean counted multiplications per (n, method, r) next to the cost models"""
        if records.empty:
            return pd.DataFrame(columns=["n", "method", "r", "mean_mults", "mean_wall_ms", "model"])
        summary = (
            records.groupby(["n", "method", "r"], sort=True)
            .agg(mean_mults=("mults", "mean"), mean_wall_ms=("wall_ms", "mean"))
            .reset_index()
        )
        summary["model"] = [COST_MODELS[m](r) for m, r in zip(summary["method"], summary["r"])]
        return summary

    def fit_slopes(self, records: pd.DataFrame) -> pd.DataFrame:
        """Log-log slope of counted multiplications against r, per (n, method)"""
        slopes = []
        for (n, method), group in records.groupby(["n", "method"], sort=True):
            means = group.groupby("r")["mults"].mean()
            if len(means) < 2:
                slope = float("nan")
            else:
                slope = float(np.polyfit(np.log(means.index.to_numpy(dtype=float)),
                                         np.log(means.to_numpy(dtype=float)), 1)[0])
            model = COST_MODELS[method]
            slopes.append([n, method, slope, 6 if method == "kruskal" else 4])
            logger.info(f"n={n} {method}: fitted slope {slope:.2f}, model {model.__name__}")
        return pd.DataFrame(slopes, columns=["n", "method", "slope", "model_exponent"])
