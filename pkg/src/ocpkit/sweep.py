"""Exhaustive and random sweeps over poset families."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .checks import poset_checks
from .faces import compare
from .io import report_row
from .poset import Poset, iter_compositions, ordinal_sum_of_antichains, random_poset

RANDOM_PROBABILITIES = (0.2, 0.35, 0.5, 0.65, 0.8)


@dataclass
class SweepResult:
    rows: list[dict]
    failures: list[tuple[str, list[str]]]

    @property
    def ok(self) -> bool:
        return not self.failures


def level_family(max_size: int) -> list[tuple[str, Poset]]:
    return [
        ("L" + "-".join(map(str, c)), ordinal_sum_of_antichains(c))
        for c in iter_compositions(max_size)
    ]


def random_family(max_size: int, count: int, base_seed: int = 0) -> list[tuple[str, Poset]]:
    """``count`` random posets; size and density are drawn from the seed."""
    out = []
    for k in range(count):
        seed = base_seed + k
        rng = random.Random(seed)
        d = rng.randint(1, max_size)
        p = rng.choice(RANDOM_PROBABILITIES)
        out.append((f"R{seed:05d}-d{d}-p{round(p * 100):02d}", random_poset(d, p, seed)))
    return out


def _evaluate(item: tuple[str, Poset]) -> tuple[dict, list[str]]:
    poset_id, P = item
    report = compare(P)
    failed = [name for name, ok in poset_checks(P).items() if not ok]
    report.failures = sorted(set(report.failures) | set(failed))
    return report_row(report, poset_id), report.failures


def run_sweep(family: list[tuple[str, Poset]], workers: int = 1) -> SweepResult:
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_evaluate, family, chunksize=8))
    else:
        results = [_evaluate(item) for item in family]
    results.sort(key=lambda r: r[0]["poset_id"])
    rows = [row for row, _ in results]
    failures = [(row["poset_id"], failed) for row, failed in results if failed]
    return SweepResult(rows, failures)
