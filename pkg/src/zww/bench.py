"""Wall-clock timing of the linear-time Lyndon array and the brute-force Lyndon array."""

from __future__ import annotations

import random
import statistics
import time
from dataclasses import dataclass

from .analysis import lyndon_array_bruteforce
from .lyndon_array import algorithm_la_into, la_buffers
from .words import check_index, zww

BRUTE_BENCH_LIMIT = 5000


@dataclass
class BenchRecord:
    k: int
    length: int
    la_ns: int
    brute_ns: int | None
    reps: int

    def row(self) -> list:
        return [self.k, self.length, self.la_ns,
                "" if self.brute_ns is None else self.brute_ns, self.reps]


def _calls_for(fn, target_ns: int) -> int:
    # batch short calls so one sample spans at least target_ns
    number = 1
    while True:
        t0 = time.perf_counter_ns()
        for _ in range(number):
            fn()
        if time.perf_counter_ns() - t0 >= target_ns or number >= 1 << 16:
            return number
        number *= 2


def _sample(fn, number: int) -> float:
    fn()
    t0 = time.perf_counter_ns()
    for _ in range(number):
        fn()
    return (time.perf_counter_ns() - t0) / number


def median_ns(fn, reps: int, target_ns: int = 2_000_000) -> int:
    """Median per-call time over ``reps`` samples."""
    number = _calls_for(fn, target_ns)
    return int(statistics.median(_sample(fn, number) for _ in range(reps)))


def la_callable(k: int, max_length: int | None = None):
    """Zero-argument callable running the linear-time algorithm into buffers allocated once."""
    word, ell = la_buffers(k, max_length=max_length)
    return lambda: algorithm_la_into(k, word, ell)


def bench_records(max_k: int, reps: int, compare: bool = False, min_k: int = 2,
                  max_length: int | None = None) -> list[BenchRecord]:
    """One record per ``k`` from ``min(min_k, max_k)`` to ``max_k``."""
    la_callable(2)()  # JIT compile outside the timed region
    records = []
    for k in range(min(min_k, max_k), max_k + 1):
        n = check_index(k, max_length)
        la_ns = median_ns(la_callable(k, max_length), reps)
        brute_ns = None
        if compare and n <= BRUTE_BENCH_LIMIT:
            w = zww(k)
            brute_ns = median_ns(lambda: lyndon_array_bruteforce(w), reps)
        records.append(BenchRecord(k, n, la_ns, brute_ns, reps))
    return records


def growth_ratios(k_lo: int, k_hi: int, step: int = 2, rounds: int = 15,
                  seed: int = 0) -> dict[int, float]:
    """Median over rounds of ``time(k + step) / time(k)``.

    Each ratio is taken from two back-to-back samples in random order, so
    slow drift in machine speed cancels; pairs are visited in shuffled order.
    """
    ks = range(k_lo, k_hi + step + 1)
    la_callable(2)()
    fns = {k: la_callable(k) for k in ks}
    numbers = {k: _calls_for(fns[k], 2_000_000) for k in ks}
    rng = random.Random(seed)
    ratios: dict[int, list[float]] = {k: [] for k in range(k_lo, k_hi + 1)}
    for _ in range(rounds):
        order = list(ratios)
        rng.shuffle(order)
        for k in order:
            big = k + step
            if rng.random() < 0.5:
                small_t = _sample(fns[k], numbers[k])
                big_t = _sample(fns[big], numbers[big])
            else:
                big_t = _sample(fns[big], numbers[big])
                small_t = _sample(fns[k], numbers[k])
            ratios[k].append(big_t / small_t)
    return {k: statistics.median(v) for k, v in ratios.items()}
