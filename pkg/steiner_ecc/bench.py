"""
Timing harness of :func:`steiner_ecc.kecc.steiner_k_ecc` over growing trees.

Only the eccentricity computation is timed; trees are built beforehand.
"""
import logging
import time

import numpy as np

from .errors import BadParams
from .generators import KINDS, generate
from .kecc import steiner_k_ecc
from .utils import loglog_slope

log = logging.getLogger(__name__)

__all__ = ("time_calls", "bench_tree", "bench")

MIN_REPEAT = 5


def time_calls(func, repeat=MIN_REPEAT, warmup=1):
    """
    Run ``func`` ``warmup`` times untimed, then ``repeat`` times timed.

    :return: the timed durations in nanoseconds
    :rtype: list of int
    """
    for _ in range(warmup):
        func()
    samples = []
    for _ in range(repeat):
        start = time.perf_counter_ns()
        func()
        samples.append(time.perf_counter_ns() - start)
    return samples


def bench_tree(family, n, k, seed=None):
    """
    The benchmark input of order ``n``.

    Spiders get ``2k`` legs so that doubling ``k`` still runs the greedy
    loop instead of the leaf shortcut.
    """
    if family not in KINDS:
        raise BadParams("Unknown tree family {0!r}, expected one of {1}".format(family, ", ".join(KINDS)))
    params = {"count": min(2 * k, max(n - 1, 1))} if family == "spider" else None
    return generate(family, n, params, seed=seed)


def _measure(tree, k, repeat):
    samples = time_calls(lambda: steiner_k_ecc(tree, 0, k), repeat=repeat)
    return int(np.median(samples)), int(np.mean(samples))


def bench(family="spider", sizes=(1000, 10000, 100000, 1000000), k=5, repeat=MIN_REPEAT, seed=None):
    """
    Time the Steiner k-eccentricity of vertex 0 for every size.

    :param str family: the tree family, see :data:`steiner_ecc.generators.KINDS`
    :param sizes: the orders to time
    :param int k: the set size
    :param int repeat: timed repetitions per size, at least 5
    :param int seed: the seed of random families
    :return: per size ``median_ns``/``mean_ns``, the log-log ``slope`` of the
        medians against ``n`` and the ``k_doubling_ratio`` of the largest size
    :rtype: dict
    :raises BadParams: on fewer than 5 repetitions, an empty sweep or ``k`` above a size
    """
    sizes = sorted(set(int(n) for n in sizes))
    if repeat < MIN_REPEAT:
        raise BadParams("At least {0} repetitions are needed, got {1}".format(MIN_REPEAT, repeat))
    if not sizes:
        raise BadParams("The size sweep is empty")
    if k > sizes[0]:
        raise BadParams("k={0} exceeds the smallest size {1}".format(k, sizes[0]))

    rows = []
    tree = None
    for n in sizes:
        tree = bench_tree(family, n, k, seed=seed)
        median, mean = _measure(tree, k, repeat)
        log.info("n=%s median=%sns mean=%sns", n, median, mean)
        rows.append({"n": n, "median_ns": median, "mean_ns": mean})

    slope = None
    if len(rows) >= 2:
        slope = loglog_slope(sizes, [max(row["median_ns"], 1) for row in rows])

    ratio = None
    if 2 * k <= sizes[-1]:
        doubled, _ = _measure(tree, 2 * k, repeat)
        ratio = doubled / max(rows[-1]["median_ns"], 1)

    return {
        "family": family,
        "k": k,
        "repeat": repeat,
        "sizes": rows,
        "slope": slope,
        "k_doubling_ratio": ratio,
    }
