"""
Property checks of the fast algorithm and the transformations over a corpus of trees.

The corpus holds every labeled tree up to a small order, then reproducible
random trees of larger orders. Each tree is checked independently and the
outcomes are tallied per property; oracle calls estimated above the budget
are counted as skipped.
"""
import logging

from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache, partial

from .errors import BudgetExceeded, ChainLengthExceeded, UsageError
from .generators import all_trees, generate, random_trees
from .kecc import avg_steiner_k_ecc, steiner_k_ecc
from .oracle import (
    check_containment,
    check_ecc_invariance,
    check_leaf_structure,
    check_y_side_witness,
    ecc_k_bruteforce,
)
from .transforms import collapse_to_star, pi_transform, star_sites, stretch_to_path
from .tree import eccentricity

log = logging.getLogger(__name__)

__all__ = (
    "PROPERTIES",
    "PropertyTally",
    "CheckReport",
    "corpus",
    "check_tree",
    "run_checks",
)

PASS = "pass"
FAIL = "fail"
SKIP = "skip"

#: Checked properties, in report order
PROPERTIES = (
    "oracle_equivalence",
    "k2_reduction",
    "leaf_structure",
    "containment",
    "ecc_invariance",
    "y_side_witness",
    "pi_monotonicity",
    "bounds",
    "k2_extremal",
    "extremal_chains",
)

#: The set sizes the transformation monotonicity is checked for
MONOTONICITY_KS = (3, 4, 5)


class PropertyTally(object):
    """Pass, fail and skip counts of one property, with the first counterexample"""

    def __init__(self, name):
        self.name = name
        self.passed = 0
        self.failed = 0
        self.skipped = 0
        self.counterexample = None

    def record(self, status, detail=None):
        if status == PASS:
            self.passed += 1
        elif status == SKIP:
            self.skipped += 1
        else:
            self.failed += 1
            if self.counterexample is None:
                self.counterexample = detail

    def merge(self, other):
        self.passed += other.passed
        self.failed += other.failed
        self.skipped += other.skipped
        if self.counterexample is None:
            self.counterexample = other.counterexample

    def as_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "counterexample": self.counterexample,
        }

    def __repr__(self):
        return "<PropertyTally {0} +{1} -{2} ~{3}>".format(
            self.name, self.passed, self.failed, self.skipped
        )


def _tallies():
    return OrderedDict((name, PropertyTally(name)) for name in PROPERTIES)


class CheckReport(object):
    """The aggregated outcome of a corpus run"""

    def __init__(self):
        self.trees = 0
        self.properties = _tallies()

    def add(self, tallies):
        self.trees += 1
        for name, tally in tallies.items():
            self.properties[name].merge(tally)

    @property
    def counterexamples(self):
        return sum(tally.failed for tally in self.properties.values())

    @property
    def ok(self):
        return self.counterexamples == 0

    def first_counterexample(self):
        for tally in self.properties.values():
            if tally.counterexample is not None:
                return "{0}: {1}".format(tally.name, tally.counterexample)
        return None

    def as_dict(self):
        return {
            "trees": self.trees,
            "counterexamples": self.counterexamples,
            "properties": [tally.as_dict() for tally in self.properties.values()],
        }


def corpus(max_n=8, random_min_n=9, random_max_n=40, per_n=500, seed=42):
    """
    Every labeled tree of order ``1..max_n``, then ``per_n`` random trees of
    each order ``random_min_n..random_max_n``.

    The random part is reproducible: order ``n`` draws from ``seed + n``.
    """
    for n in range(1, max_n + 1):
        log.info("Labeled trees of order %s", n)
        for tree in all_trees(n):
            yield tree
    for n in range(max(random_min_n, 1), random_max_n + 1):
        log.info("%s random trees of order %s", per_n, n)
        for tree in random_trees(n, per_n, seed=seed + n):
            yield tree


def _describe(tree, **context):
    details = " ".join("{0}={1}".format(key, value) for key, value in sorted(context.items()))
    return "n={0} edges={1} {2}".format(tree.n, list(tree.edges), details).rstrip()


def _budgeted(tally, check, describe):
    try:
        ok = check()
    except BudgetExceeded as e:
        log.debug("Skipped: %s", e)
        tally.record(SKIP)
        return
    if ok:
        tally.record(PASS)
    else:
        tally.record(FAIL, describe())


def _oracle_equivalence(tree, ks, budget, tally):
    for v in range(tree.n):
        for k in ks:
            fast = steiner_k_ecc(tree, v, k).ecc
            try:
                slow = ecc_k_bruteforce(tree, v, k, budget=budget).value
            except BudgetExceeded:
                tally.record(SKIP)
                continue
            if fast == slow:
                tally.record(PASS)
            else:
                tally.record(FAIL, _describe(tree, v=v, k=k, fast=fast, oracle=slow))


def _k2_reduction(tree, tally):
    if tree.n < 2:
        return
    for v in range(tree.n):
        fast = steiner_k_ecc(tree, v, 2).ecc
        expected = eccentricity(tree, v)
        if fast == expected:
            tally.record(PASS)
        else:
            tally.record(FAIL, _describe(tree, v=v, fast=fast, eccentricity=expected))


def _per_vertex(tree, ks, budget, tally, check, min_k=1):
    for v in range(tree.n):
        for k in ks:
            if k < min_k:
                continue
            _budgeted(
                tally,
                partial(check, tree, v, k, budget=budget),
                partial(_describe, tree, v=v, k=k),
            )


def _y_side_witness(tree, ks, budget, tally):
    for site in star_sites(tree):
        for k in ks:
            if k < 3:
                continue
            _budgeted(
                tally,
                partial(check_y_side_witness, tree, site, k, budget=budget),
                partial(_describe, tree, path=site.vertices, k=k),
            )


def _pi_monotonicity(tree, tally):
    ks = [k for k in MONOTONICITY_KS if k < tree.n]
    if not ks:
        return
    before = dict((k, avg_steiner_k_ecc(tree, k)) for k in ks)
    for site in star_sites(tree):
        transformed, step = pi_transform(tree, site)
        for k in ks:
            after = avg_steiner_k_ecc(transformed, k)
            if after <= before[k]:
                tally.record(PASS)
            else:
                tally.record(
                    FAIL,
                    _describe(tree, path=step.path.vertices, k=k, before=before[k], after=after),
                )


def _bounds(tree, ks, tally):
    n = tree.n
    for k in ks:
        if not 3 <= k < n:
            continue
        value = avg_steiner_k_ecc(tree, k)
        low, high = k - Fraction(1, n), n - 1
        ok = (
            low <= value <= high
            and (value == low) == tree.is_star()
            and (value == high) == (len(tree.leaves) < k)
        )
        if ok:
            tally.record(PASS)
        else:
            tally.record(FAIL, _describe(tree, k=k, aecc=value, low=low, high=high))


@lru_cache(maxsize=None)
def _k2_extremes(n):
    return (
        avg_steiner_k_ecc(generate("star", n), 2),
        avg_steiner_k_ecc(generate("path", n), 2),
    )


def _k2_extremal(tree, tally):
    if tree.n < 3:
        return
    low, high = _k2_extremes(tree.n)
    value = avg_steiner_k_ecc(tree, 2)
    ok = (
        low <= value <= high
        and (value == low) == tree.is_star()
        and (value == high) == tree.is_path()
    )
    if ok:
        tally.record(PASS)
    else:
        tally.record(FAIL, _describe(tree, aecc=value, star=low, path=high))


def _extremal_chains(tree, tally, cap_factor):
    cap = cap_factor * tree.n * tree.n
    for goal, chain, reached in (
        ("star", collapse_to_star, "is_star"),
        ("path", stretch_to_path, "is_path"),
    ):
        try:
            result, steps = chain(tree, cap=cap)
        except ChainLengthExceeded as e:
            tally.record(FAIL, _describe(tree, goal=goal, error=e))
            continue
        if getattr(result, reached)() and result.n == tree.n:
            tally.record(PASS)
        else:
            tally.record(FAIL, _describe(tree, goal=goal, steps=len(steps)))


def check_tree(
    tree, ks=None, budget=None, transform_max_n=12, witness=False, cap_factor=1
):
    """
    Check every property on one tree.

    :param Tree tree: the tree
    :param ks: the set sizes to check, every ``1..n`` by default
    :param int budget: the oracle budget per call
    :param int transform_max_n: the largest order the transformation
        properties are checked on
    :param bool witness: also check the Y-side witness property (oracle heavy)
    :param int cap_factor: chains are capped at ``cap_factor * n**2`` steps
    :return: the per property tallies of this tree
    :rtype: OrderedDict
    """
    tallies = _tallies()
    n = tree.n
    if ks is None:
        ks = range(1, n + 1)
    ks = [k for k in ks if 1 <= k <= n]

    _oracle_equivalence(tree, ks, budget, tallies["oracle_equivalence"])
    _k2_reduction(tree, tallies["k2_reduction"])
    _per_vertex(tree, ks, budget, tallies["leaf_structure"], check_leaf_structure)
    _per_vertex(tree, ks, budget, tallies["containment"], check_containment, min_k=2)
    _per_vertex(tree, ks, budget, tallies["ecc_invariance"], check_ecc_invariance)
    if n <= transform_max_n:
        if witness:
            _y_side_witness(tree, ks, budget, tallies["y_side_witness"])
        _pi_monotonicity(tree, tallies["pi_monotonicity"])
        _extremal_chains(tree, tallies["extremal_chains"], cap_factor)
    _bounds(tree, ks, tallies["bounds"])
    _k2_extremal(tree, tallies["k2_extremal"])
    return tallies


def run_checks(trees, jobs=1, chunksize=64, **kwargs):
    """
    Check every tree of ``trees`` and aggregate the outcomes.

    With ``jobs > 1`` trees are checked in worker processes; results are
    still aggregated in corpus order so the first counterexample is stable.

    :param trees: an iterable of :class:`Tree`
    :param int jobs: the number of worker processes
    :param kwargs: forwarded to :func:`check_tree`
    :rtype: CheckReport
    """
    if jobs < 1:
        raise UsageError("--jobs must be at least 1, got {0}".format(jobs))
    report = CheckReport()
    check = partial(check_tree, **kwargs)
    if jobs == 1:
        results = (check(tree) for tree in trees)
        for tallies in results:
            report.add(tallies)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for tallies in pool.map(check, trees, chunksize=chunksize):
                report.add(tallies)
    log.info(
        "Checked %s trees, %s counterexamples", report.trees, report.counterexamples
    )
    return report
