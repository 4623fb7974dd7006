"""
Tree generators for tests, benchmarks and property checks.

Random trees come from uniform Pruefer sequences, which makes them uniform
over labeled trees; the exhaustive corpus of order ``n`` decodes all
``n**(n-2)`` sequences.
"""
import heapq
import itertools
import random

from .errors import BadParams
from .tree import build_tree

__all__ = (
    "KINDS",
    "generate",
    "pruefer_to_tree",
    "tree_to_pruefer",
    "all_trees",
    "random_trees",
)

KINDS = ("star", "path", "spider", "caterpillar", "random_pruefer")


def _star(n, params, rng):
    return build_tree([(0, i) for i in range(1, n)])


def _path(n, params, rng):
    return build_tree([(i, i + 1) for i in range(n - 1)])


def _spider(n, params, rng):
    legs = params.get("legs")
    if legs is None:
        count = int(params.get("count", 3))
        if count < 1:
            raise BadParams("A spider needs at least one leg")
        base, extra = divmod(n - 1, count)
        legs = [base + 1 if i < extra else base for i in range(count)]
    legs = [int(length) for length in legs if int(length) != 0]
    if any(length < 0 for length in legs):
        raise BadParams("Leg lengths must be positive, got {0}".format(legs))
    if sum(legs) + 1 != n:
        raise BadParams("Legs {0} do not add up to n={1}".format(legs, n))
    edges = []
    label = 1
    for length in legs:
        previous = 0
        for _ in range(length):
            edges.append((previous, label))
            previous = label
            label += 1
    return build_tree(edges)


def _caterpillar(n, params, rng):
    spine = int(params.get("spine", max(1, (n + 1) // 2)))
    if not 1 <= spine <= n:
        raise BadParams("Spine length must lie in 1..{0}, got {1}".format(n, spine))
    pendants = params.get("pendants")
    if pendants is None:
        pendants = [0] * spine
        for i in range(n - spine):
            pendants[i % spine] += 1
    pendants = [int(count) for count in pendants]
    if len(pendants) != spine or any(count < 0 for count in pendants):
        raise BadParams("Expected {0} non-negative pendant counts, got {1}".format(spine, pendants))
    if spine + sum(pendants) != n:
        raise BadParams("Spine {0} and pendants {1} do not add up to n={2}".format(spine, pendants, n))
    edges = [(i, i + 1) for i in range(spine - 1)]
    label = spine
    for vertex, count in enumerate(pendants):
        for _ in range(count):
            edges.append((vertex, label))
            label += 1
    return build_tree(edges)


def _random_pruefer(n, params, rng):
    if n <= 2:
        return _path(n, params, rng)
    return pruefer_to_tree([rng.randrange(n) for _ in range(n - 2)])


GENERATORS = {
    "star": _star,
    "path": _path,
    "spider": _spider,
    "caterpillar": _caterpillar,
    "random_pruefer": _random_pruefer,
}


def generate(kind, n, params=None, seed=None):
    """
    Build a tree of order ``n`` from a named family.

    ``spider`` takes ``legs`` (leg lengths, center is vertex 0) or ``count``
    (equal legs); ``caterpillar`` takes ``spine`` and ``pendants`` (pendant
    count per spine vertex); ``random_pruefer`` draws a uniform Pruefer
    sequence from ``seed``.

    :param str kind: one of :data:`KINDS`
    :param int n: the order
    :param dict params: family parameters
    :param int seed: the random seed, only used by ``random_pruefer``
    :rtype: Tree
    :raises BadParams: on an unknown family, ``n < 1`` or incoherent parameters
    """
    if kind not in GENERATORS:
        raise BadParams("Unknown tree family {0!r}, expected one of {1}".format(kind, ", ".join(KINDS)))
    if not isinstance(n, int) or n < 1:
        raise BadParams("The order must be a positive integer, got {0!r}".format(n))
    return GENERATORS[kind](n, params or {}, random.Random(seed))


def pruefer_to_tree(sequence):
    """
    Decode a Pruefer sequence of length ``n - 2`` into a tree of order ``n``.

    :raises BadParams: on a value outside ``0..n-1``
    """
    sequence = list(sequence)
    n = len(sequence) + 2
    degrees = [1] * n
    for x in sequence:
        if not 0 <= x < n:
            raise BadParams("Pruefer value {0} out of range 0..{1}".format(x, n - 1))
        degrees[x] += 1
    heap = [v for v in range(n) if degrees[v] == 1]
    heapq.heapify(heap)
    edges = []
    for x in sequence:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        degrees[x] -= 1
        if degrees[x] == 1:
            heapq.heappush(heap, x)
    edges.append((heapq.heappop(heap), heapq.heappop(heap)))
    return build_tree(edges)


def tree_to_pruefer(tree):
    """The Pruefer sequence of a tree of order at least 2"""
    if tree.n < 2:
        raise BadParams("Pruefer sequences need at least two vertices")
    degrees = [len(nbrs) for nbrs in tree.adjacency]
    removed = [False] * tree.n
    heap = [v for v in range(tree.n) if degrees[v] == 1]
    heapq.heapify(heap)
    sequence = []
    for _ in range(tree.n - 2):
        leaf = heapq.heappop(heap)
        removed[leaf] = True
        parent = next(y for y in tree.adjacency[leaf] if not removed[y])
        sequence.append(parent)
        degrees[parent] -= 1
        if degrees[parent] == 1:
            heapq.heappush(heap, parent)
    return sequence


def all_trees(n):
    """Every labeled tree of order ``n``, in Pruefer sequence order"""
    if n < 1:
        raise BadParams("The order must be positive, got {0}".format(n))
    if n <= 2:
        yield _path(n, {}, None)
        return
    for sequence in itertools.product(range(n), repeat=n - 2):
        yield pruefer_to_tree(sequence)


def random_trees(n, count, seed=None):
    """``count`` uniform random labeled trees of order ``n``, reproducible from ``seed``"""
    rng = random.Random(seed)
    for _ in range(count):
        yield _random_pruefer(n, {}, rng)
