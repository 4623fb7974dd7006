"""
Linear-time Steiner k-eccentricity on trees.

The Steiner k-eccentricity of ``v`` is computed greedily: take a longest
path starting at ``v``, contract it into ``v``, and repeat ``k - 1`` times,
summing the path lengths. When the tree has fewer than ``k`` leaves the
optimal Steiner tree is the whole tree and the answer is ``n - 1``.
Each round costs ``O(n)``, so a query costs ``O(k n)``.
"""
import logging

from fractions import Fraction

from .errors import KTooLarge, KTooSmall, PathNotInTree
from .tree import PathDescriptor, Tree, leaves, _check_vertex

log = logging.getLogger(__name__)

__all__ = (
    "ShrinkableTree",
    "EccReport",
    "longest_path_from",
    "shrink_path",
    "steiner_k_ecc",
    "steiner_k_ecc_all",
    "avg_steiner_k_ecc",
    "steiner_k_radius",
    "steiner_k_diameter",
)


class ShrinkableTree(object):
    """
    A private mutable working copy of a :class:`~steiner_ecc.tree.Tree`.

    Paths contracted by :func:`shrink_path` disappear into their root
    vertex: the off-path neighbours of merged vertices are reattached to
    the root and merged vertices are marked dead. Vertex ids are never
    renumbered.
    """

    def __init__(self, tree):
        self._adjacency = [set(nbrs) for nbrs in tree.adjacency]
        self._alive = [True] * tree.n
        self._size = tree.n

    @property
    def size(self):
        """The number of live vertices"""
        return self._size

    def is_alive(self, vertex):
        return 0 <= vertex < len(self._alive) and self._alive[vertex]

    def neighbors(self, vertex):
        return sorted(self._adjacency[vertex])

    def vertices(self):
        return [v for v, alive in enumerate(self._alive) if alive]

    def edges(self):
        return sorted(
            (u, w)
            for u, nbrs in enumerate(self._adjacency)
            if self._alive[u]
            for w in nbrs
            if u < w
        )

    def is_valid(self):
        """Whether the live vertices still form a tree"""
        live = self.vertices()
        if not live or len(self.edges()) != len(live) - 1:
            return False
        seen = {live[0]}
        stack = [live[0]]
        while stack:
            x = stack.pop()
            for y in self._adjacency[x]:
                if not self._alive[y]:
                    return False
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(live)


class EccReport(object):
    """
    The outcome of :func:`steiner_k_ecc`.

    :param int vertex: the query vertex
    :param int k: the set size
    :param int ecc: the Steiner k-eccentricity
    :param list segment_lengths: lengths of the successive longest paths
    :param bool shortcut_used: whether the leaf-count shortcut answered directly
    """

    def __init__(self, vertex, k, ecc, segment_lengths=None, shortcut_used=False):
        self.vertex = vertex
        self.k = k
        self.ecc = ecc
        self.segment_lengths = list(segment_lengths or [])
        self.shortcut_used = shortcut_used

    def as_dict(self):
        return {
            "vertex": self.vertex,
            "k": self.k,
            "ecc": self.ecc,
            "segments": list(self.segment_lengths),
            "shortcut": self.shortcut_used,
        }

    def __repr__(self):
        return "<EccReport v={0} k={1} ecc={2} segments={3} shortcut={4}>".format(
            self.vertex, self.k, self.ecc, self.segment_lengths, self.shortcut_used
        )


def _check_k(tree, k):
    if k < 1:
        raise KTooSmall("k must be at least 1, got {0}".format(k))
    if k > tree.n:
        raise KTooLarge("k={0} exceeds the order n={1}".format(k, tree.n))


def longest_path_from(working, v):
    """
    A longest path starting at ``v``.

    The search is an iterative depth-first traversal; on equal lengths the
    smallest child id is preferred at every branch.

    :param working: a :class:`ShrinkableTree` (a :class:`Tree` is wrapped)
    :param int v: the start vertex
    :rtype: PathDescriptor
    """
    if isinstance(working, Tree):
        working = ShrinkableTree(working)
    adjacency = working._adjacency
    parents = {v: v}
    order = []
    stack = [v]
    while stack:
        x = stack.pop()
        order.append(x)
        for y in adjacency[x]:
            if y not in parents:
                parents[y] = x
                stack.append(y)

    heights = {}
    best_child = {}
    for x in reversed(order):
        height, child = 0, None
        for y in adjacency[x]:
            if y == parents[x]:
                continue
            candidate = heights[y] + 1
            if candidate > height or (candidate == height and y < child):
                height, child = candidate, y
        heights[x] = height
        best_child[x] = child

    vertices = [v]
    while best_child[vertices[-1]] is not None:
        vertices.append(best_child[vertices[-1]])
    return PathDescriptor(vertices)


def shrink_path(working, v, path):
    """
    Contract ``path`` into its first vertex ``v``, in place.

    Every off-path neighbour of a merged vertex becomes a neighbour of ``v``.
    The live vertex count drops by the number of path edges.

    :raises PathNotInTree: when the path does not start at ``v`` or leaves the working tree
    """
    vertices = list(path)
    if vertices[0] != v:
        raise PathNotInTree("Path {0} does not start at {1}".format(vertices, v))
    for vertex in vertices:
        if not working.is_alive(vertex):
            raise PathNotInTree("Vertex {0} is not in the working tree".format(vertex))
    adjacency = working._adjacency
    for a, b in zip(vertices, vertices[1:]):
        if b not in adjacency[a]:
            raise PathNotInTree("({0}, {1}) is not an edge of the working tree".format(a, b))

    on_path = set(vertices)
    for merged in vertices[1:]:
        for x in adjacency[merged]:
            adjacency[x].discard(merged)
            if x not in on_path:
                adjacency[x].add(v)
                adjacency[v].add(x)
        adjacency[merged] = set()
        working._alive[merged] = False
    working._size -= len(vertices) - 1


def steiner_k_ecc(tree, v, k):
    """
    The Steiner k-eccentricity of ``v`` in ``tree``.

    >>> from steiner_ecc.generators import generate
    >>> steiner_k_ecc(generate("spider", 7, {"legs": [3, 2, 1]}), 0, 3).segment_lengths
    [3, 2]

    :param Tree tree: the tree, left untouched
    :param int v: the query vertex
    :param int k: the set size, ``1 <= k <= n``
    :rtype: EccReport
    :raises KTooSmall: if ``k < 1``
    :raises KTooLarge: if ``k > n``
    """
    _check_vertex(tree, v)
    _check_k(tree, k)
    if k == 1:
        return EccReport(v, k, 0)
    if len(leaves(tree)) < k:
        log.debug("Fewer than %s leaves: the whole tree is the Steiner tree", k)
        return EccReport(v, k, tree.n - 1, shortcut_used=True)

    working = ShrinkableTree(tree)
    segments = []
    for _ in range(k - 1):
        path = longest_path_from(working, v)
        segments.append(path.length)
        shrink_path(working, v, path)
    log.debug("Segments for v=%s k=%s: %s", v, k, segments)
    return EccReport(v, k, sum(segments), segments)


def steiner_k_ecc_all(tree, k):
    """The Steiner k-eccentricity of every vertex, indexed by vertex id"""
    _check_k(tree, k)
    return [steiner_k_ecc(tree, v, k).ecc for v in range(tree.n)]


def avg_steiner_k_ecc(tree, k):
    """
    The average Steiner k-eccentricity, as an exact rational.

    :rtype: fractions.Fraction
    """
    return Fraction(sum(steiner_k_ecc_all(tree, k)), tree.n)


def steiner_k_radius(tree, k):
    return min(steiner_k_ecc_all(tree, k))


def steiner_k_diameter(tree, k):
    return max(steiner_k_ecc_all(tree, k))
