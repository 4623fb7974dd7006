"""
The tree data type every other module runs on.

Vertex ids are dense integers ``0..n-1``. A :class:`Tree` is immutable once
built: operations that reshape a tree (shrinking, transformations) build a
new one or work on a separate structure.
"""
import logging

from collections import deque

from werkzeug.utils import cached_property

from .errors import (
    BadParams,
    CycleDetected,
    Disconnected,
    DuplicateEdge,
    IdOutOfRange,
    InvalidPath,
    PathNotInTree,
    SelfLoop,
)

log = logging.getLogger(__name__)

__all__ = (
    "Tree",
    "VertexSet",
    "PathDescriptor",
    "build_tree",
    "leaves",
    "path_between",
    "degree",
    "neighbors",
    "distances_from",
    "multi_source_distances",
    "eccentricity",
    "quasi_pendant_path",
    "subtree_eccentricity",
    "relabel",
)


class Tree(object):
    """
    An immutable tree over the vertex ids ``0..n-1``.

    Do not instantiate directly: use :func:`build_tree`, which validates
    the edge list.

    :param tuple adjacency: for each vertex, the strictly ascending tuple of its neighbors
    :param tuple labels: optional original label of each vertex (dense id -> label)
    """

    def __init__(self, adjacency, labels=None):
        self._adjacency = adjacency
        self._labels = tuple(labels) if labels is not None else None

    @property
    def n(self):
        """The order of the tree"""
        return len(self._adjacency)

    @property
    def adjacency(self):
        return self._adjacency

    @property
    def labels(self):
        return self._labels

    @cached_property
    def edges(self):
        """The ``n-1`` edges as ascending ``(u, v)`` pairs with ``u < v``"""
        return tuple(
            (u, w) for u, nbrs in enumerate(self._adjacency) for w in nbrs if u < w
        )

    @cached_property
    def leaves(self):
        return leaves(self)

    def label_of(self, vertex):
        """The original label of ``vertex`` (the id itself for unlabeled trees)"""
        if self._labels is None:
            return vertex
        return self._labels[vertex]

    def vertex_of(self, label):
        """The dense id carrying the original ``label``"""
        if self._labels is None:
            _check_vertex(self, label)
            return label
        try:
            return self._labels.index(label)
        except ValueError:
            raise IdOutOfRange("Unknown vertex label {0}".format(label), vertex=label)

    def degree(self, vertex):
        _check_vertex(self, vertex)
        return len(self._adjacency[vertex])

    def neighbors(self, vertex):
        _check_vertex(self, vertex)
        return list(self._adjacency[vertex])

    def degree_sequence(self):
        """Vertex degrees in non-increasing order"""
        return sorted((len(nbrs) for nbrs in self._adjacency), reverse=True)

    def is_star(self):
        return self.n <= 2 or max(len(nbrs) for nbrs in self._adjacency) == self.n - 1

    def is_path(self):
        return self.n <= 2 or max(len(nbrs) for nbrs in self._adjacency) <= 2

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, Tree):
            return NotImplemented
        return self._adjacency == other._adjacency

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._adjacency)

    def __repr__(self):
        return "<Tree n={0} edges={1}>".format(self.n, list(self.edges))


class VertexSet(object):
    """
    A strictly ascending, duplicate-free set of vertex ids.

    Ordering between vertex sets is lexicographic on the members.

    :param members: any iterable of vertex ids
    :param int n: when given, every member must be a valid id below ``n``
    :raises BadParams: on duplicated members
    :raises IdOutOfRange: on members outside ``0..n-1``
    """

    def __init__(self, members, n=None):
        members = list(members)
        unique = sorted(set(members))
        if len(unique) != len(members):
            raise BadParams("Duplicate vertex in {0}".format(members))
        if n is not None:
            for vertex in unique:
                if not 0 <= vertex < n:
                    raise IdOutOfRange(
                        "Vertex {0} out of range 0..{1}".format(vertex, n - 1),
                        vertex=vertex,
                    )
        self._members = tuple(unique)
        self._lookup = frozenset(unique)

    @property
    def members(self):
        return list(self._members)

    def __iter__(self):
        return iter(self._members)

    def __len__(self):
        return len(self._members)

    def __contains__(self, vertex):
        return vertex in self._lookup

    def __eq__(self, other):
        if isinstance(other, VertexSet):
            return self._members == other._members
        if isinstance(other, (set, frozenset)):
            return self._lookup == other
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __lt__(self, other):
        return self._members < other._members

    def __hash__(self):
        return hash(self._members)

    def __repr__(self):
        return "{{{0}}}".format(", ".join(str(v) for v in self._members))

    def issubset(self, other):
        return self._lookup <= frozenset(other)


class PathDescriptor(object):
    """
    An explicit vertex sequence ``v_0, v_1, ..., v_l`` of a tree path.

    :param vertices: the ordered, distinct vertex ids
    :raises InvalidPath: on an empty sequence or a repeated vertex
    """

    def __init__(self, vertices):
        vertices = tuple(vertices)
        if not vertices:
            raise InvalidPath("A path needs at least one vertex")
        if len(set(vertices)) != len(vertices):
            raise InvalidPath("Repeated vertex in path {0}".format(list(vertices)))
        self._vertices = vertices

    @property
    def vertices(self):
        return list(self._vertices)

    @property
    def length(self):
        """The number of edges"""
        return len(self._vertices) - 1

    @property
    def start(self):
        return self._vertices[0]

    @property
    def end(self):
        return self._vertices[-1]

    @property
    def internal(self):
        return list(self._vertices[1:-1])

    def edges(self):
        return list(zip(self._vertices, self._vertices[1:]))

    def reversed(self):
        return PathDescriptor(reversed(self._vertices))

    def validate(self, tree):
        """
        Ensure the path lies in ``tree``.

        :raises PathNotInTree: on a vertex outside the tree or two non-adjacent consecutive entries
        """
        for vertex in self._vertices:
            if not 0 <= vertex < tree.n:
                raise PathNotInTree("Vertex {0} is not in the tree".format(vertex))
        for a, b in self.edges():
            if b not in tree.adjacency[a]:
                raise PathNotInTree("({0}, {1}) is not an edge of the tree".format(a, b))
        return self

    def __iter__(self):
        return iter(self._vertices)

    def __eq__(self, other):
        if isinstance(other, PathDescriptor):
            return self._vertices == other._vertices
        if isinstance(other, (list, tuple)):
            return list(self._vertices) == list(other)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._vertices)

    def __repr__(self):
        return "<PathDescriptor {0}>".format(list(self._vertices))


def _check_vertex(tree, vertex):
    if not isinstance(vertex, int) or not 0 <= vertex < tree.n:
        raise IdOutOfRange(
            "Vertex {0} out of range 0..{1}".format(vertex, tree.n - 1), vertex=vertex
        )


def _find(parents, x):
    while parents[x] != x:
        parents[x] = parents[parents[x]]
        x = parents[x]
    return x


def build_tree(edge_list, n=None, labels=None):
    """
    Validate an edge list and build the corresponding :class:`Tree`.

    >>> build_tree([(0, 1), (1, 2), (2, 3)]).edges
    ((0, 1), (1, 2), (2, 3))

    :param list edge_list: ``(u, v)`` pairs over the ids ``0..n-1``
    :param int n: the order, defaults to ``len(edge_list) + 1``
    :param list labels: optional original labels, one per vertex
    :raises IdOutOfRange: on an id outside ``0..n-1``
    :raises SelfLoop: on an edge ``(v, v)``
    :raises DuplicateEdge: on an edge given twice (in either orientation)
    :raises CycleDetected: on an edge closing a cycle
    :raises Disconnected: when ``n`` exceeds the number of reachable vertices
    """
    edge_list = list(edge_list)
    if n is None:
        n = len(edge_list) + 1
    if n < 1:
        raise BadParams("A tree needs at least one vertex")
    if labels is not None and len(labels) != n:
        raise BadParams("Expected {0} labels, got {1}".format(n, len(labels)))

    adjacency = [[] for _ in range(n)]
    parents = list(range(n))
    seen = set()
    for index, edge in enumerate(edge_list):
        u, v = edge
        for vertex in (u, v):
            if not isinstance(vertex, int) or not 0 <= vertex < n:
                raise IdOutOfRange(
                    "Vertex {0} of edge {1} out of range 0..{2}".format(vertex, edge, n - 1),
                    edge=edge,
                    vertex=vertex,
                    index=index,
                )
        if u == v:
            raise SelfLoop("Self-loop on vertex {0}".format(u), edge=edge, vertex=u, index=index)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge("Duplicate edge {0}".format(edge), edge=edge, index=index)
        seen.add(key)
        ru, rv = _find(parents, u), _find(parents, v)
        if ru == rv:
            raise CycleDetected("Edge {0} closes a cycle".format(edge), edge=edge, index=index)
        parents[ru] = rv
        adjacency[u].append(v)
        adjacency[v].append(u)

    root = _find(parents, 0)
    for vertex in range(1, n):
        if _find(parents, vertex) != root:
            raise Disconnected(
                "Vertex {0} is not connected to vertex 0".format(vertex), vertex=vertex
            )

    return Tree(tuple(tuple(sorted(nbrs)) for nbrs in adjacency), labels=labels)


def leaves(tree):
    """
    The pendant vertices of ``tree``.

    The sole vertex of a single-vertex tree counts as a leaf.

    :rtype: VertexSet
    """
    if tree.n == 1:
        return VertexSet([0])
    return VertexSet(v for v, nbrs in enumerate(tree.adjacency) if len(nbrs) == 1)


def degree(tree, vertex):
    return tree.degree(vertex)


def neighbors(tree, vertex):
    return tree.neighbors(vertex)


def _bfs_parents(tree, source, target=None):
    parents = [-1] * tree.n
    parents[source] = source
    queue = deque([source])
    while queue:
        x = queue.popleft()
        if x == target:
            break
        for y in tree.adjacency[x]:
            if parents[y] < 0:
                parents[y] = x
                queue.append(y)
    return parents


def path_between(tree, u, v):
    """
    The unique ``u,v``-path in ``tree``.

    :rtype: PathDescriptor
    :raises IdOutOfRange: on an invalid endpoint
    """
    _check_vertex(tree, u)
    _check_vertex(tree, v)
    parents = _bfs_parents(tree, v, target=u)
    # walking the parents of a BFS rooted at v yields the path in u -> v order
    vertices = [u]
    while vertices[-1] != v:
        vertices.append(parents[vertices[-1]])
    return PathDescriptor(vertices)


def multi_source_distances(tree, sources):
    """Distance from every vertex to the nearest of ``sources``"""
    distances = [-1] * tree.n
    queue = deque()
    for source in sources:
        _check_vertex(tree, source)
        if distances[source] < 0:
            distances[source] = 0
            queue.append(source)
    while queue:
        x = queue.popleft()
        for y in tree.adjacency[x]:
            if distances[y] < 0:
                distances[y] = distances[x] + 1
                queue.append(y)
    return distances


def distances_from(tree, vertex):
    return multi_source_distances(tree, [vertex])


def eccentricity(tree, vertex):
    """The classical eccentricity: the largest distance from ``vertex``"""
    return max(distances_from(tree, vertex))


def subtree_eccentricity(tree, vertices):
    """
    The eccentricity of a subtree in ``tree``: the largest distance from any
    vertex of ``tree`` to the nearest vertex of ``vertices``.
    """
    vertices = list(vertices)
    if not vertices:
        raise BadParams("Subtree eccentricity needs a non-empty vertex set")
    return max(multi_source_distances(tree, vertices))


def quasi_pendant_path(tree, v, u):
    """
    The quasi-pendant path of leaf ``u`` with respect to ``v``.

    It is the sub-path of ``P(v, u)`` running from the branching vertex
    nearest to ``u`` (or from ``v`` when the path has none) to ``u``.

    :rtype: PathDescriptor
    :raises InvalidPath: if ``u`` is not a leaf
    """
    if u not in leaves(tree):
        raise InvalidPath("Vertex {0} is not a leaf".format(u))
    vertices = path_between(tree, u, v).vertices
    for index, vertex in enumerate(vertices[1:], 1):
        if len(tree.adjacency[vertex]) >= 3:
            return PathDescriptor(reversed(vertices[: index + 1]))
    return PathDescriptor(reversed(vertices))


def relabel(tree):
    """
    The same tree with its original labels used as vertex ids.

    Only meaningful when the labels are exactly ``0..n-1``.

    :raises BadParams: if the labels are not a permutation of ``0..n-1``
    """
    if tree.labels is None:
        return tree
    if sorted(tree.labels) != list(range(tree.n)):
        raise BadParams("Labels are not a permutation of 0..{0}".format(tree.n - 1))
    return build_tree(
        [(tree.labels[u], tree.labels[v]) for u, v in tree.edges], n=tree.n
    )
