"""
Ground-truth implementations by exhaustive search.

Everything here is exponential in ``k`` and exists to validate the linear
time algorithm of :mod:`steiner_ecc.kecc` and the structural properties it
relies on.
"""
import logging

from collections import deque
from itertools import combinations
from math import comb

from .errors import BudgetExceeded, KTooLarge, KTooSmall
from .transforms import pi_transform, split_sides
from .tree import VertexSet, leaves, subtree_eccentricity, _check_vertex

log = logging.getLogger(__name__)

__all__ = (
    "SteinerResult",
    "steiner_distance",
    "estimate_work",
    "ecc_k_bruteforce",
    "enumerate_kecc_sets",
    "check_containment",
    "check_ecc_invariance",
    "check_leaf_structure",
    "check_y_side_witness",
)


class SteinerResult(object):
    """
    A brute-force Steiner k-eccentricity with its witness.

    :param int value: the Steiner k-eccentricity
    :param VertexSet witness_set: the lexicographically smallest maximizing set
    :param frozenset witness_edges: the edges of the minimal Steiner tree of ``witness_set``
    """

    def __init__(self, value, witness_set, witness_edges):
        self.value = value
        self.witness_set = witness_set
        self.witness_edges = frozenset(witness_edges)
        assert value == len(self.witness_edges)

    def as_dict(self):
        return {
            "value": self.value,
            "witness_set": self.witness_set.members,
            "witness_edges": [list(e) for e in sorted(self.witness_edges)],
        }

    def __repr__(self):
        return "<SteinerResult value={0} witness={1}>".format(self.value, self.witness_set)


def steiner_distance(tree, vertices):
    """
    The Steiner distance of a vertex set in a tree.

    The minimal subtree spanning ``vertices`` is obtained by repeatedly
    deleting leaves of the current subtree that are not in the set.

    :param vertices: a non-empty iterable of vertex ids
    :return: the edge count and the edge set (``(u, v)`` with ``u < v``) of the minimal subtree
    :rtype: tuple
    :raises IdOutOfRange: on an invalid vertex
    """
    terminals = set()
    for vertex in vertices:
        _check_vertex(tree, vertex)
        terminals.add(vertex)
    if not terminals:
        raise KTooSmall("The Steiner distance needs a non-empty vertex set")
    if len(terminals) == 1:
        return 0, frozenset()

    degrees = [len(nbrs) for nbrs in tree.adjacency]
    alive = [True] * tree.n
    queue = deque(v for v in range(tree.n) if degrees[v] == 1 and v not in terminals)
    while queue:
        x = queue.popleft()
        alive[x] = False
        for y in tree.adjacency[x]:
            if alive[y]:
                degrees[y] -= 1
                if degrees[y] == 1 and y not in terminals:
                    queue.append(y)

    edges = frozenset((u, w) for u, w in tree.edges if alive[u] and alive[w])
    return len(edges), edges


def _check_k(tree, k):
    if k < 1:
        raise KTooSmall("k must be at least 1, got {0}".format(k))
    if k > tree.n:
        raise KTooLarge("k={0} exceeds the order n={1}".format(k, tree.n))


def _candidates(tree, v, k, restrict_to_leaves):
    """Vertices allowed in ``S \\ {v}``"""
    tree_leaves = leaves(tree)
    if restrict_to_leaves is None:
        restrict_to_leaves = True
    # outside 2 <= k <= |L| non-leaves may be forced into S
    if restrict_to_leaves and 2 <= k <= len(tree_leaves):
        return [u for u in tree_leaves if u != v]
    return [u for u in range(tree.n) if u != v]


def estimate_work(tree, v, k, restrict_to_leaves=None):
    """The number of elementary steps an exhaustive search would take"""
    _check_k(tree, k)
    candidates = _candidates(tree, v, k, restrict_to_leaves)
    return comb(len(candidates), k - 1) * tree.n


def _scan(tree, v, k, restrict_to_leaves, budget):
    _check_vertex(tree, v)
    _check_k(tree, k)
    if budget is not None:
        work = estimate_work(tree, v, k, restrict_to_leaves)
        if work > budget:
            raise BudgetExceeded(work, budget)
    candidates = _candidates(tree, v, k, restrict_to_leaves)
    for others in combinations(candidates, k - 1):
        members = VertexSet(others + (v,))
        value, edges = steiner_distance(tree, members)
        yield members, value, edges


def ecc_k_bruteforce(tree, v, k, restrict_to_leaves=None, budget=None):
    """
    The Steiner k-eccentricity of ``v`` by exhaustive search.

    :param Tree tree: the tree
    :param int v: the query vertex
    :param int k: the set size, ``1 <= k <= n``
    :param bool restrict_to_leaves: only consider sets whose members other than
        ``v`` are leaves; ``None`` (the default) and ``True`` enable it when
        ``2 <= k <= |L(T)|`` and fall back to every subset otherwise,
        ``False`` always searches every subset
    :param int budget: refuse searches estimated above this many steps
    :rtype: SteinerResult
    :raises KTooSmall: if ``k < 1``
    :raises KTooLarge: if ``k > n``
    :raises BudgetExceeded: if the search would exceed ``budget``
    """
    best = None
    for members, value, edges in _scan(tree, v, k, restrict_to_leaves, budget):
        if best is None or value > best[1] or (value == best[1] and members < best[0]):
            best = (members, value, edges)
    members, value, edges = best
    return SteinerResult(value, members, edges)


def _maximizers(tree, v, k, restrict_to_leaves, budget):
    found = []
    top = -1
    for members, value, edges in _scan(tree, v, k, restrict_to_leaves, budget):
        if value > top:
            top = value
            found = []
        if value == top:
            found.append((members, edges))
    found.sort(key=lambda item: item[0])
    return top, found


def enumerate_kecc_sets(tree, v, k, restrict_to_leaves=False, budget=None):
    """
    Every Steiner k-ecc ``v``-set, in lexicographic order.

    :rtype: list of VertexSet
    """
    _, found = _maximizers(tree, v, k, restrict_to_leaves, budget)
    return [members for members, _ in found]


def check_containment(tree, v, k, budget=None):
    """
    Whether every Steiner k-ecc ``v``-tree contains some Steiner (k-1)-ecc ``v``-tree.

    Minimal Steiner trees are unique per set in a tree, so edge sets stand
    in for the trees.

    :raises KTooSmall: if ``k < 2``
    """
    if k < 2:
        raise KTooSmall("Containment needs k >= 2, got {0}".format(k))
    _, upper = _maximizers(tree, v, k, False, budget)
    _, lower = _maximizers(tree, v, k - 1, False, budget)
    for members, edges in upper:
        if not any(smaller <= edges for _, smaller in lower):
            log.debug("No (k-1)-ecc tree inside the k-ecc tree of %s", members)
            return False
    return True


def check_ecc_invariance(tree, v, k, budget=None):
    """Whether all Steiner k-ecc ``v``-trees have the same eccentricity in ``tree``"""
    _, found = _maximizers(tree, v, k, False, budget)
    values = set()
    for members, edges in found:
        vertices = set(members)
        for a, b in edges:
            vertices.update((a, b))
        values.add(subtree_eccentricity(tree, vertices))
    return len(values) == 1


def check_leaf_structure(tree, v, k, budget=None):
    """
    Whether the leaf-membership structure of the Steiner k-ecc ``v``-sets holds.

    When ``k > |L|``, or ``v`` is a leaf and ``k = |L|``, every set contains
    all leaves; when ``2 <= k <= |L|`` every member other than ``v`` is a leaf.
    """
    tree_leaves = leaves(tree)
    sets = enumerate_kecc_sets(tree, v, k, budget=budget)
    if k > len(tree_leaves) or (v in tree_leaves and k == len(tree_leaves)):
        if not all(tree_leaves.issubset(members) for members in sets):
            return False
    if 2 <= k <= len(tree_leaves):
        for members in sets:
            if any(u not in tree_leaves for u in members if u != v):
                return False
    return True


def check_y_side_witness(tree, path, k, budget=None):
    """
    Whether vertices on the transformed side keep a Steiner k-ecc set reaching ``Y``.

    With ``T' = pi(T)`` along ``path`` (oriented from ``u`` to ``v``), every
    vertex ``w`` of the path or of ``X`` must have a Steiner k-ecc ``w``-set
    in ``T'`` meeting ``V(Y) \\ {v}``.

    :raises KTooSmall: if ``k < 3``
    """
    if k < 3:
        raise KTooSmall("The Y-side witness property needs k >= 3, got {0}".format(k))
    _check_k(tree, k)
    transformed, step = pi_transform(tree, path)
    x_side, y_side = split_sides(tree, step.path)
    target = y_side - {step.path.end}
    if not target:
        # Y reduced to v: no site to reach, nothing to check
        return True
    for w in sorted(set(step.path.vertices) | x_side):
        sets = enumerate_kecc_sets(transformed, w, k, budget=budget)
        if not any(target.intersection(members) for members in sets):
            log.debug("Vertex %s has no Steiner %s-ecc set meeting Y", w, k)
            return False
    return True
