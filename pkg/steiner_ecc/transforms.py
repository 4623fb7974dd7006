"""
Branch-relocating tree transformations and the extremal chains they build.

A *pi-site* is a path ``P = (u, ..., v)`` with at least one edge whose
internal vertices all have degree 2. Removing the edges of ``P`` splits the
tree into the side ``X`` holding ``u`` and the side ``Y`` holding ``v``.
The forward transformation moves the ``X``-neighbours of ``u`` onto ``v``;
the inverse moves a set of ``v``'s neighbours back onto the pendant end ``u``.
Forward steps strictly decrease the Wiener index, inverse steps strictly
increase it, which bounds both chains.
"""
import logging

from collections import deque

from .errors import (
    BadParams,
    ChainLengthExceeded,
    DegeneratePath,
    InvalidPath,
    ParseError,
)
from .tree import PathDescriptor, build_tree

log = logging.getLogger(__name__)

__all__ = (
    "PI",
    "PI_INVERSE",
    "STAR",
    "PATH",
    "TransformStep",
    "split_sides",
    "find_transform_path",
    "star_sites",
    "pi_transform",
    "pi_inverse",
    "collapse_to_star",
    "stretch_to_path",
    "replay",
    "wiener_index",
    "format_trace",
    "parse_trace",
)

PI = "pi"
PI_INVERSE = "pi-1"

STAR = "star"
PATH = "path"


class TransformStep(object):
    """
    One application of a transformation.

    :param str kind: :data:`PI` or :data:`PI_INVERSE`
    :param PathDescriptor path: the site, oriented from the vertex that keeps the
        path (``u``) to the vertex on the far end (``v``)
    :param int moved_from: the vertex that lost the relocated neighbours
    :param int moved_to: the vertex that received them
    :param list moved_neighbors: the relocated neighbours
    """

    def __init__(self, kind, path, moved_from, moved_to, moved_neighbors):
        if kind not in (PI, PI_INVERSE):
            raise BadParams("Unknown transformation kind {0!r}".format(kind))
        self.kind = kind
        self.path = path
        self.moved_from = moved_from
        self.moved_to = moved_to
        self.moved_neighbors = sorted(moved_neighbors)

    def to_line(self):
        return "{0} path={1} from={2} to={3} moved={4}".format(
            self.kind,
            ",".join(str(v) for v in self.path),
            self.moved_from,
            self.moved_to,
            ",".join(str(v) for v in self.moved_neighbors),
        )

    @classmethod
    def from_line(cls, line):
        """
        Parse a trace line as written by :meth:`to_line`.

        :raises ValueError: on a malformed line
        """
        parts = line.split()
        if len(parts) != 5:
            raise ValueError("Expected 5 fields, got {0}".format(len(parts)))
        kind = parts[0]
        values = {}
        for part in parts[1:]:
            key, sep, value = part.partition("=")
            if not sep:
                raise ValueError("Malformed field {0!r}".format(part))
            values[key] = [int(x) for x in value.split(",") if x]
        if set(values) != {"path", "from", "to", "moved"}:
            raise ValueError("Unexpected fields {0}".format(sorted(values)))
        if len(values["from"]) != 1 or len(values["to"]) != 1:
            raise ValueError("from/to hold exactly one vertex")
        return cls(
            kind,
            PathDescriptor(values["path"]),
            values["from"][0],
            values["to"][0],
            values["moved"],
        )

    def as_dict(self):
        return {
            "kind": self.kind,
            "path": self.path.vertices,
            "moved_from": self.moved_from,
            "moved_to": self.moved_to,
            "moved_neighbors": list(self.moved_neighbors),
        }

    def __eq__(self, other):
        if not isinstance(other, TransformStep):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return "<TransformStep {0}>".format(self.to_line())


def _as_path(path):
    if isinstance(path, PathDescriptor):
        return path
    return PathDescriptor(path)


def _validate_site(tree, path):
    path = _as_path(path).validate(tree)
    if path.length < 1:
        raise DegeneratePath("A transformation path needs at least one edge")
    for vertex in path.internal:
        if len(tree.adjacency[vertex]) != 2:
            raise InvalidPath(
                "Internal vertex {0} has degree {1}, expected 2".format(
                    vertex, len(tree.adjacency[vertex])
                )
            )
    return path


def split_sides(tree, path):
    """
    The vertex sets ``X`` and ``Y`` left at both ends of ``path`` once its edges are removed.

    :rtype: tuple of two sets
    """
    path = _as_path(path)
    on_path = set(path)

    def side(root):
        seen = {root}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in tree.adjacency[x]:
                if y not in seen and y not in on_path:
                    seen.add(y)
                    queue.append(y)
        return seen

    return side(path.start), side(path.end)


def _side_eccentricity(tree, root, side):
    distances = {root: 0}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in tree.adjacency[x]:
            if y in side and y not in distances:
                distances[y] = distances[x] + 1
                queue.append(y)
    return max(distances.values())


def _rebuild(tree, source, target, moved):
    moved = set(moved)
    edges = []
    for a, b in tree.edges:
        if a == source and b in moved:
            edges.append((target, b))
        elif b == source and a in moved:
            edges.append((a, target))
        else:
            edges.append((a, b))
    return build_tree(edges, n=tree.n, labels=tree.labels)


def pi_transform(tree, path):
    """
    Move the ``X``-side neighbours of ``u`` onto ``v``.

    The site is oriented so that the eccentricity of ``u`` inside ``X`` does
    not exceed the eccentricity of ``v`` inside ``Y``; a backwards ``path``
    is reversed, and on a tie the caller's orientation is kept. The
    orientation used is recorded in the returned step.

    :param Tree tree: the tree
    :param path: a :class:`PathDescriptor` or vertex sequence
    :return: the transformed tree and the step record
    :rtype: tuple
    :raises DegeneratePath: on a zero-edge path
    :raises InvalidPath: when an internal vertex does not have degree 2
    :raises PathNotInTree: when the path does not lie in the tree
    """
    path = _validate_site(tree, path)
    x_side, y_side = split_sides(tree, path)
    if _side_eccentricity(tree, path.start, x_side) > _side_eccentricity(
        tree, path.end, y_side
    ):
        path = path.reversed()
    u, v = path.start, path.end
    after_u = path.vertices[1]
    moved = [w for w in tree.adjacency[u] if w != after_u]
    step = TransformStep(PI, path, u, v, moved)
    log.debug("Applying %s", step.to_line())
    return _rebuild(tree, u, v, moved), step


def _deepest_branch(tree, v, candidates, blocked):
    best = None
    for w in candidates:
        branch = {w}
        queue = deque([(w, 1)])
        depth = 1
        while queue:
            x, d = queue.popleft()
            depth = max(depth, d)
            for y in tree.adjacency[x]:
                if y != v and y not in blocked and y not in branch:
                    branch.add(y)
                    queue.append((y, d + 1))
        if best is None or depth > best[0]:
            best = (depth, w)
    return best[1]


def pi_inverse(tree, path, moved=None):
    """
    Move neighbours of ``v`` back onto the pendant end ``u`` of ``path``.

    :param Tree tree: the transformed tree
    :param path: the site, from the pendant end ``u`` to ``v``; reversed
        automatically when given from the other end
    :param list moved: the neighbours of ``v`` to relocate (the exact inverse of a
        recorded step); by default every off-path neighbour of ``v`` except the one
        heading its deepest branch (the smallest id on ties)
    :return: the stretched tree and the step record
    :rtype: tuple
    :raises InvalidPath: when neither end is pendant or ``moved`` names a non-neighbour
    """
    path = _validate_site(tree, path)
    if len(tree.adjacency[path.start]) != 1:
        if len(tree.adjacency[path.end]) != 1:
            raise InvalidPath(
                "Neither end of {0} is a pendant vertex".format(path.vertices)
            )
        path = path.reversed()
    u, v = path.start, path.end
    before_v = path.vertices[-2]
    off_path = [w for w in tree.adjacency[v] if w != before_v]
    if moved is None:
        moved = []
        if off_path:
            keep = _deepest_branch(tree, v, off_path, set(path))
            moved = [w for w in off_path if w != keep]
    else:
        moved = list(moved)
        for w in moved:
            if w not in off_path:
                raise InvalidPath(
                    "Vertex {0} is not an off-path neighbour of {1}".format(w, v)
                )
    step = TransformStep(PI_INVERSE, path, v, u, moved)
    log.debug("Applying %s", step.to_line())
    return _rebuild(tree, v, u, moved), step


def star_sites(tree):
    """
    Every site a forward transformation changes the tree on.

    Sites are paths whose internal vertices have degree 2 and whose ends
    both have degree at least 2, yielded by increasing ``(u, v)`` with ``u < v``.
    """
    adjacency = tree.adjacency
    for u in range(tree.n):
        if len(adjacency[u]) < 2:
            continue
        found = []
        for first in adjacency[u]:
            vertices = [u, first]
            while True:
                end = vertices[-1]
                if len(adjacency[end]) >= 2 and end > u:
                    found.append(list(vertices))
                if len(adjacency[end]) != 2:
                    break
                prev = vertices[-2]
                vertices.append(
                    adjacency[end][0] if adjacency[end][1] == prev else adjacency[end][1]
                )
        for vertices in sorted(found, key=lambda item: item[-1]):
            yield PathDescriptor(vertices)


def _first_star_site(tree):
    return next(star_sites(tree), None)


def _first_path_site(tree):
    adjacency = tree.adjacency
    for u in range(tree.n):
        if len(adjacency[u]) != 1:
            continue
        vertices = [u, adjacency[u][0]]
        while len(adjacency[vertices[-1]]) == 2:
            end, prev = vertices[-1], vertices[-2]
            vertices.append(adjacency[end][0] if adjacency[end][1] == prev else adjacency[end][1])
        if len(adjacency[vertices[-1]]) >= 3:
            return PathDescriptor(vertices)
    return None


def find_transform_path(tree, goal):
    """
    The next site of a chain towards the star or towards the path.

    Towards the star, a site is a path whose internal vertices have degree 2
    and whose ends both have degree at least 2, so that the transformation
    changes the tree. Towards the path, a site runs from a leaf through
    degree-2 vertices to a branching vertex. Among candidates the one with
    the lexicographically smallest ``(u, v)`` pair is returned.

    :param str goal: :data:`STAR` or :data:`PATH`
    :return: the site, or ``None`` once the tree is a star (resp. a path)
    :raises BadParams: on an unknown goal
    """
    if goal == STAR:
        return None if tree.is_star() else _first_star_site(tree)
    if goal == PATH:
        return None if tree.is_path() else _first_path_site(tree)
    raise BadParams("Unknown goal {0!r}, expected star or path".format(goal))


def wiener_index(tree):
    """The sum of distances over all vertex pairs, in linear time"""
    n = tree.n
    parents = [-1] * n
    order = [0]
    parents[0] = 0
    for x in order:
        for y in tree.adjacency[x]:
            if parents[y] < 0:
                parents[y] = x
                order.append(y)
    sizes = [1] * n
    total = 0
    for x in reversed(order[1:]):
        sizes[parents[x]] += sizes[x]
        total += sizes[x] * (n - sizes[x])
    return total


def _chain(tree, goal, apply, cap):
    if cap is None:
        cap = tree.n * tree.n
    steps = []
    potential = wiener_index(tree)
    while True:
        path = find_transform_path(tree, goal)
        if path is None:
            return tree, steps
        if len(steps) >= cap:
            raise ChainLengthExceeded(
                "No {0} reached after {1} steps".format(goal, len(steps))
            )
        tree, step = apply(tree, path)
        steps.append(step)
        current = wiener_index(tree)
        if (goal == STAR and current >= potential) or (goal == PATH and current <= potential):
            raise ChainLengthExceeded(
                "Step {0} did not move the Wiener index towards the {1} ({2} -> {3})".format(
                    step.to_line(), goal, potential, current
                )
            )
        potential = current


def collapse_to_star(tree, cap=None):
    """
    Apply forward transformations until the tree is a star.

    :param int cap: the maximal number of steps, ``n**2`` by default
    :return: the star and the steps leading to it
    :rtype: tuple
    :raises ChainLengthExceeded: if the cap is reached
    """
    return _chain(tree, STAR, pi_transform, cap)


def stretch_to_path(tree, cap=None):
    """
    Apply inverse transformations until the tree is a path.

    :param int cap: the maximal number of steps, ``n**2`` by default
    :return: the path and the steps leading to it
    :rtype: tuple
    :raises ChainLengthExceeded: if the cap is reached
    """
    return _chain(tree, PATH, pi_inverse, cap)


def replay(tree, steps):
    """Re-apply recorded steps in order and return the final tree"""
    for step in steps:
        if step.kind == PI:
            tree, _ = pi_transform(tree, step.path)
        else:
            tree, _ = pi_inverse(tree, step.path, moved=step.moved_neighbors)
    return tree


def format_trace(steps):
    """One line per step, newline terminated"""
    return "".join(step.to_line() + "\n" for step in steps)


def parse_trace(text):
    """
    Parse a trace written by :func:`format_trace`.

    Blank lines and ``#`` comments are skipped.

    :raises ParseError: with the offending line number
    """
    steps = []
    for number, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            steps.append(TransformStep.from_line(line))
        except (ValueError, BadParams, InvalidPath) as e:
            raise ParseError(str(e), line=number)
    return steps
